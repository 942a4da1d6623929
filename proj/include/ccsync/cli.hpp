#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccsync/ccc.hpp"
#include "ccsync/dynsys.hpp"

namespace ccsync {

/// Raised for configuration problems; the message names the offending key.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Experiment { Simulate, Etc, Ccc, CccMatrix, Stability, SyncCheck, Classify };
Experiment experiment_from_string(const std::string& name);
std::string to_string(Experiment e);

enum class OutputFormat { Csv, Json };

/// Fully resolved run configuration. Defaults are per-system (integration method,
/// dt, CCC parameters, initial conditions) and per-experiment (sample counts).
struct RunConfig {
    Experiment experiment = Experiment::Simulate;
    std::string system = "lorenz";
    IntegrationMethod method = IntegrationMethod::Euler;
    double dt = 0.001;
    long n_samples = 10000;
    long transients = 2000;
    CccParams ccc;
    std::optional<std::uint64_t> seed;
    std::string output;  // empty = stdout only
    OutputFormat format = OutputFormat::Csv;

    std::vector<double> master_ic;
    std::vector<double> slave_ic;
    std::vector<double> slave_ic2;  // second slave for sync-check

    // stability
    std::string forced = "x";
    std::vector<double> deltas{1.0, 10.0, 100.0};
    int k_max = 100;

    // sync-check / classify
    double tolerance = 1e-3;

    // etc / ccc over CSV input
    std::string input;   // CSV trajectory path (optional for ccc/ccc-matrix)
    std::string column;  // etc: column name
    std::string cause;   // ccc: cause column name
    std::string effect;  // ccc: effect column name

    bool operator==(const RunConfig&) const = default;
};

/// Parse command-line style arguments (subcommand first), applying per-system and
/// per-experiment defaults; a --config key=value file is read first and flags
/// override it. Throws ConfigError naming the offending key.
RunConfig parse_config(const std::vector<std::string>& args);

/// Emit the configuration as a key=value file that parse_config round-trips.
std::string emit_config(const RunConfig& config);

/// Execute the experiment: writes artifacts atomically, prints a one-line summary.
/// Returns 0 on success, 2 for configuration errors, 3 on divergence, 4 on I/O errors.
int run(const RunConfig& config);

}  // namespace ccsync
