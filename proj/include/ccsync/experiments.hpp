#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccsync/ccc.hpp"
#include "ccsync/dynsys.hpp"

namespace ccsync {

/// Configuration of one causal-stability run: a master, a reference slave S0, and
/// k_max secondary slaves per delta whose initial conditions are drawn uniformly
/// from the cube of half-width delta around S0's.
struct StabilityConfig {
    SystemSpec system;
    int forced_variable = 0;
    Vector master_ic;
    Vector slave0_ic;
    std::vector<double> deltas{1.0, 10.0, 100.0};
    int k_max = 100;
    std::uint64_t seed = 0;
    CccParams ccc;
    long n_samples = 10000;
    long transients = 2000;
    IntegrationMethod method = IntegrationMethod::Euler;
    double dt = 0.001;
    double divergence_bound = 1e9;

    void validate() const;
};

struct SlaveOutcome {
    double ccc_net = 0.0;
    bool diverged = false;
    double abs_diff = 0.0;  // |net(S0) - net(S_k)|, 0 when diverged
};

struct StabilityReport {
    int forced_variable = 0;
    std::uint64_t seed = 0;
    double s0_ccc_net = 0.0;
    bool s0_diverged = false;
    std::vector<double> deltas;
    // outcomes[d][k-1] for delta index d, secondary slave k
    std::vector<std::vector<SlaveOutcome>> outcomes;
    // m_curve[d][k-1] = mean of abs_diff over non-diverged slaves i <= k
    std::vector<std::vector<double>> m_curve;
    bool any_diverged = false;
};

/// Simulate the protocol: master, S0, then k_max perturbed slaves per delta; the
/// net causal influence of the forced variable on the non-driven subsystem is
/// estimated per slave, with every slave symbolized against the master
/// trajectory's per-variable ranges so slave alphabets are comparable.
StabilityReport run_stability(const StabilityConfig& config);

/// Causally stable iff no slave diverged and every |net(S0) - net(S_k)| stays
/// below epsilon for every tested delta.
bool check_causal_stability(const StabilityReport& report, double epsilon);

struct GroundTruthOptions {
    long n_samples = 10000;
    long transients = 2000;
    double tail_fraction = 0.2;
    double tolerance = 1e-3;  // relative to attractor diameter
    double divergence_bound = 1e9;
    std::optional<IntegrationMethod> method;  // system default when absent
    std::optional<double> dt;
};

struct GroundTruthResult {
    bool sync = false;
    bool any_diverged = false;
    double diameter = 0.0;
    std::vector<double> tail_distances;  // per slave ic; inf for diverged runs
};

/// Direct simulation test of complete synchronization: every slave must track the
/// master within tolerance * diameter over the trailing tail_fraction of samples.
/// A diverged slave counts as non-synchronizing and is flagged.
GroundTruthResult ground_truth_sync(const SystemSpec& system, int forced_variable,
                                    const Vector& master_ic, const std::vector<Vector>& slave_ics,
                                    const GroundTruthOptions& opts = {});

enum class SyncPrediction { Sync, NoSync, Indeterminate };
std::string to_string(SyncPrediction p);

struct SyncClassification {
    std::vector<std::string> variable_names;
    std::vector<double> net_values;
    std::vector<SyncPrediction> predicted;
    std::vector<std::string> caveats;
    // filled when a direct-simulation comparison is attached
    std::optional<std::vector<bool>> ground_truth;
};

/// Master-only criterion: the most-negative net variable is predicted to
/// synchronize (demoted to indeterminate when it lacks direct self-dependence,
/// promoting the next most-negative), positive-net variables never synchronize,
/// remaining negative ones are indeterminate.
SyncClassification classify_sync_variables(const Trajectory& traj, const CccParams& params,
                                           const std::optional<std::vector<bool>>& self_dependence =
                                               std::nullopt);

/// Classification rule applied to precomputed net values (exposed for testing).
std::vector<SyncPrediction> classify_from_nets(const std::vector<double>& nets,
                                               const std::optional<std::vector<bool>>& self_dependence,
                                               std::vector<std::string>* caveats = nullptr);

}  // namespace ccsync
