#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ccsync {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Thrown when a state component leaves the configured bound or becomes non-finite.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& what, long step) : std::runtime_error(what), step_(step) {}
    long step() const { return step_; }

private:
    long step_;
};

enum class SystemKind { Continuous, Discrete };
enum class IntegrationMethod { Euler, Rk4 };

IntegrationMethod method_from_string(const std::string& name);
std::string to_string(IntegrationMethod m);

/// A named dynamical system: right-hand side (continuous) or map (discrete),
/// its parameter values, and per-variable metadata.
struct SystemSpec {
    std::string name;
    int dimension = 0;
    SystemKind kind = SystemKind::Continuous;
    double default_dt = 0.01;
    IntegrationMethod default_method = IntegrationMethod::Rk4;
    std::vector<std::string> variable_names;
    std::map<std::string, double> parameters;
    // whether variable i's own update rule depends directly on variable i
    std::vector<bool> self_dependent;
    // dy/dt = f(t, y) for continuous systems; y_{n+1} = f(n, y_n) for maps
    std::function<Vector(double, const Vector&)> rhs;

    void validate() const;
};

/// The five built-in systems with their chaotic-regime parameter values.
/// Known names: lorenz, rossler, chen, lorenz5d, henon.
SystemSpec builtin_system(const std::string& name);
std::vector<std::string> builtin_system_names();

/// A sampled solution: one row per sample, one column per variable.
struct Trajectory {
    Matrix samples;
    double dt = 1.0;
    long transients_removed = 0;
    std::vector<std::string> variable_names;

    long rows() const { return samples.rows(); }
    int cols() const { return static_cast<int>(samples.cols()); }
};

/// Which master variable overrides which slave variable (complete substitution).
struct CouplingSpec {
    int forced_variable = 0;
    Vector master_ic;
    Vector slave_ic;
};

struct IntegrateOptions {
    double divergence_bound = 1e9;
};

/// Integrate `system` from `ic`, discard `transients` samples, return `n_samples` rows.
/// Discrete systems ignore dt and iterate the map.
Trajectory integrate(const SystemSpec& system, const Vector& ic, long n_samples,
                     long transients, IntegrationMethod method, double dt,
                     const IntegrateOptions& opts = {});

/// Integrate the slave against a stored master trajectory. The forced variable is
/// replaced by the master's value before every update; for RK4 the master's internal
/// stage values are reconstructed from the stored state rows, so the substitution is
/// exact at every stage evaluation. The master must cover transients + n_samples rows
/// at the same dt and method. The returned forced column equals the master's bitwise.
Trajectory integrate_slave(const SystemSpec& system, const CouplingSpec& coupling,
                           const Trajectory& master, long n_samples, long transients,
                           IntegrationMethod method, double dt,
                           const IntegrateOptions& opts = {});

/// Supremum of the Euclidean distance between corresponding states over the last
/// tail_fraction of rows.
double sync_distance(const Trajectory& a, const Trajectory& b, double tail_fraction);

/// Max per-coordinate range of the trajectory; scale reference for sync tolerances.
double attractor_diameter(const Trajectory& traj);

}  // namespace ccsync
