#include "ccsync/dynsys.hpp"

#include <algorithm>
#include <cmath>

namespace ccsync {

IntegrationMethod method_from_string(const std::string& name) {
    if (name == "euler") return IntegrationMethod::Euler;
    if (name == "rk4") return IntegrationMethod::Rk4;
    throw std::invalid_argument("unknown integration method '" + name + "' (euler|rk4)");
}

std::string to_string(IntegrationMethod m) {
    return m == IntegrationMethod::Euler ? "euler" : "rk4";
}

void SystemSpec::validate() const {
    if (dimension <= 0) throw std::invalid_argument("system dimension must be positive");
    if (static_cast<int>(variable_names.size()) != dimension)
        throw std::invalid_argument("variable_names length must equal dimension");
    if (static_cast<int>(self_dependent.size()) != dimension)
        throw std::invalid_argument("self_dependent length must equal dimension");
    for (const auto& [k, v] : parameters)
        if (!std::isfinite(v)) throw std::invalid_argument("parameter " + k + " is not finite");
    if (!rhs) throw std::invalid_argument("system has no update rule");
}

SystemSpec builtin_system(const std::string& name) {
    SystemSpec s;
    s.name = name;
    if (name == "lorenz") {
        const double sigma = 10.0, rho = 60.0, beta = 8.0 / 3.0;
        s.dimension = 3;
        s.kind = SystemKind::Continuous;
        s.default_dt = 0.001;
        s.default_method = IntegrationMethod::Euler;
        s.variable_names = {"x", "y", "z"};
        s.parameters = {{"sigma", sigma}, {"rho", rho}, {"beta", beta}};
        s.self_dependent = {true, true, true};
        s.rhs = [=](double, const Vector& v) {
            Vector d(3);
            d << sigma * (v[1] - v[0]), v[0] * (rho - v[2]) - v[1], v[0] * v[1] - beta * v[2];
            return d;
        };
    } else if (name == "rossler") {
        const double a = 0.2, b = 0.2, c = 9.0;
        s.dimension = 3;
        s.kind = SystemKind::Continuous;
        s.default_dt = 0.01;
        s.default_method = IntegrationMethod::Rk4;
        s.variable_names = {"x", "y", "z"};
        s.parameters = {{"a", a}, {"b", b}, {"c", c}};
        // dx/dt = -y - z has no direct x term
        s.self_dependent = {false, true, true};
        s.rhs = [=](double, const Vector& v) {
            Vector d(3);
            d << -v[1] - v[2], v[0] + a * v[1], b + v[2] * (v[0] - c);
            return d;
        };
    } else if (name == "chen") {
        const double a = 35.0, b = 3.0, c = 28.0;
        s.dimension = 3;
        s.kind = SystemKind::Continuous;
        s.default_dt = 0.01;
        s.default_method = IntegrationMethod::Rk4;
        s.variable_names = {"x", "y", "z"};
        s.parameters = {{"a", a}, {"b", b}, {"c", c}};
        s.self_dependent = {true, true, true};
        s.rhs = [=](double, const Vector& v) {
            Vector d(3);
            d << a * (v[1] - v[0]), (c - a) * v[0] - v[0] * v[2] + c * v[1],
                v[0] * v[1] - b * v[2];
            return d;
        };
    } else if (name == "lorenz5d") {
        const double sigma = 10.0, rho = 60.0, beta = 8.0 / 3.0;
        s.dimension = 5;
        s.kind = SystemKind::Continuous;
        s.default_dt = 0.001;
        s.default_method = IntegrationMethod::Euler;
        s.variable_names = {"x", "y", "z", "q", "w"};
        s.parameters = {{"sigma", sigma}, {"rho", rho}, {"beta", beta}};
        s.self_dependent = {true, true, true, true, true};
        s.rhs = [=](double, const Vector& v) {
            Vector d(5);
            d << sigma * (v[1] - v[0]) + v[4], v[0] * (rho - v[2]) - v[1],
                v[0] * v[1] - beta * v[2], -v[3] * v[3] * v[3] + v[4],
                -v[0] - v[3] - 8.0 * v[4];
            return d;
        };
    } else if (name == "henon") {
        const double a = 1.4, b = 0.3;
        s.dimension = 2;
        s.kind = SystemKind::Discrete;
        s.default_dt = 1.0;
        s.default_method = IntegrationMethod::Euler;
        s.variable_names = {"x", "y"};
        s.parameters = {{"a", a}, {"b", b}};
        // y_{n+1} = b * x_n has no direct y term
        s.self_dependent = {true, false};
        s.rhs = [=](double, const Vector& v) {
            Vector d(2);
            d << 1.0 - a * v[0] * v[0] + v[1], b * v[0];
            return d;
        };
    } else {
        throw std::invalid_argument("unknown system '" + name +
                                    "' (lorenz|rossler|chen|lorenz5d|henon)");
    }
    s.validate();
    return s;
}

std::vector<std::string> builtin_system_names() {
    return {"lorenz", "rossler", "chen", "lorenz5d", "henon"};
}

namespace {

void check_state(const Vector& v, double bound, long step) {
    for (int i = 0; i < v.size(); ++i) {
        double a = v[i];
        if (!std::isfinite(a) || std::abs(a) > bound)
            throw DivergenceError("state diverged (component " + std::to_string(i) + " = " +
                                      std::to_string(a) + " at step " + std::to_string(step) + ")",
                                  step);
    }
}

Vector step_state(const SystemSpec& sys, IntegrationMethod method, double t, double dt,
                  const Vector& v) {
    if (sys.kind == SystemKind::Discrete) return sys.rhs(t, v);
    if (method == IntegrationMethod::Euler) return v + dt * sys.rhs(t, v);
    Vector k1 = sys.rhs(t, v);
    Vector k2 = sys.rhs(t + dt / 2.0, v + (dt / 2.0) * k1);
    Vector k3 = sys.rhs(t + dt / 2.0, v + (dt / 2.0) * k2);
    Vector k4 = sys.rhs(t + dt, v + dt * k3);
    return v + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

Trajectory integrate(const SystemSpec& system, const Vector& ic, long n_samples, long transients,
                     IntegrationMethod method, double dt, const IntegrateOptions& opts) {
    system.validate();
    if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
    if (transients < 0) throw std::invalid_argument("transients must be >= 0");
    if (ic.size() != system.dimension)
        throw std::invalid_argument("initial condition length must equal system dimension");
    if (system.kind == SystemKind::Continuous && !(dt > 0.0))
        throw std::invalid_argument("dt must be positive for continuous systems");
    check_state(ic, opts.divergence_bound, -1);

    const double h = system.kind == SystemKind::Discrete ? 1.0 : dt;
    Trajectory out;
    out.dt = h;
    out.transients_removed = transients;
    out.variable_names = system.variable_names;
    out.samples.resize(n_samples, system.dimension);

    Vector v = ic;
    const long total = n_samples + transients;
    for (long i = 0; i < total; ++i) {
        if (i >= transients) out.samples.row(i - transients) = v;
        v = step_state(system, method, static_cast<double>(i) * h, h, v);
        check_state(v, opts.divergence_bound, i);
    }
    return out;
}

Trajectory integrate_slave(const SystemSpec& system, const CouplingSpec& coupling,
                           const Trajectory& master, long n_samples, long transients,
                           IntegrationMethod method, double dt, const IntegrateOptions& opts) {
    system.validate();
    const int p = coupling.forced_variable;
    if (p < 0 || p >= system.dimension)
        throw std::invalid_argument("forced_variable out of range");
    if (coupling.slave_ic.size() != system.dimension)
        throw std::invalid_argument("slave_ic length must equal system dimension");
    if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
    if (master.rows() < n_samples + transients)
        throw std::invalid_argument("master trajectory too short: needs " +
                                    std::to_string(n_samples + transients) + " rows, has " +
                                    std::to_string(master.rows()));
    if (master.cols() != system.dimension)
        throw std::invalid_argument("master trajectory dimension mismatch");
    if (system.kind == SystemKind::Continuous && !(dt > 0.0))
        throw std::invalid_argument("dt must be positive for continuous systems");

    const double h = system.kind == SystemKind::Discrete ? 1.0 : dt;
    Trajectory out;
    out.dt = h;
    out.transients_removed = transients;
    out.variable_names = system.variable_names;
    out.samples.resize(n_samples, system.dimension);

    Vector v = coupling.slave_ic;
    const long total = n_samples + transients;
    for (long i = 0; i < total; ++i) {
        v[p] = master.samples(i, p);
        if (i >= transients) out.samples.row(i - transients) = v;
        const double t = static_cast<double>(i) * h;
        if (system.kind == SystemKind::Discrete || method == IntegrationMethod::Euler) {
            v = step_state(system, method, t, h, v);
        } else {
            // Reconstruct the master's own RK4 stage states from the stored row so
            // the forced variable is substituted exactly at every stage evaluation.
            Vector m = master.samples.row(i).transpose();
            Vector mk1 = system.rhs(t, m);
            Vector mk2 = system.rhs(t + h / 2.0, m + (h / 2.0) * mk1);
            Vector mk3 = system.rhs(t + h / 2.0, m + (h / 2.0) * mk2);
            const double p1 = m[p];
            const double p2 = m[p] + (h / 2.0) * mk1[p];
            const double p3 = m[p] + (h / 2.0) * mk2[p];
            const double p4 = m[p] + h * mk3[p];

            auto forced_rhs = [&](double tt, Vector s, double pval) {
                s[p] = pval;
                return system.rhs(tt, s);
            };
            Vector k1 = forced_rhs(t, v, p1);
            Vector k2 = forced_rhs(t + h / 2.0, v + (h / 2.0) * k1, p2);
            Vector k3 = forced_rhs(t + h / 2.0, v + (h / 2.0) * k2, p3);
            Vector k4 = forced_rhs(t + h, v + h * k3, p4);
            v = v + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        check_state(v, opts.divergence_bound, i);
    }
    // forced column is the master's, bitwise
    out.samples.col(p) = master.samples.col(p).segment(transients, n_samples);
    return out;
}

double sync_distance(const Trajectory& a, const Trajectory& b, double tail_fraction) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("sync_distance: trajectory shapes differ");
    if (!(tail_fraction > 0.0) || tail_fraction > 1.0)
        throw std::invalid_argument("tail_fraction must be in (0, 1]");
    const long n = a.rows();
    long start = n - static_cast<long>(std::ceil(tail_fraction * static_cast<double>(n)));
    start = std::max<long>(0, std::min(start, n - 1));
    double sup = 0.0;
    for (long i = start; i < n; ++i)
        sup = std::max(sup, (a.samples.row(i) - b.samples.row(i)).norm());
    return sup;
}

double attractor_diameter(const Trajectory& traj) {
    double d = 0.0;
    for (int c = 0; c < traj.cols(); ++c)
        d = std::max(d, traj.samples.col(c).maxCoeff() - traj.samples.col(c).minCoeff());
    return d;
}

}  // namespace ccsync
