#include "ccsync/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace ccsync {

void StabilityConfig::validate() const {
    system.validate();
    ccc.validate();
    if (forced_variable < 0 || forced_variable >= system.dimension)
        throw std::invalid_argument("stability: forced_variable out of range");
    if (master_ic.size() != system.dimension || slave0_ic.size() != system.dimension)
        throw std::invalid_argument("stability: initial condition length mismatch");
    if (deltas.empty()) throw std::invalid_argument("stability: deltas must be non-empty");
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        if (deltas[i] < 0.0) throw std::invalid_argument("stability: deltas must be >= 0");
        if (i > 0 && !(deltas[i] > deltas[i - 1]))
            throw std::invalid_argument("stability: deltas must be strictly increasing");
    }
    if (k_max < 1) throw std::invalid_argument("stability: k_max must be >= 1");
    if (n_samples < 1 || transients < 0)
        throw std::invalid_argument("stability: invalid sample counts");
}

namespace {

// deterministic uniform draw on the open interval (-1, 1)
double uniform_open(std::mt19937_64& eng) {
    for (;;) {
        const double u =
            static_cast<double>(eng() >> 11) * (1.0 / 9007199254740992.0);  // [0, 1)
        const double c = 2.0 * u - 1.0;
        if (c > -1.0) return c;
    }
}

Trajectory analysis_view(const Trajectory& full, long transients, long n_samples) {
    Trajectory out;
    out.dt = full.dt;
    out.transients_removed = transients;
    out.variable_names = full.variable_names;
    out.samples = full.samples.middleRows(transients, n_samples);
    return out;
}

}  // namespace

StabilityReport run_stability(const StabilityConfig& config) {
    config.validate();
    const IntegrateOptions iopts{config.divergence_bound};

    // master over the full grid (slaves consume transients + n_samples rows)
    const Trajectory master_full =
        integrate(config.system, config.master_ic, config.transients + config.n_samples, 0,
                  config.method, config.dt, iopts);
    const Trajectory master = analysis_view(master_full, config.transients, config.n_samples);

    // slave columns are symbolized against the master's ranges so the alphabets of
    // all slaves are comparable
    ColumnRanges ranges;
    for (int c = 0; c < master.cols(); ++c) {
        double lo = master.samples.col(c).minCoeff();
        double hi = master.samples.col(c).maxCoeff();
        if (!(hi > lo)) hi = lo + 1.0;
        ranges.emplace_back(lo, hi);
    }

    StabilityReport report;
    report.forced_variable = config.forced_variable;
    report.seed = config.seed;
    report.deltas = config.deltas;

    auto slave_net = [&](const Vector& ic, SlaveOutcome& outp) {
        try {
            CouplingSpec cpl{config.forced_variable, config.master_ic, ic};
            const Trajectory slave = integrate_slave(config.system, cpl, master_full,
                                                     config.n_samples, config.transients,
                                                     config.method, config.dt, iopts);
            outp.ccc_net = ccc_net(config.forced_variable, slave, config.ccc, ranges).net;
            outp.diverged = false;
        } catch (const DivergenceError&) {
            outp.diverged = true;
            outp.ccc_net = std::numeric_limits<double>::quiet_NaN();
        }
    };

    SlaveOutcome s0;
    slave_net(config.slave0_ic, s0);
    report.s0_ccc_net = s0.ccc_net;
    report.s0_diverged = s0.diverged;
    report.any_diverged = s0.diverged;

    std::mt19937_64 eng(config.seed);
    const int dim = config.system.dimension;
    for (double delta : config.deltas) {
        std::vector<SlaveOutcome> outcomes;
        std::vector<double> m_curve;
        outcomes.reserve(static_cast<std::size_t>(config.k_max));
        double running_sum = 0.0;
        long included = 0;
        for (int k = 1; k <= config.k_max; ++k) {
            Vector ic(dim);
            for (int c = 0; c < dim; ++c) ic[c] = config.slave0_ic[c] + delta * uniform_open(eng);
            SlaveOutcome o;
            slave_net(ic, o);
            if (o.diverged || report.s0_diverged) {
                o.abs_diff = 0.0;
                report.any_diverged = true;
            } else {
                o.abs_diff = std::abs(report.s0_ccc_net - o.ccc_net);
                running_sum += o.abs_diff;
                ++included;
            }
            outcomes.push_back(o);
            m_curve.push_back(included > 0 ? running_sum / static_cast<double>(included)
                                           : std::numeric_limits<double>::quiet_NaN());
        }
        report.outcomes.push_back(std::move(outcomes));
        report.m_curve.push_back(std::move(m_curve));
    }
    return report;
}

bool check_causal_stability(const StabilityReport& report, double epsilon) {
    if (report.deltas.empty() || report.outcomes.empty())
        throw std::invalid_argument("check_causal_stability: empty perturbation set");
    for (const auto& per_delta : report.outcomes)
        if (per_delta.empty())
            throw std::invalid_argument("check_causal_stability: empty perturbation set");
    if (report.s0_diverged || report.any_diverged) return false;
    for (const auto& per_delta : report.outcomes)
        for (const auto& o : per_delta)
            if (!(o.abs_diff < epsilon)) return false;
    return true;
}

GroundTruthResult ground_truth_sync(const SystemSpec& system, int forced_variable,
                                    const Vector& master_ic, const std::vector<Vector>& slave_ics,
                                    const GroundTruthOptions& opts) {
    system.validate();
    if (forced_variable < 0 || forced_variable >= system.dimension)
        throw std::invalid_argument("ground_truth_sync: forced_variable out of range");
    if (slave_ics.size() < 2)
        throw std::invalid_argument("ground_truth_sync: needs at least two slave ics");
    {
        std::set<std::vector<double>> distinct;
        for (const auto& ic : slave_ics)
            distinct.insert(std::vector<double>(ic.data(), ic.data() + ic.size()));
        if (distinct.size() < 2)
            throw std::invalid_argument("ground_truth_sync: slave ics must be distinct");
    }

    const IntegrationMethod method = opts.method.value_or(system.default_method);
    const double dt = opts.dt.value_or(system.default_dt);
    const IntegrateOptions iopts{opts.divergence_bound};

    const Trajectory master_full = integrate(system, master_ic, opts.transients + opts.n_samples,
                                             0, method, dt, iopts);
    const Trajectory master = analysis_view(master_full, opts.transients, opts.n_samples);

    GroundTruthResult res;
    res.diameter = attractor_diameter(master);
    res.sync = true;
    for (const auto& ic : slave_ics) {
        try {
            CouplingSpec cpl{forced_variable, master_ic, ic};
            const Trajectory slave = integrate_slave(system, cpl, master_full, opts.n_samples,
                                                     opts.transients, method, dt, iopts);
            const double d = sync_distance(master, slave, opts.tail_fraction);
            res.tail_distances.push_back(d);
            if (!(d < opts.tolerance * res.diameter)) res.sync = false;
        } catch (const DivergenceError&) {
            res.tail_distances.push_back(std::numeric_limits<double>::infinity());
            res.any_diverged = true;
            res.sync = false;
        }
    }
    return res;
}

std::string to_string(SyncPrediction p) {
    switch (p) {
        case SyncPrediction::Sync: return "sync";
        case SyncPrediction::NoSync: return "no-sync";
        default: return "indeterminate";
    }
}

std::vector<SyncPrediction> classify_from_nets(const std::vector<double>& nets,
                                               const std::optional<std::vector<bool>>& self_dependence,
                                               std::vector<std::string>* caveats) {
    const std::size_t n = nets.size();
    if (n < 2) throw std::invalid_argument("classify: fewer than 2 variables");
    if (self_dependence && self_dependence->size() != n)
        throw std::invalid_argument("classify: self-dependence flags length mismatch");

    std::vector<SyncPrediction> pred(n, SyncPrediction::Indeterminate);
    for (std::size_t i = 0; i < n; ++i)
        if (nets[i] > 0.0) pred[i] = SyncPrediction::NoSync;

    // negative variables ordered most-negative first
    std::vector<std::size_t> negatives;
    for (std::size_t i = 0; i < n; ++i)
        if (nets[i] < 0.0) negatives.push_back(i);
    std::sort(negatives.begin(), negatives.end(),
              [&](std::size_t a, std::size_t b) { return nets[a] < nets[b]; });

    for (std::size_t rank = 0; rank < negatives.size(); ++rank) {
        const std::size_t v = negatives[rank];
        if (self_dependence && !(*self_dependence)[v]) {
            if (caveats)
                caveats->push_back("variable " + std::to_string(v) +
                                   " demoted: no direct self-dependence");
            continue;  // promote the next most-negative
        }
        pred[v] = SyncPrediction::Sync;
        break;
    }
    return pred;
}

SyncClassification classify_sync_variables(const Trajectory& traj, const CccParams& params,
                                           const std::optional<std::vector<bool>>& self_dependence) {
    if (traj.cols() < 2) throw std::invalid_argument("classify: fewer than 2 variables");
    SyncClassification out;
    out.variable_names = traj.variable_names;
    const NetReport rep = net_report(traj, params);
    for (const auto& e : rep.entries) out.net_values.push_back(e.net);
    out.predicted = classify_from_nets(out.net_values, self_dependence, &out.caveats);
    return out;
}

}  // namespace ccsync
