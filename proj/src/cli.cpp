#include "ccsync/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccsync/experiments.hpp"
#include "ccsync/io.hpp"

namespace ccsync {

using json = nlohmann::ordered_json;

Experiment experiment_from_string(const std::string& name) {
    if (name == "simulate") return Experiment::Simulate;
    if (name == "etc") return Experiment::Etc;
    if (name == "ccc") return Experiment::Ccc;
    if (name == "ccc-matrix") return Experiment::CccMatrix;
    if (name == "stability") return Experiment::Stability;
    if (name == "sync-check") return Experiment::SyncCheck;
    if (name == "classify") return Experiment::Classify;
    throw ConfigError("experiment: unknown value '" + name +
                      "' (simulate|etc|ccc|ccc-matrix|stability|sync-check|classify)");
}

std::string to_string(Experiment e) {
    switch (e) {
        case Experiment::Simulate: return "simulate";
        case Experiment::Etc: return "etc";
        case Experiment::Ccc: return "ccc";
        case Experiment::CccMatrix: return "ccc-matrix";
        case Experiment::Stability: return "stability";
        case Experiment::SyncCheck: return "sync-check";
        default: return "classify";
    }
}

namespace {

struct SystemDefaults {
    IntegrationMethod method;
    double dt;
    std::vector<double> master_ic;
    std::vector<double> slave_ic;
    std::vector<double> slave_ic2;
    long sync_transients;  // transient count for sync-check runs
};

SystemDefaults system_defaults(const std::string& name) {
    if (name == "lorenz")
        return {IntegrationMethod::Euler, 0.001, {3, 4, 6}, {7, 1, 6}, {-5, 9, 40}, 20000};
    if (name == "rossler")
        return {IntegrationMethod::Rk4, 0.01, {1, 1, 1}, {4, -3, 2}, {-6, 5, 0.5}, 300000};
    if (name == "chen")
        return {IntegrationMethod::Rk4, 0.01, {3, 4, 6}, {7, 1, 6}, {-5, 2, 20}, 2000};
    if (name == "lorenz5d")
        return {IntegrationMethod::Euler, 0.001, {3, 4, 6, 1, 1},
                {7, 1, 6, 0.5, -0.5}, {-5, 9, 40, -1, 0.2}, 40000};
    if (name == "henon")
        return {IntegrationMethod::Euler, 1.0, {0.1, 0.1}, {0.3, 0.15}, {-0.2, 0.05}, 2000};
    throw ConfigError("system: unknown value '" + name +
                      "' (lorenz|rossler|chen|lorenz5d|henon)");
}

double parse_real(const std::string& key, const std::string& text) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ConfigError(key + ": invalid number '" + text + "'");
    }
}

long parse_int(const std::string& key, const std::string& text) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ConfigError(key + ": invalid integer '" + text + "'");
    }
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(parse_real(key, cell));
    if (out.empty()) throw ConfigError(key + ": empty list");
    return out;
}

std::string join_list(const std::vector<double>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", v[i]);
        out << buf;
    }
    return out.str();
}

int variable_index(const SystemSpec& sys, const std::string& name) {
    for (int i = 0; i < sys.dimension; ++i)
        if (sys.variable_names[static_cast<std::size_t>(i)] == name) return i;
    throw ConfigError("forced: unknown variable '" + name + "' for system " + sys.name);
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
    std::vector<std::string> argv = args;
    std::string subcommand;
    if (!argv.empty() && !argv.front().empty() && argv.front()[0] != '-') {
        subcommand = argv.front();
        argv.erase(argv.begin());
        experiment_from_string(subcommand);  // validate early
    }

    CLI::App app{"master-slave chaotic synchronization and compression-complexity causality"};
    app.allow_config_extras(false);
    app.set_config("--config", "", "key=value configuration file (flags override)");

    std::string s_experiment, s_system, s_method, s_dt, s_samples, s_transients;
    std::string s_past, s_current, s_step, s_bins, s_seed, s_output, s_format;
    std::string s_master, s_slave, s_slave2, s_forced, s_deltas, s_kmax, s_tolerance;
    std::string s_input, s_column, s_cause, s_effect;

    app.add_option("--experiment", s_experiment, "experiment to run");
    app.add_option("--system", s_system, "system name (lorenz|rossler|chen|lorenz5d|henon)");
    app.add_option("--method", s_method, "integration method (euler|rk4)");
    app.add_option("--dt", s_dt, "integration/sampling step");
    app.add_option("--samples", s_samples, "post-transient sample count");
    app.add_option("--transients", s_transients, "discarded transient samples");
    app.add_option("--ccc-past", s_past, "CCC past window length L");
    app.add_option("--ccc-current", s_current, "CCC current window length w");
    app.add_option("--ccc-step", s_step, "CCC window stride");
    app.add_option("--ccc-bins", s_bins, "CCC symbolization bins B");
    app.add_option("--seed", s_seed, "PRNG seed (required for stability)");
    app.add_option("--output", s_output, "output file path");
    app.add_option("--format", s_format, "output format (csv|json)");
    app.add_option("--master-ic", s_master, "master initial condition, comma separated");
    app.add_option("--slave-ic", s_slave, "slave initial condition, comma separated");
    app.add_option("--slave-ic2", s_slave2, "second slave initial condition (sync-check)");
    app.add_option("--forced", s_forced, "forced variable name (stability)");
    app.add_option("--deltas", s_deltas, "perturbation scales, comma separated");
    app.add_option("--kmax", s_kmax, "secondary slaves per delta");
    app.add_option("--tolerance", s_tolerance, "sync tolerance relative to attractor diameter");
    app.add_option("--input", s_input, "input trajectory CSV");
    app.add_option("--column", s_column, "column name (etc)");
    app.add_option("--cause", s_cause, "cause column/variable name (ccc)");
    app.add_option("--effect", s_effect, "effect column/variable name (ccc)");

    std::vector<char*> c_args;
    std::string prog = "ccsync";
    c_args.push_back(prog.data());
    for (auto& a : argv) c_args.push_back(a.data());
    try {
        app.parse(static_cast<int>(c_args.size()), c_args.data());
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    if (s_experiment.empty()) s_experiment = subcommand;
    if (s_experiment.empty())
        throw ConfigError(
            "missing required key(s): experiment "
            "(simulate|etc|ccc|ccc-matrix|stability|sync-check|classify); "
            "most experiments also need: system");

    RunConfig cfg;
    cfg.experiment = experiment_from_string(s_experiment);

    const bool input_driven = !s_input.empty();
    const bool needs_system =
        !(input_driven && (cfg.experiment == Experiment::Etc || cfg.experiment == Experiment::Ccc ||
                           cfg.experiment == Experiment::CccMatrix ||
                           cfg.experiment == Experiment::Classify)) &&
        cfg.experiment != Experiment::Etc;
    if (s_system.empty()) {
        if (needs_system)
            throw ConfigError("system: required for experiment " + s_experiment);
        cfg.system.clear();
    } else {
        cfg.system = s_system;
    }

    // per-system defaults (sync-check over all systems resolves them per run)
    const bool all_systems = cfg.system == "all" && cfg.experiment == Experiment::SyncCheck;
    if (!cfg.system.empty() && !all_systems) {
        const SystemDefaults d = system_defaults(cfg.system);
        cfg.method = d.method;
        cfg.dt = d.dt;
        cfg.master_ic = d.master_ic;
        cfg.slave_ic = d.slave_ic;
        cfg.slave_ic2 = d.slave_ic2;
        cfg.ccc = default_ccc_params(cfg.system);
        if (cfg.experiment == Experiment::SyncCheck) cfg.transients = d.sync_transients;
    }

    // per-experiment defaults
    switch (cfg.experiment) {
        case Experiment::Simulate:
        case Experiment::Stability:
            cfg.n_samples = 10000;
            if (cfg.experiment == Experiment::Stability) cfg.transients = 2000;
            else cfg.transients = 2000;
            break;
        case Experiment::Ccc:
        case Experiment::CccMatrix:
        case Experiment::Classify:
            cfg.n_samples = 8000;
            cfg.transients = 2000;
            break;
        case Experiment::SyncCheck:
            cfg.n_samples = 10000;
            break;
        case Experiment::Etc:
            break;
    }

    if (!s_method.empty()) {
        try {
            cfg.method = method_from_string(s_method);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("method: ") + e.what());
        }
    }
    if (!s_dt.empty()) {
        cfg.dt = parse_real("dt", s_dt);
        if (!(cfg.dt > 0)) throw ConfigError("dt: must be positive");
    }
    if (!s_samples.empty()) {
        cfg.n_samples = parse_int("samples", s_samples);
        if (cfg.n_samples < 1) throw ConfigError("samples: must be >= 1");
    }
    if (!s_transients.empty()) {
        cfg.transients = parse_int("transients", s_transients);
        if (cfg.transients < 0) throw ConfigError("transients: must be >= 0");
    }
    if (!s_past.empty()) cfg.ccc.past_len = static_cast<int>(parse_int("ccc-past", s_past));
    if (!s_current.empty())
        cfg.ccc.current_len = static_cast<int>(parse_int("ccc-current", s_current));
    if (!s_step.empty()) cfg.ccc.step = static_cast<int>(parse_int("ccc-step", s_step));
    if (!s_bins.empty()) cfg.ccc.bins = static_cast<int>(parse_int("ccc-bins", s_bins));
    try {
        cfg.ccc.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("ccc parameters: ") + e.what());
    }
    if (!s_seed.empty()) cfg.seed = static_cast<std::uint64_t>(parse_int("seed", s_seed));
    if (!s_output.empty()) cfg.output = s_output;
    if (!s_format.empty()) {
        if (s_format == "csv") cfg.format = OutputFormat::Csv;
        else if (s_format == "json") cfg.format = OutputFormat::Json;
        else throw ConfigError("format: unknown value '" + s_format + "' (csv|json)");
    }
    if (!s_master.empty()) cfg.master_ic = parse_list("master-ic", s_master);
    if (!s_slave.empty()) cfg.slave_ic = parse_list("slave-ic", s_slave);
    if (!s_slave2.empty()) cfg.slave_ic2 = parse_list("slave-ic2", s_slave2);
    if (!s_forced.empty()) cfg.forced = s_forced;
    if (!s_deltas.empty()) {
        cfg.deltas = parse_list("deltas", s_deltas);
        for (std::size_t i = 0; i < cfg.deltas.size(); ++i) {
            if (!(cfg.deltas[i] > 0)) throw ConfigError("deltas: must be positive");
            if (i > 0 && !(cfg.deltas[i] > cfg.deltas[i - 1]))
                throw ConfigError("deltas: must be strictly increasing");
        }
    }
    if (!s_kmax.empty()) {
        cfg.k_max = static_cast<int>(parse_int("kmax", s_kmax));
        if (cfg.k_max < 1) throw ConfigError("kmax: must be >= 1");
    }
    if (!s_tolerance.empty()) {
        cfg.tolerance = parse_real("tolerance", s_tolerance);
        if (!(cfg.tolerance > 0)) throw ConfigError("tolerance: must be positive");
    }
    if (!s_input.empty()) cfg.input = s_input;
    if (!s_column.empty()) cfg.column = s_column;
    if (!s_cause.empty()) cfg.cause = s_cause;
    if (!s_effect.empty()) cfg.effect = s_effect;

    // experiment-specific requirements
    if (cfg.experiment == Experiment::Stability && !cfg.seed)
        throw ConfigError("seed: required for stability runs (flag or config file)");
    if (cfg.experiment == Experiment::Etc) {
        if (cfg.input.empty()) throw ConfigError("input: required for etc");
        if (cfg.column.empty()) throw ConfigError("column: required for etc");
    }
    if (cfg.experiment == Experiment::Ccc && (cfg.cause.empty() || cfg.effect.empty()))
        throw ConfigError("cause/effect: both required for ccc");
    return cfg;
}

std::string emit_config(const RunConfig& c) {
    std::ostringstream out;
    char buf[64];
    out << "experiment=" << to_string(c.experiment) << '\n';
    if (!c.system.empty()) out << "system=" << c.system << '\n';
    out << "method=" << to_string(c.method) << '\n';
    std::snprintf(buf, sizeof(buf), "%.17g", c.dt);
    out << "dt=" << buf << '\n';
    out << "samples=" << c.n_samples << '\n';
    out << "transients=" << c.transients << '\n';
    out << "ccc-past=" << c.ccc.past_len << '\n';
    out << "ccc-current=" << c.ccc.current_len << '\n';
    out << "ccc-step=" << c.ccc.step << '\n';
    out << "ccc-bins=" << c.ccc.bins << '\n';
    if (c.seed) out << "seed=" << *c.seed << '\n';
    if (!c.output.empty()) out << "output=" << c.output << '\n';
    out << "format=" << (c.format == OutputFormat::Csv ? "csv" : "json") << '\n';
    if (!c.master_ic.empty()) out << "master-ic=" << join_list(c.master_ic) << '\n';
    if (!c.slave_ic.empty()) out << "slave-ic=" << join_list(c.slave_ic) << '\n';
    if (!c.slave_ic2.empty()) out << "slave-ic2=" << join_list(c.slave_ic2) << '\n';
    out << "forced=" << c.forced << '\n';
    out << "deltas=" << join_list(c.deltas) << '\n';
    out << "kmax=" << c.k_max << '\n';
    std::snprintf(buf, sizeof(buf), "%.17g", c.tolerance);
    out << "tolerance=" << buf << '\n';
    if (!c.input.empty()) out << "input=" << c.input << '\n';
    if (!c.column.empty()) out << "column=" << c.column << '\n';
    if (!c.cause.empty()) out << "cause=" << c.cause << '\n';
    if (!c.effect.empty()) out << "effect=" << c.effect << '\n';
    return out.str();
}

namespace {

Vector to_vector(const std::vector<double>& v) {
    Vector out(static_cast<long>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<long>(i)] = v[i];
    return out;
}

std::string resolve_output(const std::string& path) {
    if (path.empty()) return path;
    std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    if (const char* dir = std::getenv("CCSYNC_OUTPUT_DIR"))
        return (std::filesystem::path(dir) / p).string();
    return path;
}

void write_artifact(const std::string& path, const std::string& content) {
    if (path.empty()) return;
    atomic_write(resolve_output(path), content);
}

Trajectory load_or_simulate(const RunConfig& c) {
    if (!c.input.empty()) return trajectory_from_csv(c.input, c.dt);
    const SystemSpec sys = builtin_system(c.system);
    return integrate(sys, to_vector(c.master_ic), c.n_samples, c.transients, c.method, c.dt);
}

int column_index(const Trajectory& t, const std::string& key, const std::string& name) {
    for (std::size_t i = 0; i < t.variable_names.size(); ++i)
        if (t.variable_names[i] == name) return static_cast<int>(i);
    throw ConfigError(key + ": no column named '" + name + "'");
}

std::string summary_line(const RunConfig& c, const std::string& extra) {
    std::ostringstream out;
    out << to_string(c.experiment);
    if (!c.system.empty()) out << " system=" << c.system;
    if (c.seed) out << " seed=" << *c.seed;
    if (!extra.empty()) out << ' ' << extra;
    out << " output=" << (c.output.empty() ? "-" : resolve_output(c.output));
    return out.str();
}

const char* mark(bool sync) { return sync ? "✓" : "✗"; }

int run_simulate(const RunConfig& c) {
    const Trajectory traj = load_or_simulate(c);
    write_artifact(c.output, trajectory_to_csv(traj));
    std::cout << summary_line(c, "rows=" + std::to_string(traj.rows())) << '\n';
    return 0;
}

int run_etc(const RunConfig& c) {
    const Trajectory traj = trajectory_from_csv(c.input, c.dt);
    const int col = column_index(traj, "column", c.column);
    const SymbolSequence seq = symbolize(traj.samples.col(col), c.ccc.bins);
    const EtcResult r = etc(seq);
    json j;
    j["column"] = c.column;
    j["bins"] = c.ccc.bins;
    j["length"] = seq.size();
    j["iterations"] = r.iterations;
    j["normalized"] = r.normalized;
    write_artifact(c.output, j.dump(2) + "\n");
    std::cout << summary_line(c, "iterations=" + std::to_string(r.iterations)) << '\n';
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_ccc(const RunConfig& c) {
    const Trajectory traj = load_or_simulate(c);
    const int cause = column_index(traj, "cause", c.cause);
    const int effect = column_index(traj, "effect", c.effect);
    double value;
    if (traj.cols() == 2) {
        value = ccc_pairwise(traj.samples.col(cause), traj.samples.col(effect), c.ccc);
    } else {
        value = ccc_conditional(cause, effect, traj, c.ccc);
    }
    json j;
    j["cause"] = c.cause;
    j["effect"] = c.effect;
    j["conditioned_on_remaining"] = traj.cols() > 2;
    j["ccc"] = value;
    write_artifact(c.output, j.dump(2) + "\n");
    std::cout << summary_line(c, "") << '\n';
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_ccc_matrix(const RunConfig& c) {
    const Trajectory traj = load_or_simulate(c);
    const CccMatrix m = ccc_matrix(traj, c.ccc);
    const Vector net = net_from_matrix(m);

    if (c.format == OutputFormat::Json || c.output.empty()) {
        json j;
        j["variables"] = m.variable_names;
        json rows = json::object();
        for (int to = 0; to < m.values.rows(); ++to) {
            json row = json::array();
            for (int from = 0; from < m.values.cols(); ++from) row.push_back(m.values(to, from));
            rows[m.variable_names[static_cast<std::size_t>(to)]] = row;
        }
        j["matrix"] = rows;  // row = To, column order = variables (From)
        json jn = json::object();
        for (int v = 0; v < net.size(); ++v)
            jn[m.variable_names[static_cast<std::size_t>(v)]] = net[v];
        j["ccc_net"] = jn;
        write_artifact(c.output, j.dump(2) + "\n");
        std::cout << summary_line(c, "") << '\n';
        if (c.output.empty()) std::cout << j.dump(2) << '\n';
    } else {
        // CSV mirroring the To x From table layout with a trailing net row
        std::vector<std::string> header{"to\\from"};
        for (const auto& n : m.variable_names) header.push_back(n);
        std::ostringstream out;
        for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
        out << '\n';
        char buf[64];
        for (int to = 0; to < m.values.rows(); ++to) {
            out << m.variable_names[static_cast<std::size_t>(to)];
            for (int from = 0; from < m.values.cols(); ++from) {
                std::snprintf(buf, sizeof(buf), "%.6g", m.values(to, from));
                out << ',' << buf;
            }
            out << '\n';
        }
        out << "ccc_net";
        for (int v = 0; v < net.size(); ++v) {
            std::snprintf(buf, sizeof(buf), "%.6g", net[v]);
            out << ',' << buf;
        }
        out << '\n';
        write_artifact(c.output, out.str());
        std::cout << summary_line(c, "") << '\n';
    }
    return 0;
}

int run_stability_cmd(const RunConfig& c) {
    const SystemSpec sys = builtin_system(c.system);
    StabilityConfig sc;
    sc.system = sys;
    sc.forced_variable = variable_index(sys, c.forced);
    sc.master_ic = to_vector(c.master_ic);
    sc.slave0_ic = to_vector(c.slave_ic);
    sc.deltas = c.deltas;
    sc.k_max = c.k_max;
    sc.seed = *c.seed;
    sc.ccc = c.ccc;
    sc.n_samples = c.n_samples;
    sc.transients = c.transients;
    sc.method = c.method;
    sc.dt = c.dt;
    const StabilityReport rep = run_stability(sc);

    Matrix rows(static_cast<long>(c.deltas.size()) * c.k_max, 3);
    long r = 0;
    for (std::size_t d = 0; d < rep.deltas.size(); ++d)
        for (int k = 1; k <= c.k_max; ++k, ++r) {
            rows(r, 0) = rep.deltas[d];
            rows(r, 1) = k;
            rows(r, 2) = rep.m_curve[d][static_cast<std::size_t>(k - 1)];
        }
    write_artifact(c.output, csv_encode({"delta", "k", "M"}, rows));
    std::ostringstream extra;
    extra << "forced=" << c.forced;
    if (rep.any_diverged) extra << " diverged-slaves=flagged";
    std::cout << summary_line(c, extra.str()) << '\n';
    return 0;
}

int run_sync_check(const RunConfig& c) {
    std::vector<std::string> systems;
    if (c.system == "all") systems = builtin_system_names();
    else systems.push_back(c.system);

    std::ostringstream table;
    std::ostringstream csv;
    csv << "system,variable,synchronizes,max_tail_distance,diameter\n";
    table << "system      x  y  z  q  w\n";
    for (const auto& name : systems) {
        const SystemSpec sys = builtin_system(name);
        const SystemDefaults d = system_defaults(name);
        GroundTruthOptions opts;
        opts.n_samples = c.n_samples;
        opts.transients = c.system == "all" ? d.sync_transients : c.transients;
        opts.tolerance = c.tolerance;
        opts.method = c.system == "all" ? d.method : c.method;
        opts.dt = c.system == "all" ? d.dt : c.dt;
        const Vector mic = to_vector(c.system == "all" ? d.master_ic : c.master_ic);
        const std::vector<Vector> sics{to_vector(c.system == "all" ? d.slave_ic : c.slave_ic),
                                       to_vector(c.system == "all" ? d.slave_ic2 : c.slave_ic2)};
        table << name << std::string(name.size() < 12 ? 12 - name.size() : 1, ' ');
        for (int v = 0; v < sys.dimension; ++v) {
            const GroundTruthResult res = ground_truth_sync(sys, v, mic, sics, opts);
            double worst = 0.0;
            for (double x : res.tail_distances) worst = std::max(worst, x);
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.6g", worst);
            csv << name << ',' << sys.variable_names[static_cast<std::size_t>(v)] << ','
                << (res.sync ? 1 : 0) << ',' << buf << ',';
            std::snprintf(buf, sizeof(buf), "%.6g", res.diameter);
            csv << buf << '\n';
            table << mark(res.sync) << "  ";
        }
        for (int v = sys.dimension; v < 5; ++v) table << "-  ";
        table << '\n';
    }
    write_artifact(c.output, csv.str());
    std::cout << summary_line(c, "") << '\n';
    std::cout << table.str();
    return 0;
}

int run_classify(const RunConfig& c) {
    const Trajectory traj = load_or_simulate(c);
    std::optional<std::vector<bool>> hints;
    if (!c.system.empty() && c.input.empty()) hints = builtin_system(c.system).self_dependent;
    const SyncClassification cls = classify_sync_variables(traj, c.ccc, hints);

    json j;
    j["variables"] = cls.variable_names;
    json jn = json::object();
    for (std::size_t i = 0; i < cls.net_values.size(); ++i)
        jn[cls.variable_names[i]] = cls.net_values[i];
    j["ccc_net"] = jn;
    json jp = json::object();
    for (std::size_t i = 0; i < cls.predicted.size(); ++i)
        jp[cls.variable_names[i]] = to_string(cls.predicted[i]);
    j["predicted"] = jp;
    j["caveats"] = cls.caveats;
    write_artifact(c.output, j.dump(2) + "\n");

    std::cout << summary_line(c, "") << '\n';
    std::ostringstream table;
    for (std::size_t i = 0; i < cls.predicted.size(); ++i) {
        const char* m = cls.predicted[i] == SyncPrediction::Sync
                            ? "✓"
                            : (cls.predicted[i] == SyncPrediction::NoSync ? "✗" : "?");
        table << cls.variable_names[i] << ' ' << m << "  ";
    }
    table << '\n';
    std::cout << table.str();
    return 0;
}

}  // namespace

int run(const RunConfig& config) {
    try {
        switch (config.experiment) {
            case Experiment::Simulate: return run_simulate(config);
            case Experiment::Etc: return run_etc(config);
            case Experiment::Ccc: return run_ccc(config);
            case Experiment::CccMatrix: return run_ccc_matrix(config);
            case Experiment::Stability: return run_stability_cmd(config);
            case Experiment::SyncCheck: return run_sync_check(config);
            case Experiment::Classify: return run_classify(config);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const DivergenceError& e) {
        std::cerr << "dynsys error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}

}  // namespace ccsync
