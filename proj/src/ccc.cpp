#include "ccsync/ccc.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccsync {

void CccParams::validate() const {
    if (current_len < 1) throw std::invalid_argument("ccc: current_len (w) must be >= 1");
    if (past_len < current_len)
        throw std::invalid_argument("ccc: past_len (L) must be >= current_len (w)");
    if (step < 1) throw std::invalid_argument("ccc: step must be >= 1");
    if (bins < 2) throw std::invalid_argument("ccc: bins (B) must be >= 2");
}

long CccParams::window_count(long n_samples) const {
    const long span = static_cast<long>(past_len) + current_len;
    if (n_samples < span) return 0;
    return (n_samples - span) / step + 1;
}

CccParams default_ccc_params(const std::string& system_name) {
    if (system_name == "lorenz") return {150, 15, 80, 8};
    if (system_name == "rossler") return {300, 15, 200, 8};
    if (system_name == "lorenz5d") return {450, 80, 300, 4};
    if (system_name == "chen" || system_name == "henon") return {100, 15, 80, 8};
    return {150, 15, 80, 8};
}

namespace {

SymbolSequence slice(const SymbolSequence& s, long start, long len) {
    SymbolSequence out;
    out.symbols.assign(s.symbols.begin() + start, s.symbols.begin() + start + len);
    out.alphabet_size = s.alphabet_size;
    return out;
}

SymbolSequence concat(const SymbolSequence& a, const SymbolSequence& b) {
    SymbolSequence out = a;
    out.symbols.insert(out.symbols.end(), b.symbols.begin(), b.symbols.end());
    out.alphabet_size = std::max(a.alphabet_size, b.alphabet_size);
    return out;
}

std::vector<SymbolSequence> symbolize_columns(const Trajectory& traj, int bins,
                                              const std::optional<ColumnRanges>& ranges) {
    if (ranges && static_cast<int>(ranges->size()) != traj.cols())
        throw std::invalid_argument("ccc: ranges size must equal column count");
    std::vector<SymbolSequence> out;
    out.reserve(static_cast<std::size_t>(traj.cols()));
    for (int c = 0; c < traj.cols(); ++c) {
        std::optional<std::pair<double, double>> r;
        if (ranges) r = (*ranges)[static_cast<std::size_t>(c)];
        out.push_back(symbolize(traj.samples.col(c), bins, r));
    }
    return out;
}

// mean over windows of [cc(.|effect, conds) - cc(.|effect, conds + cause)]
double windowed_ccc(const SymbolSequence& cause, const SymbolSequence& effect,
                    const std::vector<const SymbolSequence*>& conditioners,
                    const CccParams& params) {
    const long n = effect.size();
    const long n_windows = params.window_count(n);
    if (n_windows < 1)
        throw std::invalid_argument("ccc: series too short for one window (needs >= " +
                                    std::to_string(params.past_len + params.current_len) +
                                    " samples)");
    const long L = params.past_len, w = params.current_len;
    double sum = 0.0;
    for (long t = 0; t + L + w <= n; t += params.step) {
        const SymbolSequence effect_past = slice(effect, t, L);
        const SymbolSequence effect_cur = slice(effect, t + L, w);
        const SymbolSequence cause_past = slice(cause, t, L);
        std::vector<SymbolSequence> conds;
        conds.reserve(conditioners.size() + 1);
        for (const auto* c : conditioners) conds.push_back(slice(*c, t, L));
        const double without_cause = cc_conditional(effect_cur, effect_past, conds);
        conds.push_back(cause_past);
        const double with_cause = cc_conditional(effect_cur, effect_past, conds);
        sum += without_cause - with_cause;
    }
    return sum / static_cast<double>(n_windows);
}

}  // namespace

double cc_conditional(const SymbolSequence& target_current, const SymbolSequence& target_past,
                      const std::vector<SymbolSequence>& conditioners_past) {
    if (target_past.size() < 1 || target_current.size() < 1)
        throw std::invalid_argument("cc_conditional: empty window");
    for (const auto& c : conditioners_past)
        if (c.size() != target_past.size())
            throw std::invalid_argument("cc_conditional: conditioner length differs from past");

    if (conditioners_past.empty())
        return etc(concat(target_past, target_current)).normalized - etc(target_past).normalized;

    std::vector<SymbolSequence> extended;
    extended.reserve(conditioners_past.size() + 1);
    extended.push_back(concat(target_past, target_current));
    for (const auto& c : conditioners_past) extended.push_back(concat(c, target_current));
    std::vector<SymbolSequence> pasts;
    pasts.reserve(conditioners_past.size() + 1);
    pasts.push_back(target_past);
    for (const auto& c : conditioners_past) pasts.push_back(c);
    return etc_joint(extended).normalized - etc_joint(pasts).normalized;
}

double ccc_pairwise(const Eigen::Ref<const Eigen::VectorXd>& cause,
                    const Eigen::Ref<const Eigen::VectorXd>& effect, const CccParams& params) {
    params.validate();
    if (cause.size() != effect.size())
        throw std::invalid_argument("ccc_pairwise: series lengths differ");
    const SymbolSequence cs = symbolize(cause, params.bins);
    const SymbolSequence es = symbolize(effect, params.bins);
    return windowed_ccc(cs, es, {}, params);
}

double ccc_conditional(int cause_idx, int effect_idx, const Trajectory& traj,
                       const CccParams& params, const std::optional<ColumnRanges>& ranges) {
    params.validate();
    if (cause_idx == effect_idx)
        throw std::invalid_argument("ccc_conditional: cause and effect must differ");
    if (cause_idx < 0 || cause_idx >= traj.cols() || effect_idx < 0 || effect_idx >= traj.cols())
        throw std::invalid_argument("ccc_conditional: column index out of range");
    const auto syms = symbolize_columns(traj, params.bins, ranges);
    std::vector<const SymbolSequence*> conds;
    for (int c = 0; c < traj.cols(); ++c)
        if (c != cause_idx && c != effect_idx) conds.push_back(&syms[static_cast<std::size_t>(c)]);
    return windowed_ccc(syms[static_cast<std::size_t>(cause_idx)],
                        syms[static_cast<std::size_t>(effect_idx)], conds, params);
}

CccMatrix ccc_matrix(const Trajectory& traj, const CccParams& params,
                     const std::optional<ColumnRanges>& ranges) {
    params.validate();
    const int n = traj.cols();
    CccMatrix m;
    m.params = params;
    m.variable_names = traj.variable_names;
    m.values = Matrix::Zero(n, n);
    for (int to = 0; to < n; ++to)
        for (int from = 0; from < n; ++from)
            if (to != from) m.values(to, from) = ccc_conditional(from, to, traj, params, ranges);
    return m;
}

NetEntry ccc_net(int variable_idx, const Trajectory& traj, const CccParams& params,
                 const std::optional<ColumnRanges>& ranges) {
    if (traj.cols() < 2) throw std::invalid_argument("ccc_net: needs at least two columns");
    if (variable_idx < 0 || variable_idx >= traj.cols())
        throw std::invalid_argument("ccc_net: variable index out of range");
    NetEntry e;
    e.variable = variable_idx;
    for (int v = 0; v < traj.cols(); ++v) {
        if (v == variable_idx) continue;
        const double out = ccc_conditional(variable_idx, v, traj, params, ranges);
        e.terms.push_back({variable_idx, v, +1, out});
        e.net += out;
    }
    for (int v = 0; v < traj.cols(); ++v) {
        if (v == variable_idx) continue;
        const double in = ccc_conditional(v, variable_idx, traj, params, ranges);
        e.terms.push_back({v, variable_idx, -1, in});
        e.net -= in;
    }
    return e;
}

NetReport net_report(const Trajectory& traj, const CccParams& params,
                     const std::optional<ColumnRanges>& ranges) {
    NetReport r;
    r.variable_names = traj.variable_names;
    for (int v = 0; v < traj.cols(); ++v) r.entries.push_back(ccc_net(v, traj, params, ranges));
    return r;
}

Vector net_from_matrix(const CccMatrix& m) {
    const int n = static_cast<int>(m.values.rows());
    Vector net(n);
    for (int v = 0; v < n; ++v) {
        double out = 0.0, in = 0.0;
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            out += m.values(u, v);  // v -> u
            in += m.values(v, u);   // u -> v
        }
        net[v] = out - in;
    }
    return net;
}

}  // namespace ccsync
