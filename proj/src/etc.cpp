#include "ccsync/etc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace ccsync {

SymbolSequence symbolize(const Eigen::Ref<const Eigen::VectorXd>& series, int bins,
                         std::optional<std::pair<double, double>> range) {
    if (series.size() == 0) throw std::invalid_argument("symbolize: empty series");
    if (bins < 2) throw std::invalid_argument("symbolize: bins must be >= 2");
    for (long i = 0; i < series.size(); ++i)
        if (!std::isfinite(series[i]))
            throw std::invalid_argument("symbolize: series contains a non-finite value");

    double lo, hi;
    if (range) {
        lo = range->first;
        hi = range->second;
        if (!(hi > lo)) throw std::invalid_argument("symbolize: range must have hi > lo");
    } else {
        lo = series.minCoeff();
        hi = series.maxCoeff();
    }

    SymbolSequence out;
    out.symbols.resize(series.size());
    out.alphabet_size = bins;
    if (hi <= lo) {
        // constant series with omitted range: everything in bin 0
        std::fill(out.symbols.begin(), out.symbols.end(), 0);
        return out;
    }
    const double width = hi - lo;
    for (long i = 0; i < series.size(); ++i) {
        double u = (series[i] - lo) / width * static_cast<double>(bins);
        auto idx = static_cast<long>(std::floor(u));
        idx = std::max<long>(0, std::min<long>(idx, bins - 1));
        out.symbols[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(idx);
    }
    return out;
}

namespace {

bool is_constant(const std::vector<std::int32_t>& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] != s[0]) return false;
    return true;
}

// One NSRPS pass: count non-overlapping adjacent pairs left to right, pick the
// most frequent (tie -> earliest first occurrence), substitute a fresh symbol.
void nsrps_pass(std::vector<std::int32_t>& s) {
    const std::size_t n = s.size();
    std::int32_t max_sym = 0;
    for (std::int32_t v : s) max_sym = std::max(max_sym, v);
    const std::uint64_t base = static_cast<std::uint64_t>(max_sym) + 1;

    struct PairInfo {
        long count = 0;
        std::size_t first = 0;
        std::size_t last_counted = std::numeric_limits<std::size_t>::max();
    };
    std::unordered_map<std::uint64_t, PairInfo> pairs;
    pairs.reserve(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::uint64_t key =
            static_cast<std::uint64_t>(s[i]) * base + static_cast<std::uint64_t>(s[i + 1]);
        auto [it, inserted] = pairs.try_emplace(key);
        PairInfo& info = it->second;
        if (!inserted && info.last_counted != std::numeric_limits<std::size_t>::max() &&
            info.last_counted + 1 == i) {
            // overlaps the previously counted occurrence of this pair
            info.last_counted = i;
            continue;
        }
        if (info.count == 0) info.first = i;
        ++info.count;
        info.last_counted = i;
    }

    long best_count = -1;
    std::size_t best_first = n;
    std::uint64_t best_key = 0;
    for (const auto& [key, info] : pairs) {
        if (info.count > best_count || (info.count == best_count && info.first < best_first)) {
            best_count = info.count;
            best_first = info.first;
            best_key = key;
        }
    }

    const auto a = static_cast<std::int32_t>(best_key / base);
    const auto b = static_cast<std::int32_t>(best_key % base);
    const std::int32_t fresh = max_sym + 1;

    std::size_t j = 0, i = 0;
    while (i < n) {
        if (i + 1 < n && s[i] == a && s[i + 1] == b) {
            s[j++] = fresh;
            i += 2;
        } else {
            s[j++] = s[i++];
        }
    }
    s.resize(j);
}

}  // namespace

EtcResult etc(const SymbolSequence& seq) {
    const long n = seq.size();
    if (n < 1) throw std::invalid_argument("etc: empty sequence");
    EtcResult r;
    if (n == 1 || is_constant(seq.symbols)) return r;

    std::vector<std::int32_t> s = seq.symbols;
    while (s.size() > 1) {
        nsrps_pass(s);
        ++r.iterations;
    }
    r.normalized = static_cast<double>(r.iterations) / static_cast<double>(n - 1);
    return r;
}

EtcResult etc_joint(const std::vector<SymbolSequence>& seqs) {
    if (seqs.size() < 2)
        throw std::invalid_argument("etc_joint: needs at least two sequences");
    const long n = seqs.front().size();
    if (n < 1) throw std::invalid_argument("etc_joint: empty sequence");
    for (const auto& s : seqs)
        if (s.size() != n) throw std::invalid_argument("etc_joint: sequence lengths differ");

    // exact positional encoding of each tuple, then first-occurrence-rank symbols
    std::vector<std::uint64_t> bases(seqs.size());
    std::uint64_t stride = 1;
    bool fits = true;
    for (std::size_t k = 0; k < seqs.size(); ++k) {
        std::int32_t max_sym = 0;
        for (std::int32_t v : seqs[k].symbols) {
            if (v < 0) throw std::invalid_argument("etc_joint: negative symbol");
            max_sym = std::max(max_sym, v);
        }
        bases[k] = stride;
        const auto width = static_cast<std::uint64_t>(max_sym) + 1;
        if (stride > std::numeric_limits<std::uint64_t>::max() / width) {
            fits = false;
            break;
        }
        stride *= width;
    }

    SymbolSequence joint;
    joint.symbols.resize(static_cast<std::size_t>(n));
    std::int32_t next = 0;
    if (fits) {
        std::unordered_map<std::uint64_t, std::int32_t> seen;
        seen.reserve(static_cast<std::size_t>(n) * 2);
        for (long i = 0; i < n; ++i) {
            std::uint64_t key = 0;
            for (std::size_t k = 0; k < seqs.size(); ++k)
                key += bases[k] *
                       static_cast<std::uint64_t>(seqs[k].symbols[static_cast<std::size_t>(i)]);
            auto [it, inserted] = seen.try_emplace(key, next);
            if (inserted) ++next;
            joint.symbols[static_cast<std::size_t>(i)] = it->second;
        }
    } else {
        std::map<std::vector<std::int32_t>, std::int32_t> seen;
        std::vector<std::int32_t> key(seqs.size());
        for (long i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < seqs.size(); ++k)
                key[k] = seqs[k].symbols[static_cast<std::size_t>(i)];
            auto [it, inserted] = seen.try_emplace(key, next);
            if (inserted) ++next;
            joint.symbols[static_cast<std::size_t>(i)] = it->second;
        }
    }
    joint.alphabet_size = next;
    return etc(joint);
}

}  // namespace ccsync
