#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace ccsync {

/// Discrete symbol sequence; the alphabet may grow during NSRPS substitution.
struct SymbolSequence {
    std::vector<std::int32_t> symbols;
    std::int32_t alphabet_size = 0;

    long size() const { return static_cast<long>(symbols.size()); }
};

struct EtcResult {
    long iterations = 0;
    double normalized = 0.0;  // iterations / (original_length - 1), 0 for length 1
};

/// Equal-width binning of a real series into `bins` symbols. If `range` is omitted
/// it is [min(series), max(series)]; values equal to hi map to the last bin and
/// values outside an explicit range clamp to the edge bins.
SymbolSequence symbolize(const Eigen::Ref<const Eigen::VectorXd>& series, int bins,
                         std::optional<std::pair<double, double>> range = std::nullopt);

/// Effort-To-Compress via non-sequential recursive pair substitution: repeatedly
/// replace every non-overlapping occurrence of the most frequent adjacent pair
/// (ties broken by earliest first occurrence) with a fresh symbol. A constant
/// input needs no passes; anything else is reduced to length 1.
EtcResult etc(const SymbolSequence& seq);

/// Joint ETC of aligned sequences: each distinct symbol tuple becomes one symbol
/// of a product sequence, which is then compressed with `etc`. Requires at least
/// two sequences of equal length.
EtcResult etc_joint(const std::vector<SymbolSequence>& seqs);

}  // namespace ccsync
