#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ccsync/dynsys.hpp"
#include "ccsync/etc.hpp"

namespace ccsync {

/// Window/binning parameters for the causality estimates.
struct CccParams {
    int past_len = 150;    // L, samples of past per window
    int current_len = 15;  // w, samples of the current segment
    int step = 80;         // stride between window starts
    int bins = 8;          // B, symbolization alphabet

    bool operator==(const CccParams&) const = default;

    void validate() const;
    long window_count(long n_samples) const;  // floor((N - L - w)/step) + 1
};

/// Footnote defaults: lorenz (150,15,80,8); rossler (300,15,200,8);
/// lorenz5d (450,80,300,4); chen/henon (100,15,80,8).
CccParams default_ccc_params(const std::string& system_name);

/// Optional per-column symbolization ranges; when absent every column uses its own
/// global min/max.
using ColumnRanges = std::vector<std::pair<double, double>>;

/// Compression-complexity change of the target's current window given its past and
/// optional conditioning pasts. The target's current window is appended to every
/// stream of the joint (the hypothetical evolution planted into each conditioner).
double cc_conditional(const SymbolSequence& target_current, const SymbolSequence& target_past,
                      const std::vector<SymbolSequence>& conditioners_past);

/// Windowed CCC from cause to effect; positive when the cause's past brings an
/// influence similar to the effect's own past, negative when it differs.
double ccc_pairwise(const Eigen::Ref<const Eigen::VectorXd>& cause,
                    const Eigen::Ref<const Eigen::VectorXd>& effect, const CccParams& params);

/// CCC from cause column to effect column conditioned on all remaining columns.
double ccc_conditional(int cause_idx, int effect_idx, const Trajectory& traj,
                       const CccParams& params,
                       const std::optional<ColumnRanges>& ranges = std::nullopt);

/// Square matrix of conditional CCC values; values(to, from), diagonal fixed at 0.
struct CccMatrix {
    Matrix values;
    std::vector<std::string> variable_names;
    CccParams params;
};

CccMatrix ccc_matrix(const Trajectory& traj, const CccParams& params,
                     const std::optional<ColumnRanges>& ranges = std::nullopt);

/// One signed term of a net decomposition: conditional CCC from `from` to `to`,
/// entering the net with `sign` (+1 outgoing, -1 incoming).
struct NetTerm {
    int from = 0;
    int to = 0;
    int sign = +1;
    double value = 0.0;
};

struct NetEntry {
    int variable = 0;
    double net = 0.0;
    std::vector<NetTerm> terms;
};

/// Net causal influence of a variable on the rest of the system: outgoing
/// conditional terms minus incoming ones.
NetEntry ccc_net(int variable_idx, const Trajectory& traj, const CccParams& params,
                 const std::optional<ColumnRanges>& ranges = std::nullopt);

struct NetReport {
    std::vector<std::string> variable_names;
    std::vector<NetEntry> entries;
};

NetReport net_report(const Trajectory& traj, const CccParams& params,
                     const std::optional<ColumnRanges>& ranges = std::nullopt);

/// Net values reconstructed from a CccMatrix: column sums minus row sums.
Vector net_from_matrix(const CccMatrix& m);

}  // namespace ccsync
