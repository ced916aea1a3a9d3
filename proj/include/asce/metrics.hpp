#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "asce/algorithms.hpp"

namespace asce {

/// Per-trial deviation trace. Entry n is the squared deviation recorded
/// before update n, so entry 0 reflects the all-zero initial estimate. When a
/// trial diverges the estimate freezes at its last accepted value and the
/// remaining entries repeat that deviation, keeping all traces equal length.
struct TrialRecord {
    std::vector<double> squared_deviation;
    bool diverged = false;
    std::uint64_t diverged_at = 0; // iteration whose update was rejected
    std::uint32_t trial_index = 0;
};

/// Monte Carlo average; mc_count is the number of trials included (diverged
/// trials are excluded). If every trial diverged the entries are NaN and
/// mc_count is 0.
struct MsdTrace {
    Algorithm algorithm_kind = Algorithm::NLMF;
    std::vector<double> average_msd;
    std::uint32_t mc_count = 0;
};

/// ||estimate - truth||_2^2. Throws std::invalid_argument on length mismatch.
double squared_deviation(std::span<const double> estimate, std::span<const double> truth);

/// Pointwise mean of the non-diverged records. Throws std::invalid_argument
/// on an empty span or ragged trace lengths.
MsdTrace average_msd_trace(std::span<const TrialRecord> records, Algorithm kind);

/// 10 log10(msd); -inf at 0, NaN propagates.
double to_db(double msd);

} // namespace asce
