#include "asce/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace asce {

double squared_deviation(std::span<const double> estimate, std::span<const double> truth) {
    if (estimate.size() != truth.size()) {
        throw std::invalid_argument("squared_deviation: length mismatch");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < estimate.size(); ++i) {
        const double d = estimate[i] - truth[i];
        acc += d * d;
    }
    return acc;
}

MsdTrace average_msd_trace(std::span<const TrialRecord> records, Algorithm kind) {
    if (records.empty()) {
        throw std::invalid_argument("average_msd_trace: no records");
    }
    const std::size_t len = records.front().squared_deviation.size();
    for (const auto& r : records) {
        if (r.squared_deviation.size() != len) {
            throw std::invalid_argument("average_msd_trace: ragged trace lengths");
        }
    }

    MsdTrace trace;
    trace.algorithm_kind = kind;
    std::uint32_t included = 0;
    std::vector<double> acc(len, 0.0);
    for (const auto& r : records) {
        if (r.diverged) {
            continue;
        }
        ++included;
        for (std::size_t n = 0; n < len; ++n) {
            acc[n] += r.squared_deviation[n];
        }
    }
    trace.mc_count = included;
    if (included == 0) {
        trace.average_msd.assign(len, std::numeric_limits<double>::quiet_NaN());
    } else {
        trace.average_msd.resize(len);
        for (std::size_t n = 0; n < len; ++n) {
            trace.average_msd[n] = acc[n] / static_cast<double>(included);
        }
    }
    return trace;
}

double to_db(double msd) { return 10.0 * std::log10(msd); }

} // namespace asce
