#include "asce/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace asce {

std::uint64_t SeededRng::below(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("SeededRng::below: n must be positive");
    }
    if ((n & (n - 1)) == 0) {
        return engine_() & (n - 1);
    }
    const int bits = std::bit_width(n - 1);
    const std::uint64_t mask = (bits >= 64) ? ~0ull : ((1ull << bits) - 1);
    for (;;) {
        const std::uint64_t v = engine_() & mask;
        if (v < n) {
            return v;
        }
    }
}

double SeededRng::gaussian() {
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform_pos();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    cached_gaussian_ = r * std::sin(theta);
    has_cached_gaussian_ = true;
    return r * std::cos(theta);
}

std::vector<std::uint32_t> SeededRng::distinct_indices(std::uint32_t k, std::uint32_t n) {
    if (k > n) {
        throw std::invalid_argument("SeededRng::distinct_indices: k exceeds n");
    }
    // Partial Fisher-Yates over an explicit index pool: draw order depends
    // only on (k, n), never on which indices come out.
    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        pool[i] = i;
    }
    for (std::uint32_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::uint32_t>(below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace asce
