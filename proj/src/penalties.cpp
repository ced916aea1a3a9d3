#include "asce/penalties.hpp"

#include <cmath>
#include <stdexcept>

#include "asce/algorithms.hpp"

namespace asce {

double zeta_za(double h) { return sign(h); }

double zeta_rza(double h, double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw std::invalid_argument("zeta_rza: epsilon must be positive");
    }
    return sign(h) / (1.0 + epsilon * std::fabs(h));
}

double zeta_rl1(double h, double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw std::invalid_argument("zeta_rl1: delta must be positive");
    }
    return sign(h) / (delta + std::fabs(h));
}

std::vector<PenaltyPoint> penalty_table(std::span<const double> grid, double epsilon,
                                        double delta) {
    std::vector<PenaltyPoint> table;
    table.reserve(grid.size());
    for (const double h : grid) {
        PenaltyPoint p;
        p.coefficient = h;
        p.zeta_za = zeta_za(h);
        p.zeta_rza = zeta_rza(h, epsilon);
        p.zeta_rl1 = zeta_rl1(h, delta);
        p.in_range = std::fabs(h) <= 1.0;
        table.push_back(p);
    }
    return table;
}

std::vector<double> symmetric_grid(std::size_t points) {
    if (points < 2) {
        throw std::invalid_argument("symmetric_grid: need at least 2 points");
    }
    // h_k = (2k - (N-1)) / (N-1): endpoints are exactly -1 and +1, and for odd
    // N the midpoint is exactly 0.
    std::vector<double> grid(points);
    const double den = static_cast<double>(points - 1);
    for (std::size_t k = 0; k < points; ++k) {
        grid[k] = (2.0 * static_cast<double>(k) - den) / den;
    }
    return grid;
}

} // namespace asce
