#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace asce {

// Per-coefficient zero-attraction forces, normalized so the plain l1 penalty
// has unit magnitude on every nonzero coefficient. They quantify how hard
// each penalty pulls a tap of height h toward zero.

/// sign(h)
double zeta_za(double h);

/// sign(h) / (1 + epsilon |h|)
double zeta_rza(double h, double epsilon);

/// sign(h) / (delta + |h|)
double zeta_rl1(double h, double delta);

struct PenaltyPoint {
    double coefficient = 0.0;
    double zeta_za = 0.0;
    double zeta_rza = 0.0;
    double zeta_rl1 = 0.0;
    bool in_range = false; // |coefficient| <= 1
};

/// Evaluates all three forces over the given coefficient grid.
/// Throws std::invalid_argument unless epsilon > 0 and delta > 0.
std::vector<PenaltyPoint> penalty_table(std::span<const double> grid, double epsilon,
                                        double delta);

/// `points` evenly spaced coefficients spanning [-1, 1]. Odd counts hit 0
/// exactly and the grid is exactly symmetric. Requires points >= 2.
std::vector<double> symmetric_grid(std::size_t points);

} // namespace asce
