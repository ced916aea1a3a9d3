#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "asce/penalties.hpp"
#include "asce/rng.hpp"

using namespace asce;

namespace {
constexpr double kEps = 20.0;
constexpr double kDelta = 0.05;
} // namespace

TEST_CASE("force hand values") {
    CHECK(zeta_za(0.3) == 1.0);
    CHECK(zeta_za(-2.0) == -1.0);
    CHECK(zeta_za(0.0) == 0.0);

    CHECK(zeta_rza(0.05, kEps) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(zeta_rza(1.0, kEps) == doctest::Approx(1.0 / 21.0).epsilon(1e-14));
    CHECK(zeta_rza(0.0, kEps) == 0.0);

    CHECK(zeta_rl1(0.05, kDelta) == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(zeta_rl1(1.0, kDelta) == doctest::Approx(1.0 / 1.05).epsilon(1e-14));
    CHECK(zeta_rl1(0.0, kDelta) == 0.0);
}

TEST_CASE("parameter bounds are enforced") {
    CHECK_THROWS_AS(zeta_rza(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(zeta_rza(0.5, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(zeta_rl1(0.5, 0.0), std::invalid_argument);
    const std::vector<double> grid = {0.0};
    CHECK_THROWS_AS(penalty_table(grid, 0.0, kDelta), std::invalid_argument);
    CHECK_THROWS_AS(penalty_table(grid, kEps, 0.0), std::invalid_argument);
}

TEST_CASE("symmetric grid shape") {
    const auto grid = symmetric_grid(401);
    REQUIRE(grid.size() == 401);
    CHECK(grid.front() == -1.0);
    CHECK(grid.back() == 1.0);
    CHECK(grid[200] == 0.0);
    CHECK(grid[390] == 0.95); // 380/400 is exactly representable as 0.95's double
    for (std::size_t k = 0; k < grid.size(); ++k) {
        CHECK(grid[k] == -grid[400 - k]);
    }

    const auto pair = symmetric_grid(2);
    CHECK(pair == std::vector<double>{-1.0, 1.0});
    CHECK_THROWS_AS(symmetric_grid(1), std::invalid_argument);
}

TEST_CASE("reweighted forces dominate: rl1 above rza below za in magnitude") {
    const auto grid = symmetric_grid(401);
    for (const double h : grid) {
        if (h == 0.0) {
            CHECK(zeta_rza(h, kEps) == 0.0);
            CHECK(zeta_rl1(h, kDelta) == 0.0);
            continue;
        }
        CHECK(std::fabs(zeta_rl1(h, kDelta)) > std::fabs(zeta_rza(h, kEps)));
        CHECK(std::fabs(zeta_rza(h, kEps)) < 1.0);
        CHECK(std::fabs(zeta_za(h)) == 1.0);
    }
    SeededRng rng(31);
    for (int i = 0; i < 10000; ++i) {
        const double h = 2.0 * rng.uniform_pos() - 1.0;
        if (h == 0.0) {
            continue;
        }
        CHECK(std::fabs(zeta_rl1(h, kDelta)) > std::fabs(zeta_rza(h, kEps)));
    }
}

TEST_CASE("rl1 force exceeds the plain l1 force exactly below 0.95") {
    const auto grid = symmetric_grid(401);
    for (const double h : grid) {
        if (h == 0.0) {
            continue;
        }
        const bool amplified = std::fabs(zeta_rl1(h, kDelta)) > 1.0;
        CHECK(amplified == (std::fabs(h) < 0.95));
    }
    // the crossover point itself maps to exactly unit force
    CHECK(std::fabs(zeta_rl1(0.95, kDelta)) == 1.0);
    CHECK(std::fabs(zeta_rl1(-0.95, kDelta)) == 1.0);
}

TEST_CASE("force magnitudes decay strictly with coefficient height") {
    const auto grid = symmetric_grid(401);
    for (std::size_t k = 201; k + 1 < grid.size(); ++k) { // positive half
        CHECK(std::fabs(zeta_rza(grid[k + 1], kEps)) < std::fabs(zeta_rza(grid[k], kEps)));
        CHECK(std::fabs(zeta_rl1(grid[k + 1], kDelta)) < std::fabs(zeta_rl1(grid[k], kDelta)));
    }
}

TEST_CASE("forces are odd functions") {
    const auto grid = symmetric_grid(401);
    for (const double h : grid) {
        CHECK(zeta_za(-h) == -zeta_za(h));
        CHECK(zeta_rza(-h, kEps) == -zeta_rza(h, kEps));
        CHECK(zeta_rl1(-h, kDelta) == -zeta_rl1(h, kDelta));
    }
}

TEST_CASE("penalty table mirrors the point functions") {
    const auto grid = symmetric_grid(11);
    const auto table = penalty_table(grid, kEps, kDelta);
    REQUIRE(table.size() == grid.size());
    for (std::size_t k = 0; k < table.size(); ++k) {
        CHECK(table[k].coefficient == grid[k]);
        CHECK(table[k].zeta_za == zeta_za(grid[k]));
        CHECK(table[k].zeta_rza == zeta_rza(grid[k], kEps));
        CHECK(table[k].zeta_rl1 == zeta_rl1(grid[k], kDelta));
        CHECK(table[k].in_range);
    }
    const std::vector<double> wide = {-1.5, 0.0, 2.0};
    const auto wide_table = penalty_table(wide, kEps, kDelta);
    CHECK_FALSE(wide_table[0].in_range);
    CHECK(wide_table[1].in_range);
    CHECK_FALSE(wide_table[2].in_range);
}
