#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace asce {

enum class Algorithm { LMF, NLMF, ZA_NLMF, RZA_NLMF, RL1_NLMF };

/// Canonical lowercase name ("lmf", "nlmf", "za_nlmf", ...).
std::string_view name_of(Algorithm a);

/// Inverse of name_of. Accepts '-' as an alias for '_'; throws
/// std::invalid_argument on anything unknown.
Algorithm algorithm_from_name(std::string_view name);

/// Subgradient sign: +1, -1, or exactly 0 at the origin.
inline double sign(double v) { return (v > 0.0) ? 1.0 : ((v < 0.0) ? -1.0 : 0.0); }

/// Error-scaled step mu_N = mu e^2 / (||x||^2 + e^2). Bounded by mu, vanishes
/// with the error, and defined as 0 at the degenerate (e, energy) = (0, 0)
/// corner. Throws std::invalid_argument for mu <= 0 or negative energy.
double variable_step(double mu, double error, double regressor_energy);

/// Per-algorithm knobs. The penalty weights combine with mu into the
/// effective attraction coefficients gamma / rho / rho_rl1; a weight of zero
/// turns the corresponding penalty off entirely.
struct AlgorithmParams {
    Algorithm kind = Algorithm::NLMF;
    double mu = 2.0;
    double lambda_za = 0.0;
    double lambda_rza = 0.0;
    double lambda_rl1 = 0.0;
    double epsilon = 20.0; // reweighting strength, rza_nlmf
    double delta = 0.05;   // reweighting floor, rl1_nlmf

    double gamma() const { return mu * lambda_za; }
    double rho() const { return mu * lambda_rza * epsilon; }
    double rho_rl1() const { return mu * lambda_rl1; }

    /// Throws std::invalid_argument on non-finite or out-of-range values
    /// (mu, epsilon, delta must be positive; weights non-negative).
    void validate() const;
};

/// Adaptive filter tap estimates. previous_estimate always lags estimate by
/// exactly one accepted update; both start at zero.
struct FilterState {
    std::vector<double> estimate;
    std::vector<double> previous_estimate;
    std::uint64_t iteration = 0;

    explicit FilterState(std::size_t taps)
        : estimate(taps, 0.0), previous_estimate(taps, 0.0) {}
};

struct StepInput {
    std::span<const double> regressor;
    double desired = 0.0;
};

/// Diverged means the candidate update contained a non-finite tap; the state
/// is left exactly as it was, so the caller decides how to proceed.
enum class StepStatus { Ok, Diverged };

/// a-priori error e(n) = d(n) - estimate^T x(n).
double prediction_error(const FilterState& s, const StepInput& in);

StepStatus lmf_step(FilterState& s, const StepInput& in, const AlgorithmParams& p);
StepStatus nlmf_step(FilterState& s, const StepInput& in, const AlgorithmParams& p);
StepStatus za_nlmf_step(FilterState& s, const StepInput& in, const AlgorithmParams& p);
StepStatus rza_nlmf_step(FilterState& s, const StepInput& in, const AlgorithmParams& p);
StepStatus rl1_nlmf_step(FilterState& s, const StepInput& in, const AlgorithmParams& p);

/// Dispatch on p.kind.
StepStatus step(FilterState& s, const StepInput& in, const AlgorithmParams& p);

/// Reweighting factors f_i = 1 / (delta + |prev_i|); strictly positive for
/// delta > 0.
std::vector<double> reweight_vector(std::span<const double> previous_estimate, double delta);

} // namespace asce
