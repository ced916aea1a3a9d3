#include "asce/algorithms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace asce {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

enum class PenaltyKind { None, Za, Rza, Rl1 };

// Shared update kernel for the whole normalized family. Every algorithm runs
// through this one compiled loop, so a zero attraction coefficient is
// bit-identical to the plain variant by construction, not by accident of
// separate code paths. The update is applied in two passes: validate all
// candidate taps, then commit, so a diverged step never touches the state.
StepStatus family_step(FilterState& s, const StepInput& in, const AlgorithmParams& p,
                       PenaltyKind pk, double coef) {
    p.validate();
    const std::size_t taps = s.estimate.size();
    if (in.regressor.size() != taps) {
        throw std::invalid_argument("step: regressor length differs from estimate length");
    }

    const double e = prediction_error(s, in);
    const double energy = dot(in.regressor, in.regressor);

    // Gradient gain. A zero-energy regressor carries no information about the
    // channel, so the gradient part is skipped while the penalty still acts.
    double g = 0.0;
    if (energy > 0.0) {
        g = variable_step(p.mu, e, energy) * e / energy;
    }

    const bool penalized = (pk != PenaltyKind::None) && (coef != 0.0);
    const auto candidate = [&](std::size_t i) {
        const double base = s.estimate[i] + g * in.regressor[i];
        if (!penalized) {
            return base;
        }
        switch (pk) {
        case PenaltyKind::Za:
            return base - coef * sign(s.estimate[i]);
        case PenaltyKind::Rza:
            return base - coef * sign(s.estimate[i]) / (1.0 + p.epsilon * std::fabs(s.estimate[i]));
        case PenaltyKind::Rl1:
            return base -
                   coef * sign(s.estimate[i]) / (p.delta + std::fabs(s.previous_estimate[i]));
        default:
            return base;
        }
    };

    for (std::size_t i = 0; i < taps; ++i) {
        if (!std::isfinite(candidate(i))) {
            return StepStatus::Diverged;
        }
    }
    for (std::size_t i = 0; i < taps; ++i) {
        const double next = candidate(i);
        s.previous_estimate[i] = s.estimate[i];
        s.estimate[i] = next;
    }
    ++s.iteration;
    return StepStatus::Ok;
}

} // namespace

std::string_view name_of(Algorithm a) {
    switch (a) {
    case Algorithm::LMF:
        return "lmf";
    case Algorithm::NLMF:
        return "nlmf";
    case Algorithm::ZA_NLMF:
        return "za_nlmf";
    case Algorithm::RZA_NLMF:
        return "rza_nlmf";
    case Algorithm::RL1_NLMF:
        return "rl1_nlmf";
    }
    throw std::invalid_argument("name_of: unknown algorithm");
}

Algorithm algorithm_from_name(std::string_view name) {
    std::string canon(name);
    for (char& c : canon) {
        if (c == '-') {
            c = '_';
        }
    }
    if (canon == "lmf") return Algorithm::LMF;
    if (canon == "nlmf") return Algorithm::NLMF;
    if (canon == "za_nlmf") return Algorithm::ZA_NLMF;
    if (canon == "rza_nlmf") return Algorithm::RZA_NLMF;
    if (canon == "rl1_nlmf") return Algorithm::RL1_NLMF;
    throw std::invalid_argument("unknown algorithm name: " + std::string(name));
}

double variable_step(double mu, double error, double regressor_energy) {
    if (!(mu > 0.0) || !std::isfinite(mu)) {
        throw std::invalid_argument("variable_step: mu must be positive and finite");
    }
    if (regressor_energy < 0.0) {
        throw std::invalid_argument("variable_step: regressor energy must be non-negative");
    }
    const double e2 = error * error;
    const double den = regressor_energy + e2;
    if (den == 0.0) {
        return 0.0;
    }
    return mu * e2 / den;
}

void AlgorithmParams::validate() const {
    const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    const auto weight = [](double v) { return std::isfinite(v) && v >= 0.0; };
    if (!positive(mu)) {
        throw std::invalid_argument("AlgorithmParams: mu must be positive and finite");
    }
    if (!weight(lambda_za) || !weight(lambda_rza) || !weight(lambda_rl1)) {
        throw std::invalid_argument("AlgorithmParams: penalty weights must be non-negative");
    }
    if (!positive(epsilon)) {
        throw std::invalid_argument("AlgorithmParams: epsilon must be positive");
    }
    if (!positive(delta)) {
        throw std::invalid_argument("AlgorithmParams: delta must be positive");
    }
}

double prediction_error(const FilterState& s, const StepInput& in) {
    if (in.regressor.size() != s.estimate.size()) {
        throw std::invalid_argument("prediction_error: regressor length mismatch");
    }
    return in.desired - dot(s.estimate, in.regressor);
}

StepStatus lmf_step(FilterState& s, const StepInput& in, const AlgorithmParams& p) {
    p.validate();
    const std::size_t taps = s.estimate.size();
    if (in.regressor.size() != taps) {
        throw std::invalid_argument("step: regressor length differs from estimate length");
    }
    const double e = prediction_error(s, in);
    const double k = p.mu * e * e * e; // raw cubed-error gain, no normalization
    const auto candidate = [&](std::size_t i) { return s.estimate[i] + k * in.regressor[i]; };
    for (std::size_t i = 0; i < taps; ++i) {
        if (!std::isfinite(candidate(i))) {
            return StepStatus::Diverged;
        }
    }
    for (std::size_t i = 0; i < taps; ++i) {
        const double next = candidate(i);
        s.previous_estimate[i] = s.estimate[i];
        s.estimate[i] = next;
    }
    ++s.iteration;
    return StepStatus::Ok;
}

StepStatus nlmf_step(FilterState& s, const StepInput& in, const AlgorithmParams& p) {
    return family_step(s, in, p, PenaltyKind::None, 0.0);
}

StepStatus za_nlmf_step(FilterState& s, const StepInput& in, const AlgorithmParams& p) {
    return family_step(s, in, p, PenaltyKind::Za, p.gamma());
}

StepStatus rza_nlmf_step(FilterState& s, const StepInput& in, const AlgorithmParams& p) {
    return family_step(s, in, p, PenaltyKind::Rza, p.rho());
}

StepStatus rl1_nlmf_step(FilterState& s, const StepInput& in, const AlgorithmParams& p) {
    return family_step(s, in, p, PenaltyKind::Rl1, p.rho_rl1());
}

StepStatus step(FilterState& s, const StepInput& in, const AlgorithmParams& p) {
    switch (p.kind) {
    case Algorithm::LMF:
        return lmf_step(s, in, p);
    case Algorithm::NLMF:
        return nlmf_step(s, in, p);
    case Algorithm::ZA_NLMF:
        return za_nlmf_step(s, in, p);
    case Algorithm::RZA_NLMF:
        return rza_nlmf_step(s, in, p);
    case Algorithm::RL1_NLMF:
        return rl1_nlmf_step(s, in, p);
    }
    throw std::invalid_argument("step: unknown algorithm");
}

std::vector<double> reweight_vector(std::span<const double> previous_estimate, double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw std::invalid_argument("reweight_vector: delta must be positive");
    }
    std::vector<double> f(previous_estimate.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = 1.0 / (delta + std::fabs(previous_estimate[i]));
    }
    return f;
}

} // namespace asce
