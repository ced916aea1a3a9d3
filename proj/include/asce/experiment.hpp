#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "asce/algorithms.hpp"
#include "asce/channel.hpp"
#include "asce/metrics.hpp"

namespace asce {

/// Default penalty weight for the given noise level and sparsity; zero for
/// the unpenalized algorithms. Explicit per-run overrides take precedence
/// over this rule.
double lambda_default(double noise_variance, std::uint32_t sparsity_k, Algorithm kind);

std::vector<Algorithm> default_algorithms();

/// Full description of one Monte Carlo experiment. Every run is a pure
/// function of this struct: the same config gives bit-identical results
/// regardless of thread count.
struct ExperimentConfig {
    std::uint32_t fir_length = 16;
    std::uint32_t sparsity_k = 1;
    double snr_db = 10.0; // +infinity selects the noiseless channel
    double mu = 2.0;
    std::uint32_t iterations = 3000;
    std::uint32_t mc_runs = 100;
    std::uint64_t master_seed = 1;
    std::vector<Algorithm> algorithms = default_algorithms();
    double epsilon = 20.0;
    double delta = 0.05;
    std::optional<double> lambda_za;  // override; default comes from lambda_default
    std::optional<double> lambda_rza; // override
    std::optional<double> lambda_rl1; // override
    unsigned threads = 0; // 0 = hardware concurrency; results never depend on it

    void validate() const; // throws std::invalid_argument
    double noise_variance() const;
    AlgorithmParams params_for(Algorithm a) const;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<MsdTrace> traces;                 // parallel to config.algorithms
    std::vector<std::uint32_t> divergence_counts; // parallel to traces
    double wall_seconds = 0.0;
};

/// Observation hook for tests: called once per iteration with (n, x(n), d(n)).
using StreamTap = std::function<void(std::size_t, std::span<const double>, double)>;

/// Runs every configured algorithm over one shared channel / training / noise
/// realization seeded from (master_seed, trial_index). All algorithms see the
/// same data stream, and the stream does not depend on which algorithms are
/// configured. Returns one record per configured algorithm.
std::vector<TrialRecord> run_single_trial(const ExperimentConfig& cfg, std::uint32_t trial_index,
                                          const StreamTap& tap = {});

/// Monte Carlo driver: mc_runs independent trials, averaged per algorithm.
/// Diverged trials are excluded from the averages and counted instead; a
/// fully diverged algorithm yields a NaN trace, never an abort.
ExperimentResult run_monte_carlo(const ExperimentConfig& cfg);

} // namespace asce
