#include "asce/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace asce {

double lambda_default(double noise_variance, std::uint32_t sparsity_k, Algorithm kind) {
    if (!(noise_variance >= 0.0) || !std::isfinite(noise_variance)) {
        throw std::invalid_argument("lambda_default: noise variance must be finite and >= 0");
    }
    if (sparsity_k == 0) {
        throw std::invalid_argument("lambda_default: sparsity_k must be positive");
    }
    const double k = static_cast<double>(sparsity_k);
    switch (kind) {
    case Algorithm::ZA_NLMF:
    case Algorithm::RZA_NLMF:
        return 5.0 * std::pow(10.0, 3.0 * noise_variance - 5.0) / k;
    case Algorithm::RL1_NLMF:
        return 5.0 * std::pow(10.0, 3.0 * noise_variance - 8.0) / k;
    case Algorithm::LMF:
    case Algorithm::NLMF:
        return 0.0;
    }
    throw std::invalid_argument("lambda_default: unknown algorithm");
}

std::vector<Algorithm> default_algorithms() {
    return {Algorithm::NLMF, Algorithm::ZA_NLMF, Algorithm::RZA_NLMF, Algorithm::RL1_NLMF};
}

void ExperimentConfig::validate() const {
    SparseChannelSpec::unit_energy(fir_length, sparsity_k); // validates fir/k
    if (std::isnan(snr_db)) {
        throw std::invalid_argument("ExperimentConfig: snr_db must not be NaN");
    }
    if (!(mu > 0.0) || !std::isfinite(mu)) {
        throw std::invalid_argument("ExperimentConfig: mu must be positive and finite");
    }
    if (iterations == 0) {
        throw std::invalid_argument("ExperimentConfig: iterations must be positive");
    }
    if (mc_runs == 0) {
        throw std::invalid_argument("ExperimentConfig: mc_runs must be positive");
    }
    if (algorithms.empty()) {
        throw std::invalid_argument("ExperimentConfig: algorithm list must not be empty");
    }
    for (std::size_t i = 0; i < algorithms.size(); ++i) {
        for (std::size_t j = i + 1; j < algorithms.size(); ++j) {
            if (algorithms[i] == algorithms[j]) {
                throw std::invalid_argument("ExperimentConfig: duplicate algorithm");
            }
        }
    }
    const auto check_override = [](const std::optional<double>& v, const char* what) {
        if (v && (!std::isfinite(*v) || *v < 0.0)) {
            throw std::invalid_argument(std::string("ExperimentConfig: ") + what +
                                        " override must be finite and >= 0");
        }
    };
    check_override(lambda_za, "lambda_za");
    check_override(lambda_rza, "lambda_rza");
    check_override(lambda_rl1, "lambda_rl1");
    // epsilon/delta bounds are enforced by AlgorithmParams::validate
    params_for(algorithms.front());
}

double ExperimentConfig::noise_variance() const {
    return NoiseModel::from_snr_db(snr_db).variance;
}

AlgorithmParams ExperimentConfig::params_for(Algorithm a) const {
    const double var = noise_variance();
    AlgorithmParams p;
    p.kind = a;
    p.mu = mu;
    p.lambda_za = lambda_za ? *lambda_za : lambda_default(var, sparsity_k, Algorithm::ZA_NLMF);
    p.lambda_rza = lambda_rza ? *lambda_rza : lambda_default(var, sparsity_k, Algorithm::RZA_NLMF);
    p.lambda_rl1 = lambda_rl1 ? *lambda_rl1 : lambda_default(var, sparsity_k, Algorithm::RL1_NLMF);
    p.epsilon = epsilon;
    p.delta = delta;
    p.validate();
    return p;
}

std::vector<TrialRecord> run_single_trial(const ExperimentConfig& cfg, std::uint32_t trial_index,
                                          const StreamTap& tap) {
    cfg.validate();

    SeededRng rng(cfg.master_seed, trial_index);
    const auto spec = SparseChannelSpec::unit_energy(cfg.fir_length, cfg.sparsity_k);
    const ChannelRealization channel = generate_channel(spec, rng);
    const TrainingSequence seq = generate_training_sequence(cfg.iterations, rng);
    const NoiseModel noise = NoiseModel::from_snr_db(cfg.snr_db);

    const std::size_t algo_count = cfg.algorithms.size();
    std::vector<AlgorithmParams> params;
    params.reserve(algo_count);
    std::vector<FilterState> states;
    states.reserve(algo_count);
    std::vector<TrialRecord> records(algo_count);
    for (std::size_t a = 0; a < algo_count; ++a) {
        params.push_back(cfg.params_for(cfg.algorithms[a]));
        states.emplace_back(cfg.fir_length);
        records[a].trial_index = trial_index;
        records[a].squared_deviation.resize(cfg.iterations);
    }

    std::vector<double> x(cfg.fir_length);
    for (std::size_t n = 0; n < cfg.iterations; ++n) {
        fill_regressor(seq, n, cfg.fir_length, x);
        const double d = observe(channel, x, noise, rng);
        if (tap) {
            tap(n, std::span<const double>(x), d);
        }
        const StepInput in{std::span<const double>(x), d};
        for (std::size_t a = 0; a < algo_count; ++a) {
            if (records[a].diverged) {
                continue; // estimate frozen; entries were filled on divergence
            }
            records[a].squared_deviation[n] =
                squared_deviation(states[a].estimate, channel.coefficients);
            if (step(states[a], in, params[a]) == StepStatus::Diverged) {
                records[a].diverged = true;
                records[a].diverged_at = n;
                for (std::size_t m = n + 1; m < cfg.iterations; ++m) {
                    records[a].squared_deviation[m] = records[a].squared_deviation[n];
                }
            }
        }
    }
    return records;
}

ExperimentResult run_monte_carlo(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<std::vector<TrialRecord>> per_trial(cfg.mc_runs);

    unsigned workers = cfg.threads;
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = std::min<unsigned>(workers, cfg.mc_runs);

    if (workers <= 1) {
        for (std::uint32_t t = 0; t < cfg.mc_runs; ++t) {
            per_trial[t] = run_single_trial(cfg, t);
        }
    } else {
        // Trials are claimed from a shared counter and written to their own
        // slot; the reduction below walks trials in index order, so the
        // result never depends on scheduling.
        std::atomic<std::uint32_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            for (;;) {
                const std::uint32_t t = next.fetch_add(1);
                if (t >= cfg.mc_runs) {
                    return;
                }
                try {
                    per_trial[t] = run_single_trial(cfg, t);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
        for (auto& th : pool) {
            th.join();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    ExperimentResult result;
    result.config = cfg;
    result.traces.reserve(cfg.algorithms.size());
    result.divergence_counts.reserve(cfg.algorithms.size());
    std::vector<TrialRecord> records(cfg.mc_runs);
    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
        for (std::uint32_t t = 0; t < cfg.mc_runs; ++t) {
            records[t] = per_trial[t][a];
        }
        result.traces.push_back(average_msd_trace(records, cfg.algorithms[a]));
        std::uint32_t diverged = 0;
        for (const auto& r : records) {
            diverged += r.diverged ? 1u : 0u;
        }
        result.divergence_counts.push_back(diverged);
    }

    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace asce
