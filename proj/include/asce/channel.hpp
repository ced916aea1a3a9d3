#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "asce/rng.hpp"

namespace asce {

/// Description of a K-sparse FIR channel. Active taps are Gaussian with
/// variance tap_variance; unit_energy() ties the variance to 1/K so that
/// E{||h||^2} = 1 without any per-draw renormalisation.
struct SparseChannelSpec {
    std::uint32_t fir_length = 16;
    std::uint32_t sparsity_k = 1;
    double tap_variance = 1.0;

    static SparseChannelSpec unit_energy(std::uint32_t fir, std::uint32_t k);

    /// Throws std::invalid_argument unless 1 <= sparsity_k <= fir_length and
    /// tap_variance > 0.
    void validate() const;
};

struct ChannelRealization {
    std::vector<double> coefficients;   // length fir_length, zero off the support
    std::vector<std::uint32_t> support; // ascending, exactly sparsity_k entries

    double squared_norm() const;
};

struct TrainingSequence {
    std::vector<double> symbols; // each exactly +1.0 or -1.0
};

/// Additive white Gaussian observation noise. The SNR convention assumes unit
/// transmit power and unit expected channel energy, so variance = 10^(-snr/10).
/// An infinite snr_db means noiseless and no noise draws are consumed.
struct NoiseModel {
    double variance = 0.0;

    static NoiseModel from_snr_db(double snr_db);
};

ChannelRealization generate_channel(const SparseChannelSpec& spec, SeededRng& rng);

TrainingSequence generate_training_sequence(std::size_t length, SeededRng& rng);

/// Regressor x(n) = [s(n), s(n-1), ..., s(n-fir+1)]; positions before the
/// start of the sequence read as zero (cold start).
void fill_regressor(const TrainingSequence& seq, std::size_t n, std::uint32_t fir_length,
                    std::span<double> out);
std::vector<double> regressor_at(const TrainingSequence& seq, std::size_t n,
                                 std::uint32_t fir_length);

/// One receiver observation d(n) = h^T x(n) + z(n). Draws one Gaussian from
/// rng unless noise.variance == 0, in which case the stream is untouched.
double observe(const ChannelRealization& channel, std::span<const double> regressor,
               const NoiseModel& noise, SeededRng& rng);

} // namespace asce
