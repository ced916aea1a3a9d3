#include "asce/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace asce {

SparseChannelSpec SparseChannelSpec::unit_energy(std::uint32_t fir, std::uint32_t k) {
    SparseChannelSpec spec;
    spec.fir_length = fir;
    spec.sparsity_k = k;
    spec.tap_variance = (k > 0) ? 1.0 / static_cast<double>(k) : 0.0;
    spec.validate();
    return spec;
}

void SparseChannelSpec::validate() const {
    if (fir_length == 0) {
        throw std::invalid_argument("SparseChannelSpec: fir_length must be positive");
    }
    if (sparsity_k == 0 || sparsity_k > fir_length) {
        throw std::invalid_argument("SparseChannelSpec: need 1 <= sparsity_k <= fir_length");
    }
    if (!(tap_variance > 0.0) || !std::isfinite(tap_variance)) {
        throw std::invalid_argument("SparseChannelSpec: tap_variance must be positive");
    }
}

double ChannelRealization::squared_norm() const {
    double acc = 0.0;
    for (const double c : coefficients) {
        acc += c * c;
    }
    return acc;
}

NoiseModel NoiseModel::from_snr_db(double snr_db) {
    if (std::isnan(snr_db)) {
        throw std::invalid_argument("NoiseModel: snr_db must not be NaN");
    }
    NoiseModel m;
    m.variance = std::pow(10.0, -snr_db / 10.0); // 0 when snr_db is +inf
    return m;
}

ChannelRealization generate_channel(const SparseChannelSpec& spec, SeededRng& rng) {
    spec.validate();
    ChannelRealization ch;
    ch.support = rng.distinct_indices(spec.sparsity_k, spec.fir_length);
    ch.coefficients.assign(spec.fir_length, 0.0);
    const double scale = std::sqrt(spec.tap_variance);
    for (const std::uint32_t idx : ch.support) {
        ch.coefficients[idx] = scale * rng.gaussian();
    }
    return ch;
}

TrainingSequence generate_training_sequence(std::size_t length, SeededRng& rng) {
    TrainingSequence seq;
    seq.symbols.resize(length);
    for (double& s : seq.symbols) {
        s = rng.pm1();
    }
    return seq;
}

void fill_regressor(const TrainingSequence& seq, std::size_t n, std::uint32_t fir_length,
                    std::span<double> out) {
    if (n >= seq.symbols.size()) {
        throw std::invalid_argument("fill_regressor: sample index past end of sequence");
    }
    if (out.size() != fir_length) {
        throw std::invalid_argument("fill_regressor: output span has wrong length");
    }
    for (std::uint32_t i = 0; i < fir_length; ++i) {
        out[i] = (n >= i) ? seq.symbols[n - i] : 0.0;
    }
}

std::vector<double> regressor_at(const TrainingSequence& seq, std::size_t n,
                                 std::uint32_t fir_length) {
    std::vector<double> x(fir_length);
    fill_regressor(seq, n, fir_length, x);
    return x;
}

double observe(const ChannelRealization& channel, std::span<const double> regressor,
               const NoiseModel& noise, SeededRng& rng) {
    if (regressor.size() != channel.coefficients.size()) {
        throw std::invalid_argument("observe: regressor length differs from channel length");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < regressor.size(); ++i) {
        d += channel.coefficients[i] * regressor[i];
    }
    if (noise.variance > 0.0) {
        d += std::sqrt(noise.variance) * rng.gaussian();
    }
    return d;
}

} // namespace asce
