#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace asce {

/// Derives a well-separated engine seed from (master seed, stream index).
/// splitmix64 finalizer; consecutive stream indices land far apart.
constexpr std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) noexcept {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Deterministic random source. mt19937_64 output is fixed by the standard,
// and every derived draw below is built directly on raw engine words instead
// of std::*_distribution, whose algorithms are implementation-defined. The
// same seed therefore yields bit-identical streams on any standard library.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
    SeededRng(std::uint64_t master, std::uint64_t stream) : engine_(mix_seed(master, stream)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on (0, 1], 53-bit resolution. Never returns 0, so it is safe
    /// as a log() argument.
    double uniform_pos() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Equiprobable +1.0 / -1.0.
    double pm1() { return (engine_() >> 63) ? 1.0 : -1.0; }

    /// Uniform integer in [0, n). Masked rejection keeps it exactly uniform.
    std::uint64_t below(std::uint64_t n);

    /// Standard normal via Box-Muller. Draws come in pairs; the second member
    /// is cached, so a stream of calls consumes exactly one pair of engine
    /// words per two values.
    double gaussian();

    /// k distinct indices drawn uniformly from [0, n), returned ascending.
    std::vector<std::uint32_t> distinct_indices(std::uint32_t k, std::uint32_t n);

  private:
    std::mt19937_64 engine_;
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

} // namespace asce
