#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <stdexcept>

namespace scuba {

/// SplitMix64 output function. A bijection on 64-bit words.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t golden_gamma = UINT64_C(0x9E3779B97F4A7C15);

/// Seed of run `run_index` under `master_seed`.
///
/// mix(master + (run_index + 1) * gamma). The argument is injective in
/// run_index (gamma is odd) and the mix is a bijection, so distinct run
/// indices always get distinct seeds. This derivation is part of the
/// reproducibility contract and must not change.
constexpr std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t run_index) noexcept {
    return splitmix64_mix(master_seed + (run_index + 1) * golden_gamma);
}

/// Named sub-streams of one user seed.
enum class Stream : std::uint64_t {
    instance = 0x696e7374616e6365,  // "instance"
    sampling = 0x73616d706c696e67,  // "sampling"
    runs = 0x72756e7372756e73,      // "runsruns"
};

/// Folds a list of integer keys into a seed, chaining SplitMix64 over each key.
/// Used to derive one independent seed per (stream, experiment cell).
inline std::uint64_t mix_seed(std::uint64_t seed, Stream stream, std::span<const std::int64_t> keys) {
    std::uint64_t h = splitmix64_mix(seed ^ static_cast<std::uint64_t>(stream));
    for (std::int64_t k : keys) {
        h = splitmix64_mix(h + golden_gamma + static_cast<std::uint64_t>(k));
    }
    return h;
}

inline std::uint64_t mix_seed(std::uint64_t seed, Stream stream, std::initializer_list<std::int64_t> keys = {}) {
    return mix_seed(seed, stream, std::span<const std::int64_t>(keys.begin(), keys.size()));
}

/// Run-level generator. Wraps std::mt19937_64, whose output sequence is fixed
/// by the standard; bounded draws use our own rejection sampling because the
/// std distributions are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) {
            throw std::invalid_argument("Rng::below: bound must be positive");
        }
        // Rejection on the top multiple of bound keeps the draw unbiased.
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
        std::uint64_t x = engine_();
        while (x > limit) {
            x = engine_();
        }
        return x % bound;
    }

    std::size_t index(std::size_t size) { return static_cast<std::size_t>(below(size)); }

    bool coin() { return (engine_() >> 63) != 0; }

    /// Fisher-Yates with our own bounded draws.
    template <class RandomIt>
    void shuffle(RandomIt first, RandomIt last) {
        const auto n = static_cast<std::size_t>(last - first);
        for (std::size_t i = n; i > 1; --i) {
            const std::size_t j = index(i);
            using std::swap;
            swap(first[i - 1], first[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace scuba
