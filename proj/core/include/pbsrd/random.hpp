#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "pbsrd/geometry.hpp"

namespace pbsrd {

// splitmix64 finalizer; used to turn correlated seed inputs into
// well-separated engine seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

// Replica seed splitter: base seed xor'ed with a golden-ratio multiple of the
// replica index, then splitmix64-finalized. Documented in the README; every
// source of randomness in a run flows from one of these.
inline std::uint64_t replica_seed(std::uint64_t base, std::uint64_t replica) {
    return mix64(base ^ (0x9E3779B97F4A7C15ull * (replica + 1)));
}

// All stochastic kernels take an explicit Rng; there is no global state.
// Distribution transforms are implemented here (not via std::*_distribution)
// so that a given seed produces the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

    std::uint64_t raw() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t uniform_index(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % n;
    }

    // Standard normal via Box-Muller; the second value of each pair is cached.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        cached_ = r * std::sin(2.0 * M_PI * u2);
        have_cached_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    double exponential(double rate) { return -std::log(1.0 - uniform()) / rate; }

    // Knuth inversion; fine for the small per-step means we use.
    std::uint64_t poisson(double mean) {
        if (mean <= 0.0) return 0;
        std::uint64_t k = 0;
        double p = 1.0;
        const double floor = std::exp(-mean);
        do {
            ++k;
            p *= uniform();
        } while (p > floor);
        return k - 1;
    }

    // Uniformly distributed direction on the unit sphere in `dim` dimensions.
    Vec unit_vector(int dim) {
        switch (dim) {
            case 1: return vec1(uniform() < 0.5 ? -1.0 : 1.0);
            case 2: {
                const double phi = 2.0 * M_PI * uniform();
                return vec2(std::cos(phi), std::sin(phi));
            }
            default: {
                const double z = uniform(-1.0, 1.0);
                const double phi = 2.0 * M_PI * uniform();
                const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
                return vec3(r * std::cos(phi), r * std::sin(phi), z);
            }
        }
    }

    // Fisher-Yates shuffle, uses uniform_index for platform independence.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_index(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace pbsrd
