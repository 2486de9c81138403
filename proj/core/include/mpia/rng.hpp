#ifndef MPIA_RNG_HPP
#define MPIA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace mpia {

/// Deterministic random stream built on mt19937_64.
///
/// All sampling routines are implemented from raw engine output instead of
/// the standard <random> distributions, whose algorithms are
/// implementation-defined. Two builds on different standard libraries
/// produce identical streams for the same seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t uniform_index(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::uniform_index: n must be positive");
        // Bitmask rejection keeps the draw unbiased and portable.
        std::uint64_t mask = n - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            std::uint64_t v = engine_() & mask;
            if (v < n) return v;
        }
    }

    /// Standard normal via Box-Muller. Consumes two uniforms per pair.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    double lognormal(double mu, double sigma) { return std::exp(mu + sigma * normal()); }

    /// k distinct indices from [0, n), uniformly, in draw order.
    std::vector<std::size_t> distinct_indices(std::size_t k, std::size_t n) {
        if (k > n) throw std::invalid_argument("Rng::distinct_indices: k exceeds n");
        std::vector<std::size_t> picked;
        picked.reserve(k);
        while (picked.size() < k) {
            auto candidate = static_cast<std::size_t>(uniform_index(n));
            bool seen = false;
            for (std::size_t p : picked) {
                if (p == candidate) {
                    seen = true;
                    break;
                }
            }
            if (!seen) picked.push_back(candidate);
        }
        return picked;
    }

    /// Derives an independent child seed. splitmix64 finalizer over (seed, stream).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace mpia

#endif  // MPIA_RNG_HPP
