#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace taumap {

// Deterministic 64-bit generator (SplitMix64).  The standard library's
// distributions are implementation-defined, so sampling primitives are spelled
// out here to keep results identical across compilers and runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Independent stream for one sample index: results do not depend on how
    // samples are scheduled across workers.
    static Rng for_sample(std::uint64_t seed, std::uint64_t index) {
        return Rng(mix(seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        return mix(z);
    }

    // Unbiased uniform draw from {0, ..., n-1} by rejection.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return x % n;
        }
    }

    // Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller (own uniforms; libm only).
    double normal() {
        double u1 = uniform01(), u2 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Binomial(n, p) by inverse-CDF walk; intended for small n*p.
    long binomial(long n, double p) {
        double u = uniform01();
        double q = 1.0 - p;
        double prob = std::pow(q, static_cast<double>(n));  // P(0)
        long k = 0;
        double cdf = prob;
        while (u > cdf && k < n) {
            prob *= (static_cast<double>(n - k) / static_cast<double>(k + 1)) * (p / q);
            ++k;
            cdf += prob;
        }
        return k;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace taumap
