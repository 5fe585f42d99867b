#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace entb {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Independent, reproducible stream: mixing (seed, stream) keeps Monte Carlo
// results identical for any thread count.
inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0x517cc1b727220a95ULL * (stream + 1));
    std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(s)),
                      static_cast<std::uint32_t>(splitmix64(s) >> 32),
                      static_cast<std::uint32_t>(splitmix64(s)),
                      static_cast<std::uint32_t>(splitmix64(s) >> 32)};
    return std::mt19937_64(seq);
}

// Flat Dirichlet sample: a uniformly random point of the L-simplex.
inline std::vector<double> random_distribution(std::mt19937_64& rng, int L) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> p(L);
    double total = 0.0;
    for (auto& v : p) {
        double u;
        do { u = uni(rng); } while (u <= 0.0);
        v = -std::log(u);
        total += v;
    }
    for (auto& v : p) v /= total;
    return p;
}

// Uniform point of the unit ball (Hilbert-Schmidt measure on qubit states).
inline std::array<double, 3> random_bloch_ball(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double x = gauss(rng), y = gauss(rng), z = gauss(rng);
    double norm = std::sqrt(x * x + y * y + z * z);
    if (norm == 0.0) return {0.0, 0.0, 0.0};
    double r = std::cbrt(uni(rng));
    return {r * x / norm, r * y / norm, r * z / norm};
}

}  // namespace entb
