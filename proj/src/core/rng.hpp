#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace s2m {

// Deterministic random source. mt19937_64 has a standardized sequence, and
// the bit-to-double conversions are spelled out here instead of going through
// std distributions (whose streams are implementation-defined). keyed(seed,
// stream) gives independent per-trial streams so sharded runs reproduce the
// single-threaded results byte for byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {  // splitmix64 finalizer
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static Rng keyed(std::uint64_t seed, std::uint64_t stream) {
        return Rng(mix(mix(seed) ^ mix(stream * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL)));
    }

    std::uint64_t bits() { return gen_(); }

    double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // inclusive bounds
    int uniform_int(int lo, int hi) {
        const int span = hi - lo + 1;
        int v = lo + static_cast<int>(uniform() * static_cast<double>(span));
        return v > hi ? hi : v;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::vector<double> normal_vector(int n) {
        std::vector<double> v(static_cast<std::size_t>(n));
        for (double& x : v) x = normal();
        return v;
    }

    std::vector<double> unit_vector(int n) {
        for (;;) {
            std::vector<double> v = normal_vector(n);
            double s = 0.0;
            for (double x : v) s += x * x;
            if (s > 1e-12) {
                const double inv = 1.0 / std::sqrt(s);
                for (double& x : v) x *= inv;
                return v;
            }
        }
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace s2m
