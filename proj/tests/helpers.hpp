#pragma once

#include <cmath>

#include "zetaline/hardy_z.hpp"

namespace zltest {

// Analytic integrands for the synthetic quadrature/oscillation oracles.
struct SinSampler {
    zetaline::Sample operator()(double t) const { return {std::sin(t), 0.0}; }
};

struct ConstSampler {
    double value = 1.0;
    zetaline::Sample operator()(double) const { return {value, 0.0}; }
};

// Closed forms for the sin-based prefix integrals.
inline double sin2_prefix(double T) { return T / 2.0 - std::sin(2.0 * T) / 4.0; }
inline double sin4_prefix(double T) {
    return 3.0 * T / 8.0 - std::sin(2.0 * T) / 4.0 + std::sin(4.0 * T) / 32.0;
}

// Riemann-von Mangoldt zero count below T.
inline double zero_count_estimate(double T) {
    const double x = T / (2.0 * zetaline::kPi);
    return x * std::log(x) - x + 7.0 / 8.0;
}

// Deterministic xorshift for seeded property tests.
struct Rng {
    unsigned long long s;
    explicit Rng(unsigned long long seed) : s(seed) {}
    double uniform() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return static_cast<double>(s % (1ull << 53)) / static_cast<double>(1ull << 53);
    }
    double log_uniform(double lo, double hi) {
        return lo * std::pow(hi / lo, uniform());
    }
};

}  // namespace zltest
