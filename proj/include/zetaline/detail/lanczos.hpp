#pragma once

#include <cmath>
#include <complex>

#include "zetaline/constants.hpp"

namespace zetaline::detail {

// Lanczos approximation of log Gamma(z) (g = 7, 9 terms).  Accurate to
// ~1e-14 for Re z >= 1/2; the reflection formula covers Re z < 1/2.
//
// Both branches are continuous for the arguments this library uses
// (z = 1/4 + it/2, t >= 0): the shifted argument z + g - 1/2 stays in the
// right half-plane and the rational part never crosses the negative real
// axis, so the principal logs introduce no branch jumps.
inline std::complex<double> log_gamma(std::complex<double> z) {
    static constexpr double g = 7.0;
    static constexpr double c[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };

    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        const std::complex<double> lg = log_gamma(1.0 - z);
        return std::log(kPi) - std::log(std::sin(kPi * z)) - lg;
    }

    const std::complex<double> zm1 = z - 1.0;
    std::complex<double> sum = c[0];
    for (int i = 1; i < 9; ++i) sum += c[i] / (zm1 + static_cast<double>(i));

    const std::complex<double> w = zm1 + g + 0.5;
    return 0.5 * std::log(kTwoPi) + (zm1 + 0.5) * std::log(w) - w + std::log(sum);
}

}  // namespace zetaline::detail
