#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "zetaline/config.hpp"
#include "zetaline/constants.hpp"
#include "zetaline/detail/lanczos.hpp"
#include "zetaline/roots.hpp"

namespace zetaline {

// Riemann-Siegel theta:  theta(t) = -(t/2) ln pi + Im ln Gamma(1/4 + it/2).
//
// Stirling expansion through 1/t^3 for t >= 20 (next omitted term is
// 31/(80640 t^5), below 4e-9 already at t = 10); continuous-branch
// log-gamma below.
inline double theta(double t, const EvalConfig& cfg = {}) {
    (void)cfg;
    if (t < 0.0) throw std::domain_error("theta: t must be >= 0");
    if (t >= 20.0) {
        const double half = 0.5 * t;
        return half * std::log(half / kPi) - half - kPi / 8.0 +
               1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t * t);
    }
    const std::complex<double> lg = detail::log_gamma({0.25, 0.5 * t});
    return lg.imag() - 0.5 * t * kLnPi;
}

// Mean gap between consecutive sign changes of Z: 2pi / ln(t/2pi).
inline double oscillation_scale(double t) {
    if (!(t > kTwoPiE))
        throw std::domain_error("oscillation_scale: t must be > 2*pi*e");
    return kTwoPi / std::log(t / kTwoPi);
}

// Oscillation scale clamped to pi below 2*pi*e^2, where the raw formula
// diverges; used by panel-width and sampling rules that must cover [0, T].
inline double oscillation_scale_clamped(double t) {
    return oscillation_scale(t > kTwoPiE2 ? t : kTwoPiE2);
}

// The unique t > 7 with theta(t) = n*pi, to 1e-9 relative accuracy.
// theta is strictly increasing on (2pi, inf) with theta(7) < -pi, so the
// root is bracketed by expanding the upper endpoint.
inline double gram_point(int n, const EvalConfig& cfg = {}) {
    if (n < -1) throw std::domain_error("gram_point: n must be >= -1");
    const double target = n * kPi;
    double lo = 7.0;
    double hi = 20.0;
    while (theta(hi, cfg) < target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e18) throw convergence_error("gram_point: bracket expansion failed");
    }
    RootOptions opt;
    opt.rel_tol = 1e-10;
    return find_root([&](double t) { return theta(t, cfg) - target; }, lo, hi, opt);
}

}  // namespace zetaline
