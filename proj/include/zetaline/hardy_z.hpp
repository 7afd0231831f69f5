#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <sstream>
#include <stdexcept>

#include "zetaline/config.hpp"
#include "zetaline/constants.hpp"
#include "zetaline/detail/rs_coeffs.hpp"
#include "zetaline/detail/tables.hpp"
#include "zetaline/errors.hpp"
#include "zetaline/theta.hpp"

namespace zetaline {

enum class ZMethod { riemann_siegel, euler_maclaurin };

// One evaluation of the Hardy function Z(t) = e^{i theta(t)} zeta(1/2 + it).
struct ZEval {
    double t = 0.0;
    double z = 0.0;
    double theta = 0.0;
    double est_error = 0.0;
    ZMethod method = ZMethod::riemann_siegel;

    bool meets_target(const EvalConfig& cfg) const {
        return est_error <= cfg.target_abs_error;
    }
};

namespace detail {

// zeta(1/2 + it) by Euler-Maclaurin.  The main-sum length grows with t so
// the Bernoulli tail stays geometric with ratio ~(t/2piN)^2 ~ 0.1.
inline std::complex<double> zeta_half_line_em(double t, const EvalConfig& cfg,
                                              double& remainder_bound) {
    const auto& tab = LogSqrtTable::instance();
    const std::complex<double> s{0.5, t};
    const std::size_t n_main = static_cast<std::size_t>(
        std::max<double>(cfg.em_terms, std::ceil(0.5 * t) + 8.0));

    std::complex<double> acc{0.0, 0.0};
    for (std::size_t n = 1; n < n_main; ++n) {
        const double ln = tab.log(n);
        // n^{-s} = n^{-1/2} e^{-i t ln n}
        acc += tab.rsqrt(n) * std::complex<double>(std::cos(t * ln), -std::sin(t * ln));
    }

    const double lnN = tab.log(n_main);
    const double rsN = tab.rsqrt(n_main);
    const std::complex<double> npow{rsN * std::cos(t * lnN), -rsN * std::sin(t * lnN)};
    const double dN = static_cast<double>(n_main);

    acc += dN * npow / (s - 1.0);  // integral term N^{1-s}/(s-1)
    acc += 0.5 * npow;

    // Bernoulli corrections: B_{2k}/(2k)! * s(s+1)..(s+2k-2) * N^{1-s-2k}
    std::complex<double> poch = s;
    std::complex<double> npow_k = npow / dN;  // N^{-s-(2k-1)} for k = 1
    double last_mag = std::abs(npow);
    std::size_t k_used = kBernoulliOverFactorial.size();
    for (std::size_t k = 1; k <= kBernoulliOverFactorial.size(); ++k) {
        const std::complex<double> term = kBernoulliOverFactorial[k - 1] * poch * npow_k;
        acc += term;
        last_mag = std::abs(term);
        if (last_mag < 1e-18 * std::abs(acc)) {
            k_used = k;
            break;
        }
        poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        npow_k /= dN * dN;
    }

    // |R_K| <= |first omitted term| * (|s| + 2K + 1)/(sigma + 2K + 1);
    // successive terms shrink by ~((|s| + 2k)/(2 pi N))^2.
    const double kd = static_cast<double>(k_used);
    const double ratio = std::pow((std::abs(s) + 2.0 * kd + 1.0) / (kTwoPi * dN), 2.0);
    remainder_bound = last_mag * ratio * (std::abs(s) + 2.0 * kd + 1.0) / (2.0 * kd + 1.5) +
                      2e-16 * (std::abs(acc) + 1.0) * (std::sqrt(dN) + t);
    return acc;
}

// Model error bound for the Riemann-Siegel remainder after k correction
// terms (Gabcke-style constants, conservative against the measured errors).
inline double rs_error_model(int k, double t_over_2pi) {
    static constexpr double b[5] = {1.3, 0.127, 0.053, 0.011, 0.011};
    // Second term: double-precision phase noise of the main sum, which
    // dominates the truncation remainder at large t.
    return b[k] * std::pow(t_over_2pi, -(2.0 * k + 1.0) / 4.0) + 1e-15 * t_over_2pi * kTwoPi;
}

}  // namespace detail

// Z(t) via the Riemann-Siegel formula (t >= em_threshold) or rotated
// Euler-Maclaurin zeta below.
inline ZEval hardy_z(double t, const EvalConfig& cfg = {}) {
    if (t < 0.0) throw std::domain_error("hardy_z: t must be >= 0");
    cfg.validate();

    ZEval out;
    out.t = t;
    out.theta = theta(t, cfg);

    if (t < cfg.em_threshold) {
        double rem = 0.0;
        const std::complex<double> zeta = detail::zeta_half_line_em(t, cfg, rem);
        const std::complex<double> rotated =
            std::complex<double>(std::cos(out.theta), std::sin(out.theta)) * zeta;
        if (std::abs(rotated.imag()) >= 1e-8) {
            std::ostringstream msg;
            msg << "hardy_z: |Im e^{i theta} zeta| = " << std::abs(rotated.imag())
                << " at t = " << t << " (Euler-Maclaurin parameters too coarse)";
            throw accuracy_error(msg.str());
        }
        out.z = rotated.real();
        out.est_error = rem + std::abs(rotated.imag());
        out.method = ZMethod::euler_maclaurin;
        return out;
    }

    const auto& tab = detail::LogSqrtTable::instance();
    const double t2pi = t / kTwoPi;
    const double tau = std::sqrt(t2pi);
    const std::size_t n_sum = static_cast<std::size_t>(tau);
    const double p = tau - static_cast<double>(n_sum);

    double sum = 0.0;
    for (std::size_t n = 1; n <= n_sum; ++n)
        sum += tab.rsqrt(n) * std::cos(out.theta - t * tab.log(n));
    sum *= 2.0;

    double corr = 0.0;
    double scale = 1.0;  // (t/2pi)^{-j/2}
    for (int j = 0; j < cfg.rs_correction_order; ++j) {
        corr += detail::rs_coefficient(j, p) * scale;
        scale /= tau;
    }
    const double parity = (n_sum % 2 == 0) ? -1.0 : 1.0;  // (-1)^{N-1}
    sum += parity * std::pow(t2pi, -0.25) * corr;

    out.z = sum;
    out.est_error = detail::rs_error_model(cfg.rs_correction_order, t2pi);
    out.method = ZMethod::riemann_siegel;
    return out;
}

// Sampled function value with its evaluation-error estimate; the quadrature
// seam all integrands flow through.
struct Sample {
    double value = 0.0;
    double err = 0.0;
};

// Z as a quadrature integrand.
struct ZSampler {
    EvalConfig cfg;
    Sample operator()(double t) const {
        const ZEval e = hardy_z(t, cfg);
        return {e.z, e.est_error};
    }
};

}  // namespace zetaline
