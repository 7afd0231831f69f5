#pragma once

#include <cmath>
#include <sstream>
#include <vector>

#include "zetaline/constants.hpp"
#include "zetaline/errors.hpp"
#include "zetaline/roots.hpp"

namespace zetaline {

// One solved point of the Jacob's ladder:
//   F(phi) = I2(T), sigma = F(phi)/T.
struct LadderPoint {
    double T = 0.0;
    double i2 = 0.0;
    double phi = 0.0;
    double sigma = 0.0;
    double sigma1 = 0.0;
    double c0_used = 0.0;
    double solve_residual = 0.0;
};

// F(phi) = (phi/2) ln(phi/2) + (c - ln 2pi)(phi/2) + c0, c Euler's constant.
// Strictly increasing for phi > 2e.  phi = 2 is admitted as the boundary
// case (the log term vanishes there).
inline double hl_main_term(double phi, double c0) {
    if (!(phi >= 2.0)) throw std::domain_error("hl_main_term: phi must be >= 2");
    const double half = 0.5 * phi;
    return half * std::log(half) + (kEulerGamma - kLn2Pi) * half + c0;
}

inline constexpr double kPhiLowerBound = 5.43656365691809047072057749375521944;  // 2e

// The unique phi > 2e with F(phi) = i2, by bracketed root-finding on
// [2e, 4T + 100].
inline LadderPoint solve_phi(double T, double i2, double c0 = 0.0) {
    const double lo = kPhiLowerBound;
    if (!(i2 > hl_main_term(lo * 1.01, c0))) {
        std::ostringstream msg;
        msg << "solve_phi: I2 = " << i2 << " is below the monotone branch (F(2.02e) = "
            << hl_main_term(lo * 1.01, c0) << "); T below working range, minimum usable T ~ 10";
        throw convergence_error(msg.str());
    }
    double hi = std::max(4.0 * T + 100.0, 2.0 * lo);
    while (hl_main_term(hi, c0) < i2) {
        hi *= 2.0;
        if (hi > 1e300) throw convergence_error("solve_phi: bracket expansion failed");
    }

    LadderPoint pt;
    pt.T = T;
    pt.i2 = i2;
    pt.c0_used = c0;
    pt.phi = find_root([&](double phi) { return hl_main_term(phi, c0) - i2; }, lo, hi);
    pt.solve_residual = std::abs(hl_main_term(pt.phi, c0) - i2);
    if (pt.solve_residual > 1e-9 * std::max(1.0, std::abs(i2))) {
        std::ostringstream msg;
        msg << "solve_phi: residual " << pt.solve_residual << " exceeds 1e-9*max(1, I2) at T = " << T;
        throw convergence_error(msg.str());
    }
    pt.sigma = hl_main_term(pt.phi, c0) / T;
    pt.sigma1 = std::log(T) + 2.0 * kEulerGamma - 1.0 - kLn2Pi;
    return pt;
}

// sigma(T) = (phi/2T) ln(phi/2) + (c - ln 2pi)(phi/2T) + c0/T; identically
// F(phi)/T, computed through the same arithmetic so T*sigma == F(phi).
inline double sigma_moser(const LadderPoint& pt, double T) {
    if (!(T > 0.0)) throw std::domain_error("sigma_moser: T must be > 0");
    return hl_main_term(pt.phi, pt.c0_used) / T;
}

// sigma_1(T) = ln T + 2c - 1 - ln 2pi (Balasubramanian main part).
inline double sigma_balasubramanian(double T) {
    if (!(T > 1.0)) throw std::domain_error("sigma_balasubramanian: T must be > 1");
    return std::log(T) + 2.0 * kEulerGamma - 1.0 - kLn2Pi;
}

// Exponentially weighted second-moment report at one delta.
struct TkaReport {
    double delta = 0.0;
    double lhs = 0.0;       // truncated int_0^{20/delta} Z^2 e^{-2 delta t} dt
    double rhs_main = 0.0;  // (c - ln 4 pi delta) / (2 sin delta)
    double diff = 0.0;
    double c0_estimate = 0.0;
};

inline double tka_main_term(double delta) {
    if (!(delta > 0.0 && delta <= 0.5))
        throw std::domain_error("tka_main_term: delta must be in (0, 0.5]");
    return (kEulerGamma - std::log(4.0 * kPi * delta)) / (2.0 * std::sin(delta));
}

// Linear extrapolation of diff(delta) to delta -> 0 from the two smallest
// deltas of the batch.
inline double tka_c0_extrapolate(const std::vector<TkaReport>& reports) {
    if (reports.size() < 2)
        return reports.empty() ? 0.0 : reports.front().diff;
    const TkaReport* a = nullptr;  // smallest delta
    const TkaReport* b = nullptr;  // second smallest
    for (const auto& r : reports) {
        if (!a || r.delta < a->delta) {
            b = a;
            a = &r;
        } else if (!b || r.delta < b->delta) {
            b = &r;
        }
    }
    return a->diff - a->delta * (b->diff - a->diff) / (b->delta - a->delta);
}

}  // namespace zetaline
