#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zetaline/constants.hpp"
#include "zetaline/errors.hpp"
#include "zetaline/quad.hpp"
#include "zetaline/roots.hpp"
#include "zetaline/theta.hpp"

namespace zetaline {

// Ordered crossing times of f(t)^2 = level and the signed tiling of [0, T].
struct SignDecomposition {
    struct Interval {
        double lo = 0.0;
        double hi = 0.0;
        int sign = 0;  // +1: f^2 >= level, -1: f^2 < level
    };

    double T = 0.0;
    double sigma_level = 0.0;
    std::vector<double> crossings;
    std::vector<Interval> intervals;
    std::size_t near_tangency_count = 0;
    double max_sample_sq = 0.0;  // largest f^2 seen on the scan grid
};

struct CrossingGridOptions {
    double floor_step = 0.05;
    double refine_abs_tol = 1e-10;
    double tangency_floor = 1e-9;
};

// Scan [0, T] on a grid of step oscillation_scale/8 (clamped near t = 0,
// floored at 0.05), bracket every sign change of f^2 - level, refine each
// crossing by bisection.  Sampled |f^2 - level| below the tangency floor
// without a sign change is flagged, not split.
template <class F>
SignDecomposition decompose_level_crossings(F&& f, double T, double level,
                                            const CrossingGridOptions& grid = {}) {
    if (!(T > 0.0)) throw std::domain_error("decompose_level_crossings: T must be > 0");
    if (!(level > 0.0)) throw std::domain_error("decompose_level_crossings: level must be > 0");

    SignDecomposition dec;
    dec.T = T;
    dec.sigma_level = level;

    auto gval = [&](double t) {
        const double v = f(t).value;
        return v * v - level;
    };
    // Ties f^2 = level count as S+ (": >=" in the set definition).
    auto sgn = [](double g) { return g >= 0.0 ? +1 : -1; };

    double t_prev = 0.0;
    double g_prev = gval(0.0);
    dec.max_sample_sq = g_prev + level;
    int first_sign = sgn(g_prev);

    RootOptions ropt;
    ropt.rel_tol = 1e-14;
    ropt.abs_tol = grid.refine_abs_tol;

    while (t_prev < T) {
        const double step = std::max(grid.floor_step, oscillation_scale_clamped(t_prev) / 8.0);
        const double t_cur = std::min(T, t_prev + step);
        const double g_cur = gval(t_cur);
        dec.max_sample_sq = std::max(dec.max_sample_sq, g_cur + level);

        if (sgn(g_cur) != sgn(g_prev)) {
            double c;
            if (g_prev == 0.0) {
                c = t_prev;
            } else if (g_cur == 0.0) {
                c = t_cur;
            } else {
                c = find_root(gval, t_prev, t_cur, ropt);
            }
            if (c > 1e-9 && c < T - 1e-9 &&
                (dec.crossings.empty() || c - dec.crossings.back() > 1e-9))
                dec.crossings.push_back(c);
        } else if (std::abs(g_cur) < grid.tangency_floor) {
            ++dec.near_tangency_count;
        }
        t_prev = t_cur;
        g_prev = g_cur;
    }

    // Tile [0, T]; signs alternate from the sign of the first segment.
    double lo = 0.0;
    int sign = first_sign;
    for (const double c : dec.crossings) {
        dec.intervals.push_back({lo, c, sign});
        lo = c;
        sign = -sign;
    }
    dec.intervals.push_back({lo, T, sign});
    return dec;
}

// Per-sign integrals over a decomposition, one quadrature pass:
//   m_plus  = sum over + intervals of  int (f^2 - level)
//   m_minus = sum over - intervals of  int (level - f^2)
// and the matching quartic moments int +-(f^4 - level^2) used by the eta
// mean values.
struct IntervalMeasures {
    double m_plus = 0.0;
    double m_minus = 0.0;
    double quartic_plus = 0.0;   // int_{S+} (f^4 - level^2)
    double quartic_minus = 0.0;  // int_{S-} (level^2 - f^4)
    double len_plus = 0.0;
    double len_minus = 0.0;
    double est_error_areas = 0.0;
    double est_error_quartic = 0.0;
    double clamp_residual_plus = 0.0;
    double clamp_residual_minus = 0.0;
    long panels = 0;
    long evals = 0;
};

template <class F>
IntervalMeasures areas_and_moments(F&& f, const SignDecomposition& dec,
                                   const QuadOptions& opt = {}) {
    IntervalMeasures out;
    const double level = dec.sigma_level;
    auto g = [&](double t) -> std::array<Sample, 2> {
        const Sample s = f(t);
        const double sq = s.value * s.value;
        const double mag = std::abs(s.value);
        return {{{sq - level, 2.0 * mag * s.err},
                 {sq * sq - level * level, 4.0 * mag * mag * mag * s.err}}};
    };

    long k = 0;
    for (const auto& iv : dec.intervals) {
        double area = 0.0, quartic = 0.0;
        double t = iv.lo;
        while (t < iv.hi) {
            const double right = std::min(iv.hi, t + detail::panel_width(t));
            ++k;
            const double budget[2] = {
                opt.rel_tol * std::max(std::abs(out.m_plus) + std::abs(out.m_minus), opt.abs_floor) /
                    static_cast<double>(k),
                opt.rel_tol *
                    std::max(std::abs(out.quartic_plus) + std::abs(out.quartic_minus), opt.abs_floor) /
                    static_cast<double>(k)};
            detail::PanelAccumulator acc;
            detail::refine_panel(g, t, right, budget, 0, opt.max_depth, acc);
            area += acc.value[0];
            quartic += acc.value[1];
            out.est_error_areas += acc.panel_err[0] + acc.model_err[0];
            out.est_error_quartic += acc.panel_err[1] + acc.model_err[1];
            out.panels += acc.panels;
            out.evals += acc.evals;
            t = right;
        }
        if (iv.sign > 0) {
            out.m_plus += area;
            out.quartic_plus += quartic;
            out.len_plus += iv.hi - iv.lo;
        } else {
            out.m_minus += -area;
            out.quartic_minus += -quartic;
            out.len_minus += iv.hi - iv.lo;
        }
    }

    // Both areas are nonnegative up to quadrature noise; clamp and record.
    if (out.m_plus < 0.0) {
        out.clamp_residual_plus = -out.m_plus;
        out.m_plus = 0.0;
    }
    if (out.m_minus < 0.0) {
        out.clamp_residual_minus = -out.m_minus;
        out.m_minus = 0.0;
    }
    return out;
}

// Weighted mean values of f^2 + level over S+ and S-:
//   eta1 = int_{S+}(f^4 - level^2) / m_plus
//   eta2 = int_{S-}(level^2 - f^4) / m_minus
// (f^4 - level^2 = (f^2 - level)(f^2 + level), so these are the means of
// f^2 + level with weights |f^2 - level|.)
inline std::pair<double, double> eta_from_measures(const IntervalMeasures& m, double T) {
    const double len_floor = 1e-6 * T;
    if (m.len_plus < len_floor || m.len_minus < len_floor || m.m_plus <= 0.0 || m.m_minus <= 0.0) {
        std::ostringstream msg;
        msg << "eta_values: degenerate sign set (|S+| = " << m.len_plus << ", |S-| = "
            << m.len_minus << ", m+ = " << m.m_plus << ", m- = " << m.m_minus << ")";
        throw std::domain_error(msg.str());
    }
    return {m.quartic_plus / m.m_plus, m.quartic_minus / m.m_minus};
}

template <class F>
std::pair<double, double> eta_values(F&& f, const SignDecomposition& dec, double m_plus,
                                     double m_minus, const QuadOptions& opt = {}) {
    IntervalMeasures m = areas_and_moments(f, dec, opt);
    m.m_plus = m_plus;   // caller-supplied areas take precedence
    m.m_minus = m_minus;
    return eta_from_measures(m, dec.T);
}

// Solve the 2x2 system
//   m+ - m-          = diff
//   eta1 m+ - eta2 m- = i4 - T sigma^2
inline std::pair<double, double> reconstruct_areas_via_eta(double diff, double eta1, double eta2,
                                                           double T, double i4, double sigma) {
    const double det = eta1 - eta2;
    if (std::abs(det) < 1e-9 * std::max(1.0, std::abs(eta1) + std::abs(eta2)))
        throw std::domain_error("reconstruct_areas_via_eta: eta1 - eta2 below tolerance (singular system)");
    const double q = i4 - T * sigma * sigma;
    return {(q - eta2 * diff) / det, (q - eta1 * diff) / det};
}

inline double fourth_moment_ratio(double i4, double T) {
    if (!(T >= 100.0)) throw std::domain_error("fourth_moment_ratio: T must be >= 100");
    const double lnT = std::log(T);
    return i4 / (T * lnT * lnT * lnT * lnT / (2.0 * kPi * kPi));
}

enum class LevelMode { moser, balasubramanian, explicit_level };

inline const char* to_string(LevelMode m) {
    switch (m) {
        case LevelMode::moser: return "moser";
        case LevelMode::balasubramanian: return "balasubramanian";
        case LevelMode::explicit_level: return "explicit_level";
    }
    return "?";
}

// Everything measured at one (T, sigma) pair, with the identity residuals
// that make the area-balance law checkable.
struct AreaReport {
    double T = 0.0;
    LevelMode mode = LevelMode::moser;
    double sigma_level = 0.0;
    double m_plus = 0.0;
    double m_minus = 0.0;
    double diff = 0.0;     // m+ - m-
    double abs_sum = 0.0;  // m+ + m-
    std::optional<double> eta1, eta2;
    double i2 = 0.0;
    double i4 = 0.0;
    std::size_t crossing_count = 0;
    std::size_t near_tangency_count = 0;
    double max_sample_sq = 0.0;
    // |(m+ - m-) - (I2 - T sigma)|
    double residual_area_identity = 0.0;
    // |(eta1 m+ - eta2 m-) - (I4 - T sigma^2)| (absent when eta degenerate)
    std::optional<double> residual_eta_identity;
    // relative mismatch of the 2x2 reconstruction against the direct areas
    std::optional<double> recon_rel_err_plus, recon_rel_err_minus;
    double est_error_areas = 0.0;
    double est_error_i2 = 0.0;
    double est_error_i4 = 0.0;
};

template <class F>
AreaReport assemble_area_report(F&& f, double T, LevelMode mode, double sigma_level, double i2,
                                double i4, double est_i2, double est_i4,
                                const QuadOptions& opt = {},
                                const CrossingGridOptions& grid = {}) {
    AreaReport rep;
    rep.T = T;
    rep.mode = mode;
    rep.sigma_level = sigma_level;
    rep.i2 = i2;
    rep.i4 = i4;
    rep.est_error_i2 = est_i2;
    rep.est_error_i4 = est_i4;

    const SignDecomposition dec = decompose_level_crossings(f, T, sigma_level, grid);
    rep.crossing_count = dec.crossings.size();
    rep.near_tangency_count = dec.near_tangency_count;
    rep.max_sample_sq = dec.max_sample_sq;

    const IntervalMeasures m = areas_and_moments(f, dec, opt);
    rep.m_plus = m.m_plus;
    rep.m_minus = m.m_minus;
    rep.diff = m.m_plus - m.m_minus;
    rep.abs_sum = m.m_plus + m.m_minus;
    rep.est_error_areas = m.est_error_areas;
    rep.residual_area_identity = std::abs(rep.diff - (i2 - T * sigma_level));

    try {
        const auto [e1, e2] = eta_from_measures(m, T);
        rep.eta1 = e1;
        rep.eta2 = e2;
        rep.residual_eta_identity =
            std::abs((e1 * rep.m_plus - e2 * rep.m_minus) - (i4 - T * sigma_level * sigma_level));
        const auto [mp, mm] = reconstruct_areas_via_eta(rep.diff, e1, e2, T, i4, sigma_level);
        rep.recon_rel_err_plus = std::abs(mp - rep.m_plus) / std::max(rep.m_plus, 1.0);
        rep.recon_rel_err_minus = std::abs(mm - rep.m_minus) / std::max(rep.m_minus, 1.0);
    } catch (const std::domain_error&) {
        // Degenerate sign set: eta values reported as absent.
    }
    return rep;
}

// Purely reported ratios for the conditional (Lindelof/Riemann) bounds; no
// hypothesis is assumed or tested.
inline std::vector<std::pair<std::string, double>> conditional_diagnostics(
    double T, const AreaReport& report) {
    std::vector<std::pair<std::string, double>> out;
    for (const double eps : {0.1, 0.01}) {
        const double denom = std::pow(T, 1.0 - eps);
        std::ostringstream kp, km;
        kp << "m_plus/T^" << 1.0 - eps;
        km << "m_minus/T^" << 1.0 - eps;
        out.emplace_back(kp.str(), report.m_plus / denom);
        out.emplace_back(km.str(), report.m_minus / denom);
    }
    const double expo = 1.0 - 1.0 / std::log(std::log(T));
    const double denom = std::pow(T, expo);
    out.emplace_back("m_plus/T^(1-1/lnlnT)", report.m_plus / denom);
    out.emplace_back("m_minus/T^(1-1/lnlnT)", report.m_minus / denom);
    return out;
}

}  // namespace zetaline
