#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "zetaline/config.hpp"
#include "zetaline/constants.hpp"
#include "zetaline/errors.hpp"
#include "zetaline/hardy_z.hpp"
#include "zetaline/theta.hpp"

namespace zetaline {

struct QuadOptions {
    double rel_tol = 1e-8;           // prefix integrals
    double rel_tol_weighted = 1e-6;  // exponentially weighted integrals
    double abs_floor = 1e-14;
    int max_depth = 14;

    void validate() const {
        if (!(rel_tol > 0.0) || !(rel_tol_weighted > 0.0))
            throw std::invalid_argument("QuadOptions: tolerances must be > 0");
    }
};

struct QuadResult {
    double value = 0.0;
    double est_error = 0.0;
    long panels = 0;
    long evals = 0;
};

namespace detail {

// 15-point Gauss-Legendre nodes/weights on [-1, 1], by Newton iteration on
// P_15 (computed once).
struct GaussLegendre15 {
    std::array<double, 15> x{};
    std::array<double, 15> w{};

    static const GaussLegendre15& instance() {
        static const GaussLegendre15 g;
        return g;
    }

  private:
    GaussLegendre15() {
        constexpr int n = 15;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double xi = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = xi;
                for (int j = 2; j <= n; ++j) {
                    const double p2 = ((2.0 * j - 1.0) * xi * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
                const double dx = p1 / dp;
                xi -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            x[i] = -xi;
            x[n - 1 - i] = xi;
            w[i] = w[n - 1 - i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
        }
    }
};

// Panel width rule: width <= oscillation_scale(panel right edge)/4.  The
// scale is decreasing, so taking the rule value one tentative width ahead
// of `start` guarantees the bound at the actual right edge.
inline double panel_width(double start) {
    const double w0 = oscillation_scale_clamped(start) / 4.0;
    return oscillation_scale_clamped(start + w0) / 4.0;
}

// One GL15 pass over [a, b]; g(t) -> {Sample, Sample} (two integrand lanes
// sharing each evaluation).  Adds w*value to val[], w*|err| to model_err[].
template <class G>
inline void gl15_pass(G& g, double a, double b, double* val, double* model_err) {
    const auto& gl = GaussLegendre15::instance();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double v0 = 0.0, v1 = 0.0, m0 = 0.0, m1 = 0.0;
    for (int i = 0; i < 15; ++i) {
        const auto s = g(mid + half * gl.x[i]);
        v0 += gl.w[i] * s[0].value;
        v1 += gl.w[i] * s[1].value;
        m0 += gl.w[i] * std::abs(s[0].err);
        m1 += gl.w[i] * std::abs(s[1].err);
    }
    val[0] = half * v0;
    val[1] = half * v1;
    model_err[0] = half * m0;
    model_err[1] = half * m1;
}

// Recursive bisection refinement of one panel.  The committed value of a
// leaf is the two-half sum (one refinement level above the whole-panel
// estimate); the difference between the two is the leaf's error estimate.
struct PanelAccumulator {
    double value[2] = {0.0, 0.0};
    double panel_err[2] = {0.0, 0.0};
    double model_err[2] = {0.0, 0.0};
    long panels = 0;
    long evals = 0;
    // Worst leaf committed above its budget (depth/width floor hit).
    double worst_excess = 0.0;
    double worst_lo = 0.0;
    double worst_hi = 0.0;
};

template <class G>
inline void refine_panel(G& g, double a, double b, const double* budget, int depth,
                         int max_depth, PanelAccumulator& acc) {
    double whole[2], whole_m[2];
    gl15_pass(g, a, b, whole, whole_m);
    const double mid = 0.5 * (a + b);
    double left[2], left_m[2], right[2], right_m[2];
    gl15_pass(g, a, mid, left, left_m);
    gl15_pass(g, mid, b, right, right_m);
    acc.evals += 45;

    const double halves[2] = {left[0] + right[0], left[1] + right[1]};
    const double err[2] = {std::abs(whole[0] - halves[0]), std::abs(whole[1] - halves[1])};

    // The budget can be arbitrarily small before any value has accumulated;
    // a panel whose split-vs-whole discrepancy is at machine precision
    // relative to its own magnitude cannot be improved by subdividing.
    const double floor0 = 4e-15 * (std::abs(halves[0]) + std::abs(whole[0])) + 1e-18;
    const double floor1 = 4e-15 * (std::abs(halves[1]) + std::abs(whole[1])) + 1e-18;
    const bool converged =
        err[0] <= std::max(budget[0], floor0) && err[1] <= std::max(budget[1], floor1);
    const bool floor_hit = depth >= max_depth || (b - a) <= 1e-13 * std::max(1.0, std::abs(b));
    if (converged || floor_hit) {
        for (int i = 0; i < 2; ++i) {
            acc.value[i] += halves[i];
            acc.panel_err[i] += err[i];
            acc.model_err[i] += left_m[i] + right_m[i];
        }
        acc.panels += 1;
        if (!converged) {
            const double excess = std::max(err[0] - budget[0], err[1] - budget[1]);
            if (excess > acc.worst_excess) {
                acc.worst_excess = excess;
                acc.worst_lo = a;
                acc.worst_hi = b;
            }
        }
        return;
    }
    const double half_budget[2] = {0.5 * budget[0], 0.5 * budget[1]};
    refine_panel(g, a, mid, half_budget, depth + 1, max_depth, acc);
    refine_panel(g, mid, b, half_budget, depth + 1, max_depth, acc);
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace detail

// Record of the panel rule in force; part of the checkpoint fingerprint so
// stale checkpoints are rejected if the rule ever changes.
inline constexpr const char* kPanelWidthPolicy = "gl15-osc4-v1";

// Fingerprint of everything the panel decomposition and integrand depend on.
inline std::uint64_t config_hash(const EvalConfig& cfg, const QuadOptions& opt) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s|%d|%.17g|%d|%.17g|%.17g|%.17g|%.17g|%d",
                  kPanelWidthPolicy, cfg.rs_correction_order, cfg.em_threshold, cfg.em_terms,
                  cfg.target_abs_error, opt.rel_tol, opt.rel_tol_weighted, opt.abs_floor,
                  opt.max_depth);
    return detail::fnv1a64(buf);
}

// Resumable prefix-integral state: i2 and i4 are complete on [0, frontier].
struct SweepCheckpoint {
    double frontier = 0.0;
    double i2 = 0.0;
    double i4 = 0.0;
    double est_error_i2 = 0.0;
    double est_error_i4 = 0.0;
    const char* panel_width_policy = kPanelWidthPolicy;
    std::uint64_t cfg_hash = 0;  // covers the policy and every tolerance knob
};

// Accumulates I2(T) = int_0^T f(t)^2 dt and I4(T) = int_0^T f(t)^4 dt in a
// single left-to-right sweep.  F returns a Sample; both integrands share
// every evaluation.
//
// Panel boundaries form a canonical grid generated from t = 0 by the width
// rule, independent of where advance_to stops: a stop inside a panel splits
// that panel only, and the walk then rejoins the grid.  Committed in
// ascending order, the sweep is bit-reproducible for a fixed configuration
// and stop sequence, and a resumed run replays the grid exactly.
template <class F>
class PrefixSweeper {
  public:
    PrefixSweeper(F f, const QuadOptions& opt, std::uint64_t cfg_hash)
        : f_(std::move(f)), opt_(opt) {
        opt_.validate();
        state_.cfg_hash = cfg_hash;
        next_boundary_ = detail::panel_width(0.0);
    }

    const SweepCheckpoint& state() const { return state_; }
    long panels() const { return panels_; }
    long evals() const { return evals_; }

    // Resume from a previously saved checkpoint; the fingerprint must match.
    // The canonical grid is replayed up to the saved frontier.
    void restore(const SweepCheckpoint& c) {
        if (c.cfg_hash != state_.cfg_hash)
            throw checkpoint_error("PrefixSweeper: checkpoint cfg_hash does not match configuration");
        if (!(c.frontier >= 0.0) || c.i2 < 0.0 || c.i4 < 0.0)
            throw checkpoint_error("PrefixSweeper: corrupt checkpoint state");
        state_ = c;
        canonical_index_ = 0;
        next_boundary_ = detail::panel_width(0.0);
        // <= so a frontier sitting exactly on a boundary replays the
        // post-completion state (boundary already bumped).
        while (next_boundary_ <= c.frontier) {
            next_boundary_ += detail::panel_width(next_boundary_);
            ++canonical_index_;
        }
    }

    // Worst leaf panel committed above its error budget (depth floor hit);
    // zero when every panel met its tolerance.
    double worst_excess() const { return worst_excess_; }
    std::pair<double, double> worst_panel() const { return {worst_lo_, worst_hi_}; }

    // int_0^T f^2, advancing the shared frontier (requires T >= frontier).
    QuadResult z2_prefix(double T) {
        advance_to(T);
        return {state_.i2, state_.est_error_i2, panels_, evals_};
    }

    // int_0^T f^4, advancing the shared frontier.
    QuadResult z4_prefix(double T) {
        advance_to(T);
        return {state_.i4, state_.est_error_i4, panels_, evals_};
    }

    void advance_to(double T) {
        if (T < state_.frontier * (1.0 - 1e-15) - 1e-12)
            throw std::domain_error("PrefixSweeper: T must be >= checkpoint frontier");
        auto g = [this](double t) -> std::array<Sample, 2> {
            const Sample s = f_(t);
            const double sq = s.value * s.value;
            const double mag = std::abs(s.value);
            return {{{sq, 2.0 * mag * s.err}, {sq * sq, 4.0 * mag * mag * mag * s.err}}};
        };
        while (state_.frontier < T) {
            const double a = state_.frontier;
            const double b = std::min(T, next_boundary_);
            const double k = static_cast<double>(canonical_index_ + 1);
            const double budget[2] = {
                opt_.rel_tol * std::max(std::abs(state_.i2), opt_.abs_floor) / k,
                opt_.rel_tol * std::max(std::abs(state_.i4), opt_.abs_floor) / k};
            detail::PanelAccumulator acc;
            detail::refine_panel(g, a, b, budget, 0, opt_.max_depth, acc);
            state_.i2 += acc.value[0];
            state_.i4 += acc.value[1];
            state_.est_error_i2 += acc.panel_err[0] + acc.model_err[0];
            state_.est_error_i4 += acc.panel_err[1] + acc.model_err[1];
            panels_ += acc.panels;
            evals_ += acc.evals;
            if (acc.worst_excess > worst_excess_) {
                worst_excess_ = acc.worst_excess;
                worst_lo_ = acc.worst_lo;
                worst_hi_ = acc.worst_hi;
            }
            state_.frontier = b;
            if (state_.frontier == next_boundary_) {
                next_boundary_ += detail::panel_width(next_boundary_);
                ++canonical_index_;
            }
        }
    }

  private:
    F f_;
    QuadOptions opt_;
    SweepCheckpoint state_;
    double next_boundary_ = 0.0;
    long canonical_index_ = 0;
    long panels_ = 0;
    long evals_ = 0;
    double worst_excess_ = 0.0;
    double worst_lo_ = 0.0;
    double worst_hi_ = 0.0;
};

using ZPrefixSweeper = PrefixSweeper<ZSampler>;

inline ZPrefixSweeper make_z_sweeper(const EvalConfig& cfg, const QuadOptions& opt) {
    cfg.validate();
    return ZPrefixSweeper(ZSampler{cfg}, opt, config_hash(cfg, opt));
}

// Adaptive integral of a scalar integrand over [a, b] with the same panel
// rule; g returns a Sample.
template <class G>
QuadResult integrate(G&& g, double a, double b, double rel_tol, const QuadOptions& opt = {}) {
    if (!(b >= a)) throw std::domain_error("integrate: b must be >= a");
    QuadResult out;
    auto vec = [&g](double t) -> std::array<Sample, 2> { return {g(t), Sample{}}; };
    double acc = 0.0;
    double t = a;
    long k = 0;
    while (t < b) {
        const double right = std::min(b, t + detail::panel_width(t));
        ++k;
        const double budget[2] = {
            rel_tol * std::max(std::abs(acc), opt.abs_floor) / static_cast<double>(k), 1e300};
        detail::PanelAccumulator pa;
        detail::refine_panel(vec, t, right, budget, 0, opt.max_depth, pa);
        acc += pa.value[0];
        out.est_error += pa.panel_err[0] + pa.model_err[0];
        out.panels += pa.panels;
        out.evals += pa.evals;
        t = right;
    }
    out.value = acc;
    return out;
}

// int_0^upper f(t)^2 e^{-2 delta t} dt.  Integration stops early once the
// remaining tail is provably below tolerance; the truncation bound (both
// for the early stop and for the tail beyond `upper`) is folded into
// est_error.
template <class F>
QuadResult weighted_square_integral(F&& f, double upper, double delta,
                                    const QuadOptions& opt = {}) {
    if (!(upper > 0.0)) throw std::domain_error("weighted_square_integral: upper must be > 0");
    if (!(delta > 0.0)) throw std::domain_error("weighted_square_integral: decay must be > 0");

    QuadResult out;
    double max_sq = 1.0;
    auto g = [&](double t) -> std::array<Sample, 2> {
        const Sample s = f(t);
        const double sq = s.value * s.value;
        max_sq = std::max(max_sq, sq);
        const double w = std::exp(-2.0 * delta * t);
        return {{{sq * w, 2.0 * std::abs(s.value) * s.err * w}, Sample{}}};
    };

    double acc = 0.0;
    double t = 0.0;
    long k = 0;
    double tail_bound = 0.0;
    while (t < upper) {
        const double right = std::min(upper, t + detail::panel_width(t));
        ++k;
        const double budget[2] = {
            opt.rel_tol_weighted * std::max(std::abs(acc), opt.abs_floor) / static_cast<double>(k),
            1e300};
        detail::PanelAccumulator pa;
        detail::refine_panel(g, t, right, budget, 0, opt.max_depth, pa);
        acc += pa.value[0];
        out.est_error += pa.panel_err[0] + pa.model_err[0];
        out.panels += pa.panels;
        out.evals += pa.evals;
        t = right;

        // Tail bound past t: |f|^2 <= 2*max_sq + 50 t^{1/3} (growth margin
        // over the largest square seen so far).
        const double cap = 2.0 * max_sq + 50.0 * std::cbrt(std::max(t, 1.0));
        tail_bound = cap * std::exp(-2.0 * delta * t) / (2.0 * delta);
        if (tail_bound < 0.05 * opt.rel_tol_weighted * std::abs(acc)) break;
    }
    out.value = acc;
    out.est_error += tail_bound;
    return out;
}

}  // namespace zetaline
