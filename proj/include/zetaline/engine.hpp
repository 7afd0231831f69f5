#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "zetaline/checkpoint.hpp"
#include "zetaline/config.hpp"
#include "zetaline/errors.hpp"
#include "zetaline/hardy_z.hpp"
#include "zetaline/ladder.hpp"
#include "zetaline/oscillation.hpp"
#include "zetaline/quad.hpp"

namespace zetaline {

namespace detail {

// Per-panel moments of f^2 about the panel's left edge.  Lets the
// exponentially weighted integral int f^2 e^{-2 delta t} dt be re-evaluated
// for many delta values from one sweep of f: within a panel the weight is
// expanded to second order about the left edge, which is accurate to
// ~(2 delta w)^3 relative (w ~ 0.2-0.8 here, delta ~ 1/x ~ 1e-4).
template <class F>
class WeightedProfileCache {
  public:
    WeightedProfileCache(F f, const QuadOptions& opt) : f_(std::move(f)), opt_(opt) {}

    void extend_to(double t_max) {
        const auto& gl = GaussLegendre15::instance();
        while (frontier_ < t_max) {
            const double a = frontier_;
            const double b = std::min(t_max, a + panel_width(a));
            Panel pan{};
            pan.a = a;
            pan.w = b - a;
            double whole = 0.0;
            {
                const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
                for (int i = 0; i < 15; ++i) {
                    const double t = mid + half * gl.x[i];
                    const Sample s = f_(t);
                    whole += gl.w[i] * half * s.value * s.value;
                }
            }
            for (int hseg = 0; hseg < 2; ++hseg) {
                const double ha = hseg == 0 ? a : 0.5 * (a + b);
                const double hb = hseg == 0 ? 0.5 * (a + b) : b;
                const double mid = 0.5 * (ha + hb), half = 0.5 * (hb - ha);
                for (int i = 0; i < 15; ++i) {
                    const double t = mid + half * gl.x[i];
                    const Sample s = f_(t);
                    const double sq = s.value * s.value;
                    max_sq_ = std::max(max_sq_, sq);
                    const double dt = t - a;
                    pan.m0 += gl.w[i] * half * sq;
                    pan.m1 += gl.w[i] * half * sq * dt;
                    pan.m2 += gl.w[i] * half * sq * dt * dt;
                }
            }
            pan.err0 = std::abs(whole - pan.m0);
            panels_.push_back(pan);
            frontier_ = b;
        }
    }

    double frontier() const { return frontier_; }
    double max_sq() const { return max_sq_; }

    // int_0^min(upper, frontier) f^2 e^{-2 delta t} dt with an error
    // estimate covering the in-panel expansion, panel quadrature, and the
    // tail beyond the cached range.
    QuadResult value(double delta, double upper) const {
        QuadResult out;
        const double d2 = 2.0 * delta;
        for (const auto& pan : panels_) {
            if (pan.a >= upper) break;
            const double w = std::exp(-d2 * pan.a);
            out.value += w * (pan.m0 - d2 * pan.m1 + 0.5 * d2 * d2 * pan.m2);
            // omitted cubic term: (2 delta)^3/6 * m3, m3 <= w_panel * m2
            out.est_error += w * (pan.err0 + d2 * d2 * d2 / 6.0 * pan.w * std::abs(pan.m2));
            out.panels += 1;
        }
        const double cut = std::min(upper, frontier_);
        out.est_error += (2.0 * max_sq_ + 50.0 * std::cbrt(std::max(cut, 1.0))) *
                         std::exp(-d2 * cut) / d2;
        return out;
    }

  private:
    struct Panel {
        double a = 0.0, w = 0.0, m0 = 0.0, m1 = 0.0, m2 = 0.0, err0 = 0.0;
    };

    F f_;
    QuadOptions opt_;
    std::vector<Panel> panels_;
    double frontier_ = 0.0;
    double max_sq_ = 0.0;
};

}  // namespace detail

// Solution of the nonlinear integral equation for the ladder parameter x:
//   int_0^{mu(x)} Z^2 e^{-2t/x} dt = I2(T),  mu(x) = mu_coeff * x ln x.
struct LadderParameterSolution {
    double x = 0.0;
    double mu_x = 0.0;
    double residual_est = 0.0;  // quadrature error bound at the root
    double phi = 0.0;           // ladder value at the same T, for comparison
};

// One row of the sweep table.
struct SweepRow {
    double T = 0.0;
    double i2 = 0.0;
    double i4 = 0.0;
    double phi = 0.0;
    double sigma = 0.0;
    double sigma1 = 0.0;
    double m_plus = 0.0;
    double m_minus = 0.0;
    double diff_moser = 0.0;
    double diff_bala = 0.0;
    double eta1 = 0.0;
    double eta2 = 0.0;
    double eta_gap_over_ln3T = 0.0;
    double fourth_moment_ratio = 0.0;
};

inline const char* sweep_csv_header() {
    return "T,i2,i4,phi,sigma,sigma1,m_plus,m_minus,diff_moser,diff_bala,eta1,eta2,"
           "eta_gap_over_ln3T,fourth_moment_ratio";
}

// Shared state for a session: configuration plus the monotone prefix
// sweeper.  All report/ladder queries must come in nondecreasing T order
// (the prefix frontier only advances).
class Workspace {
  public:
    explicit Workspace(const EvalConfig& cfg = {}, const QuadOptions& opt = {}, double c0 = 0.0)
        : cfg_(cfg), opt_(opt), c0_(c0), sweep_(make_z_sweeper(cfg, opt)) {}

    const EvalConfig& eval_config() const { return cfg_; }
    const QuadOptions& quad_options() const { return opt_; }
    double c0() const { return c0_; }
    std::uint64_t cfg_hash() const { return config_hash(cfg_, opt_); }
    const SweepCheckpoint& checkpoint() const { return sweep_.state(); }
    void restore(const SweepCheckpoint& c) { sweep_.restore(c); }

    QuadResult z2_prefix(double T) { return sweep_.z2_prefix(T); }
    QuadResult z4_prefix(double T) { return sweep_.z4_prefix(T); }
    double worst_excess() const { return sweep_.worst_excess(); }
    std::pair<double, double> worst_panel() const { return sweep_.worst_panel(); }

    QuadResult weighted_z2(double upper, double delta) {
        return weighted_square_integral(ZSampler{cfg_}, upper, delta, opt_);
    }

    LadderPoint ladder_at(double T) { return solve_phi(T, z2_prefix(T).value, c0_); }

    // weighted_z2(mu_of_x, 1/x) - z2_prefix(T); vanishes when (x, mu[x])
    // solves the integral equation.
    double integral_equation_residual(double T, double x, double mu_of_x) {
        if (!(x > 0.0) || !(mu_of_x > 0.0))
            throw std::domain_error("integral_equation_residual: x and mu must be > 0");
        const double i2 = z2_prefix(T).value;
        return weighted_z2(mu_of_x, 1.0 / x).value - i2;
    }

    // Bracketed solve for x with mu(x) = mu_coeff * x ln x, seeded at phi(T)
    // (the same leading-order equation).  Uses the moment cache so the
    // weighted integral can be re-evaluated per iteration at negligible cost.
    LadderParameterSolution solve_ladder_parameter(double T, double mu_coeff = 7.0) {
        const double i2 = z2_prefix(T).value;
        const LadderPoint pt = solve_phi(T, i2, 0.0);

        detail::WeightedProfileCache<ZSampler> cache(ZSampler{cfg_}, opt_);
        double lo = 0.95 * pt.phi, hi = 1.05 * pt.phi;
        cache.extend_to(5.0 * hi);
        auto residual = [&](double x) {
            const double mu = mu_coeff * x * std::log(x);
            return cache.value(1.0 / x, mu).value - i2;
        };
        for (int i = 0; i < 24 && residual(lo) > 0.0; ++i) lo *= 0.9;
        for (int i = 0; i < 24 && residual(hi) < 0.0; ++i) {
            hi *= 1.1;
            cache.extend_to(5.0 * hi);
        }

        RootOptions ropt;
        ropt.rel_tol = 1e-7;
        LadderParameterSolution sol;
        sol.x = find_root(residual, lo, hi, ropt);
        sol.mu_x = mu_coeff * sol.x * std::log(sol.x);
        sol.residual_est = cache.value(1.0 / sol.x, sol.mu_x).est_error;
        sol.phi = pt.phi;
        return sol;
    }

    std::vector<TkaReport> tka_check(const std::vector<double>& deltas) {
        std::vector<TkaReport> out;
        out.reserve(deltas.size());
        for (const double d : deltas) {
            TkaReport r;
            r.delta = d;
            r.rhs_main = tka_main_term(d);  // validates the delta range
            r.lhs = weighted_z2(20.0 / d, d).value;
            r.diff = r.lhs - r.rhs_main;
            out.push_back(r);
        }
        const double c0 = tka_c0_extrapolate(out);
        for (auto& r : out) r.c0_estimate = c0;
        return out;
    }

    SignDecomposition decompose_sign_sets(double T, double sigma_level) {
        if (!(T >= 10.0)) throw std::domain_error("decompose_sign_sets: T must be >= 10");
        return decompose_level_crossings(ZSampler{cfg_}, T, sigma_level, grid_);
    }

    double level_for(double T, LevelMode mode, double explicit_level = 0.0) {
        switch (mode) {
            case LevelMode::moser: return ladder_at(T).sigma;
            case LevelMode::balasubramanian: return sigma_balasubramanian(T);
            case LevelMode::explicit_level: return explicit_level;
        }
        throw std::invalid_argument("level_for: bad mode");
    }

    AreaReport area_balance_report(double T, LevelMode mode, double explicit_level = 0.0) {
        if (!(T >= 10.0)) throw std::domain_error("area_balance_report: T must be >= 10");
        const double level = level_for(T, mode, explicit_level);
        const QuadResult r2 = z2_prefix(T);
        const QuadResult r4 = z4_prefix(T);
        return assemble_area_report(ZSampler{cfg_}, T, mode, level, r2.value, r4.value,
                                    r2.est_error, r4.est_error, opt_, grid_);
    }

    double fourth_moment_check(double T) { return fourth_moment_ratio(z4_prefix(T).value, T); }

    SweepRow sweep_row(double T) {
        const AreaReport rep = area_balance_report(T, LevelMode::moser);
        const LadderPoint pt = solve_phi(T, rep.i2, c0_);
        SweepRow row;
        row.T = T;
        row.i2 = rep.i2;
        row.i4 = rep.i4;
        row.phi = pt.phi;
        row.sigma = pt.sigma;
        row.sigma1 = pt.sigma1;
        row.m_plus = rep.m_plus;
        row.m_minus = rep.m_minus;
        row.diff_moser = rep.diff;
        row.diff_bala = rep.i2 - T * pt.sigma1;
        row.eta1 = rep.eta1.value_or(std::nan(""));
        row.eta2 = rep.eta2.value_or(std::nan(""));
        const double ln3 = std::pow(std::log(T), 3.0);
        row.eta_gap_over_ln3T =
            (rep.eta1 && rep.eta2) ? (*rep.eta1 - *rep.eta2) / ln3 : std::nan("");
        row.fourth_moment_ratio = fourth_moment_ratio(rep.i4, T);
        return row;
    }

  private:
    EvalConfig cfg_;
    QuadOptions opt_;
    double c0_;
    ZPrefixSweeper sweep_;
    CrossingGridOptions grid_;
};

}  // namespace zetaline
