#pragma once

#include <cmath>
#include <sstream>
#include <utility>

#include "zetaline/errors.hpp"

namespace zetaline {

struct RootOptions {
    double rel_tol = 1e-12;
    double abs_tol = 0.0;  // additional absolute floor on the bracket width
    int max_iter = 200;
};

// Bracketed bisection/secant hybrid.  f(lo) and f(hi) must have opposite
// signs; converges to |hi - lo| <= rel_tol * |x| + abs_tol.
template <class F>
double find_root(F&& f, double lo, double hi, const RootOptions& opt = {}) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0)) {
        std::ostringstream msg;
        msg << "find_root: no sign change on bracket [" << lo << ", " << hi
            << "] (f = " << flo << ", " << fhi << ")";
        throw convergence_error(msg.str());
    }

    double x = lo;
    for (int i = 0; i < opt.max_iter; ++i) {
        const double width = hi - lo;
        const double tol = opt.rel_tol * std::max(std::abs(lo), std::abs(hi)) + opt.abs_tol;
        if (width <= tol) return 0.5 * (lo + hi);

        // Secant step from the bracket endpoints, guarded by bisection.
        double cand = lo - flo * width / (fhi - flo);
        const double margin = 0.01 * width;
        if (!(cand > lo + margin && cand < hi - margin) || (i % 3 == 2))
            cand = 0.5 * (lo + hi);

        const double fc = f(cand);
        if (fc == 0.0) return cand;
        if ((fc < 0.0) == (flo < 0.0)) {
            lo = cand;
            flo = fc;
        } else {
            hi = cand;
            fhi = fc;
        }
        x = cand;
    }
    std::ostringstream msg;
    msg << "find_root: no convergence after " << opt.max_iter
        << " iterations, bracket [" << lo << ", " << hi << "], last x = " << x;
    throw convergence_error(msg.str());
}

}  // namespace zetaline
