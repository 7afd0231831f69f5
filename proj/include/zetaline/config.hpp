#pragma once

#include <stdexcept>

namespace zetaline {

// Precision/order knobs for a single Z(t) evaluation.
//
//   rs_correction_order  number of Riemann-Siegel remainder terms C0..C3
//                        included (0..4); with k terms the remainder is
//                        O((t/2pi)^{-(2k+1)/4})
//   em_threshold         below this t, Z is evaluated through zeta by
//                        Euler-Maclaurin instead of Riemann-Siegel
//   em_terms             floor on the Euler-Maclaurin main-sum length
//                        (the effective length grows with t)
//   target_abs_error     absolute error goal for one evaluation
struct EvalConfig {
    int rs_correction_order = 2;
    double em_threshold = 30.0;
    int em_terms = 50;
    double target_abs_error = 1e-6;

    void validate() const {
        if (rs_correction_order < 0 || rs_correction_order > 4)
            throw std::invalid_argument("EvalConfig: rs_correction_order must be in [0, 4]");
        if (!(em_threshold >= 10.0))
            throw std::invalid_argument("EvalConfig: em_threshold must be >= 10");
        if (em_terms < 10)
            throw std::invalid_argument("EvalConfig: em_terms must be >= 10");
        if (!(target_abs_error > 0.0))
            throw std::invalid_argument("EvalConfig: target_abs_error must be > 0");
    }
};

}  // namespace zetaline
