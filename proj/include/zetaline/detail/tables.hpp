#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace zetaline::detail {

// B_{2k}/(2k)! for the Euler-Maclaurin tail, k = 1..28.
inline constexpr std::array<double, 28> kBernoulliOverFactorial = {
    0.0833333333333333333,     // B_2/2!
    -0.00138888888888888889,   // B_4/4!
    0.0000330687830687830688,  // B_6/6!
    -8.26719576719576720e-7,   // B_8/8!
    2.08767569878680990e-8,    // B_10/10!
    -5.28419013868749318e-10,  // B_12/12!
    1.33825365306846788e-11,   // B_14/14!
    -3.38968029632258287e-13,  // B_16/16!
    8.58606205627784456e-15,   // B_18/18!
    -2.17486869855806187e-16,  // B_20/20!
    5.50900282836022952e-18,   // B_22/22!
    -1.39544646858125233e-19,  // B_24/24!
    3.53470703962946747e-21,   // B_26/26!
    -8.95351742703754685e-23,  // B_28/28!
    2.26795245233768306e-24,   // B_30/30!
    -5.74479066887220245e-26,  // B_32/32!
    1.45517247561486490e-27,   // B_34/34!
    -3.68599494066531018e-29,  // B_36/36!
    9.33673425709504467e-31,   // B_38/38!
    -2.36502241570062993e-32,  // B_40/40!
    5.99067176248213430e-34,   // B_42/42!
    -1.51745488446829026e-35,  // B_44/44!
    3.84375812545418823e-37,   // B_46/46!
    -9.73635307264669104e-39,  // B_48/48!
    2.46624704420068096e-40,   // B_50/50!
    -6.24707674182074369e-42,  // B_52/52!
    1.58240302446449143e-43,   // B_54/54!
    -4.00827368594893597e-45,  // B_56/56!
};

// log n and 1/sqrt(n) for the main sums.  Sized for t up to ~1.6e9 in the
// Riemann-Siegel branch; larger n falls back to libm.
class LogSqrtTable {
  public:
    static const LogSqrtTable& instance() {
        static const LogSqrtTable table;
        return table;
    }

    double log(std::size_t n) const {
        return n < size_ ? log_[n] : std::log(static_cast<double>(n));
    }
    double rsqrt(std::size_t n) const {
        return n < size_ ? rsqrt_[n] : 1.0 / std::sqrt(static_cast<double>(n));
    }

  private:
    static constexpr std::size_t size_ = 16384;

    LogSqrtTable() : log_(size_), rsqrt_(size_) {
        log_[0] = 0.0;
        rsqrt_[0] = 0.0;
        for (std::size_t n = 1; n < size_; ++n) {
            log_[n] = std::log(static_cast<double>(n));
            rsqrt_[n] = 1.0 / std::sqrt(static_cast<double>(n));
        }
    }

    std::vector<double> log_;
    std::vector<double> rsqrt_;
};

}  // namespace zetaline::detail
