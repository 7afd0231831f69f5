#pragma once

namespace zetaline {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLn2Pi = 1.83787706640934548356065947281123527;
inline constexpr double kLnPi = 1.14472988584940017414342735135305871;
// 2*pi*e and 2*pi*e^2: domain edge and saturation point of the
// oscillation-scale rule.
inline constexpr double kTwoPiE = 17.0794684453471341309271017390931489;
inline constexpr double kTwoPiE2 = 46.4268087147267744723006917920137650;

}  // namespace zetaline
