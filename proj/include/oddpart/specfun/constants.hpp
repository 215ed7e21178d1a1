#pragma once

namespace oddpart::specfun {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kLn2 = 0.69314718055994530941723212145817657;

// Euler's constant and the first Stieltjes constants.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kStieltjes1 = -0.07281584548367672486058637587490131;
inline constexpr double kStieltjes2 = -0.00969036319287231848453038603521253;

}  // namespace oddpart::specfun
