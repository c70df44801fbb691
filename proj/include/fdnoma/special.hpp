#pragma once

namespace fdnoma {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Exponential integral E1(x) = int_x^inf e^-t / t dt for x > 0.
/// Power series below 1, Lentz continued fraction above.
/// Throws NumericError(kDomain) for x <= 0 or NaN.
double exp_integral_e1(double x);

/// Ergodic capacity E[log2(1 + snr |h|^2)] of a unit-power Rayleigh link,
/// e^(1/snr) E1(1/snr) / ln 2.
double rayleigh_ergodic_capacity(double snr_linear);

}  // namespace fdnoma
