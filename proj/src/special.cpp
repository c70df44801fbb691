#include "fdnoma/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fdnoma/errors.hpp"

namespace fdnoma {

namespace {

constexpr int kMaxIterations = 500;
constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

double e1_series(double x) {
  // E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
  double sum = 0.0;
  double term = 1.0;  // (-x)^k / k!
  for (int k = 1; k <= kMaxIterations; ++k) {
    term *= -x / k;
    const double contribution = term / k;
    sum += contribution;
    if (std::abs(contribution) < kEpsilon * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(x) - sum;
}

// e^x E1(x) for x >= 1. Modified Lentz on
// E1(x) = e^-x / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...))).
double e1_scaled_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < kEpsilon) break;
  }
  return h;
}

}  // namespace

double exp_integral_e1(double x) {
  if (!(x > 0.0)) {
    throw NumericError(NumericErrorKind::kDomain,
                       "exp_integral_e1: domain error, x = " + std::to_string(x));
  }
  if (std::isinf(x)) return 0.0;
  return x < 1.0 ? e1_series(x) : e1_scaled_continued_fraction(x) * std::exp(-x);
}

double rayleigh_ergodic_capacity(double snr_linear) {
  if (!(snr_linear > 0.0) || !std::isfinite(snr_linear)) {
    throw ValidationError("rayleigh_ergodic_capacity: snr must be positive and finite");
  }
  const double inv = 1.0 / snr_linear;
  // Keep e^inv E1(inv) as one factor; the two parts over/underflow apart.
  if (inv >= 1.0) return e1_scaled_continued_fraction(inv) / std::numbers::ln2;
  return std::exp(inv) * exp_integral_e1(inv) / std::numbers::ln2;
}

}  // namespace fdnoma
