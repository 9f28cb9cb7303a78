#pragma once

#include <cmath>

#include "geophase/errors.hpp"

namespace geophase {

namespace detail {

inline constexpr double sqrt_pi = 1.7724538509055160273;

// Maclaurin series, reliable for |x| <= 2 (alternating terms stay O(10)).
inline double erf_series(double x) {
  double sum = 0.0;
  double term = x;
  const double x2 = x * x;
  for (int n = 0; n < 80; ++n) {
    sum += term / (2 * n + 1);
    term *= -x2 / (n + 1);
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return 2.0 / sqrt_pi * sum;
}

// Continued fraction  erfcx(x) = 1/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated bottom-up; rapidly convergent for x >= 2.
inline double erfcx_cf(double x) {
  double f = 0.0;
  for (int k = 72; k >= 1; --k) f = (0.5 * k) / (x + f);
  return 1.0 / (sqrt_pi * (x + f));
}

} // namespace detail

inline double erf(double x) {
  if (x < 0.0) return -erf(-x);
  if (x <= 2.0) return detail::erf_series(x);
  // erfc(x) = erfcx(x) e^{-x^2}
  return 1.0 - detail::erfcx_cf(x) * std::exp(-x * x);
}

inline double erfc(double x) {
  if (x < 0.0) return 2.0 - erfc(-x);
  if (x <= 2.0) return 1.0 - detail::erf_series(x);
  return detail::erfcx_cf(x) * std::exp(-x * x);
}

// e^{x^2} erfc(x), computed without forming e^{x^2} for large x.
inline double erfcx(double x) {
  if (x >= 2.0) return detail::erfcx_cf(x);
  if (x >= 0.0) return std::exp(x * x) * (1.0 - detail::erf_series(x));
  return 2.0 * std::exp(x * x) - erfcx(-x);
}

struct ErfGamma {
  double erf_value = 0.0;
  double gamma_value = 0.0;
};

// The pair (Erf(x), gamma(x)) with gamma(x) = sqrt(pi) x e^{x^2}(1 - Erf(x)),
// the long-time polarization plateau of the weak-bath regime.  gamma is
// formed from erfcx so it stays finite for arbitrarily large x.
inline ErfGamma erf_and_gamma(double x) {
  if (x < 0.0) throw Error("erf_and_gamma: x must be non-negative");
  return {erf(x), detail::sqrt_pi * x * erfcx(x)};
}

} // namespace geophase
