// SPDX-License-Identifier: MIT
//
// Complex log-gamma on the standard branch (real on the positive axis,
// continuous on C minus the negative real axis), via argument raising and
// the Stirling series with Bernoulli coefficients, evaluated in long double.
// This is the workhorse behind the Bessel series leading terms, the
// Mellin-Barnes integrand, and the difference-equation checks.

#pragma once

#include <cmath>
#include <complex>

#include "gwhit/common.hpp"

namespace gwhit {

namespace detail {

// B_{2n} / (2n (2n-1)) for n = 1..10
inline constexpr long double stirling_coeff[10] = {
    1.0L / 12.0L,
    -1.0L / 360.0L,
    1.0L / 1260.0L,
    -1.0L / 1680.0L,
    1.0L / 1188.0L,
    -691.0L / 360360.0L,
    1.0L / 156.0L,
    -3617.0L / 122400.0L,
    43867.0L / 244188.0L,
    -174611.0L / 125400.0L,
};

inline constexpr long double half_log_two_pi =
    0.918938533204672741780329736405617639862L;  // log(2 pi) / 2

// Core running in long double.  Raises the argument until the Stirling
// series is safely convergent (|z| >= 12 and away from the negative axis),
// subtracting principal logarithms; that recursion is exactly the branch
// rule of the standard log-gamma, so no winding bookkeeping is needed.
inline std::complex<long double> log_gamma_l(std::complex<long double> z) {
  std::complex<long double> shift(0.0L, 0.0L);
  while (std::abs(z) < 12.0L || z.real() < 0.5L) {
    shift += std::log(z);
    z += 1.0L;
  }
  const std::complex<long double> zinv = 1.0L / z;
  const std::complex<long double> zinv2 = zinv * zinv;
  std::complex<long double> series(0.0L, 0.0L);
  std::complex<long double> zpow = zinv;  // z^{-(2n-1)}
  for (const long double c : stirling_coeff) {
    series += c * zpow;
    zpow *= zinv2;
  }
  return (z - 0.5L) * std::log(z) - z + half_log_two_pi + series - shift;
}

}  // namespace detail

// log Gamma(z); throws on the poles at nonpositive integers.
inline cplx log_gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw numeric_error("log_gamma: pole at nonpositive integer");
  const auto r = detail::log_gamma_l({static_cast<long double>(z.real()),
                                      static_cast<long double>(z.imag())});
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

inline cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

}  // namespace gwhit
