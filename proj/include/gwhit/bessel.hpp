// SPDX-License-Identifier: MIT
//
// Modified Bessel functions I_nu, K_nu for complex order and positive real
// argument, with the derivative recurrences registered for jet composition
// and the second-order ODE residual used by all certification drivers.
//
// K_nu is computed on three branches:
//   x <= 2      : (pi/2) (I_{-nu} - I_nu) / sin(pi nu), unless nu is close
//                 to an integer (|sin pi nu| < 0.05), in which case the
//                 integral branch below takes over;
//   2 < x <= 30 : integral of exp(-x cosh t) cosh(nu t) over t >= 0 by the
//                 trapezoid rule; the integrand extends to an even entire
//                 function of t, so equidistant trapezoid sums converge
//                 geometrically in 1/h (h = 1/32 is far past double
//                 precision); long double carries the e^{-750} tail cutoff;
//   x > 30      : the standard asymptotic series sqrt(pi/2x) e^{-x}
//                 sum a_k(nu) x^{-k}, truncated at its smallest term.

#pragma once

#include <cmath>
#include <complex>

#include "gwhit/common.hpp"
#include "gwhit/gamma.hpp"
#include "gwhit/jets.hpp"

namespace gwhit {

namespace detail {

using cplxl = std::complex<long double>;

inline cplxl to_l(cplx z) {
  return {static_cast<long double>(z.real()), static_cast<long double>(z.imag())};
}
inline cplx to_d(cplxl z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// ascending series sum_m (x/2)^{nu+2m} / (m! Gamma(nu+m+1))
inline cplxl bessel_I_series(cplxl nu, long double x) {
  if (x == 0.0L) {
    if (nu == cplxl(0.0L)) return 1.0L;
    if (nu.real() > 0.0L) return 0.0L;
    throw numeric_error("bessel_I: x = 0 needs Re nu >= 0");
  }
  const cplxl lead = std::exp(nu * std::log(x / 2.0L) - log_gamma_l(nu + 1.0L));
  const long double q = x * x / 4.0L;
  cplxl term = lead, sum = lead;
  for (int m = 0; m < 500; ++m) {
    term *= q / ((m + 1.0L) * (nu + static_cast<long double>(m) + 1.0L));
    sum += term;
    if (std::abs(term) < 1e-22L * std::abs(sum)) return sum;
  }
  throw numeric_error("bessel_I: series did not converge");
}

// trapezoid over the even entire integrand exp(-x cosh t) cosh(nu t)
inline cplxl bessel_K_cosh_integral(cplxl nu, long double x) {
  const long double h = 1.0L / 32.0L;
  const long double tmax = std::acosh(750.0L / x) + 1.0L;
  cplxl sum = 0.5L * std::exp(cplxl(-x));  // t = 0 term, cosh(0) = 1
  for (long double t = h; t <= tmax; t += h)
    sum += std::exp(-x * std::cosh(t)) * std::cosh(nu * t);
  return sum * h;
}

inline cplxl bessel_K_combination(cplxl nu, long double x) {
  const long double pil = 3.141592653589793238462643383279502884L;
  const cplxl s = std::sin(pil * nu);
  return pil / 2.0L * (bessel_I_series(-nu, x) - bessel_I_series(nu, x)) / s;
}

inline cplxl bessel_K_asymptotic(cplxl nu, long double x) {
  const long double pil = 3.141592653589793238462643383279502884L;
  const cplxl fournu2 = 4.0L * nu * nu;
  cplxl term = 1.0L, sum = 1.0L;
  long double prev = 1e30L;
  for (int k = 1; k <= 30; ++k) {
    const long double odd = 2.0L * k - 1.0L;
    term *= (fournu2 - odd * odd) / (8.0L * k * x);
    const long double mag = std::abs(term);
    if (mag > prev) break;  // past the smallest term: stop before divergence
    sum += term;
    prev = mag;
    if (mag < 1e-22L * std::abs(sum)) break;
  }
  return std::sqrt(pil / (2.0L * x)) * std::exp(-x) * sum;
}

inline cplxl bessel_K_l(cplxl nu, long double x) {
  if (x > 30.0L) return bessel_K_asymptotic(nu, x);
  if (x > 2.0L) return bessel_K_cosh_integral(nu, x);
  const long double pil = 3.141592653589793238462643383279502884L;
  if (std::abs(std::sin(pil * nu)) < 0.05L)  // near-integer order: avoid the 1/sin blowup
    return bessel_K_cosh_integral(nu, x);
  return bessel_K_combination(nu, x);
}

}  // namespace detail

inline cplx bessel_I(cplx nu, double x) {
  if (x < 0.0) throw config_error("bessel_I: argument must be nonnegative");
  if (x > 700.0) throw numeric_error("bessel_I: overflow; scaled representation not implemented");
  return detail::to_d(detail::bessel_I_series(detail::to_l(nu), x));
}

inline cplx bessel_K(cplx nu, double x) {
  if (x <= 0.0) throw config_error("bessel_K: argument must be positive");
  return detail::to_d(detail::bessel_K_l(detail::to_l(nu), x));
}

// derivative recurrences: I' = (I_{nu-1} + I_{nu+1})/2, K' = -(K_{nu-1} + K_{nu+1})/2
inline cplx bessel_I_d(cplx nu, double x) {
  return 0.5 * (bessel_I(nu - 1.0, x) + bessel_I(nu + 1.0, x));
}
inline cplx bessel_I_dd(cplx nu, double x) {
  return 0.25 * (bessel_I(nu - 2.0, x) + 2.0 * bessel_I(nu, x) + bessel_I(nu + 2.0, x));
}
inline cplx bessel_K_d(cplx nu, double x) {
  return -0.5 * (bessel_K(nu - 1.0, x) + bessel_K(nu + 1.0, x));
}
inline cplx bessel_K_dd(cplx nu, double x) {
  return 0.25 * (bessel_K(nu - 2.0, x) + 2.0 * bessel_K(nu, x) + bessel_K(nu + 2.0, x));
}

// jet composition through the argument (x must carry a real positive value)
template <int N>
Jet2<cplx, N> bessel_I_jet(cplx nu, const Jet2<cplx, N>& x) {
  const double xv = x.v.real();
  return compose1(x, bessel_I(nu, xv), bessel_I_d(nu, xv), bessel_I_dd(nu, xv));
}
template <int N>
Jet2<cplx, N> bessel_K_jet(cplx nu, const Jet2<cplx, N>& x) {
  const double xv = x.v.real();
  return compose1(x, bessel_K(nu, xv), bessel_K_d(nu, xv), bessel_K_dd(nu, xv));
}

// residual of  [d^2/dx^2 + (1/x) d/dx - (1 + nu^2/x^2)] f  at x; f is any
// callable mapping a one-variable jet seed to its jet
template <class F>
cplx mb_ode_residual(cplx nu, F&& f, double x) {
  using J1 = Jet2<cplx, 1>;
  const J1 jf = f(J1::linear_var(cplx(x), 0));
  return jf.h[0] + jf.g[0] / x - (1.0 + nu * nu / (x * x)) * jf.v;
}

}  // namespace gwhit
