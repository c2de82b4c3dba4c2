// SPDX-License-Identifier: MIT
//
// Double inverse-Mellin representation of the recessive solution on the
// quadrant x < 0 < y:
//
//   phi(x, y) = (2 pi i)^{-2} II G(s1) G(s1 - 2 s2 + a) G(s2) G(s2 - d + 1)
//                               (-x)^{-s1} y^{-s2} ds1 ds2
//
// over two vertical lines Re s1 = sigma1, Re s2 = sigma2.  The integrand
// decays like exp(-pi |t| / 2) in each imaginary direction, so a plain
// trapezoid rule on [-tmax, tmax] converges geometrically in the node
// count.  Euler derivatives ride along for free: th_x brings down a factor
// -s1 and th_y a factor -s2 under the integral, so the same pass that sums
// the value also sums the three theta-moments.
//
// The standard-order function on X > 0 > Y is the same integral with the
// arguments exchanged: psi(X, Y) = phi(Y, X).

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "gwhit/common.hpp"
#include "gwhit/gamma.hpp"

namespace gwhit {

// two vertical contours, trapezoid-sampled at npoints nodes (forced odd so
// the stride-2 truncation check reuses the same endpoints)
struct ContourSpec {
  double sigma1 = 0.0, sigma2 = 0.0;
  double tmax = 40.0;
  int npoints = 2000;
};

namespace detail {

using cplxl = std::complex<long double>;

// real parts of the four gamma arguments along the contour, with the
// (sigma1, sigma2)-gradient of each argument
struct PoleFamily {
  double value;
  double n1, n2;
};

inline std::array<PoleFamily, 4> pole_families(const ContourSpec& c, cplx a,
                                               cplx d) {
  return {{{c.sigma1, 1.0, 0.0},
           {c.sigma1 - 2.0 * c.sigma2 + a.real(), 1.0, -2.0},
           {c.sigma2, 0.0, 1.0},
           {c.sigma2 - d.real() + 1.0, 0.0, 1.0}}};
}

}  // namespace detail

// Euclidean distance from (sigma1, sigma2) to the nearest pole hyperplane
// arg + n = 0, n >= 0, over all four gamma factors
inline double contour_pole_distance(const ContourSpec& c, cplx a, cplx d) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& f : detail::pole_families(c, a, d)) {
    double num;
    if (f.value >= 0.0) {
      num = f.value;  // nearest pole of the family is at n = 0
    } else {
      const double lo = std::floor(-f.value), hi = lo + 1.0;
      num = std::min(std::abs(f.value + lo), std::abs(f.value + hi));
    }
    best = std::min(best, num / std::hypot(f.n1, f.n2));
  }
  return best;
}

// Rejects contours on which the integral does not converge to the recessive
// solution (wrong chamber) or runs too close to a pole hyperplane for the
// quadrature to resolve: accuracy collapses once the distance drops toward
// 0.2, so anything below 0.25 is refused outright.
inline void validate_contour(const ContourSpec& c, cplx a, cplx d) {
  if (!(c.tmax > 0.0)) throw config_error("contour: tmax must be positive");
  if (c.npoints < 5) throw config_error("contour: need at least 5 nodes");
  for (const auto& f : detail::pole_families(c, a, d))
    if (!(f.value > 0.0))
      throw config_error("contour outside the convergence chamber");
  if (!(c.sigma1 - 2.0 * c.sigma2 > std::abs(a.real())))
    throw config_error("contour: sigma1 - 2 sigma2 must exceed |Re a|");
  if (contour_pole_distance(c, a, d) < 0.25)
    throw config_error("contour crosses an integrand pole");
}

// chamber defaults with a 0.4 / 0.5 margin, nudged right in sigma1 until
// every pole hyperplane is at least the validator's 0.25 away
inline ContourSpec default_contour(cplx a, cplx d) {
  ContourSpec c;
  c.sigma2 = std::max(0.0, d.real() - 1.0) + 0.4;
  c.sigma1 = 2.0 * c.sigma2 + std::abs(a.real()) + 0.5;
  for (int i = 0; i < 64 && contour_pole_distance(c, a, d) < 0.2505; ++i)
    c.sigma1 += 0.1;
  return c;
}

// the gamma-product integrand itself (handy for difference-equation checks)
inline cplx mb_integrand(cplx a, cplx d, double x, double y, cplx s1, cplx s2) {
  if (!(x < 0.0 && y > 0.0))
    throw config_error("mb integrand is defined on x < 0 < y");
  using detail::cplxl;
  const cplxl l1(s1.real(), s1.imag()), l2(s2.real(), s2.imag());
  const cplxl la(a.real(), a.imag()), ld(d.real(), d.imag());
  const cplxl lg = detail::log_gamma_l(l1) +
                   detail::log_gamma_l(l1 - 2.0L * l2 + la) +
                   detail::log_gamma_l(l2) +
                   detail::log_gamma_l(l2 - ld + 1.0L) -
                   l1 * std::log(static_cast<long double>(-x)) -
                   l2 * std::log(static_cast<long double>(y));
  const cplxl w = std::exp(lg);
  return {static_cast<double>(w.real()), static_cast<double>(w.imag())};
}

struct MbResult {
  cplx value, thx, thy, thxy;  // f, th_x f, th_y f, th_x th_y f
  // Heuristic accuracy estimate for the value.  The trapezoid rule converges
  // geometrically here, so the error at step h is roughly the square of the
  // error at 2h; the stride-2 subgrid decrement measures the latter, and its
  // square (with a safety factor, normalized by the value) estimates the
  // former.  The absolute contribution of the outermost node ring is added
  // for the part the finite tmax window cuts off, which no grid refinement
  // can see.
  double truncation = 0.0;
};

inline MbResult mb_eval(cplx a, cplx d, double x, double y,
                        const ContourSpec& spec) {
  if (!(x < 0.0 && y > 0.0))
    throw config_error("mb_eval is defined on x < 0 < y");
  validate_contour(spec, a, d);
  using detail::cplxl;

  int n = spec.npoints;
  if (n % 2 == 0) ++n;
  const long double tmax = static_cast<long double>(spec.tmax);
  const long double h = 2.0L * tmax / static_cast<long double>(n - 1);
  const long double lx = std::log(static_cast<long double>(-x));
  const long double ly = std::log(static_cast<long double>(y));
  const cplxl la(a.real(), a.imag()), ld(d.real(), d.imag());

  // row factor G(s1) (-x)^{-s1} and column factor G(s2) G(s2-d+1) y^{-s2};
  // only the coupling factor G(s1 - 2 s2 + a) is evaluated per pair
  std::vector<cplxl> s1(static_cast<std::size_t>(n)), a1(static_cast<std::size_t>(n));
  std::vector<cplxl> s2(static_cast<std::size_t>(n)), a2(static_cast<std::size_t>(n));
  std::vector<long double> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    const long double t = -tmax + h * static_cast<long double>(i);
    s1[k] = cplxl(static_cast<long double>(spec.sigma1), t);
    s2[k] = cplxl(static_cast<long double>(spec.sigma2), t);
    a1[k] = std::exp(detail::log_gamma_l(s1[k]) - s1[k] * lx);
    a2[k] = std::exp(detail::log_gamma_l(s2[k]) + detail::log_gamma_l(s2[k] - ld + 1.0L) -
                     s2[k] * ly);
    w[k] = (i == 0 || i == n - 1) ? 0.5L : 1.0L;
  }

  cplxl m1{}, ms1{}, ms2{}, ms12{};
  cplxl m1c{};             // value moment on the stride-2 subgrid
  long double ring = 0.0L;  // |integrand| mass on the outermost node ring
  for (int i = 0; i < n; ++i) {
    const std::size_t ki = static_cast<std::size_t>(i);
    const bool edge_i = (i == 0 || i == n - 1);
    cplxl acc1{}, accs2{}, acc1c{};
    long double edge_abs = 0.0L;
    for (int j = 0; j < n; ++j) {
      const std::size_t kj = static_cast<std::size_t>(j);
      const cplxl g = std::exp(detail::log_gamma_l(s1[ki] - 2.0L * s2[kj] + la));
      const cplxl f = a2[kj] * g;
      acc1 += w[kj] * f;
      accs2 += w[kj] * f * s2[kj];
      if (edge_i || j == 0 || j == n - 1) edge_abs += w[kj] * std::abs(f);
      if (i % 2 == 0 && j % 2 == 0)
        acc1c += ((j == 0 || j == n - 1) ? 0.5L : 1.0L) * f;
    }
    const cplxl base = w[ki] * a1[ki];
    m1 += base * acc1;
    ms1 += base * s1[ki] * acc1;
    ms2 += base * accs2;
    ms12 += base * s1[ki] * accs2;
    ring += w[ki] * std::abs(a1[ki]) * edge_abs;
    if (i % 2 == 0)
      m1c += ((i == 0 || i == n - 1) ? 0.5L : 1.0L) * a1[ki] * acc1c;
  }

  const long double two_pi_l = 6.283185307179586476925286766559L;
  const long double fine = (h / two_pi_l) * (h / two_pi_l);
  const long double coarse = 4.0L * fine;
  const auto down = [](cplxl z) {
    return cplx(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  };
  MbResult r;
  r.value = down(m1 * fine);
  r.thx = down(-ms1 * fine);
  r.thy = down(-ms2 * fine);
  r.thxy = down(ms12 * fine);
  const long double delta = std::abs(m1 * fine - m1c * coarse);
  const long double mag = std::max(std::abs(m1 * fine), 1e-300L);
  r.truncation = static_cast<double>(4.0L * delta * delta / mag + ring * fine);
  return r;
}

// same integral in standard order on X > 0 > Y: psi(X, Y) = phi(Y, X), so
// the two theta-moments swap roles
inline MbResult mb_eval_standard(cplx a, cplx d, double x, double y,
                                 const ContourSpec& spec) {
  if (!(x > 0.0 && y < 0.0))
    throw config_error("mb_eval_standard is defined on x > 0 > y");
  MbResult r = mb_eval(a, d, y, x, spec);
  std::swap(r.thx, r.thy);
  return r;
}

}  // namespace gwhit
