// SPDX-License-Identifier: MIT
//
// The two double hypergeometric series behind the rank-4 solution bases,
// evaluated as values and second-order jets in their two arguments.
//
//   H (a, d; x, y)  = sum_{m,n>=0} (a)_{2m-n} / ((d)_m m! n!) x^m y^n
//   Ht(a, d; u, v)  = sum_{m,n>=0} (-1)^m u^m v^n / ((a+1)_{m+2n} (d)_n m! n!)
//
// H converges for |x| < 1/4, any y; evaluation is certified on the margin
// |x| < 0.23 and refused outside it.  Ht is entire.  Both are summed by
// exact term recurrences carrying six moment accumulators, so the jets come
// from the same truncation as the value:
//
//   sum m t      = x f_x        sum m(m-1) t = x^2 f_xx
//   sum n t      = y f_y        sum n(n-1) t = y^2 f_yy
//   sum m n t    = x y f_xy
//
// Term recurrences (first index is the row/column being walked):
//   H : t(m+1,0)/t(m,0) = (a+2m)(a+2m+1) x / ((d+m)(m+1))
//       t(m,n+1)/t(m,n) = y / ((n+1)(a+2m-n-1))
//   Ht: T(0,n+1)/T(0,n) = v / ((d+n)(n+1)(a+1+2n)(a+2+2n))
//       T(m+1,n)/T(m,n) = -u / ((a+1+2n+m)(m+1))

#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "gwhit/common.hpp"

namespace gwhit {

// outer edge of the certified evaluation region of H in |x|
inline constexpr double h10_margin = 0.23;

// value and partial derivatives with respect to the two series arguments in
// order, plus a magnitude estimate of the dropped tail of the value
struct SeriesJet {
  cplx f{}, fx{}, fy{}, fxx{}, fxy{}, fyy{};
  double tail = 0.0;
};

namespace detail {

using cplxl = std::complex<long double>;

// moment sums of one double series: s = sum t, sm = sum m t, and so on
struct SeriesSums {
  cplxl s{}, sm{}, sn{}, smm{}, smn{}, snn{};
  long double peak = 0.0L;  // largest |term| met; sets the cancellation floor
  double tail = 0.0;
};

inline bool near_integer(cplx z, double tol) {
  return std::abs(z.imag()) <= tol &&
         std::abs(z.real() - std::round(z.real())) <= tol;
}

// H by rows of constant m.  Both loops stop once terms fall below the
// resolution of the largest contribution already absorbed.
inline SeriesSums h10_sums(cplx a_, cplx d_, cplx x_, cplx y_) {
  if (near_integer(a_, 1e-9) || near_integer(d_, 1e-9))
    throw config_error("h10: series parameter within 1e-9 of an integer degeneracy");
  if (std::abs(x_) >= h10_margin)
    throw config_error("h10: first argument outside the certified region |x| < 0.23");
  const cplxl a(a_.real(), a_.imag()), d(d_.real(), d_.imag());
  const cplxl x(x_.real(), x_.imag()), y(y_.real(), y_.imag());

  SeriesSums acc;
  acc.peak = 1.0L;
  cplxl row = 1.0L;           // t(m, 0)
  long double row_abs = 0.0L; // sum |t(m, n)| over the current row
  int faded = 0;              // consecutive rows below the resolution cutoff
  for (int m = 0;; ++m) {
    // near the |x| = 0.23 margin the row ratio approaches 0.92, so driving
    // the rows below the long-double resolution can take ~600 of them
    if (m > 1200) throw numeric_error("h10: row limit exceeded without convergence");
    const long double lm = static_cast<long double>(m);
    row_abs = 0.0L;
    cplxl t = row;
    for (int n = 0;; ++n) {
      if (n > 2000) throw numeric_error("h10: column limit exceeded without convergence");
      const long double ln = static_cast<long double>(n);
      const long double at = std::abs(t);
      acc.s += t;
      acc.sm += lm * t;
      acc.sn += ln * t;
      acc.smm += lm * (lm - 1.0L) * t;
      acc.smn += lm * ln * t;
      acc.snn += ln * (ln - 1.0L) * t;
      row_abs += at;
      if (at > acc.peak) acc.peak = at;
      const cplxl ratio = y / ((ln + 1.0L) * (a + 2.0L * lm - ln - 1.0L));
      t *= ratio;
      if (std::abs(t) <= 1e-22L * acc.peak && std::abs(ratio) < 0.9L) break;
    }
    if (row_abs <= 1e-21L * acc.peak) {
      if (++faded >= 2) break;
    } else {
      faded = 0;
    }
    if (row_abs > 1e280L) throw numeric_error("h10: series overflow");
    row *= (a + 2.0L * lm) * (a + 2.0L * lm + 1.0L) * x /
           ((d + lm) * (lm + 1.0L));
  }
  // geometric tail estimate: row magnitudes shrink roughly like 4|x| per row
  const long double r = 4.0L * std::abs(x);
  acc.tail = static_cast<double>(row_abs * r / (1.0L - r));
  return acc;
}

// Ht by columns of constant n; both directions converge factorially
inline SeriesSums h10t_sums(cplx a_, cplx d_, cplx u_, cplx v_) {
  if (near_integer(a_, 1e-9) || near_integer(d_, 1e-9))
    throw config_error("h10t: series parameter within 1e-9 of an integer degeneracy");
  const cplxl a(a_.real(), a_.imag()), d(d_.real(), d_.imag());
  const cplxl u(u_.real(), u_.imag()), v(v_.real(), v_.imag());

  SeriesSums acc;
  acc.peak = 1.0L;
  cplxl col = 1.0L;           // T(0, n)
  long double col_abs = 0.0L;
  int faded = 0;
  for (int n = 0;; ++n) {
    if (n > 600) throw numeric_error("h10t: column limit exceeded without convergence");
    const long double ln = static_cast<long double>(n);
    col_abs = 0.0L;
    cplxl t = col;
    for (int m = 0;; ++m) {
      if (m > 2000) throw numeric_error("h10t: row limit exceeded without convergence");
      const long double lm = static_cast<long double>(m);
      const long double at = std::abs(t);
      acc.s += t;
      acc.sm += lm * t;
      acc.sn += ln * t;
      acc.smm += lm * (lm - 1.0L) * t;
      acc.smn += lm * ln * t;
      acc.snn += ln * (ln - 1.0L) * t;
      col_abs += at;
      if (at > acc.peak) acc.peak = at;
      const cplxl ratio = -u / ((a + 1.0L + 2.0L * ln + lm) * (lm + 1.0L));
      t *= ratio;
      if (std::abs(t) <= 1e-22L * acc.peak && std::abs(ratio) < 0.9L) break;
    }
    if (col_abs <= 1e-21L * acc.peak) {
      if (++faded >= 2) break;
    } else {
      faded = 0;
    }
    if (col_abs > 1e280L) throw numeric_error("h10t: series overflow");
    col *= v / ((d + ln) * (ln + 1.0L) * (a + 1.0L + 2.0L * ln) *
                (a + 2.0L + 2.0L * ln));
  }
  acc.tail = static_cast<double>(col_abs);
  return acc;
}

inline cplx to_cplx(cplxl z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// convert moment sums to plain partials; needs both arguments nonzero
inline SeriesJet sums_to_jet(const SeriesSums& acc, cplx x_, cplx y_,
                             const char* what) {
  if (x_ == cplx{} || y_ == cplx{})
    throw config_error(std::string(what) + ": jets need nonzero arguments");
  const cplxl x(x_.real(), x_.imag()), y(y_.real(), y_.imag());
  SeriesJet j;
  j.f = to_cplx(acc.s);
  j.fx = to_cplx(acc.sm / x);
  j.fy = to_cplx(acc.sn / y);
  j.fxx = to_cplx(acc.smm / (x * x));
  j.fxy = to_cplx(acc.smn / (x * y));
  j.fyy = to_cplx(acc.snn / (y * y));
  j.tail = acc.tail;
  return j;
}

}  // namespace detail

inline cplx h10(cplx a, cplx d, cplx x, cplx y) {
  return detail::to_cplx(detail::h10_sums(a, d, x, y).s);
}

inline SeriesJet h10_jet(cplx a, cplx d, cplx x, cplx y) {
  return detail::sums_to_jet(detail::h10_sums(a, d, x, y), x, y, "h10");
}

inline cplx h10t(cplx a, cplx d, cplx u, cplx v) {
  return detail::to_cplx(detail::h10t_sums(a, d, u, v).s);
}

inline SeriesJet h10t_jet(cplx a, cplx d, cplx u, cplx v) {
  return detail::sums_to_jet(detail::h10t_sums(a, d, u, v), u, v, "h10t");
}

}  // namespace gwhit
