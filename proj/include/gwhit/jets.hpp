// SPDX-License-Identifier: MIT
//
// Second-order jets: (value, gradient, Hessian) triples with arithmetic
// closed under sums, products, quotients, and composition with C^2 scalar
// functions.  This is the primary differentiation route of the library;
// finite differences (finite_diff.hpp) provide the independent cross-check.
//
// Convention: the four torus coordinates are tracked logarithmically, so a
// gradient slot of a_i holds the Euler derivative  theta_x f = x f'(x)  and
// the Hessian slots hold theta_i theta_j f (for i = j that is theta^2, not
// x^2 f'').  The u, v slots hold plain partial derivatives.  Every operator
// downstream is written in exactly these derivations, so jets can be fed to
// them without change of basis.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <concepts>

#include "gwhit/common.hpp"

namespace gwhit {

template <class T, int N>
struct Jet2 {
  static_assert(N >= 1);
  static constexpr int nvars = N;
  static constexpr int nhess = N * (N + 1) / 2;

  T v{};
  std::array<T, N> g{};
  std::array<T, nhess> h{};  // packed upper triangle, see hpos

  static constexpr int hpos(int i, int j) {
    const int r = i < j ? i : j;
    const int c = i < j ? j : i;
    return r * N - r * (r - 1) / 2 + (c - r);
  }
  T& hess(int i, int j) { return h[static_cast<std::size_t>(hpos(i, j))]; }
  const T& hess(int i, int j) const { return h[static_cast<std::size_t>(hpos(i, j))]; }

  static Jet2 constant(const T& c) {
    Jet2 r;
    r.v = c;
    return r;
  }

  // Seed of a multiplicative coordinate: in log parametrization t -> a e^t
  // every derivative of the coordinate itself equals its value.
  static Jet2 theta_var(const T& a, int slot) {
    Jet2 r;
    r.v = a;
    r.g[static_cast<std::size_t>(slot)] = a;
    r.h[static_cast<std::size_t>(hpos(slot, slot))] = a;
    return r;
  }

  // Seed of an additive coordinate (plain partial derivative slot).
  static Jet2 linear_var(const T& u, int slot) {
    Jet2 r;
    r.v = u;
    r.g[static_cast<std::size_t>(slot)] = T(1);
    return r;
  }
};

// ------------------------------------------------------------ arithmetic ---

template <class T, int N>
Jet2<T, N> operator+(const Jet2<T, N>& a, const Jet2<T, N>& b) {
  Jet2<T, N> r;
  r.v = a.v + b.v;
  for (int i = 0; i < N; ++i) r.g[i] = a.g[i] + b.g[i];
  for (int i = 0; i < Jet2<T, N>::nhess; ++i) r.h[i] = a.h[i] + b.h[i];
  return r;
}

template <class T, int N>
Jet2<T, N> operator-(const Jet2<T, N>& a, const Jet2<T, N>& b) {
  Jet2<T, N> r;
  r.v = a.v - b.v;
  for (int i = 0; i < N; ++i) r.g[i] = a.g[i] - b.g[i];
  for (int i = 0; i < Jet2<T, N>::nhess; ++i) r.h[i] = a.h[i] - b.h[i];
  return r;
}

template <class T, int N>
Jet2<T, N> operator-(const Jet2<T, N>& a) {
  Jet2<T, N> r;
  r.v = -a.v;
  for (int i = 0; i < N; ++i) r.g[i] = -a.g[i];
  for (int i = 0; i < Jet2<T, N>::nhess; ++i) r.h[i] = -a.h[i];
  return r;
}

// Leibniz rule through second order.
template <class T, int N>
Jet2<T, N> operator*(const Jet2<T, N>& a, const Jet2<T, N>& b) {
  Jet2<T, N> r;
  r.v = a.v * b.v;
  for (int i = 0; i < N; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j)
      r.hess(i, j) = a.hess(i, j) * b.v + a.g[i] * b.g[j] + a.g[j] * b.g[i] + a.v * b.hess(i, j);
  return r;
}

template <class T, int N, class U>
  requires std::convertible_to<U, T>
Jet2<T, N> operator*(const Jet2<T, N>& a, const U& s) {
  Jet2<T, N> r;
  const T c(s);
  r.v = a.v * c;
  for (int i = 0; i < N; ++i) r.g[i] = a.g[i] * c;
  for (int i = 0; i < Jet2<T, N>::nhess; ++i) r.h[i] = a.h[i] * c;
  return r;
}

template <class T, int N, class U>
  requires std::convertible_to<U, T>
Jet2<T, N> operator*(const U& s, const Jet2<T, N>& a) {
  return a * s;
}

template <class T, int N, class U>
  requires std::convertible_to<U, T>
Jet2<T, N> operator+(const Jet2<T, N>& a, const U& s) {
  Jet2<T, N> r = a;
  r.v += T(s);
  return r;
}

template <class T, int N, class U>
  requires std::convertible_to<U, T>
Jet2<T, N> operator+(const U& s, const Jet2<T, N>& a) {
  return a + s;
}

template <class T, int N, class U>
  requires std::convertible_to<U, T>
Jet2<T, N> operator-(const Jet2<T, N>& a, const U& s) {
  Jet2<T, N> r = a;
  r.v -= T(s);
  return r;
}

template <class T, int N, class U>
  requires std::convertible_to<U, T>
Jet2<T, N> operator-(const U& s, const Jet2<T, N>& a) {
  Jet2<T, N> r = -a;
  r.v += T(s);
  return r;
}

// Composition with a C^2 function of one variable given by its value and
// first two derivatives at x.v (plain derivatives in x.v, not Euler form).
template <class T, int N>
Jet2<T, N> compose1(const Jet2<T, N>& x, const T& f, const T& f1, const T& f2) {
  Jet2<T, N> r;
  r.v = f;
  for (int i = 0; i < N; ++i) r.g[i] = f1 * x.g[i];
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) r.hess(i, j) = f1 * x.hess(i, j) + f2 * x.g[i] * x.g[j];
  return r;
}

// Two-variable composition F(x, y) from the six partials of F at
// (x.v, y.v); used for special-function factors of two arguments.
template <class T, int N>
Jet2<T, N> compose2(const Jet2<T, N>& x, const Jet2<T, N>& y, const T& f, const T& fx,
                    const T& fy, const T& fxx, const T& fxy, const T& fyy) {
  Jet2<T, N> r;
  r.v = f;
  for (int i = 0; i < N; ++i) r.g[i] = fx * x.g[i] + fy * y.g[i];
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j)
      r.hess(i, j) = fx * x.hess(i, j) + fy * y.hess(i, j) + fxx * x.g[i] * x.g[j] +
                     fxy * (x.g[i] * y.g[j] + x.g[j] * y.g[i]) + fyy * y.g[i] * y.g[j];
  return r;
}

template <class T, int N>
Jet2<T, N> reciprocal(const Jet2<T, N>& a) {
  const T inv = T(1) / a.v;
  return compose1(a, inv, -inv * inv, T(2) * inv * inv * inv);
}

template <class T, int N>
Jet2<T, N> operator/(const Jet2<T, N>& a, const Jet2<T, N>& b) {
  return a * reciprocal(b);
}

template <class T, int N, class U>
  requires std::convertible_to<U, T>
Jet2<T, N> operator/(const Jet2<T, N>& a, const U& s) {
  return a * (T(1) / T(s));
}

template <class T, int N, class U>
  requires std::convertible_to<U, T>
Jet2<T, N> operator/(const U& s, const Jet2<T, N>& a) {
  return reciprocal(a) * s;
}

// ---------------------------------------------------- elementary functions --

template <class T, int N>
Jet2<T, N> exp(const Jet2<T, N>& x) {
  using std::exp;
  const T e = exp(x.v);
  return compose1(x, e, e, e);
}

template <class T, int N>
Jet2<T, N> log(const Jet2<T, N>& x) {
  using std::log;
  const T inv = T(1) / x.v;
  return compose1(x, log(x.v), inv, -inv * inv);
}

template <class T, int N>
Jet2<T, N> sqrt(const Jet2<T, N>& x) {
  using std::sqrt;
  const T s = sqrt(x.v);
  const T d1 = T(0.5) / s;
  return compose1(x, s, d1, T(-0.25) / (s * x.v));
}

// x^s for scalar exponent s (principal branch for fractional powers).
template <class T, int N, class U>
  requires std::convertible_to<U, T>
Jet2<T, N> pow(const Jet2<T, N>& x, const U& se) {
  using std::pow;
  const T s(se);
  const T f = pow(x.v, s);
  const T f1 = s * f / x.v;
  const T f2 = s * (s - T(1)) * f / (x.v * x.v);
  return compose1(x, f, f1, f2);
}

template <class T, int N>
Jet2<T, N> sin(const Jet2<T, N>& x) {
  using std::cos;
  using std::sin;
  const T s = sin(x.v), c = cos(x.v);
  return compose1(x, s, c, -s);
}

template <class T, int N>
Jet2<T, N> cos(const Jet2<T, N>& x) {
  using std::cos;
  using std::sin;
  const T s = sin(x.v), c = cos(x.v);
  return compose1(x, c, -s, -c);
}

// largest absolute entry across all orders; the natural scale of a jet
template <class T, int N>
double max_abs(const Jet2<T, N>& a) {
  double m = std::abs(a.v);
  for (int i = 0; i < N; ++i) m = std::max(m, std::abs(a.g[i]));
  for (int i = 0; i < Jet2<T, N>::nhess; ++i) m = std::max(m, std::abs(a.h[i]));
  return m;
}

// ----------------------------------------------------------- coordinates ---

// The library-wide six-variable chart: slots 0..3 are theta_{a1..a4},
// slot 4 is d/du, slot 5 is d/dv.
using Jet6 = Jet2<cplx, 6>;

inline constexpr int slot_u = 4;
inline constexpr int slot_v = 5;

inline std::array<Jet6, 6> jet_coords(const Point& p) {
  return {Jet6::theta_var(cplx(p.a1), 0), Jet6::theta_var(cplx(p.a2), 1),
          Jet6::theta_var(cplx(p.a3), 2), Jet6::theta_var(cplx(p.a4), 3),
          Jet6::linear_var(cplx(p.u), slot_u), Jet6::linear_var(cplx(p.v), slot_v)};
}

// Lift a scalar field through jet arithmetic.  The callable receives the six
// seeded coordinate jets and must be written in the supported operations
// above (or registered special-function factors from the other headers).
template <class F>
Jet6 jet_lift(F&& field, const Point& p) {
  return field(jet_coords(p));
}

// Restriction to an active coordinate set: inactive coordinates enter as
// constants, so their derivative slots stay zero.
template <class F>
Jet6 jet_lift(F&& field, const Point& p, const std::array<bool, 6>& active) {
  auto c = jet_coords(p);
  for (std::size_t i = 0; i < 6; ++i)
    if (!active[i]) {
      c[i].g.fill(cplx(0));
      c[i].h.fill(cplx(0));
    }
  return field(c);
}


}  // namespace gwhit
