// SPDX-License-Identifier: MIT
//
// Finite-difference oracle for derivation words of length <= 2 over
// { theta_{a1..a4}, d/du, d/dv }.  Euler derivatives are taken as genuine
// log-coordinate differences (a -> a e^{mh}), so there is no cancellation
// penalty near small a_i.  Kept deliberately independent of jets.hpp: the
// test suite runs every derivative through both paths.

#pragma once

#include <cmath>
#include <vector>

#include "gwhit/common.hpp"

namespace gwhit {

enum class Deriv : int { Th_a1 = 0, Th_a2, Th_a3, Th_a4, D_u, D_v };

inline constexpr double fd_default_step = 1e-4;

inline Point fd_shift(Point p, Deriv d, int m, double h) {
  const double t = m * h;
  switch (d) {
    case Deriv::Th_a1: p.a1 *= std::exp(t); break;
    case Deriv::Th_a2: p.a2 *= std::exp(t); break;
    case Deriv::Th_a3: p.a3 *= std::exp(t); break;
    case Deriv::Th_a4: p.a4 *= std::exp(t); break;
    case Deriv::D_u: p.u += t; break;
    case Deriv::D_v: p.v += t; break;
  }
  return p;
}

// Mixed numeric derivative of f at p along the given word, fourth-order
// central stencils throughout.  f is any callable Point -> cplx.
template <class F>
cplx fd_derivative(F&& f, const Point& p, const std::vector<Deriv>& word,
                   double step = fd_default_step) {
  if (!valid(p)) throw numeric_error("fd_derivative: point outside domain (a_i must stay positive)");
  if (word.size() > 2) throw config_error("fd_derivative: derivation word longer than 2");

  if (word.empty()) return f(p);

  if (word.size() == 1) {
    const Deriv d = word[0];
    return (-f(fd_shift(p, d, 2, step)) + 8.0 * f(fd_shift(p, d, 1, step)) -
            8.0 * f(fd_shift(p, d, -1, step)) + f(fd_shift(p, d, -2, step))) /
           (12.0 * step);
  }

  const Deriv d1 = word[0], d2 = word[1];
  if (d1 == d2) {
    return (-f(fd_shift(p, d1, 2, step)) + 16.0 * f(fd_shift(p, d1, 1, step)) - 30.0 * f(p) +
            16.0 * f(fd_shift(p, d1, -1, step)) - f(fd_shift(p, d1, -2, step))) /
           (12.0 * step * step);
  }

  // tensor product of two first-derivative stencils
  static constexpr int off[4] = {-2, -1, 1, 2};
  static constexpr double w[4] = {1.0, -8.0, 8.0, -1.0};
  cplx acc = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      acc += w[i] * w[j] * f(fd_shift(fd_shift(p, d1, off[i], step), d2, off[j], step));
  return acc / (144.0 * step * step);
}

}  // namespace gwhit
