// SPDX-License-Identifier: MIT
//
// The rank-4 solution basis of the two-variable hypergeometric system
//
//   E1 = { x (2 th_x - th_y + a)(2 th_x - th_y + a + 1) - th_x (th_x + d - 1) }
//   E2 = { y - th_y (2 th_x - th_y + a) }
//
// on the quadrant x > 0 > y, where th denotes the Euler operators x d/dx,
// y d/dy.  The four atoms combine the |x| < 1/4 series H and its entire
// companion Ht (see horn_series.hpp); primed parameters a' = a + 2 - 2d and
// 2 - d belong to the second-kind exponent 1 - d:
//
//   B1 = H(a, d; x, y)
//   B2 = x^{1-d} H(a', 2-d; x, y)
//   B3 = (-y)^{a} Ht(a, d; y, y^2 x)
//   B4 = x^{1-d} (-y)^{a'} Ht(a', 2-d; y, y^2 x)
//
// Everything is evaluated as a second-order jet in (x, y), which is enough
// to check the defining equations pointwise and to certify independence
// through rows (f, th_x f, th_y f, th_x th_y f).

#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "gwhit/common.hpp"
#include "gwhit/horn_series.hpp"
#include "gwhit/jets.hpp"
#include "gwhit/linalg.hpp"

namespace gwhit {

// parameters of the system attached to a spectral pair
struct HornParams {
  cplx a, d;
};

inline HornParams horn_params(const SpectralParam& sp) {
  require_regular(sp);
  const cplx t = sp.diff();
  return HornParams{(t - 1.0) / 2.0, t / 2.0};
}

using Jet2c = Jet2<cplx, 2>;

inline Jet2c horn_basis_atom(int idx, const HornParams& hp, double x, double y) {
  if (idx < 1 || idx > 4) throw config_error("basis atom index must be 1..4");
  if (!(x > 0.0) || !(y < 0.0))
    throw config_error("basis atoms live on x > 0 > y");
  const Jet2c X = Jet2c::linear_var(cplx(x), 0);
  const Jet2c Y = Jet2c::linear_var(cplx(y), 1);
  const cplx ap = hp.a + 2.0 - 2.0 * hp.d;
  const bool primed = (idx == 2 || idx == 4);
  const cplx a = primed ? ap : hp.a;
  const cplx d = primed ? 2.0 - hp.d : hp.d;

  Jet2c body;
  if (idx <= 2) {
    const SeriesJet s = h10_jet(a, d, cplx(x), cplx(y));
    body = compose2(X, Y, s.f, s.fx, s.fy, s.fxx, s.fxy, s.fyy);
  } else {
    const Jet2c U = Y;
    const Jet2c V = Y * Y * X;
    const SeriesJet s = h10t_jet(a, d, U.v, V.v);
    body = compose2(U, V, s.f, s.fx, s.fy, s.fxx, s.fxy, s.fyy);
    body = pow(-Y, a) * body;
  }
  if (primed) body = pow(X, 1.0 - hp.d) * body;
  return body;
}

// value and theta-moments (f, th_x f, th_y f, th_x th_y f) of a jet
inline std::array<cplx, 4> theta_row(const Jet2c& j, double x, double y) {
  return {j.v, x * j.g[0], y * j.g[1], x * y * j.hess(0, 1)};
}

// residuals of the two defining equations applied to a jet, with the
// largest additive term of each as the natural comparison scale
struct PairResidual {
  cplx e1, e2;
  double scale1 = 0.0, scale2 = 0.0;
};

inline PairResidual h10_pde_residual(const HornParams& hp, double x, double y,
                                     const Jet2c& j) {
  const cplx f = j.v;
  const cplx tx = x * j.g[0];
  const cplx ty = y * j.g[1];
  const cplx txx = tx + x * x * j.hess(0, 0);
  const cplx tyy = ty + y * y * j.hess(1, 1);
  const cplx txy = x * y * j.hess(0, 1);
  const cplx a = hp.a, d = hp.d;

  // (2 th_x - th_y + a)(2 th_x - th_y + a + 1) f, term by term
  const std::array<cplx, 8> t1 = {
      x * 4.0 * txx,          x * (-4.0) * txy,
      x * tyy,                x * (2.0 * a + 1.0) * 2.0 * tx,
      x * (2.0 * a + 1.0) * (-ty), x * a * (a + 1.0) * f,
      -txx,                   -(d - 1.0) * tx};
  const std::array<cplx, 4> t2 = {y * f, -2.0 * txy, tyy, -a * ty};

  PairResidual r;
  for (const cplx& t : t1) {
    r.e1 += t;
    r.scale1 = std::max(r.scale1, std::abs(t));
  }
  for (const cplx& t : t2) {
    r.e2 += t;
    r.scale2 = std::max(r.scale2, std::abs(t));
  }
  return r;
}

// independence certificate: theta-rows of all four atoms at several points,
// stacked and ranked by column-normalized SVD
inline std::vector<std::array<double, 2>> default_gram_points() {
  std::vector<std::array<double, 2>> pts;
  for (double x : {0.04, 0.09, 0.14, 0.19})
    for (double y : {-6.5, -3.1, -0.9}) pts.push_back({x, y});
  return pts;
}

inline RankCertificate basis_rank(const HornParams& hp,
                                  const std::vector<std::array<double, 2>>& pts,
                                  double rel_tol = 1e-8) {
  Eigen::MatrixXcd m(4 * static_cast<Eigen::Index>(pts.size()), 4);
  Eigen::Index r = 0;
  for (const auto& p : pts) {
    for (int idx = 1; idx <= 4; ++idx) {
      const auto row = theta_row(horn_basis_atom(idx, hp, p[0], p[1]), p[0], p[1]);
      for (int k = 0; k < 4; ++k) m(r + k, idx - 1) = row[static_cast<std::size_t>(k)];
    }
    r += 4;
  }
  return svd_rank(m, rel_tol);
}

// coefficients expressing a target theta-row at one point in the basis
inline std::array<cplx, 4> solve_in_basis(const HornParams& hp, double x, double y,
                                          const std::array<cplx, 4>& target) {
  Eigen::Matrix4cd m;
  Eigen::Vector4cd b;
  for (int idx = 1; idx <= 4; ++idx) {
    const auto row = theta_row(horn_basis_atom(idx, hp, x, y), x, y);
    for (int k = 0; k < 4; ++k) m(k, idx - 1) = row[static_cast<std::size_t>(k)];
  }
  for (int k = 0; k < 4; ++k) b(k) = target[static_cast<std::size_t>(k)];
  const Eigen::Vector4cd c = m.colPivHouseholderQr().solve(b);
  return {c(0), c(1), c(2), c(3)};
}

}  // namespace gwhit
