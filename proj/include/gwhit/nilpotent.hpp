// SPDX-License-Identifier: MIT
//
// The nilpotent radical n of the upper-triangular Borel of gl(4,R), its
// coadjoint action, and the coarse/fine orbit classification that decides
// which character data a generalized Whittaker model is induced from.
//
// Conventions.  n is spanned by the strictly lower-triangular matrix units;
// an element is written
//
//     n = x1 E21 + x2 E32 + x3 E43 + y1 E31 + y2 E42 + z E41,
//
// and a covector l in n* by the strictly upper-triangular matrices
//
//     l = gamma1 E12 + beta1 E13 + alpha E14
//                    + gamma2 E23 + beta2 E24 + gamma3 E34,
//
// paired by l(n) = tr(l n).  The abstract basis is ordered
// (Z, Y1, Y2, X1, X2, X3); all 6-vector and 6x6 matrix indices below refer
// to that order.  The only nonvanishing brackets are
//
//     [X1, X2] = -Y1,   [X2, X3] = -Y2,   [X1, Y2] = -Z,   [X3, Y1] = Z,
//
// so n is 3-step: every 4-fold bracket vanishes, which makes the degree-3
// truncations of exp, log and the Baker-Campbell-Hausdorff series exact.
//
// Two independent routes are kept side by side on purpose: closed-form
// formulas for the coadjoint action and the group law, and a 4x4 matrix
// route (conjugation, multiply-then-log).  Tests pin them against each
// other; neither is pruned in favor of the other.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdlib>
#include <string>

#include <gwhit/common.hpp>

namespace gwhit {

// ---------------------------------------------------------------------------
// Elements of n and n*

struct NilElement {
  double z = 0.0, y1 = 0.0, y2 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;
};

struct Covector {
  double alpha = 0.0, beta1 = 0.0, beta2 = 0.0;
  double gamma1 = 0.0, gamma2 = 0.0, gamma3 = 0.0;
};

inline NilElement operator+(const NilElement& a, const NilElement& b) {
  return {a.z + b.z, a.y1 + b.y1, a.y2 + b.y2,
          a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
}

inline NilElement operator*(double c, const NilElement& a) {
  return {c * a.z, c * a.y1, c * a.y2, c * a.x1, c * a.x2, c * a.x3};
}

inline NilElement operator-(const NilElement& a) { return -1.0 * a; }

inline NilElement operator-(const NilElement& a, const NilElement& b) {
  return a + (-b);
}

inline double pairing(const Covector& l, const NilElement& n) {
  return l.alpha * n.z + l.beta1 * n.y1 + l.beta2 * n.y2 +
         l.gamma1 * n.x1 + l.gamma2 * n.x2 + l.gamma3 * n.x3;
}

// Structure constants, specialized to the span above.  Bilinear and
// antisymmetric; lands in span{Z, Y1, Y2} (the derived algebra).
inline NilElement bracket(const NilElement& a, const NilElement& b) {
  NilElement r;
  r.y1 = -(a.x1 * b.x2 - a.x2 * b.x1);
  r.y2 = -(a.x2 * b.x3 - a.x3 * b.x2);
  r.z = -(a.x1 * b.y2 - a.y2 * b.x1) + (a.x3 * b.y1 - a.y1 * b.x3);
  return r;
}

// Coordinates <-> the abstract basis order (Z, Y1, Y2, X1, X2, X3).

inline Eigen::Matrix<double, 6, 1> coords(const NilElement& n) {
  Eigen::Matrix<double, 6, 1> v;
  v << n.z, n.y1, n.y2, n.x1, n.x2, n.x3;
  return v;
}

inline NilElement nil_from_coords(const Eigen::Matrix<double, 6, 1>& v) {
  return {v(0), v(1), v(2), v(3), v(4), v(5)};
}

inline NilElement basis_element(int i) {
  Eigen::Matrix<double, 6, 1> v = Eigen::Matrix<double, 6, 1>::Zero();
  v(i) = 1.0;
  return nil_from_coords(v);
}

// ---------------------------------------------------------------------------
// 4x4 matrix route

inline Eigen::Matrix4d to_matrix(const NilElement& n) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(1, 0) = n.x1;
  m(2, 1) = n.x2;
  m(3, 2) = n.x3;
  m(2, 0) = n.y1;
  m(3, 1) = n.y2;
  m(3, 0) = n.z;
  return m;
}

inline NilElement nil_from_matrix(const Eigen::Matrix4d& m) {
  return {m(3, 0), m(2, 0), m(3, 1), m(1, 0), m(2, 1), m(3, 2)};
}

inline Eigen::Matrix4d to_matrix(const Covector& l) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 1) = l.gamma1;
  m(0, 2) = l.beta1;
  m(0, 3) = l.alpha;
  m(1, 2) = l.gamma2;
  m(1, 3) = l.beta2;
  m(2, 3) = l.gamma3;
  return m;
}

inline Covector covector_from_matrix(const Eigen::Matrix4d& m) {
  Covector l;
  l.alpha = m(0, 3);
  l.beta1 = m(0, 2);
  l.beta2 = m(1, 3);
  l.gamma1 = m(0, 1);
  l.gamma2 = m(1, 2);
  l.gamma3 = m(2, 3);
  return l;
}

// exp of a strictly lower-triangular 4x4 matrix: n^4 = 0, so the cubic
// Taylor polynomial is the exact exponential.
inline Eigen::Matrix4d exp_nil(const Eigen::Matrix4d& n) {
  const Eigen::Matrix4d n2 = n * n;
  return Eigen::Matrix4d::Identity() + n + 0.5 * n2 + (n2 * n) / 6.0;
}

// log of a unipotent lower-triangular 4x4 matrix, again exact.
inline Eigen::Matrix4d log_unipotent(const Eigen::Matrix4d& u) {
  const Eigen::Matrix4d m = u - Eigen::Matrix4d::Identity();
  const Eigen::Matrix4d m2 = m * m;
  return m - 0.5 * m2 + (m2 * m) / 3.0;
}

// ---------------------------------------------------------------------------
// Coadjoint action of exp(n) on l, closed form.  alpha is invariant; the
// remaining coordinates pick up the polynomial corrections below.  The
// matrix route (strict upper part of exp(-n) l exp(n)) must agree exactly.

inline Covector coadjoint_act(const NilElement& n, const Covector& l) {
  Covector r;
  r.alpha = l.alpha;
  r.beta1 = l.beta1 + l.alpha * n.x3;
  r.beta2 = l.beta2 - l.alpha * n.x1;
  r.gamma1 = l.gamma1 + l.beta1 * n.x2 +
             l.alpha * (n.y2 + 0.5 * n.x2 * n.x3);
  r.gamma2 = l.gamma2 + n.x3 * l.beta2 - n.x1 * l.beta1 -
             n.x1 * n.x3 * l.alpha;
  r.gamma3 = l.gamma3 - n.x2 * l.beta2 +
             l.alpha * (0.5 * n.x1 * n.x2 - n.y1);
  return r;
}

inline Covector coadjoint_act_matrix(const NilElement& n, const Covector& l) {
  const Eigen::Matrix4d g = exp_nil(to_matrix(n));
  const Eigen::Matrix4d gi = exp_nil(to_matrix(-n));
  const Eigen::Matrix4d moved = gi * to_matrix(l) * g;
  return covector_from_matrix(moved);
}

// ---------------------------------------------------------------------------
// Group law on n via BCH.  Because n is 3-step, the series terminates and
// exp(group_product(a, b)) = exp(a) exp(b) holds exactly.

inline NilElement group_product(const NilElement& a, const NilElement& b) {
  const NilElement ab = bracket(a, b);
  const NilElement tail =
      bracket(a, ab) + bracket(b, bracket(b, a));
  return a + b + 0.5 * ab + (1.0 / 12.0) * tail;
}

inline NilElement group_product_matrix(const NilElement& a,
                                       const NilElement& b) {
  const Eigen::Matrix4d prod =
      exp_nil(to_matrix(a)) * exp_nil(to_matrix(b));
  return nil_from_matrix(log_unipotent(prod));
}

// ---------------------------------------------------------------------------
// The skew form B_l(X, Y) = l([X, Y]) on n, as a 6x6 matrix in the
// (Z, Y1, Y2, X1, X2, X3) basis, and its radical (= null space).

inline Eigen::Matrix<double, 6, 6> b_form(const Covector& l) {
  Eigen::Matrix<double, 6, 6> b = Eigen::Matrix<double, 6, 6>::Zero();
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const double v = pairing(l, bracket(basis_element(i), basis_element(j)));
      b(i, j) = v;
      b(j, i) = -v;
    }
  return b;
}

// Columns span the radical of B_l.  The rank threshold is relative to the
// largest pivot, so the result is scale-invariant in l.
inline Eigen::MatrixXd radical(const Covector& l) {
  Eigen::FullPivLU<Eigen::Matrix<double, 6, 6>> lu(b_form(l));
  lu.setThreshold(1e-10);
  return lu.kernel();
}

// ---------------------------------------------------------------------------
// Coarse orbit classification.
//
// A zero test with tol == 0 is an exact comparison, appropriate for
// covectors given in exact coordinates.  Covectors that came out of a
// floating computation should be classified with a small tolerance
// (1e-12 is the documented choice); classification is discontinuous in l,
// and callers near a boundary should be warned, not silently binned.

enum class OrbitKind { I, II, III };

inline const char* to_string(OrbitKind k) {
  switch (k) {
  case OrbitKind::I: return "I";
  case OrbitKind::II: return "II";
  default: return "III";
  }
}

struct OrbitClass {
  OrbitKind kind = OrbitKind::III;
  Covector normal_form;
  int dim = 0;  // dimension of the coadjoint orbit through l
};

namespace detail {
inline bool near_zero(double v, double tol) {
  return tol == 0.0 ? v == 0.0 : std::abs(v) <= tol;
}
}  // namespace detail

inline OrbitClass classify_orbit(const Covector& l, double tol = 0.0) {
  OrbitClass oc;
  if (!detail::near_zero(l.alpha, tol)) {
    // x3 = -beta1/alpha and x1 = beta2/alpha kill the betas; gamma1 and
    // gamma3 then die to y2 and y1 shifts, and the surviving gamma2 is the
    // orbit invariant gamma2 - beta1 beta2 / alpha.
    oc.kind = OrbitKind::I;
    oc.dim = 4;
    oc.normal_form.alpha = l.alpha;
    oc.normal_form.gamma2 = l.gamma2 - l.beta1 * l.beta2 / l.alpha;
    return oc;
  }
  if (!detail::near_zero(l.beta1, tol) || !detail::near_zero(l.beta2, tol)) {
    // With alpha = 0, a single x-shift removes gamma2 without touching
    // gamma1 or gamma3; the betas are themselves invariant.
    oc.kind = OrbitKind::II;
    oc.dim = 2;
    oc.normal_form.beta1 = l.beta1;
    oc.normal_form.beta2 = l.beta2;
    oc.normal_form.gamma1 = l.gamma1;
    oc.normal_form.gamma3 = l.gamma3;
    return oc;
  }
  oc.kind = OrbitKind::III;  // l is a character of n; the orbit is a point
  oc.dim = 0;
  oc.normal_form.gamma1 = l.gamma1;
  oc.normal_form.gamma2 = l.gamma2;
  oc.normal_form.gamma3 = l.gamma3;
  return oc;
}

// ---------------------------------------------------------------------------
// Subordinate subalgebras.  `basis` holds candidate spanning vectors in its
// columns (abstract basis coordinates).  Throws config_error if the columns
// are dependent or do not close under the bracket; otherwise reports whether
// the span is subordinate to l of the maximal dimension, i.e. B_l vanishes
// on it and its codimension equals half the orbit dimension.

inline bool is_subordinate(const Covector& l, const Eigen::MatrixXd& basis) {
  if (basis.rows() != 6 || basis.cols() < 1 || basis.cols() > 6)
    throw config_error("subalgebra basis must be 6 x k with 1 <= k <= 6");
  const Eigen::Index k = basis.cols();

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis);
  qr.setThreshold(1e-10);
  if (qr.rank() != k)
    throw config_error("subalgebra basis columns are linearly dependent");

  // Closure: every pairwise bracket must stay in the span.
  const Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(6, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = i + 1; j < k; ++j) {
      const Eigen::Matrix<double, 6, 1> v = coords(
          bracket(nil_from_coords(basis.col(i)), nil_from_coords(basis.col(j))));
      const double resid = (v - q * (q.transpose() * v)).norm();
      if (resid > 1e-10 * std::max(1.0, v.norm()))
        throw config_error("candidate basis does not span a subalgebra");
    }

  // Isotropy of B_l on the span.
  const Eigen::Matrix<double, 6, 6> b = b_form(l);
  const double bscale = std::max(1.0, b.cwiseAbs().maxCoeff());
  const Eigen::MatrixXd restricted = q.transpose() * b * q;
  if (restricted.cwiseAbs().maxCoeff() > 1e-12 * bscale) return false;

  // Maximality: codim k matches half the orbit dimension.
  const int orbit_dim = 6 - static_cast<int>(radical(l).cols());
  return static_cast<int>(6 - k) == orbit_dim / 2;
}

// The stock maximal subordinate subalgebra for each orbit kind:
// span{X2, Y1, Y2, Z} for kind I, span{X1, X3, Y1, Y2, Z} for kind II,
// and all of n for kind III.
inline Eigen::MatrixXd subordinate_basis(OrbitKind kind) {
  const Eigen::Matrix<double, 6, 6> id = Eigen::Matrix<double, 6, 6>::Identity();
  switch (kind) {
  case OrbitKind::I: {
    Eigen::MatrixXd s(6, 4);
    s << id.col(4), id.col(1), id.col(2), id.col(0);
    return s;
  }
  case OrbitKind::II: {
    Eigen::MatrixXd s(6, 5);
    s << id.col(3), id.col(5), id.col(1), id.col(2), id.col(0);
    return s;
  }
  default: return id;
  }
}

// ---------------------------------------------------------------------------
// Fine classification: which of the fourteen case tags the model induced
// from l belongs to.  Expects l already in the normal-form parameter family
// of its kind (the output of classify_orbit); anything else is a caller bug.

inline CaseTag classify_induced(const Covector& l, OrbitKind kind,
                                double tol = 0.0) {
  const auto zero = [&](double v) { return detail::near_zero(v, tol); };
  switch (kind) {
  case OrbitKind::I: {
    if (zero(l.alpha) || !zero(l.beta1) || !zero(l.beta2) ||
        !zero(l.gamma1) || !zero(l.gamma3))
      throw config_error("covector is not in the kind-I parameter family");
    return zero(l.gamma2) ? CaseTag::I2 : CaseTag::I1;
  }
  case OrbitKind::II: {
    if (!zero(l.alpha) || !zero(l.gamma2) ||
        (zero(l.beta1) && zero(l.beta2)))
      throw config_error("covector is not in the kind-II parameter family");
    if (!zero(l.beta1 * l.gamma3 + l.gamma1 * l.beta2)) return CaseTag::II1;
    if (!zero(l.beta1) && !zero(l.beta2)) return CaseTag::II2;
    return !zero(l.beta1) ? CaseTag::II3 : CaseTag::II4;
  }
  default: {
    if (!zero(l.alpha) || !zero(l.beta1) || !zero(l.beta2))
      throw config_error("covector is not in the kind-III parameter family");
    const bool g1 = !zero(l.gamma1), g2 = !zero(l.gamma2), g3 = !zero(l.gamma3);
    if (g1 && g2 && g3) return CaseTag::III1;
    if (g1 && g2) return CaseTag::III2;
    if (g1 && g3) return CaseTag::III3;
    if (g2 && g3) return CaseTag::III4;
    if (g1) return CaseTag::III5;
    if (g2) return CaseTag::III6;
    if (g3) return CaseTag::III7;
    return CaseTag::III8;
  }
  }
}

}  // namespace gwhit
