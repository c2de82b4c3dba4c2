// SPDX-License-Identifier: MIT
//
// Rank certification for stacked sample matrices.  Columns are candidate
// basis members, rows are linear functionals (values and derivatives at
// sample points).  Each nonzero column is normalized to unit length first,
// so wildly different natural scales cannot masquerade as rank deficiency,
// and the rank decision is a relative singular-value threshold.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace gwhit {

struct RankCertificate {
  int rank = 0;
  double smin = 0.0, smax = 0.0;  // extreme singular values after scaling
};

inline RankCertificate svd_rank(Eigen::MatrixXcd m, double rel_tol) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    const double n = m.col(c).norm();
    if (n > 0.0) m.col(c) /= n;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  RankCertificate r;
  if (s.size() == 0) return r;
  r.smax = s(0);
  r.smin = s(s.size() - 1);
  if (r.smax == 0.0) return r;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * r.smax) ++r.rank;
  return r;
}

}  // namespace gwhit
