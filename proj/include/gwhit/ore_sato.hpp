// SPDX-License-Identifier: MIT
//
// Difference-equation machinery for hypergeometric (Horn) systems
//
//   [ x_i P_i(th) - Q_i(th) ] f = 0,    i = 1..n,
//
// where P_i, Q_i are products of affine forms in the Euler operators.  The
// coefficient ratios R_i(s) = Q_i(-s) / P_i(-(s+e_i)) of a series solution
// must satisfy the pairwise compatibility identity
//
//   R_i(s + e_j) R_j(s) = R_j(s + e_i) R_i(s),
//
// and a compatible system is solved, up to periodic factors, by a product
// of gamma functions of affine arguments times a geometric factor t^s.
// This header checks both statements on supplied data: compatibility at
// sample points (exactly, in rational arithmetic, when the samples are
// supplied as rationals) and the first-order difference equation
//
//   P_i(-(s+e_i)) phi(s+e_i) = Q_i(-s) phi(s)
//
// for a supplied gamma product phi, evaluated in log-gamma space so that
// the gamma growth cancels before anything is exponentiated.  Recovering
// gamma-product data from a compatible system is out of scope; only
// verification against supplied data is offered.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "gwhit/common.hpp"
#include "gwhit/gamma.hpp"

namespace gwhit {

// one affine form <normal, s> + shift.  The normal entries are rational
// numbers stored exactly in binary doubles; the exact evaluation path
// promotes them (and the shift) to arbitrary-precision rationals verbatim,
// so both paths see literally the same coefficients.
struct AffineFactor {
  std::vector<double> normal;
  cplx shift{};
};

struct HornSystemData {
  int n = 0;                                 // number of variables
  std::vector<std::vector<AffineFactor>> P;  // coefficient factors, per index
  std::vector<std::vector<AffineFactor>> Q;  // shift factors, per index
  // an empty factor list stands for the constant polynomial 1
};

// candidate solution  phi(s) = t^s prod Gamma(<B,s>+d) / prod Gamma(<A,s>+c)
struct GammaProductData {
  std::vector<double> t;
  std::vector<AffineFactor> numerator;
  std::vector<AffineFactor> denominator;
};

// ------------------------------------------------------- exact arithmetic --

// complex numbers over the rationals: just enough field structure for the
// compatibility identity.  Division by zero is the only failure mode.
struct CRat {
  boost::multiprecision::cpp_rational re{}, im{};

  static CRat of(long long num, long long den = 1) {
    CRat r;
    r.re = boost::multiprecision::cpp_rational(num) /
           boost::multiprecision::cpp_rational(den);
    return r;
  }
  // exact: doubles are binary rationals
  static CRat from(cplx z) {
    return {boost::multiprecision::cpp_rational(z.real()),
            boost::multiprecision::cpp_rational(z.imag())};
  }
  cplx to_cplx() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }
  bool is_zero() const { return re == 0 && im == 0; }

  friend bool operator==(const CRat& a, const CRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend CRat operator+(const CRat& a, const CRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend CRat operator-(const CRat& a, const CRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
  friend CRat operator*(const CRat& a, const CRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CRat operator/(const CRat& a, const CRat& b) {
    const boost::multiprecision::cpp_rational den = b.re * b.re + b.im * b.im;
    if (den == 0) throw numeric_error("exact division by zero");
    return {(a.re * b.re + a.im * b.im) / den,
            (a.im * b.re - a.re * b.im) / den};
  }
};

// ------------------------------------------------------------- validation --

inline void require_valid(const HornSystemData& d) {
  if (d.n < 1) throw config_error("system data: need at least one variable");
  if (static_cast<int>(d.P.size()) != d.n ||
      static_cast<int>(d.Q.size()) != d.n)
    throw config_error(
        "system data: factor lists must have one entry per variable");
  const auto check_factor = [&](const AffineFactor& f) {
    if (static_cast<int>(f.normal.size()) != d.n)
      throw config_error("system data: factor normal has wrong dimension");
    bool nonzero = false;
    for (double c : f.normal) nonzero = nonzero || c != 0.0;
    if (!nonzero) throw config_error("system data: factor normal is zero");
  };
  for (int i = 0; i < d.n; ++i) {
    const auto& pi = d.P[static_cast<std::size_t>(i)];
    const auto& qi = d.Q[static_cast<std::size_t>(i)];
    for (const auto& f : pi) check_factor(f);
    for (const auto& f : qi) check_factor(f);
    // relative primality of P_i(s) and Q_i(s + e_i), checked on the factor
    // lists: no factor of the shifted Q_i may be proportional to a factor
    // of P_i, otherwise the common zero locus disconnects the lattice of
    // series coefficients and the ratio recursion degenerates
    for (const auto& f : pi) {
      std::size_t j0 = 0;
      while (f.normal[j0] == 0.0) ++j0;
      for (const auto& g : qi) {
        const double k = g.normal[j0] / f.normal[j0];
        if (k == 0.0) continue;
        bool prop = true;
        for (int j = 0; j < d.n && prop; ++j)
          prop = g.normal[static_cast<std::size_t>(j)] ==
                 k * f.normal[static_cast<std::size_t>(j)];
        const cplx gshift = g.shift + g.normal[static_cast<std::size_t>(i)];
        if (prop && gshift == k * f.shift)
          throw config_error(
              "system data: P_i shares a factor with the shifted Q_i");
      }
    }
  }
}

// ------------------------------------------------------------- evaluation --

namespace detail {

inline cplx affine_eval(const AffineFactor& f, const std::vector<cplx>& s) {
  cplx v = f.shift;
  for (std::size_t j = 0; j < s.size(); ++j) v += f.normal[j] * s[j];
  return v;
}

inline CRat affine_eval(const AffineFactor& f, const std::vector<CRat>& s) {
  CRat v = CRat::from(f.shift);
  for (std::size_t j = 0; j < s.size(); ++j) {
    CRat c;
    c.re = boost::multiprecision::cpp_rational(f.normal[j]);
    v = v + c * s[j];
  }
  return v;
}

template <class C>
C poly_eval(const std::vector<AffineFactor>& fs, const std::vector<C>& s,
            const C& one) {
  C p = one;
  for (const auto& f : fs) p = p * affine_eval(f, s);
  return p;
}

template <class C>
std::vector<C> negated(std::vector<C> s) {
  for (auto& v : s) v = -v;
  return s;
}

template <class C>
std::vector<C> shifted(std::vector<C> s, int i, const C& one) {
  s[static_cast<std::size_t>(i - 1)] = s[static_cast<std::size_t>(i - 1)] + one;
  return s;
}

inline bool is_zero(const cplx& z) { return z == cplx{}; }
inline bool is_zero(const CRat& z) { return z.is_zero(); }

inline cplx to_cplx_of(const cplx& z) { return z; }
inline cplx to_cplx_of(const CRat& z) { return z.to_cplx(); }

template <class C>
void require_ratio_args(const HornSystemData& d, int i,
                        const std::vector<C>& s) {
  require_valid(d);
  if (i < 1 || i > d.n) throw config_error("ratio index out of range");
  if (static_cast<int>(s.size()) != d.n)
    throw config_error("ratio sample has wrong dimension");
}

template <class C>
C ratio_impl(const HornSystemData& d, int i, const std::vector<C>& s,
             const C& one) {
  require_ratio_args(d, i, s);
  const C q = poly_eval(d.Q[static_cast<std::size_t>(i - 1)], negated(s), one);
  const C p = poly_eval(d.P[static_cast<std::size_t>(i - 1)],
                        negated(shifted(s, i, one)), one);
  if (is_zero(p)) throw numeric_error("ratio_R: pole of the coefficient ratio");
  return q / p;
}

}  // namespace detail

// R_i(s) = Q_i(-s) / P_i(-(s + e_i)), with a 1-based direction index.
// A vanishing denominator is reported as a numeric_error.
inline cplx ratio_R(const HornSystemData& d, int i, const std::vector<cplx>& s) {
  return detail::ratio_impl<cplx>(d, i, s, cplx(1.0));
}

inline CRat ratio_R(const HornSystemData& d, int i, const std::vector<CRat>& s) {
  return detail::ratio_impl<CRat>(d, i, s, CRat::of(1));
}

// ---------------------------------------------------------- compatibility --

struct CompatibilityReport {
  bool compatible = false;
  double max_defect = 0.0;  // worst relative deviation seen at a usable sample
  int used = 0;             // (sample, pair) evaluations that produced a value
  int skipped = 0;          // evaluations abandoned at a ratio pole
};

namespace detail {

inline double rel_defect(cplx lhs, cplx rhs) {
  const double scale =
      std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

template <class C>
CompatibilityReport compat_impl(const HornSystemData& d,
                                const std::vector<std::vector<C>>& samples,
                                const C& one, double tol, bool exact) {
  require_valid(d);
  CompatibilityReport rep;
  if (d.n == 1) {  // no pairs to test
    rep.compatible = true;
    return rep;
  }
  bool all_equal = true;
  for (const auto& s : samples) {
    if (static_cast<int>(s.size()) != d.n)
      throw config_error("compatibility sample has wrong dimension");
    for (int i = 1; i <= d.n; ++i)
      for (int j = i + 1; j <= d.n; ++j) {
        try {
          const C lhs =
              ratio_R(d, i, shifted(s, j, one)) * ratio_R(d, j, s);
          const C rhs =
              ratio_R(d, j, shifted(s, i, one)) * ratio_R(d, i, s);
          if (!(is_zero(lhs - rhs))) all_equal = false;
          rep.max_defect = std::max(
              rep.max_defect, rel_defect(to_cplx_of(lhs), to_cplx_of(rhs)));
          ++rep.used;
        } catch (const numeric_error&) {
          ++rep.skipped;
        }
      }
  }
  if (rep.used == 0)
    throw numeric_error(
        "compatibility check inconclusive: every sample hit a pole");
  rep.compatible = exact ? all_equal : rep.max_defect <= tol;
  return rep;
}

}  // namespace detail

// Checks R_i(s+e_j) R_j(s) = R_j(s+e_i) R_i(s) for all pairs i < j at the
// supplied samples.  Samples where a ratio hits a pole are skipped; if all
// of them do, the check is inconclusive and reported as a numeric_error.
inline CompatibilityReport check_compatibility(
    const HornSystemData& d, const std::vector<std::vector<cplx>>& samples,
    double tol = 1e-12) {
  return detail::compat_impl<cplx>(d, samples, cplx(1.0), tol, false);
}

// rational samples: the identity is decided exactly, with no tolerance
inline CompatibilityReport check_compatibility(
    const HornSystemData& d, const std::vector<std::vector<CRat>>& samples) {
  return detail::compat_impl<CRat>(d, samples, CRat::of(1), 0.0, true);
}

// ------------------------------------------------------ solution checking --

struct SolutionReport {
  double max_defect = 0.0;  // worst |ratio - 1| over usable (sample, i) pairs
  int used = 0;
  int skipped = 0;  // pairs abandoned at a gamma pole or a vanishing side
};

// optional extra multiplier m(s); any m with m(s + e_i) = m(s) must leave
// the defect unchanged, which a caller can probe by supplying one
using PeriodicFactor = std::function<cplx(const std::vector<cplx>&)>;

// Checks P_i(-(s+e_i)) phi(s+e_i) = Q_i(-s) phi(s) at the samples, with the
// gamma factors handled as log-gamma differences so that only the bounded
// log of the two-sided ratio is ever exponentiated.  Samples that land on a
// gamma pole (or make either side vanish) are skipped and counted; if every
// sample is skipped the check is inconclusive and raises a numeric_error.
inline SolutionReport verify_gamma_solution(
    const HornSystemData& d, const GammaProductData& phi,
    const std::vector<std::vector<cplx>>& samples,
    const PeriodicFactor& periodic = {}) {
  require_valid(d);
  if (static_cast<int>(phi.t.size()) != d.n)
    throw config_error("gamma product: t has wrong dimension");
  for (const auto& f : phi.numerator)
    if (static_cast<int>(f.normal.size()) != d.n)
      throw config_error("gamma product: factor normal has wrong dimension");
  for (const auto& f : phi.denominator)
    if (static_cast<int>(f.normal.size()) != d.n)
      throw config_error("gamma product: factor normal has wrong dimension");
  for (double ti : phi.t)
    if (ti == 0.0) throw config_error("gamma product: t entry is zero");

  SolutionReport rep;
  for (const auto& s : samples) {
    if (static_cast<int>(s.size()) != d.n)
      throw config_error("solution sample has wrong dimension");
    for (int i = 1; i <= d.n; ++i) {
      try {
        const auto sp = detail::shifted(s, i, cplx(1.0));
        const cplx p = detail::poly_eval(d.P[static_cast<std::size_t>(i - 1)],
                                         detail::negated(sp), cplx(1.0));
        const cplx q = detail::poly_eval(d.Q[static_cast<std::size_t>(i - 1)],
                                         detail::negated(s), cplx(1.0));
        if (detail::is_zero(p) || detail::is_zero(q))
          throw numeric_error("vanishing side");
        // log of  P_i(-(s+e_i)) phi(s+e_i) / (Q_i(-s) phi(s));  branch cuts
        // in the individual logs do not matter because only exp(D) is used
        cplx D = std::log(p) - std::log(q) +
                 std::log(cplx(phi.t[static_cast<std::size_t>(i - 1)]));
        for (const auto& f : phi.numerator) {
          const cplx arg = detail::affine_eval(f, s);
          D += log_gamma(arg + f.normal[static_cast<std::size_t>(i - 1)]) -
               log_gamma(arg);
        }
        for (const auto& f : phi.denominator) {
          const cplx arg = detail::affine_eval(f, s);
          D -= log_gamma(arg + f.normal[static_cast<std::size_t>(i - 1)]) -
               log_gamma(arg);
        }
        if (periodic) {
          const cplx m0 = periodic(s), m1 = periodic(sp);
          if (detail::is_zero(m0) || detail::is_zero(m1))
            throw numeric_error("vanishing periodic factor");
          D += std::log(m1) - std::log(m0);
        }
        rep.max_defect = std::max(rep.max_defect, std::abs(std::exp(D) - 1.0));
        ++rep.used;
      } catch (const numeric_error&) {
        ++rep.skipped;
      }
    }
  }
  if (rep.used == 0)
    throw numeric_error(
        "solution check inconclusive: every sample hit a pole");
  return rep;
}

// --------------------------------------------- pinned rank-4 system data --

// difference data of the second-order series system in standard argument
// order (series variables x, y; parameters a, d):
//   P_1 = (2 th_x - th_y + a)(2 th_x - th_y + a + 1),
//   Q_1 = th_x (th_x + d - 1),
//   P_2 = 1,
//   Q_2 = th_y (2 th_x - th_y + a).
inline HornSystemData h10_difference_data(cplx a, cplx d) {
  HornSystemData sys;
  sys.n = 2;
  sys.P = {{{{2.0, -1.0}, a}, {{2.0, -1.0}, a + 1.0}}, {}};
  sys.Q = {{{{1.0, 0.0}, cplx(0.0)}, {{1.0, 0.0}, d - 1.0}},
           {{{0.0, 1.0}, cplx(0.0)}, {{2.0, -1.0}, a}}};
  return sys;
}

// the same system with the two arguments swapped, as it lives under the
// double contour integral on x < 0 < y:
//   P_1 = 1,                                    Q_1 = th_x (2 th_y - th_x + a),
//   P_2 = (2 th_y - th_x + a)(2 th_y - th_x + a + 1),
//   Q_2 = th_y (th_y + d - 1).
inline HornSystemData h10_contour_difference_data(cplx a, cplx d) {
  HornSystemData sys;
  sys.n = 2;
  sys.P = {{}, {{{-1.0, 2.0}, a}, {{-1.0, 2.0}, a + 1.0}}};
  sys.Q = {{{{1.0, 0.0}, cplx(0.0)}, {{-1.0, 2.0}, a}},
           {{{0.0, 1.0}, cplx(0.0)}, {{0.0, 1.0}, d - 1.0}}};
  return sys;
}

// gamma-product solution of the contour-order system: the integrand of the
// double contour integral,
//   (-1)^{s1}  Gamma(s1) Gamma(s1 - 2 s2 + a) Gamma(s2) Gamma(s2 - d + 1),
// where the geometric factor t = (-1, 1) carries the sign that the contour
// integral itself absorbs into (-x)^{-s1}
inline GammaProductData h10_contour_solution(cplx a, cplx d) {
  GammaProductData phi;
  phi.t = {-1.0, 1.0};
  phi.numerator = {{{1.0, 0.0}, cplx(0.0)},
                   {{1.0, -2.0}, a},
                   {{0.0, 1.0}, cplx(0.0)},
                   {{0.0, 1.0}, 1.0 - d}};
  return phi;
}

}  // namespace gwhit
