// SPDX-License-Identifier: MIT
//
// Closed-form solution bases, case by case.  For each covered case tag and
// parabolic index this header supplies the certified dimension of the
// moderate-growth solution space and, when it is nonzero, a basis of
// solution atoms in the chart of that case: power prefactors times modified
// Bessel factors on the degenerate strata, and the four-fold series basis of
// the (1,1)-type system in the open stratum.  basis() packages the atoms
// with growth verdicts along the case rays and the tempered-subspace
// witness; combinations singled out by their decay (the integral-represented
// one in the open stratum) are classified alongside the atoms.
//
// Transcription variants that look plausible but fail residual
// certification are kept in a separate catalog, rejected_variants(), so
// certification reports can show the defect instead of silently dropping
// them.

#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gwhit/atoms.hpp"
#include "gwhit/common.hpp"
#include "gwhit/growth.hpp"
#include "gwhit/horn_basis.hpp"
#include "gwhit/mellin_barnes.hpp"

namespace gwhit {

// certified dimensions of the moderate-growth solution spaces; the entries
// not listed by case are zero for one of two reasons certified separately
// (an algebraic obstruction row or an incompatible pair of rows)
inline int dimension(CaseTag t, int k) {
  require_covered(t);
  if (k != 1 && k != 2)
    throw config_error("parabolic index k must be 1 or 2, got " + std::to_string(k));
  const bool k2 = (k == 2);
  switch (t) {
    case CaseTag::I1: return k2 ? 4 : 0;
    case CaseTag::I2: return k2 ? 4 : 2;
    case CaseTag::II1: return 0;
    case CaseTag::II2: return k2 ? 4 : 0;
    case CaseTag::II3: return k2 ? 4 : 2;
    case CaseTag::III1: return 0;
    case CaseTag::III2: return 0;
    case CaseTag::III3: return k2 ? 4 : 0;
    case CaseTag::III4: return 0;
    case CaseTag::III5: return k2 ? 4 : 2;
    case CaseTag::III6: return k2 ? 4 : 2;
    case CaseTag::III7: return k2 ? 4 : 2;
    case CaseTag::III8: return k2 ? 6 : 4;
    case CaseTag::II4: break;
  }
  throw uncovered_error("case II4 is not covered");
}

namespace detail {

inline ArgSpec chart_monomial(double coeff,
                              std::initializer_list<std::pair<int, double>> powers,
                              std::initializer_list<int> negated = {}) {
  ArgSpec a;
  a.coeff = coeff;
  for (const auto& pr : powers) a.pw[static_cast<std::size_t>(pr.first)] = pr.second;
  for (int i : negated) a.neg[static_cast<std::size_t>(i)] = true;
  return a;
}

inline SolutionAtom power_atom(MapId map, std::array<cplx, 4> e) {
  SolutionAtom s;
  s.map = map;
  for (int i = 0; i < 4; ++i) s.exponents[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
  return s;
}

// the I- and K-type companions sharing one prefactor and one argument
inline void push_bessel_pair(std::vector<SolutionAtom>& out, SolutionAtom shape,
                             cplx nu, const ArgSpec& z, const std::string& branch) {
  AtomFactor f;
  f.p1 = nu;
  f.arg1 = z;
  f.kind = FactorKind::bessel_i;
  shape.factors = {f};
  shape.label = branch.empty() ? "I" : branch + ":I";
  out.push_back(shape);
  f.kind = FactorKind::bessel_k;
  shape.factors = {f};
  shape.label = branch.empty() ? "K" : branch + ":K";
  out.push_back(shape);
}

// all four products of I/K factors at two independent arguments
inline void push_bessel_quad(std::vector<SolutionAtom>& out, const SolutionAtom& shape,
                             cplx nu, const ArgSpec& z1, const ArgSpec& z2) {
  static constexpr const char* names[4] = {"I*I", "I*K", "K*I", "K*K"};
  const FactorKind kinds[2] = {FactorKind::bessel_i, FactorKind::bessel_k};
  int n = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      SolutionAtom s = shape;
      AtomFactor f1, f2;
      f1.kind = kinds[i];
      f1.p1 = nu;
      f1.arg1 = z1;
      f2.kind = kinds[j];
      f2.p1 = nu;
      f2.arg1 = z2;
      s.factors = {f1, f2};
      s.label = names[n++];
      out.push_back(s);
    }
  }
}

}  // namespace detail

// basis atoms of the moderate-growth solution space in the chart of the case
inline std::vector<SolutionAtom> case_atoms(CaseTag t, int k, const SpectralParam& sp) {
  require_covered(t);
  if (k != 1 && k != 2)
    throw config_error("parabolic index k must be 1 or 2, got " + std::to_string(k));
  require_regular(sp);
  using detail::chart_monomial;
  using detail::power_atom;
  const cplx l1 = sp.l1, l2 = sp.l2;
  const cplx sum = l1 + l2, dif = sp.diff();
  const cplx one{1.0, 0.0}, half{0.5, 0.0};
  std::vector<SolutionAtom> out;

  switch (t) {
    case CaseTag::I1: {
      if (k == 1) break;
      // open stratum: the full series basis.  Shared prefactor
      // x1^{(l1+l2)/2} (-x2)^{1/2} x3^{(l1-l2)/4}; the series run in
      // (x3, x2) with x3 in (0, margin) and x2 < 0.
      const HornParams hp = horn_params(sp);
      const cplx a = hp.a, d = hp.d;
      const cplx ap = a + 2.0 * one - 2.0 * d, dp = 2.0 * one - d;
      SolutionAtom base = power_atom(MapId::I1, {sum * half, half, dif * 0.25});
      base.neg[1] = true;

      SolutionAtom s1 = base;
      s1.label = "F1";
      AtomFactor f;
      f.kind = FactorKind::h10;
      f.p1 = a;
      f.p2 = d;
      f.arg1 = chart_monomial(1.0, {{2, 1.0}});
      f.arg2 = chart_monomial(1.0, {{1, 1.0}});
      s1.factors = {f};

      SolutionAtom s2 = base;
      s2.label = "F2";
      s2.exponents[2] += one - d;
      f.p1 = ap;
      f.p2 = dp;
      s2.factors = {f};

      SolutionAtom s3 = base;
      s3.label = "F3";
      s3.exponents[1] += a;
      AtomFactor g;
      g.kind = FactorKind::h10_tilde;
      g.p1 = a;
      g.p2 = d;
      g.arg1 = chart_monomial(1.0, {{1, 1.0}});
      g.arg2 = chart_monomial(1.0, {{1, 2.0}, {2, 1.0}});
      s3.factors = {g};

      SolutionAtom s4 = base;
      s4.label = "F4";
      s4.exponents[1] += ap;
      s4.exponents[2] += one - d;
      g.p1 = ap;
      g.p2 = dp;
      s4.factors = {g};

      out = {s1, s2, s3, s4};
      break;
    }

    case CaseTag::I2: {
      // single Bessel factor in z = 2 pi sqrt(x3) / x2
      const ArgSpec z = chart_monomial(2.0 * pi, {{2, 0.5}, {1, -1.0}});
      if (k == 1) {
        SolutionAtom s = power_atom(
            MapId::I0, {l2, (sum - 2.0 * one) * half, sum * 0.25, (l2 + one) * half});
        detail::push_bessel_pair(out, s, (dif - 2.0 * one) * half, z, "");
      } else {
        SolutionAtom s1 = power_atom(
            MapId::I0, {l2, (sum - one) * half, (sum + one) * 0.25, l1 * half});
        detail::push_bessel_pair(out, s1, (dif - one) * half, z, "b1");
        SolutionAtom s2 = power_atom(MapId::I0, {l1 - 2.0 * one, (sum - one) * half,
                                                 (sum + one) * 0.25, (l2 + 2.0 * one) * half});
        detail::push_bessel_pair(out, s2, (dif - 3.0 * one) * half, z, "b2");
      }
      break;
    }

    case CaseTag::II2: {
      if (k == 1) break;
      SolutionAtom s =
          power_atom(MapId::II, {(sum - one) * half, half, (sum + one) * half, half});
      detail::push_bessel_quad(out, s, (dif - 2.0 * one) * half,
                               chart_monomial(2.0 * pi, {{1, 1.0}}),
                               chart_monomial(2.0 * pi, {{3, 1.0}}));
      break;
    }

    case CaseTag::II3: {
      const ArgSpec z = chart_monomial(2.0 * pi, {{1, 1.0}});
      if (k == 1) {
        SolutionAtom s = power_atom(
            MapId::II, {(sum - 2.0 * one) * half, half, l2 + one, cplx{}});
        detail::push_bessel_pair(out, s, (dif - 3.0 * one) * half, z, "");
      } else {
        const cplx nu = (dif - 2.0 * one) * half;
        SolutionAtom s1 = power_atom(MapId::II, {(sum - one) * half, half,
                                                 (sum + one) * half, (dif - one) * half});
        detail::push_bessel_pair(out, s1, nu, z, "b1");
        SolutionAtom s2 = power_atom(MapId::II, {(sum - one) * half, half,
                                                 (sum + one) * half, (3.0 * one - dif) * half});
        detail::push_bessel_pair(out, s2, nu, z, "b2");
      }
      break;
    }

    case CaseTag::III3: {
      if (k == 1) break;
      SolutionAtom s =
          power_atom(MapId::IIIa, {half, (sum - one) * half, half, (sum + one) * half});
      detail::push_bessel_quad(out, s, (dif - 2.0 * one) * half,
                               chart_monomial(2.0 * pi, {{0, 1.0}}),
                               chart_monomial(2.0 * pi, {{2, 1.0}}));
      break;
    }

    case CaseTag::III5: {
      const ArgSpec z = chart_monomial(2.0 * pi, {{0, 1.0}});
      if (k == 1) {
        SolutionAtom s = power_atom(
            MapId::IIIb, {half, (sum - 2.0 * one) * half, l2 + one, l2 + one});
        detail::push_bessel_pair(out, s, (dif - 3.0 * one) * half, z, "");
      } else {
        const cplx nu = (dif - 2.0 * one) * half;
        SolutionAtom s1 =
            power_atom(MapId::IIIb, {half, (sum - one) * half, l2 + one, l1});
        detail::push_bessel_pair(out, s1, nu, z, "b1");
        SolutionAtom s2 =
            power_atom(MapId::IIIb, {half, (sum - one) * half, l1 - one, l2 + 2.0 * one});
        detail::push_bessel_pair(out, s2, nu, z, "b2");
      }
      break;
    }

    case CaseTag::III6: {
      const ArgSpec z = chart_monomial(2.0 * pi, {{1, 1.0}});
      if (k == 1) {
        SolutionAtom s =
            power_atom(MapId::IIIc, {l2, half, (sum - one) * half, l2 + one});
        detail::push_bessel_pair(out, s, (dif - 2.0 * one) * half, z, "");
      } else {
        SolutionAtom s1 = power_atom(
            MapId::IIIc, {l1 - 2.0 * one, half, sum * half, l2 + 2.0 * one});
        detail::push_bessel_pair(out, s1, (dif - 3.0 * one) * half, z, "b1");
        SolutionAtom s2 = power_atom(MapId::IIIc, {l2, half, sum * half, l1});
        detail::push_bessel_pair(out, s2, (dif - one) * half, z, "b2");
      }
      break;
    }

    case CaseTag::III7: {
      const ArgSpec z = chart_monomial(2.0 * pi, {{2, 1.0}});
      if (k == 1) {
        SolutionAtom s = power_atom(MapId::IIId, {l2, l2, half, sum * half});
        detail::push_bessel_pair(out, s, (dif - one) * half, z, "");
      } else {
        const cplx nu = (dif - 2.0 * one) * half;
        SolutionAtom s1 =
            power_atom(MapId::IIId, {l2, l1 - one, half, (sum + one) * half});
        detail::push_bessel_pair(out, s1, nu, z, "b1");
        SolutionAtom s2 = power_atom(
            MapId::IIId, {l1 - 2.0 * one, l2 + one, half, (sum + one) * half});
        detail::push_bessel_pair(out, s2, nu, z, "b2");
      }
      break;
    }

    case CaseTag::III8: {
      // closed stratum: pure power solutions
      std::vector<std::array<cplx, 4>> exps;
      if (k == 1) {
        exps = {{l2, l2, l2, l1},
                {l2, l1 - 2.0 * one, l2 + one, l2 + one},
                {l1 - 3.0 * one, l2 + one, l2 + one, l2 + one},
                {l2, l2, l1 - one, l2 + one}};
      } else {
        exps = {{l2, l2, l1, l1},
                {l2, l1 - one, l2 + one, l1},
                {l1 - 2.0 * one, l2 + one, l2 + one, l1},
                {l2, l1 - one, l1 - one, l2 + 2.0 * one},
                {l1 - 2.0 * one, l2 + one, l1 - one, l2 + 2.0 * one},
                {l1 - 2.0 * one, l1 - 2.0 * one, l2 + 2.0 * one, l2 + 2.0 * one}};
      }
      int n = 0;
      for (const auto& e : exps) {
        SolutionAtom s = power_atom(MapId::IIIe, e);
        s.label = "m" + std::to_string(++n);
        out.push_back(s);
      }
      break;
    }

    // certified zero-dimensional entries
    case CaseTag::II1:
    case CaseTag::III1:
    case CaseTag::III2:
    case CaseTag::III4:
      break;

    case CaseTag::II4:
      throw uncovered_error("case II4 is not covered");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rejected transcription variants.  Each entry is a concrete atom that
// differs from the certified one in a single parameter or exponent; residual
// certification shows an O(1) defect for every one of them.

struct VariantAtom {
  SolutionAtom atom;
  std::string note;
};

inline std::vector<VariantAtom> rejected_variants(CaseTag t, int k, const SpectralParam& sp) {
  require_covered(t);
  if (k != 1 && k != 2)
    throw config_error("parabolic index k must be 1 or 2, got " + std::to_string(k));
  require_regular(sp);
  using detail::chart_monomial;
  using detail::power_atom;
  const cplx l1 = sp.l1, l2 = sp.l2;
  const cplx sum = l1 + l2, dif = sp.diff();
  const cplx one{1.0, 0.0}, half{0.5, 0.0};
  std::vector<VariantAtom> out;
  if (k != 2) return out;

  switch (t) {
    case CaseTag::I1: {
      const HornParams hp = horn_params(sp);
      const cplx a = hp.a, d = hp.d;
      const cplx ap = a + 2.0 * one - 2.0 * d, dp = 2.0 * one - d;
      SolutionAtom base = power_atom(MapId::I1, {sum * half, half, dif * 0.25});
      base.neg[1] = true;

      // second series solution with the extra power on -x2 instead of x3
      SolutionAtom v2 = base;
      v2.label = "F2:alt";
      v2.exponents[1] += one - d;
      AtomFactor f;
      f.kind = FactorKind::h10;
      f.p1 = ap;
      f.p2 = dp;
      f.arg1 = chart_monomial(1.0, {{2, 1.0}});
      f.arg2 = chart_monomial(1.0, {{1, 1.0}});
      v2.factors = {f};
      out.push_back({v2, "alternate F2 with the power 1-d moved to -x2; "
                         "fails residual certification"});

      // third solution with the roles of the two variables exchanged
      SolutionAtom v3 = base;
      v3.label = "F3:alt";
      v3.exponents[2] += a;
      AtomFactor g;
      g.kind = FactorKind::h10_tilde;
      g.p1 = a;
      g.p2 = d;
      g.arg1 = chart_monomial(1.0, {{2, 1.0}});
      g.arg2 = chart_monomial(1.0, {{2, 2.0}, {1, 1.0}});
      v3.factors = {g};
      out.push_back({v3, "alternate F3 transformed in x3 instead of x2; "
                         "fails residual certification"});

      // fourth solution with the first parameter shifted by one more unit
      SolutionAtom v4 = base;
      v4.label = "F4:alt";
      v4.exponents[1] += ap + one;
      v4.exponents[2] += one - d;
      g.p1 = ap + one;
      g.p2 = dp;
      g.arg1 = chart_monomial(1.0, {{1, 1.0}});
      g.arg2 = chart_monomial(1.0, {{1, 2.0}, {2, 1.0}});
      v4.factors = {g};
      out.push_back({v4, "alternate F4 with first parameter a+3-2d; "
                         "fails residual certification"});
      break;
    }

    case CaseTag::I2: {
      // second branch with the x4 exponent left unhalved
      SolutionAtom s = power_atom(MapId::I0, {l1 - 2.0 * one, (sum - one) * half,
                                              (sum + one) * 0.25, l2 + 2.0 * one});
      AtomFactor f;
      f.kind = FactorKind::bessel_k;
      f.p1 = (dif - 3.0 * one) * half;
      f.arg1 = chart_monomial(2.0 * pi, {{2, 0.5}, {1, -1.0}});
      s.factors = {f};
      s.label = "b2:K:alt";
      out.push_back({s, "alternate b2 with x4 exponent l2+2 instead of (l2+2)/2; "
                        "fails residual certification"});
      break;
    }

    case CaseTag::II2: {
      // mixed product with the second argument read off x3 instead of x4
      SolutionAtom s =
          power_atom(MapId::II, {(sum - one) * half, half, (sum + one) * half, half});
      AtomFactor f1, f2;
      f1.kind = FactorKind::bessel_i;
      f1.p1 = (dif - 2.0 * one) * half;
      f1.arg1 = chart_monomial(2.0 * pi, {{1, 1.0}});
      f2.kind = FactorKind::bessel_k;
      f2.p1 = f1.p1;
      f2.arg1 = chart_monomial(2.0 * pi, {{2, 1.0}});
      s.factors = {f1, f2};
      s.label = "I*K:alt";
      out.push_back({s, "alternate I*K with second argument 2 pi x3; "
                        "fails residual certification"});
      break;
    }

    case CaseTag::II3: {
      // first branch with exponents (l1+l2)/2 and (l1-l2)/2 on x3, x4
      SolutionAtom s = power_atom(
          MapId::II, {(sum - one) * half, half, sum * half, dif * half});
      AtomFactor f;
      f.kind = FactorKind::bessel_k;
      f.p1 = (dif - 2.0 * one) * half;
      f.arg1 = chart_monomial(2.0 * pi, {{1, 1.0}});
      s.factors = {f};
      s.label = "b1:K:alt";
      out.push_back({s, "alternate b1 with x3, x4 exponents (l1+l2)/2, (l1-l2)/2; "
                        "fails residual certification"});
      break;
    }

    case CaseTag::III6: {
      // second branch with order (l1-l2)/2 instead of (l1-l2-1)/2
      SolutionAtom s = power_atom(MapId::IIIc, {l2, half, sum * half, l1});
      AtomFactor f;
      f.kind = FactorKind::bessel_k;
      f.p1 = dif * half;
      f.arg1 = chart_monomial(2.0 * pi, {{1, 1.0}});
      s.factors = {f};
      s.label = "b2:K:alt";
      out.push_back({s, "alternate b2 with order (l1-l2)/2; "
                        "fails residual certification"});
      break;
    }

    case CaseTag::III7: {
      // second branch with x1 exponent l1^2 instead of l1-2
      SolutionAtom s =
          power_atom(MapId::IIId, {l1 * l1, l2 + one, half, (sum + one) * half});
      AtomFactor f;
      f.kind = FactorKind::bessel_k;
      f.p1 = (dif - 2.0 * one) * half;
      f.arg1 = chart_monomial(2.0 * pi, {{2, 1.0}});
      s.factors = {f};
      s.label = "b2:K:alt";
      out.push_back({s, "alternate b2 with x1 exponent l1^2; "
                        "fails residual certification"});
      break;
    }

    case CaseTag::III8: {
      // monomial with the x2, x4 exponents swapped against the certified one
      SolutionAtom s = power_atom(MapId::IIIe, {l1 - 2.0 * one, l1 - one, l2 + one, l1});
      s.label = "m:alt";
      out.push_back({s, "alternate monomial exponents (l1-2, l1-1, l2+1, l1); "
                        "fails residual certification"});
      break;
    }

    default:
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Case rays.  One shared base point per case; exponential rays drive the
// decisive factor argument, polynomial rays move only monomial directions.
// Small transverse speeds keep branch prefactors distinguishable where two
// branches share a Bessel order.

inline std::vector<Ray> case_rays(CaseTag t) {
  require_covered(t);
  using detail::chart_monomial;
  std::vector<Ray> rays;
  const Point base_ii{1.0, 0.8, 1.2, 1.8, 0.2, -0.4};
  switch (t) {
    case CaseTag::I1: {
      Ray r1;
      r1.name = "a3";
      r1.base = Point{1.4, 1.9, 0.16, 0.35, -0.2, 0.9};
      r1.speed = {0.0, 0.0, 1.0, 0.0};
      r1.tmax = 14.0;
      r1.exponential = true;
      r1.scale = chart_monomial(1.0, {{1, 1.0}}, {1});
      r1.weights = {0.0, 1.0};
      r1.subspace_ts = {8.0, 10.0, 12.0, 14.0};
      Ray r2 = r1;
      r2.name = "a4";
      r2.speed = {0.0, 0.0, 0.0, 1.0};
      r2.tmax = 8.0;
      r2.subspace_ts = {5.0, 6.0, 7.0, 8.0};
      // joint escape: both rays above send x3 to an edge of the chart, which
      // mutes combinations whose growing part carries a positive power of x3.
      // Moving a3 and a4 together pins x3 and drives -x2 like t^2, so that
      // part is exposed while the decaying solution keeps decaying.
      Ray r3 = r1;
      r3.name = "a3a4";
      r3.speed = {0.0, 0.0, 1.0, 1.0};
      r3.tmax = 10.0;
      r3.subspace_ts = {6.0, 8.0, 10.0};
      rays = {r1, r2, r3};
      break;
    }
    case CaseTag::I2: {
      Ray re;
      re.name = "a3a4";
      re.base = Point{1.2, 0.9, 0.7, 0.9, 0.3, 0.8};
      re.speed = {0.0, 0.0, 0.5, 1.0};
      re.tmax = 5.0;
      re.exponential = true;
      re.scale = chart_monomial(2.0 * pi, {{2, 0.5}, {1, -1.0}});
      Ray rp;
      rp.name = "a2";
      rp.base = re.base;
      rp.speed = {0.0, 1.0, 0.0, 0.0};
      rp.tmax = 6.0;
      rays = {re, rp};
      break;
    }
    case CaseTag::II2: {
      Ray r1;
      r1.name = "a2";
      r1.base = base_ii;
      r1.speed = {0.0, 1.0, 0.0, 0.0};
      r1.tmax = 5.0;
      r1.exponential = true;
      r1.scale = chart_monomial(2.0 * pi, {{1, 1.0}});
      Ray r2;
      r2.name = "a4";
      r2.base = base_ii;
      r2.speed = {0.0, 0.0, 0.0, 1.0};
      r2.tmax = 4.0;
      r2.exponential = true;
      r2.scale = chart_monomial(2.0 * pi, {{3, 1.0}});
      Ray r3;
      r3.name = "a2a4";
      r3.base = base_ii;
      r3.speed = {0.0, 1.0, 0.0, 1.0};
      r3.tmax = 3.0;
      r3.exponential = true;
      r3.scale = chart_monomial(2.0 * pi, {{1, 1.0}});
      rays = {r1, r2, r3};
      break;
    }
    case CaseTag::II3: {
      Ray re;
      re.name = "a2";
      re.base = base_ii;
      re.speed = {0.0, 1.0, 0.0, 0.3};
      re.tmax = 5.0;
      re.exponential = true;
      re.scale = chart_monomial(2.0 * pi, {{1, 1.0}});
      Ray rp;
      rp.name = "a4";
      rp.base = base_ii;
      rp.speed = {0.0, 0.0, 0.0, 1.0};
      rp.tmax = 6.0;
      rays = {re, rp};
      break;
    }
    case CaseTag::III3: {
      Ray r1;
      r1.name = "a2";
      r1.base = base_ii;
      r1.speed = {0.0, 1.0, 0.0, 0.0};
      r1.tmax = 5.0;
      r1.exponential = true;
      r1.scale = chart_monomial(2.0 * pi, {{0, 1.0}});
      Ray r2;
      r2.name = "a4";
      r2.base = base_ii;
      r2.speed = {0.0, 0.0, 0.0, 1.0};
      r2.tmax = 4.0;
      r2.exponential = true;
      r2.scale = chart_monomial(2.0 * pi, {{2, 1.0}});
      Ray r3;
      r3.name = "a2a4";
      r3.base = base_ii;
      r3.speed = {0.0, 1.0, 0.0, 1.0};
      r3.tmax = 3.0;
      r3.exponential = true;
      r3.scale = chart_monomial(2.0 * pi, {{0, 1.0}});
      rays = {r1, r2, r3};
      break;
    }
    case CaseTag::III5: {
      Ray re;
      re.name = "a2";
      re.base = base_ii;
      re.speed = {0.0, 1.0, 0.3, 0.0};
      re.tmax = 5.0;
      re.exponential = true;
      re.scale = chart_monomial(2.0 * pi, {{0, 1.0}});
      Ray rp;
      rp.name = "a3a4";
      rp.base = base_ii;
      rp.speed = {0.0, 0.0, 1.0, 1.0};
      rp.tmax = 6.0;
      rays = {re, rp};
      break;
    }
    case CaseTag::III6: {
      Ray re;
      re.name = "a3";
      re.base = base_ii;
      re.speed = {0.5, 0.0, 1.0, 0.0};
      re.tmax = 3.0;
      re.exponential = true;
      re.scale = chart_monomial(2.0 * pi, {{1, 1.0}});
      Ray rp;
      rp.name = "a1a4";
      rp.base = base_ii;
      rp.speed = {1.0, 0.0, 0.0, 1.0};
      rp.tmax = 6.0;
      rays = {re, rp};
      break;
    }
    case CaseTag::III7: {
      Ray re;
      re.name = "a4";
      re.base = base_ii;
      re.speed = {0.5, 0.0, 0.0, 1.0};
      re.tmax = 6.0;
      re.exponential = true;
      re.scale = chart_monomial(2.0 * pi, {{2, 1.0}});
      Ray rp;
      rp.name = "a1a2";
      rp.base = base_ii;
      rp.speed = {1.0, 1.0, 0.0, 0.0};
      rp.tmax = 6.0;
      rays = {re, rp};
      break;
    }
    case CaseTag::III8: {
      Ray r1;
      r1.name = "a1a3";
      r1.base = base_ii;
      r1.speed = {1.0, 0.0, 1.0, 0.0};
      r1.tmax = 6.0;
      Ray r2;
      r2.name = "a2a4";
      r2.base = base_ii;
      r2.speed = {0.0, 1.0, 0.0, 1.0};
      r2.tmax = 6.0;
      rays = {r1, r2};
      break;
    }
    // zero-dimensional cases keep an empty ray list
    case CaseTag::II1:
    case CaseTag::III1:
    case CaseTag::III2:
    case CaseTag::III4:
      break;
    case CaseTag::II4:
      throw uncovered_error("case II4 is not covered");
  }
  return rays;
}

// ---------------------------------------------------------------------------
// Basis report

struct BasisReport {
  CaseTag tag = CaseTag::III8;
  int k = 1;
  SpectralParam lambda;
  int dim = 0;
  std::vector<SolutionAtom> atoms;
  std::vector<GrowthReport> growth;  // one per atom, plus derived combinations
  SubspaceWitness tempered;
  bool has_mb = false;
  std::array<cplx, 4> mb_coeff{};  // integral combination in the series basis
};

namespace detail {

// coefficients of the integral-represented solution in the four-atom series
// basis, matched through value and scale-derivative moments at one point of
// the common domain
inline std::array<cplx, 4> mb_combination(const SpectralParam& sp) {
  const HornParams hp = horn_params(sp);
  ContourSpec cs = default_contour(hp.a, hp.d);
  cs.tmax = 16.0;
  cs.npoints = 321;
  const double x = 0.12, y = -3.7;
  const MbResult mr = mb_eval_standard(hp.a, hp.d, x, y, cs);
  return solve_in_basis(hp, x, y, {mr.value, mr.thx, mr.thy, mr.thxy});
}

}  // namespace detail

inline BasisReport basis(CaseTag t, int k, const SpectralParam& sp) {
  BasisReport rep;
  rep.tag = t;
  rep.k = k;
  rep.lambda = sp;
  rep.atoms = case_atoms(t, k, sp);
  rep.dim = dimension(t, k);
  if (rep.atoms.empty()) return rep;

  const auto rays = case_rays(t);
  const MapId map = rep.atoms.front().map;
  std::vector<std::function<cplx(const Point&)>> fields;
  fields.reserve(rep.atoms.size());
  for (const SolutionAtom& atom : rep.atoms)
    fields.emplace_back([atom](const Point& p) { return eval_atom_value(atom, p); });
  for (std::size_t i = 0; i < rep.atoms.size(); ++i)
    rep.growth.push_back(classify_growth(fields[i], rep.atoms[i].label, map, rays));

  if (t == CaseTag::I1 && k == 2) {
    rep.has_mb = true;
    rep.mb_coeff = detail::mb_combination(sp);
    const auto atoms = rep.atoms;
    const auto coeff = rep.mb_coeff;
    const std::function<cplx(const Point&)> combo = [atoms, coeff](const Point& p) {
      cplx v{};
      for (std::size_t i = 0; i < atoms.size(); ++i)
        v += coeff[i] * eval_atom_value(atoms[i], p);
      return v;
    };
    rep.growth.push_back(classify_growth(combo, "mb-combination", map, rays));
  }

  rep.tempered = tempered_subspace(fields, map, rays);
  return rep;
}

inline void to_json(nlohmann::json& j, const VariantAtom& v) {
  j = nlohmann::json{{"atom", v.atom}, {"note", v.note}};
}

inline void to_json(nlohmann::json& j, const BasisReport& r) {
  j = nlohmann::json{{"case", to_string(r.tag)},
                     {"k", r.k},
                     {"lambda", nlohmann::json{detail::cplx_json(r.lambda.l1),
                                               detail::cplx_json(r.lambda.l2)}},
                     {"dim", r.dim},
                     {"atoms", r.atoms},
                     {"growth", r.growth},
                     {"tempered", r.tempered}};
  if (r.has_mb) {
    nlohmann::json c = nlohmann::json::array();
    for (const cplx& z : r.mb_coeff) c.push_back(detail::cplx_json(z));
    j["mb_coeff"] = c;
  }
}

// the full certified dimension table, one row per covered case and index
inline std::string dimension_table_csv() {
  std::string out = "case,k,dim\n";
  for (CaseTag t : all_case_tags) {
    if (!covered(t)) continue;
    for (int k = 1; k <= 2; ++k)
      out += std::string(to_string(t)) + "," + std::to_string(k) + "," +
             std::to_string(dimension(t, k)) + "\n";
  }
  return out;
}

}  // namespace gwhit
