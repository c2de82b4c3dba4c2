// SPDX-License-Identifier: MIT
//
// Multiplicative coordinate charts adapted to the solution spaces, and the
// closed-form solution atoms written in them.  Each covered case has a chart
// that turns the torus variables (a1..a4, u, v) into coordinates (x1..x6) in
// which the solutions factor as a monomial prefactor times classical special
// functions: modified Bessel factors for the rank-one cases and the double
// hypergeometric series for the open-orbit case.  An atom stores the chart
// it lives in, the complex exponents of its prefactor, and its transcendental
// factors with their arguments spelled out as monomials in the chart
// coordinates; evaluation lifts everything to second-order jets so the same
// object feeds both value tables and differential-operator residuals.

#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "gwhit/bessel.hpp"
#include "gwhit/common.hpp"
#include "gwhit/horn_series.hpp"
#include "gwhit/jets.hpp"

namespace gwhit {

// Chart identifiers.  I1 and I0 are the two charts of the family-I cases
// (generic parameter on and off); II covers both family-II cases; the five
// III charts differ only in which neighbour ratios are taken.
enum class MapId { I1, I0, II, IIIa, IIIb, IIIc, IIId, IIIe };

inline std::string to_string(MapId m) {
  switch (m) {
    case MapId::I1: return "I1";
    case MapId::I0: return "I0";
    case MapId::II: return "II";
    case MapId::IIIa: return "IIIa";
    case MapId::IIIb: return "IIIb";
    case MapId::IIIc: return "IIIc";
    case MapId::IIId: return "IIId";
    case MapId::IIIe: return "IIIe";
  }
  throw config_error("unknown chart id");
}

inline MapId parse_map_id(const std::string& s) {
  for (MapId m : {MapId::I1, MapId::I0, MapId::II, MapId::IIIa, MapId::IIIb,
                  MapId::IIIc, MapId::IIId, MapId::IIIe})
    if (to_string(m) == s) return m;
  throw config_error("unknown chart id '" + s + "'");
}

// Human-readable statement of the injectivity domain.  Outside it the chart
// either fails to separate points or its Jacobian vanishes.
inline const char* chart_domain(MapId m) {
  switch (m) {
    case MapId::I1: return "a1..a4 > 0 and v - u > 0";
    case MapId::I0: return "a1..a4 > 0 and v > 0";
    default: return "a1..a4 > 0";
  }
}

inline bool chart_admits(MapId m, const Point& p) {
  if (!(p.a1 > 0.0 && p.a2 > 0.0 && p.a3 > 0.0 && p.a4 > 0.0)) return false;
  if (m == MapId::I1) return p.v - p.u > 0.0;
  if (m == MapId::I0) return p.v > 0.0;
  return true;
}

// Forward chart as second-order jets over the torus coordinates.  The a-slots
// carry scale derivatives (the flow of a d/da), the u,v slots plain ones; a
// chart coordinate is then ready for monomial powers and for the chain rule
// into its transcendental factors.
inline std::array<Jet6, 6> chart_jets(MapId m, const Point& p) {
  if (!chart_admits(m, p))
    throw config_error("chart " + to_string(m) + ": point outside its domain (" +
                       chart_domain(m) + ")");
  const auto c = jet_coords(p);
  const Jet6 &a1 = c[0], &a2 = c[1], &a3 = c[2], &a4 = c[3], &u = c[4], &v = c[5];
  switch (m) {
    case MapId::I1: {
      const Jet6 dvu = v - u;
      const Jet6 r32 = a3 / a2, r42 = a4 / a2, r31 = a3 / a1;
      const Jet6 x1 = a1 * a2 * a3 * a4;
      const Jet6 x2 =
          (r32 * r32 * dvu * dvu + r42 * r42 + r31 * r31) * cplx(-pi * pi, 0.0);
      const Jet6 x4 = (a1 * a3) / (a2 * a4);
      const Jet6 x5 = (a1 * a4) / (a2 * a3);
      // x3 is the inverse square of a sum of three positive terms; it stays
      // inside the convergence margin of the series factors exactly when that
      // sum is large, which the samplers enforce.
      const Jet6 s = x4 * dvu * dvu + x5 + reciprocal(x5);
      return {x1, x2, reciprocal(s * s), x4, x5, u};
    }
    case MapId::I0: {
      const Jet6 x3 = a4 * a4 + a3 * a3 * v * v;
      const Jet6 x4 = (a3 * a3 * a4 * a4) / x3;
      return {a1, a2, x3, x4, a4 / a3, u};
    }
    case MapId::II:
      return {a1 * a2, a2 / a1, a3 * a4, a4 / a3, u, v};
    case MapId::IIIa:
      return {a2 / a1, a1 * a2, a4 / a3, a3 * a4, u, v};
    case MapId::IIIb:
      return {a2 / a1, a1 * a2, a3, a4, u, v};
    case MapId::IIIc:
      return {a1, a3 / a2, a2 * a3, a4, u, v};
    case MapId::IIId:
      return {a1, a2, a4 / a3, a3 * a4, u, v};
    case MapId::IIIe:
      return {a1, a2, a3, a4, u, v};
  }
  throw config_error("unknown chart id");
}

inline std::array<double, 6> chart_forward(MapId m, const Point& p) {
  const auto x = chart_jets(m, p);
  std::array<double, 6> r{};
  for (int i = 0; i < 6; ++i) r[i] = x[i].v.real();
  return r;
}

// Determinant of the chart differential in the scale frame (a d/da for the
// torus slots).  The plain-coordinate Jacobian differs by the positive factor
// a1 a2 a3 a4, so nonvanishing statements transfer verbatim.
inline double chart_jacobian(MapId m, const Point& p) {
  const auto x = chart_jets(m, p);
  Eigen::Matrix<double, 6, 6> j;
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) j(i, k) = x[i].g[k].real();
  return j.determinant();
}

// Closed-form inverse on the image of the injectivity domain.  Throws on
// coordinate vectors that no admissible point produces.
inline Point chart_inverse(MapId m, const std::array<double, 6>& x) {
  auto need = [&](bool ok, const char* what) {
    if (!ok)
      throw config_error("chart " + to_string(m) + " inverse: " + what);
  };
  auto need_positive = [&](int n) {
    for (int i = 0; i < n; ++i)
      if (!(x[static_cast<std::size_t>(i)] > 0.0))
        throw config_error("chart " + to_string(m) +
                           " inverse: leading coordinates must be positive");
  };
  Point p;
  switch (m) {
    case MapId::I1: {
      need(x[0] > 0.0 && x[2] > 0.0 && x[3] > 0.0 && x[4] > 0.0,
           "x1, x3, x4, x5 must be positive");
      need(x[1] < 0.0, "x2 must be negative");
      const double r = std::sqrt(x[3] * x[4]);  // a1/a2
      const double s = std::sqrt(x[3] / x[4]);  // a3/a4
      const double dd = (1.0 / std::sqrt(x[2]) - x[4] - 1.0 / x[4]) / x[3];
      need(dd > 0.0, "x3 is too large for the given x4, x5");
      const double d = std::sqrt(dd);
      const double ww =
          -x[1] / (pi * pi * (dd + 1.0 / (s * s) + 1.0 / (r * r)));
      const double a2 = std::pow(x[0] * s / (r * ww), 0.25);
      p.a2 = a2;
      p.a1 = r * a2;
      p.a3 = std::sqrt(ww) * a2;
      p.a4 = p.a3 / s;
      p.u = x[5];
      p.v = x[5] + d;
      return p;
    }
    case MapId::I0: {
      need_positive(5);
      p.a1 = x[0];
      p.a2 = x[1];
      const double prod = std::sqrt(x[2] * x[3]);  // a3 a4
      p.a3 = std::sqrt(prod / x[4]);
      p.a4 = x[4] * p.a3;
      const double vv = (x[2] - p.a4 * p.a4) / (p.a3 * p.a3);
      need(vv > 0.0, "x3 must exceed the square of the recovered a4");
      p.v = std::sqrt(vv);
      p.u = x[5];
      return p;
    }
    case MapId::II:
      need_positive(4);
      p.a1 = std::sqrt(x[0] / x[1]);
      p.a2 = std::sqrt(x[0] * x[1]);
      p.a3 = std::sqrt(x[2] / x[3]);
      p.a4 = std::sqrt(x[2] * x[3]);
      p.u = x[4];
      p.v = x[5];
      return p;
    case MapId::IIIa:
      need_positive(4);
      p.a1 = std::sqrt(x[1] / x[0]);
      p.a2 = std::sqrt(x[0] * x[1]);
      p.a3 = std::sqrt(x[3] / x[2]);
      p.a4 = std::sqrt(x[2] * x[3]);
      p.u = x[4];
      p.v = x[5];
      return p;
    case MapId::IIIb:
      need_positive(4);
      p.a1 = std::sqrt(x[1] / x[0]);
      p.a2 = std::sqrt(x[0] * x[1]);
      p.a3 = x[2];
      p.a4 = x[3];
      p.u = x[4];
      p.v = x[5];
      return p;
    case MapId::IIIc:
      need_positive(4);
      p.a1 = x[0];
      p.a2 = std::sqrt(x[2] / x[1]);
      p.a3 = std::sqrt(x[1] * x[2]);
      p.a4 = x[3];
      p.u = x[4];
      p.v = x[5];
      return p;
    case MapId::IIId:
      need_positive(4);
      p.a1 = x[0];
      p.a2 = x[1];
      p.a3 = std::sqrt(x[3] / x[2]);
      p.a4 = std::sqrt(x[2] * x[3]);
      p.u = x[4];
      p.v = x[5];
      return p;
    case MapId::IIIe:
      need_positive(4);
      p.a1 = x[0];
      p.a2 = x[1];
      p.a3 = x[2];
      p.a4 = x[3];
      p.u = x[4];
      p.v = x[5];
      return p;
  }
  throw config_error("unknown chart id");
}

// ---------------------------------------------------------------------------
// solution atoms

enum class FactorKind { none, bessel_i, bessel_k, h10, h10_tilde };

inline std::string to_string(FactorKind k) {
  switch (k) {
    case FactorKind::none: return "none";
    case FactorKind::bessel_i: return "BesselI";
    case FactorKind::bessel_k: return "BesselK";
    case FactorKind::h10: return "H10";
    case FactorKind::h10_tilde: return "H10tilde";
  }
  throw config_error("unknown factor kind");
}

inline FactorKind parse_factor_kind(const std::string& s) {
  for (FactorKind k : {FactorKind::none, FactorKind::bessel_i,
                       FactorKind::bessel_k, FactorKind::h10,
                       FactorKind::h10_tilde})
    if (to_string(k) == s) return k;
  throw config_error("unknown factor kind '" + s + "'");
}

// A factor argument: coeff * prod_i (+-x_i)^{pw_i}, with the sign flipped
// where neg is set so that fractional powers always see a positive base.
// Integer powers of signed coordinates (the series arguments that are
// genuinely negative on the domain) bypass the branch logic.
struct ArgSpec {
  double coeff = 1.0;
  std::array<double, 6> pw{};
  std::array<bool, 6> neg{};
};

struct AtomFactor {
  FactorKind kind = FactorKind::none;
  cplx p1{}, p2{};  // Bessel order in p1; series parameters in p1, p2
  ArgSpec arg1{}, arg2{};
};

struct SolutionAtom {
  MapId map = MapId::IIIe;
  std::string label;
  std::array<cplx, 6> exponents{};
  std::array<bool, 6> neg{};
  std::vector<AtomFactor> factors;
};

namespace detail {

inline Jet6 atom_base(const std::array<Jet6, 6>& x, int i, bool flip) {
  return flip ? -x[static_cast<std::size_t>(i)] : x[static_cast<std::size_t>(i)];
}

inline Jet6 arg_jet(const ArgSpec& a, const std::array<Jet6, 6>& x) {
  Jet6 r = Jet6::constant(cplx(a.coeff, 0.0));
  for (int i = 0; i < 6; ++i) {
    const double e = a.pw[static_cast<std::size_t>(i)];
    if (e == 0.0) continue;
    const Jet6 base = atom_base(x, i, a.neg[static_cast<std::size_t>(i)]);
    if (e == 1.0) {
      r = r * base;
    } else if (e == 2.0) {
      r = r * base * base;
    } else {
      if (!(base.v.real() > 0.0))
        throw numeric_error(
            "solution atom: fractional power of a nonpositive argument");
      r = r * pow(base, cplx(e, 0.0));
    }
  }
  return r;
}

}  // namespace detail

// Second-order jet of an atom over the torus coordinates.  Throws the chart's
// domain error outside the chart, and a numeric error when a prefactor base
// fails to be positive (the atoms are only claimed on the chart image).
inline Jet6 eval_atom_jet(const SolutionAtom& s, const Point& p) {
  const auto x = chart_jets(s.map, p);
  Jet6 r = Jet6::constant(cplx(1.0, 0.0));
  for (int i = 0; i < 6; ++i) {
    const cplx e = s.exponents[static_cast<std::size_t>(i)];
    if (e == cplx(0.0, 0.0)) continue;
    const Jet6 base = detail::atom_base(x, i, s.neg[static_cast<std::size_t>(i)]);
    if (!(base.v.real() > 0.0))
      throw numeric_error("solution atom '" + s.label + "': prefactor base x" +
                          std::to_string(i + 1) +
                          " is not positive at this point");
    r = r * pow(base, e);
  }
  for (const AtomFactor& f : s.factors) {
    switch (f.kind) {
      case FactorKind::none:
        break;
      case FactorKind::bessel_i:
        r = r * bessel_I_jet(f.p1, detail::arg_jet(f.arg1, x));
        break;
      case FactorKind::bessel_k:
        r = r * bessel_K_jet(f.p1, detail::arg_jet(f.arg1, x));
        break;
      case FactorKind::h10: {
        const Jet6 xx = detail::arg_jet(f.arg1, x);
        const Jet6 yy = detail::arg_jet(f.arg2, x);
        const SeriesJet sj = h10_jet(f.p1, f.p2, xx.v, yy.v);
        r = r * compose2(xx, yy, sj.f, sj.fx, sj.fy, sj.fxx, sj.fxy, sj.fyy);
        break;
      }
      case FactorKind::h10_tilde: {
        const Jet6 xx = detail::arg_jet(f.arg1, x);
        const Jet6 yy = detail::arg_jet(f.arg2, x);
        const SeriesJet sj = h10t_jet(f.p1, f.p2, xx.v, yy.v);
        r = r * compose2(xx, yy, sj.f, sj.fx, sj.fy, sj.fxx, sj.fxy, sj.fyy);
        break;
      }
    }
  }
  return r;
}

inline cplx eval_atom_value(const SolutionAtom& s, const Point& p) {
  return eval_atom_jet(s, p).v;
}

// ---------------------------------------------------------------------------
// JSON encodings

namespace detail {

inline nlohmann::json cplx_json(const cplx& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

inline cplx json_cplx(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw config_error("complex value: expected [re, im]");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const MapId& m) { j = to_string(m); }
inline void from_json(const nlohmann::json& j, MapId& m) {
  m = parse_map_id(j.get<std::string>());
}

inline void to_json(nlohmann::json& j, const FactorKind& k) { j = to_string(k); }
inline void from_json(const nlohmann::json& j, FactorKind& k) {
  k = parse_factor_kind(j.get<std::string>());
}

inline void to_json(nlohmann::json& j, const ArgSpec& a) {
  j = nlohmann::json{{"coeff", a.coeff}, {"pw", a.pw}, {"neg", a.neg}};
}

inline void from_json(const nlohmann::json& j, ArgSpec& a) {
  try {
    a.coeff = j.at("coeff").get<double>();
    a.pw = j.at("pw").get<std::array<double, 6>>();
    a.neg = j.at("neg").get<std::array<bool, 6>>();
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("argument monomial: ") + e.what());
  }
}

inline void to_json(nlohmann::json& j, const AtomFactor& f) {
  j = nlohmann::json{{"kind", f.kind},
                     {"p1", detail::cplx_json(f.p1)},
                     {"p2", detail::cplx_json(f.p2)},
                     {"arg1", f.arg1},
                     {"arg2", f.arg2}};
}

inline void from_json(const nlohmann::json& j, AtomFactor& f) {
  try {
    f.kind = j.at("kind").get<FactorKind>();
    f.p1 = detail::json_cplx(j.at("p1"));
    f.p2 = detail::json_cplx(j.at("p2"));
    f.arg1 = j.at("arg1").get<ArgSpec>();
    f.arg2 = j.at("arg2").get<ArgSpec>();
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("atom factor: ") + e.what());
  }
}

inline void to_json(nlohmann::json& j, const SolutionAtom& s) {
  nlohmann::json exps = nlohmann::json::array();
  for (const cplx& e : s.exponents) exps.push_back(detail::cplx_json(e));
  j = nlohmann::json{{"map", s.map},
                     {"label", s.label},
                     {"exponents", exps},
                     {"neg", s.neg},
                     {"factors", s.factors}};
}

inline void from_json(const nlohmann::json& j, SolutionAtom& s) {
  try {
    s.map = j.at("map").get<MapId>();
    s.label = j.at("label").get<std::string>();
    const auto& exps = j.at("exponents");
    if (!exps.is_array() || exps.size() != 6)
      throw config_error("solution atom: expected six exponents");
    for (std::size_t i = 0; i < 6; ++i)
      s.exponents[i] = detail::json_cplx(exps[i]);
    s.neg = j.at("neg").get<std::array<bool, 6>>();
    s.factors = j.at("factors").get<std::vector<AtomFactor>>();
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("solution atom: ") + e.what());
  }
}

}  // namespace gwhit
