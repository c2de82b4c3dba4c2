// SPDX-License-Identifier: MIT
//
// The symbolic realization route.  Each strictly-lower matrix generator
// acts, through the character and the torus coordinates, as one term of
// the operator grammar in terms.hpp; the diagonal generators act as the
// logarithmic derivations theta_1..theta_4.  The eleven generator words
// are then multiplied out by Leibniz normal ordering and divided by the
// monomial prefactor that the hardcoded display strips off.
//
// The output must agree with systems.hpp coefficient for coefficient.
// Random jets probe every coefficient of every row at once, so the test
// comparison is an equivalence check of the two routes, not a sampling
// argument.
//
// The composition convention: in a product the rightmost factor acts
// first, so op_mul(A, B, lr) applies B and then A, and the Leibniz
// derivative terms fall on the left factor's letters.  The only place a
// letter actually differentiates a coefficient in a covered case is the
// (2-4) word of family II, where d/du passes the linear factor L and
// shifts the row constant by one.

#pragma once

#include <array>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwhit/common.hpp"
#include "gwhit/systems.hpp"
#include "gwhit/terms.hpp"

namespace gwhit {

// derivative rule for the linear factor L, constant on each family
inline LRule l_rule(CaseFamily fam, const std::array<int, 3>& eps) {
  switch (fam) {
  case CaseFamily::I:
    return {cplx(-eps[0], 0.0), cplx(1.0, 0.0)};  // L = v - e1*u
  case CaseFamily::II:
    return {cplx(-eps[0], 0.0), cplx(0.0, 0.0)};  // L = e3 - e1*u
  default:
    return {cplx(0.0, 0.0), cplx(0.0, 0.0)};      // L = 1
  }
}

// one row of a realized system, tagged with its (i-j) label
struct LabeledOp {
  std::string label;
  Op op;
};

namespace detail {

inline Op letter(cplx k, std::array<int, 4> ea, int eL, D1 d = D1::Id) {
  if (k == cplx(0.0, 0.0)) return {};
  return {OpTerm{Mono{k, ea, eL}, d, D1::Id}};
}

// the six strictly-lower generators in realized form; a vanishing action
// is an empty sum
struct RealizedLetters {
  Op e21, e31, e41, e32, e42, e43;
};

inline RealizedLetters realized_letters(CaseFamily fam, const std::array<int, 3>& eps) {
  RealizedLetters r;
  switch (fam) {
  case CaseFamily::I: {
    const cplx e(eps[0], 0.0);
    r.e21 = letter(cplx(1.0, 0.0), {-1, 1, 0, 0}, 0, D1::Du);
    r.e31 = letter(e * two_pi_i, {-1, 0, 1, 0}, 0);
    r.e41 = {};
    r.e32 = letter(two_pi_i, {0, -1, 1, 0}, 1);
    r.e42 = letter(two_pi_i, {0, -1, 0, 1}, 0);
    r.e43 = letter(cplx(1.0, 0.0), {0, 0, -1, 1}, 0, D1::Dv);
    break;
  }
  case CaseFamily::II: {
    const cplx e1(eps[0], 0.0), e2(eps[1], 0.0);
    r.e21 = letter(e2 * two_pi_i, {-1, 1, 0, 0}, 0);
    r.e31 = {};
    r.e41 = {};
    r.e32 = letter(cplx(1.0, 0.0), {0, -1, 1, 0}, 0, D1::Du);
    r.e42 = letter(e1 * two_pi_i, {0, -1, 0, 1}, 0);
    r.e43 = letter(two_pi_i, {0, 0, -1, 1}, 1);
    break;
  }
  default: {
    const cplx e1(eps[0], 0.0), e2(eps[1], 0.0), e3(eps[2], 0.0);
    r.e21 = letter(e1 * two_pi_i, {-1, 1, 0, 0}, 0);
    r.e31 = {};
    r.e41 = {};
    r.e32 = letter(e2 * two_pi_i, {0, -1, 1, 0}, 0);
    r.e42 = {};
    r.e43 = letter(e3 * two_pi_i, {0, 0, -1, 1}, 0);
    break;
  }
  }
  return r;
}

// monomial stripped off each word before comparison, indexed by the full
// eleven-row order; rows without an entry are compared as produced
inline std::array<std::optional<Mono>, 11> word_divisors(CaseFamily fam,
                                                         const std::array<int, 3>& eps) {
  std::array<std::optional<Mono>, 11> d;
  const cplx tpi = two_pi_i;
  const cplx tpi2 = tpi * tpi;
  switch (fam) {
  case CaseFamily::I:
    d[1] = Mono{cplx(1.0, 0.0), {-1, 1, 0, 0}, 0};
    d[2] = Mono{tpi, {-1, 0, 1, 0}, 0};
    d[3] = Mono{tpi, {-1, 0, 0, 1}, 0};
    d[5] = Mono{tpi, {0, -1, 1, 0}, 0};
    d[6] = Mono{tpi, {0, -1, 0, 1}, 0};
    d[8] = Mono{cplx(1.0, 0.0), {0, 0, -1, 1}, 0};
    break;
  case CaseFamily::II:
    d[1] = Mono{tpi, {-1, 1, 0, 0}, 0};
    // the (1-3) prefactor carries the second epsilon; it is nonzero on
    // every covered case of the family, and realized_system refuses the
    // uncovered one before reaching this table
    d[2] = Mono{cplx(eps[1], 0.0) * tpi, {-1, 0, 1, 0}, 0};
    d[3] = Mono{tpi2, {-1, 0, 0, 1}, 0};
    d[6] = Mono{tpi, {0, -1, 0, 1}, 0};
    d[8] = Mono{tpi, {0, 0, -1, 1}, 0};
    break;
  default:
    d[1] = Mono{tpi, {-1, 1, 0, 0}, 0};
    d[2] = Mono{tpi2, {-1, 0, 1, 0}, 0};
    d[5] = Mono{tpi, {0, -1, 1, 0}, 0};
    d[6] = Mono{tpi2, {0, -1, 0, 1}, 0};
    d[8] = Mono{tpi, {0, 0, -1, 1}, 0};
    break;
  }
  return d;
}

}  // namespace detail

// Multiply out the generator words for a covered case and strip the
// display prefactors.  Row labels and order match row_labels(family);
// for family III the (1-4) word realizes to the empty sum and is dropped
// (anything else is reported as a configuration fault).
inline std::vector<LabeledOp> realized_system(CaseTag tag, int k, const SpectralParam& sp) {
  require_covered(tag);
  if (k != 1 && k != 2) throw config_error("parabolic index k must be 1 or 2");
  const CaseFamily fam = family(tag);
  const std::array<int, 3> eps = epsilons(tag);
  const LRule lr = l_rule(fam, eps);
  const detail::RealizedLetters g = detail::realized_letters(fam, eps);

  const cplx c3 = sp.l1 + sp.l2 + cplx(k - 3, 0.0);
  const cplx c2 = c3 + 1.0, c1 = c3 + 2.0, c0 = c3 + 3.0;
  const cplx cK = sp.l1 * (sp.l2 + cplx(k, 0.0));
  const cplx cZ = cplx(k, 0.0) * sp.l1 + cplx(4 - k, 0.0) * sp.l2;

  const Op t1 = detail::letter(cplx(1.0, 0.0), {0, 0, 0, 0}, 0, D1::Th1);
  const Op t2 = detail::letter(cplx(1.0, 0.0), {0, 0, 0, 0}, 0, D1::Th2);
  const Op t3 = detail::letter(cplx(1.0, 0.0), {0, 0, 0, 0}, 0, D1::Th3);
  const Op t4 = detail::letter(cplx(1.0, 0.0), {0, 0, 0, 0}, 0, D1::Th4);

  const auto mul = [&lr](const Op& a, const Op& b) { return op_mul(a, b, lr); };
  const auto sum = [](std::initializer_list<Op> parts) {
    Op r;
    for (const Op& p : parts) r = op_add(std::move(r), p);
    return r;
  };
  const cplx m1(-1.0, 0.0);

  std::array<Op, 11> w;
  // (1-1)
  w[0] = sum({mul(t1, t1), mul(g.e21, g.e21), mul(g.e31, g.e31), mul(g.e41, g.e41),
              op_scale(t1, -c3), op_scale(sum({t2, t3, t4}), m1), const_op(cK)});
  // (1-2)
  w[1] = sum({mul(g.e21, sum({t1, t2, const_op(-c3)})), mul(g.e32, g.e31),
              mul(g.e42, g.e41)});
  // (1-3)
  w[2] = sum({mul(g.e31, sum({t1, t3, const_op(-c2)})), mul(g.e32, g.e21),
              mul(g.e43, g.e41)});
  // (1-4)
  w[3] = sum({mul(g.e41, sum({t1, t4, const_op(-c2)})), mul(g.e42, g.e21),
              mul(g.e31, g.e43)});
  // (2-2)
  w[4] = sum({mul(t2, t2), op_scale(t2, -c2), mul(g.e21, g.e21), mul(g.e32, g.e32),
              mul(g.e42, g.e42), op_scale(sum({t3, t4}), m1), const_op(cK)});
  // (2-3)
  w[5] = sum({mul(g.e32, sum({t2, t3, const_op(-c2)})), mul(g.e21, g.e31),
              mul(g.e43, g.e42)});
  // (2-4)
  w[6] = sum({mul(g.e42, sum({t2, t4, const_op(-c2)})), mul(g.e21, g.e41),
              mul(g.e32, g.e43)});
  // (3-3)
  w[7] = sum({mul(t3, t3), op_scale(t3, -c1), mul(g.e31, g.e31), mul(g.e32, g.e32),
              mul(g.e43, g.e43), op_scale(t4, m1), const_op(cK)});
  // (3-4)
  w[8] = sum({mul(g.e43, sum({t3, t4, const_op(-c1)})), mul(g.e31, g.e41),
              mul(g.e32, g.e42)});
  // (4-4)
  w[9] = sum({mul(t4, t4), op_scale(t4, -c0), mul(g.e41, g.e41), mul(g.e42, g.e42),
              mul(g.e43, g.e43), const_op(cK)});
  // central
  w[10] = sum({t1, t2, t3, t4, const_op(-cZ)});

  const auto div = detail::word_divisors(fam, eps);
  const std::vector<std::string> labels = row_labels(fam);
  std::vector<LabeledOp> rows;
  rows.reserve(labels.size());
  std::size_t li = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (fam == CaseFamily::III && i == 3) {
      if (!w[i].empty())
        throw config_error("family III word (1-4) failed to realize to zero");
      continue;
    }
    Op row = div[i] ? op_div_mono(std::move(w[i]), *div[i]) : std::move(w[i]);
    rows.push_back({labels[li++], canonical(std::move(row))});
  }
  return rows;
}

// Evaluate every row of a realized system on one jet at one point.
inline std::vector<Residual> realized_rows(const std::vector<LabeledOp>& sys, CaseTag tag,
                                           const Jet6& f, const Point& p) {
  const cplx lval(linear_factor(family(tag), epsilons(tag), p), 0.0);
  std::vector<Residual> out;
  out.reserve(sys.size());
  for (const LabeledOp& r : sys) out.push_back(eval_op(r.op, f, p, lval));
  return out;
}

// ------------------------------------------------------------------ json --

inline void to_json(nlohmann::json& j, const LabeledOp& r) {
  j = nlohmann::json{{"label", r.label}, {"terms", r.op}};
}

inline void from_json(const nlohmann::json& j, LabeledOp& r) {
  try {
    r.label = j.at("label").get<std::string>();
    r.op = canonical(j.at("terms").get<Op>());
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("operator row: ") + e.what());
  }
}

}  // namespace gwhit
