// SPDX-License-Identifier: MIT
//
// A small normal-ordered operator algebra for the annihilator generators.
// Every operator handled here is a finite sum of terms
//
//     k * a1^e1 a2^e2 a3^e3 a4^e4 * L^eL * D1 D2
//
// where L is the case-dependent linear factor (v - eps*u, eps3 - eps1*u,
// or absent) and each Di is one of the commuting derivation letters
// theta_{a1..a4}, d/du, d/dv, or nothing.  The generators are quadratic in
// the group letters, so words never need more than two derivation letters;
// a product that would exceed second order is a usage error and throws.
//
// Multiplication normal-orders on the fly: moving a derivation letter past
// a coefficient monomial emits the Leibniz correction (theta_i scales by
// the a_i-exponent; d/du and d/dv differentiate the L-power through the
// constants dL/du, dL/dv supplied by the caller).  Evaluation reads the
// required derivatives straight out of a second-order jet, so an operator
// applied to a jet costs one pass over its terms.

#pragma once

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "gwhit/common.hpp"
#include "gwhit/jets.hpp"

namespace gwhit {

// --------------------------------------------------------------- letters --

enum class D1 { Id, Du, Dv, Th1, Th2, Th3, Th4 };

inline const char* to_string(D1 d) {
  switch (d) {
  case D1::Id: return "id";
  case D1::Du: return "du";
  case D1::Dv: return "dv";
  case D1::Th1: return "th1";
  case D1::Th2: return "th2";
  case D1::Th3: return "th3";
  default: return "th4";
  }
}

inline D1 parse_d1(const std::string& s) {
  for (D1 d : {D1::Id, D1::Du, D1::Dv, D1::Th1, D1::Th2, D1::Th3, D1::Th4})
    if (s == to_string(d)) return d;
  throw config_error("operator term: unknown derivation letter '" + s + "'");
}

// jet slot carrying the letter's derivative; Id has no slot
inline int slot(D1 d) {
  switch (d) {
  case D1::Du: return 4;
  case D1::Dv: return 5;
  case D1::Th1: return 0;
  case D1::Th2: return 1;
  case D1::Th3: return 2;
  case D1::Th4: return 3;
  default: return -1;
  }
}

// ------------------------------------------------------------- monomials --

struct Mono {
  cplx k{1.0, 0.0};
  std::array<int, 4> ea{0, 0, 0, 0};
  int eL = 0;
};

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  r.k = a.k * b.k;
  for (int i = 0; i < 4; ++i) r.ea[i] = a.ea[i] + b.ea[i];
  r.eL = a.eL + b.eL;
  return r;
}

inline Mono mono_div(const Mono& a, const Mono& b) {
  Mono r;
  r.k = a.k / b.k;
  for (int i = 0; i < 4; ++i) r.ea[i] = a.ea[i] - b.ea[i];
  r.eL = a.eL - b.eL;
  return r;
}

// dL/du and dL/dv, constant within a case family
struct LRule {
  cplx du{0.0, 0.0}, dv{0.0, 0.0};
};

// derivative of a coefficient monomial by a single letter
inline Mono mono_derive(D1 d, const Mono& m, const LRule& lr) {
  Mono r = m;
  switch (d) {
  case D1::Id: return r;
  case D1::Du:
  case D1::Dv: {
    if (m.eL == 0) {
      r.k = cplx(0.0, 0.0);
      return r;
    }
    r.k = m.k * (d == D1::Du ? lr.du : lr.dv) * cplx(m.eL, 0.0);
    r.eL = m.eL - 1;
    return r;
  }
  case D1::Th1: r.k = m.k * cplx(m.ea[0], 0.0); return r;
  case D1::Th2: r.k = m.k * cplx(m.ea[1], 0.0); return r;
  case D1::Th3: r.k = m.k * cplx(m.ea[2], 0.0); return r;
  default: r.k = m.k * cplx(m.ea[3], 0.0); return r;
  }
}

// ----------------------------------------------------------------- terms --

// c * d1 d2 with the coefficient fully on the left.  The derivation
// letters commute with each other, so (d1, d2) is kept sorted with Id last.
struct OpTerm {
  Mono c;
  D1 d1 = D1::Id, d2 = D1::Id;

  int order() const {
    return (d1 != D1::Id ? 1 : 0) + (d2 != D1::Id ? 1 : 0);
  }
};

using Op = std::vector<OpTerm>;

inline void normalize_letters(OpTerm& t) {
  if (t.d1 == D1::Id && t.d2 != D1::Id) std::swap(t.d1, t.d2);
  if (t.d1 != D1::Id && t.d2 != D1::Id && static_cast<int>(t.d1) > static_cast<int>(t.d2))
    std::swap(t.d1, t.d2);
}

// sort terms, merge equal words, drop exactly-cancelled coefficients
inline Op canonical(Op op) {
  for (OpTerm& t : op) normalize_letters(t);
  std::sort(op.begin(), op.end(), [](const OpTerm& x, const OpTerm& y) {
    if (x.c.ea != y.c.ea) return x.c.ea < y.c.ea;
    if (x.c.eL != y.c.eL) return x.c.eL < y.c.eL;
    if (x.d1 != y.d1) return x.d1 < y.d1;
    return x.d2 < y.d2;
  });
  Op out;
  for (const OpTerm& t : op) {
    if (!out.empty()) {
      OpTerm& last = out.back();
      if (last.c.ea == t.c.ea && last.c.eL == t.c.eL && last.d1 == t.d1 &&
          last.d2 == t.d2) {
        last.c.k += t.c.k;
        continue;
      }
    }
    out.push_back(t);
  }
  std::erase_if(out, [](const OpTerm& t) { return t.c.k == cplx(0.0, 0.0); });
  return out;
}

inline Op op_add(Op a, const Op& b) {
  a.insert(a.end(), b.begin(), b.end());
  return canonical(std::move(a));
}

inline Op op_scale(Op a, cplx s) {
  for (OpTerm& t : a) t.c.k *= s;
  return canonical(std::move(a));
}

inline Op op_sub(Op a, const Op& b) {
  Op nb = b;
  for (OpTerm& t : nb) t.c.k = -t.c.k;
  return op_add(std::move(a), nb);
}

inline Op const_op(cplx k) { return {OpTerm{Mono{k, {0, 0, 0, 0}, 0}, D1::Id, D1::Id}}; }

// single term s * t; normal-orders by Leibniz, appending results to `out`
inline void op_term_mul(OpTerm s, OpTerm t, const LRule& lr, Op& out) {
  normalize_letters(s);
  normalize_letters(t);
  if (s.order() + t.order() > 2)
    throw config_error("operator product exceeds second order");
  const auto push = [&](Mono m, D1 d1, D1 d2) {
    if (m.k == cplx(0.0, 0.0)) return;
    OpTerm r{m, d1, d2};
    normalize_letters(r);
    out.push_back(r);
  };
  switch (s.order()) {
  case 0:
    push(mono_mul(s.c, t.c), t.d1, t.d2);
    return;
  case 1: {
    // d (c f) = c (d f) + (d c) f; t has at most one letter, held in t.d1
    push(mono_mul(s.c, t.c), s.d1, t.d1);
    push(mono_mul(s.c, mono_derive(s.d1, t.c, lr)), t.d1, t.d2);
    return;
  }
  default: {
    // d e (c f) = c d e f + (d c)(e f) + (e c)(d f) + (d e c) f
    push(mono_mul(s.c, t.c), s.d1, s.d2);
    push(mono_mul(s.c, mono_derive(s.d1, t.c, lr)), s.d2, D1::Id);
    push(mono_mul(s.c, mono_derive(s.d2, t.c, lr)), s.d1, D1::Id);
    push(mono_mul(s.c, mono_derive(s.d1, mono_derive(s.d2, t.c, lr), lr)),
         D1::Id, D1::Id);
    return;
  }
  }
}

inline Op op_mul(const Op& a, const Op& b, const LRule& lr) {
  Op out;
  for (const OpTerm& s : a)
    for (const OpTerm& t : b) op_term_mul(s, t, lr, out);
  return canonical(std::move(out));
}

// divide every coefficient by a monomial (used to strip the realization
// prefactor off a generator word)
inline Op op_div_mono(Op a, const Mono& m) {
  if (m.k == cplx(0.0, 0.0))
    throw config_error("operator division by a vanishing monomial");
  for (OpTerm& t : a) t.c = mono_div(t.c, m);
  return a;
}

// -------------------------------------------------------------- evaluate --

// Apply the operator to a second-order jet at a point; `lval` is the value
// of the linear factor L there.  Returns the summed value together with
// the largest single-term magnitude for relative-defect scaling.
inline Residual eval_op(const Op& op, const Jet6& f, const Point& p, cplx lval) {
  Residual r;
  for (const OpTerm& t : op) {
    cplx coef = t.c.k;
    for (int i = 0; i < 4; ++i)
      if (t.c.ea[i] != 0) coef *= std::pow(p.coord(i), t.c.ea[i]);
    if (t.c.eL > 0)
      for (int e = 0; e < t.c.eL; ++e) coef *= lval;
    else
      for (int e = 0; e < -t.c.eL; ++e) coef /= lval;
    cplx deriv;
    if (t.d1 == D1::Id)
      deriv = f.v;
    else if (t.d2 == D1::Id)
      deriv = f.g[static_cast<std::size_t>(slot(t.d1))];
    else
      deriv = f.hess(slot(t.d1), slot(t.d2));
    const cplx term = coef * deriv;
    r.value += term;
    r.scale = std::max(r.scale, std::abs(term));
  }
  return r;
}

// ------------------------------------------------------------------ json --

inline void to_json(nlohmann::json& j, const OpTerm& t) {
  nlohmann::json word = nlohmann::json::array();
  if (t.d1 != D1::Id) word.push_back(to_string(t.d1));
  if (t.d2 != D1::Id) word.push_back(to_string(t.d2));
  j = nlohmann::json{{"k", {t.c.k.real(), t.c.k.imag()}},
                     {"a", t.c.ea},
                     {"L", t.c.eL},
                     {"word", word}};
}

inline void from_json(const nlohmann::json& j, OpTerm& t) {
  try {
    const auto k = j.at("k").get<std::array<double, 2>>();
    t.c.k = cplx(k[0], k[1]);
    t.c.ea = j.at("a").get<std::array<int, 4>>();
    t.c.eL = j.at("L").get<int>();
    const auto word = j.at("word").get<std::vector<std::string>>();
    if (word.size() > 2)
      throw config_error("operator term: word longer than two letters");
    t.d1 = word.size() > 0 ? parse_d1(word[0]) : D1::Id;
    t.d2 = word.size() > 1 ? parse_d1(word[1]) : D1::Id;
    normalize_letters(t);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("operator term: ") + e.what());
  }
}

}  // namespace gwhit
