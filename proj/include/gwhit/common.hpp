// SPDX-License-Identifier: MIT
//
// Shared vocabulary of the library: coordinates, the spectral parameter,
// the conjugacy-case tags of the unipotent characters, and the error types
// that back the CLI exit-code contract.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gwhit {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// 2*pi*sqrt(-1), the frequency of every unipotent character below,
// and its square (real).
inline const cplx two_pi_i{0.0, 2.0 * pi};
inline constexpr double two_pi_i_sq = -4.0 * pi * pi;

// --------------------------------------------------------------- errors ---

// invalid configuration or arguments           (CLI exit code 2)
struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// numeric evaluation failure                   (CLI exit code 3)
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a (case, k) pair without a certified basis   (CLI exit code 4)
struct uncovered_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------ residuals ---

// A residual value together with the largest magnitude among the summands
// that produced it.  Dividing by the scale turns raw cancellation output
// into a meaningful relative defect: a true solution gives |value|/scale
// near roundoff no matter how large the individual operator terms are.
struct Residual {
  cplx value{};
  double scale = 0.0;

  double relative() const {
    return std::abs(value) / std::max(scale, 1e-300);
  }
};

// --------------------------------------------------------------- points ---

// Evaluation point: the split torus diag(a1,..,a4) with a_i > 0, plus the
// two unipotent coordinates (u, v) that survive at the character level.
struct Point {
  double a1 = 1.0, a2 = 1.0, a3 = 1.0, a4 = 1.0;
  double u = 0.0, v = 0.0;

  double coord(int i) const {
    switch (i) {
      case 0: return a1;
      case 1: return a2;
      case 2: return a3;
      case 3: return a4;
      case 4: return u;
      default: return v;
    }
  }
};

inline bool valid(const Point& p) {
  return p.a1 > 0.0 && p.a2 > 0.0 && p.a3 > 0.0 && p.a4 > 0.0 &&
         std::isfinite(p.u) && std::isfinite(p.v);
}

inline void require_valid(const Point& p) {
  if (!valid(p)) throw config_error("point outside domain: need a_i > 0 and finite u, v");
}

// ----------------------------------------------------------- parameters ---

// Character parameter lambda = (lambda1, lambda2).  Everything downstream
// assumes lambda1 - lambda2 is not an integer; distance to the nearest
// integer is tested with a fixed tolerance when the difference is real.
struct SpectralParam {
  cplx l1{}, l2{};
  cplx diff() const { return l1 - l2; }
};

inline constexpr double regularity_tol = 1e-8;

inline bool regular(const SpectralParam& s) {
  const cplx d = s.diff();
  if (std::abs(d.imag()) > regularity_tol) return true;
  return std::abs(d.real() - std::round(d.real())) > regularity_tol;
}

inline void require_regular(const SpectralParam& s) {
  if (!regular(s)) throw config_error("spectral parameter violates lambda1 - lambda2 not an integer");
}

// -------------------------------------------------------------- case tags --

// The fourteen conjugacy classes of induced unipotent characters.
enum class CaseTag {
  I1, I2,
  II1, II2, II3, II4,
  III1, III2, III3, III4, III5, III6, III7, III8,
};

enum class CaseFamily { I, II, III };

inline CaseFamily family(CaseTag t) {
  switch (t) {
    case CaseTag::I1:
    case CaseTag::I2: return CaseFamily::I;
    case CaseTag::II1:
    case CaseTag::II2:
    case CaseTag::II3:
    case CaseTag::II4: return CaseFamily::II;
    default: return CaseFamily::III;
  }
}

inline const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::I1: return "I1";
    case CaseTag::I2: return "I2";
    case CaseTag::II1: return "II1";
    case CaseTag::II2: return "II2";
    case CaseTag::II3: return "II3";
    case CaseTag::II4: return "II4";
    case CaseTag::III1: return "III1";
    case CaseTag::III2: return "III2";
    case CaseTag::III3: return "III3";
    case CaseTag::III4: return "III4";
    case CaseTag::III5: return "III5";
    case CaseTag::III6: return "III6";
    case CaseTag::III7: return "III7";
    default: return "III8";
  }
}

inline std::optional<CaseTag> parse_case_tag(std::string_view s) {
  using CT = CaseTag;
  static constexpr std::pair<std::string_view, CT> table[] = {
      {"I1", CT::I1},     {"I2", CT::I2},     {"II1", CT::II1},
      {"II2", CT::II2},   {"II3", CT::II3},   {"II4", CT::II4},
      {"III1", CT::III1}, {"III2", CT::III2}, {"III3", CT::III3},
      {"III4", CT::III4}, {"III5", CT::III5}, {"III6", CT::III6},
      {"III7", CT::III7}, {"III8", CT::III8},
  };
  for (const auto& [name, tag] : table)
    if (s == name) return tag;
  return std::nullopt;
}

inline constexpr std::array<CaseTag, 14> all_case_tags = {
    CaseTag::I1,   CaseTag::I2,   CaseTag::II1,  CaseTag::II2, CaseTag::II3,
    CaseTag::II4,  CaseTag::III1, CaseTag::III2, CaseTag::III3, CaseTag::III4,
    CaseTag::III5, CaseTag::III6, CaseTag::III7, CaseTag::III8,
};

// Epsilon tuple attached to each tag.  Family I uses only the first entry
// (epsilon in {1, 0}); families II and III use all three.
inline std::array<int, 3> epsilons(CaseTag t) {
  switch (t) {
    case CaseTag::I1: return {1, 0, 0};
    case CaseTag::I2: return {0, 0, 0};
    case CaseTag::II1: return {1, 1, 0};
    case CaseTag::II2: return {0, 1, 1};
    case CaseTag::II3: return {0, 1, 0};
    case CaseTag::II4: return {0, 0, 1};
    case CaseTag::III1: return {1, 1, 1};
    case CaseTag::III2: return {1, 1, 0};
    case CaseTag::III3: return {1, 0, 1};
    case CaseTag::III4: return {0, 1, 1};
    case CaseTag::III5: return {1, 0, 0};
    case CaseTag::III6: return {0, 1, 0};
    case CaseTag::III7: return {0, 0, 1};
    default: return {0, 0, 0};  // III8
  }
}

// II4 has no certified solution basis; everything else is covered.
inline bool covered(CaseTag t) { return t != CaseTag::II4; }

inline void require_covered(CaseTag t) {
  if (!covered(t))
    throw uncovered_error(std::string("no certified solution basis for case ") + to_string(t));
}

}  // namespace gwhit
