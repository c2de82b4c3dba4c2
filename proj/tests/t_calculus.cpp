// SPDX-License-Identifier: MIT
//
// Jet arithmetic and the finite-difference oracle: eigenrelations, Leibniz,
// chain rules, and the two-route agreement property on random fields.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "gwhit/finite_diff.hpp"
#include "gwhit/jets.hpp"

using namespace gwhit;

namespace {

std::mt19937_64 rng(20260818u);

double uni(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Point random_point() {
  return {uni(0.5, 2.0), uni(0.5, 2.0), uni(0.5, 2.0), uni(0.5, 2.0), uni(-1.0, 1.0),
          uni(-1.0, 1.0)};
}

// relative agreement with the jet's own magnitude as scale
void check_close(cplx a, cplx b, double scale, double tol) {
  const double denom = std::max({1e-300, scale, std::abs(a), std::abs(b)});
  CHECK(std::abs(a - b) <= tol * denom);
}

}  // namespace

TEST_CASE("packed Hessian layout is a symmetric upper triangle") {
  using J = Jet2<cplx, 4>;
  int seen[J::nhess] = {};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const int p = J::hpos(i, j);
      REQUIRE(p >= 0);
      REQUIRE(p < J::nhess);
      CHECK(p == J::hpos(j, i));
      if (j >= i) ++seen[p];
    }
  for (int c : seen) CHECK(c == 1);  // each unordered pair hit exactly once
}

TEST_CASE("seeds: constants, multiplicative and additive coordinates") {
  const auto c = Jet6::constant(cplx(3.25, -1.0));
  CHECK(c.v == cplx(3.25, -1.0));
  CHECK(max_abs(c) == std::abs(cplx(3.25, -1.0)));
  for (auto& gi : c.g) CHECK(gi == cplx(0));

  const auto a = Jet6::theta_var(cplx(1.7), 2);
  CHECK(a.v == cplx(1.7));
  CHECK(a.g[2] == cplx(1.7));
  CHECK(a.hess(2, 2) == cplx(1.7));
  CHECK(a.g[0] == cplx(0));
  CHECK(a.hess(2, 3) == cplx(0));

  const auto u = Jet6::linear_var(cplx(-0.4), slot_u);
  CHECK(u.v == cplx(-0.4));
  CHECK(u.g[slot_u] == cplx(1));
  CHECK(u.hess(slot_u, slot_u) == cplx(0));
}

TEST_CASE("theta eigenrelation: theta a^s = s a^s through jets") {
  const cplx s(1.37, -0.52);
  const auto a = Jet6::theta_var(cplx(1.83), 0);
  const auto f = pow(a, s);
  check_close(f.g[0], s * f.v, std::abs(f.v), 1e-15);
  check_close(f.hess(0, 0), s * s * f.v, std::abs(f.v), 1e-15);
  // other slots untouched
  CHECK(f.g[3] == cplx(0));
  CHECK(f.hess(1, 2) == cplx(0));
}

TEST_CASE("Leibniz rule in jet products") {
  for (int trial = 0; trial < 20; ++trial) {
    const Point p = random_point();
    const auto c = jet_coords(p);
    const auto f = pow(c[0], cplx(0.7, 0.3)) * exp(c[4] * c[1]);
    const auto g = log(c[2]) + c[5] * c[5] * c[3];
    const auto fg = f * g;
    for (int i = 0; i < 6; ++i)
      check_close(fg.g[i], f.g[i] * g.v + f.v * g.g[i], max_abs(fg), 1e-14);
    for (int i = 0; i < 6; ++i)
      for (int j = i; j < 6; ++j)
        check_close(fg.hess(i, j),
                    f.hess(i, j) * g.v + f.g[i] * g.g[j] + f.g[j] * g.g[i] + f.v * g.hess(i, j),
                    max_abs(fg), 1e-14);
  }
}

TEST_CASE("compose2 matches direct jet arithmetic") {
  const Point p = random_point();
  const auto c = jet_coords(p);
  const auto x = c[0] * c[4];  // a1*u
  const auto y = c[1] + c[5];  // a2+v
  // F(x,y) = x^2 y + sin(y)
  const cplx xv = x.v, yv = y.v;
  const auto via_compose =
      compose2(x, y, xv * xv * yv + std::sin(yv), 2.0 * xv * yv, xv * xv + std::cos(yv),
               2.0 * yv, 2.0 * xv, -std::sin(yv));
  const auto direct = x * x * y + sin(y);
  check_close(via_compose.v, direct.v, max_abs(direct), 1e-14);
  for (int i = 0; i < 6; ++i) check_close(via_compose.g[i], direct.g[i], max_abs(direct), 1e-14);
  for (int i = 0; i < Jet6::nhess; ++i)
    check_close(via_compose.h[i], direct.h[i], max_abs(direct), 1e-14);
}

TEST_CASE("fd_derivative: Euler eigenfunction and trivial directions") {
  const double s = 1.62;
  auto f = [&](const Point& q) { return cplx(std::pow(q.a1, s)); };
  Point p;
  p.a1 = 2.0;

  const cplx th = fd_derivative(f, p, {Deriv::Th_a1});
  CHECK(std::abs(th - s * std::pow(2.0, s)) <= 1e-8 * std::pow(2.0, s));

  const cplx th2 = fd_derivative(f, p, {Deriv::Th_a1, Deriv::Th_a1});
  CHECK(std::abs(th2 - s * s * std::pow(2.0, s)) <= 1e-8 * std::pow(2.0, s));

  // u-independent field: the pure-u stencil cancels identically; the mixed
  // word only up to accumulation roundoff over the 1/h^2 scale
  CHECK(fd_derivative(f, p, {Deriv::D_u}) == cplx(0));
  CHECK(std::abs(fd_derivative(f, p, {Deriv::D_u, Deriv::Th_a1})) <= 1e-6);
}

TEST_CASE("fd_derivative contract errors") {
  auto f = [](const Point&) { return cplx(1.0); };
  Point p;
  CHECK_THROWS_AS(fd_derivative(f, p, {Deriv::D_u, Deriv::D_v, Deriv::D_u}), config_error);
  p.a3 = 0.0;
  CHECK_THROWS_AS(fd_derivative(f, p, {Deriv::D_u}), numeric_error);
}

// --------------------------------------------------------------------------
// Two-route property: jets and finite differences agree to 1e-6 relative on
// 100 random points for each registered elementary-function family.  Each
// probe is a single generic expression evaluated once on complex scalars
// (finite differences) and once on jets.
// --------------------------------------------------------------------------

namespace {

template <class Probe>
void two_route_family(const char* name, Probe probe, int npoints = 100) {
  CAPTURE(name);
  auto plain = [&](const Point& q) {
    return probe(cplx(q.a1), cplx(q.a2), cplx(q.a3), cplx(q.a4), cplx(q.u), cplx(q.v));
  };
  for (int n = 0; n < npoints; ++n) {
    const Point p = random_point();
    const Jet6 jet =
        jet_lift([&](const std::array<Jet6, 6>& c) { return probe(c[0], c[1], c[2], c[3], c[4], c[5]); }, p);
    const double scale = max_abs(jet);
    for (int i = 0; i < 6; ++i) {
      const auto d = static_cast<Deriv>(i);
      check_close(jet.g[i], fd_derivative(plain, p, {d}), scale, 1e-6);
      for (int j = i; j < 6; ++j)
        check_close(jet.hess(i, j), fd_derivative(plain, p, {d, static_cast<Deriv>(j)}), scale,
                    1e-6);
    }
  }
}

}  // namespace

TEST_CASE("jet vs finite-difference agreement per function family") {
  two_route_family("monomial", [](auto a1, auto a2, auto a3, auto a4, auto u, auto v) {
    return pow(a1, cplx(0.83, 0.2)) * pow(a2, -1.31) * pow(a3, 2.0) * pow(a4, cplx(-0.5, 1.0)) +
           0.0 * u * v;
  });
  two_route_family("exponential", [](auto a1, auto a2, auto a3, auto a4, auto u, auto v) {
    return exp(-(a1 + 2.0 * a2 + 0.5 * a3 + a4) + 0.3 * u - 0.7 * v);
  });
  two_route_family("logarithmic", [](auto a1, auto a2, auto a3, auto a4, auto u, auto v) {
    return log(a1) * log(a2 * a3) * (1.0 + u * u) + a4 * v;
  });
  two_route_family("trigonometric", [](auto a1, auto a2, auto a3, auto a4, auto u, auto v) {
    return sin(a1 + u * a2) + cos(v * a3) * a4;
  });
  two_route_family("rational", [](auto a1, auto a2, auto a3, auto a4, auto u, auto v) {
    return (v - u) / (a2 / a1 + a4 / a3) + 1.0 / (a1 * a4);
  });
  two_route_family("gaussian probe", [](auto a1, auto a2, auto a3, auto a4, auto u, auto v) {
    const auto l1 = log(a1), l2 = log(a2), l3 = log(a3), l4 = log(a4);
    return exp(-(l1 * l1 + l2 * l2 + l3 * l3 + l4 * l4) - u * u - v * v) * (1.0 + a3);
  });
  two_route_family("square root", [](auto a1, auto a2, auto a3, auto a4, auto u, auto v) {
    return sqrt(a1 * a4 + a2 * a2) * pow(a3, 1.3) * exp(u * v);
  });
}

TEST_CASE("jet_lift with an active-coordinate mask freezes the rest") {
  const Point p = random_point();
  auto field = [](const std::array<Jet6, 6>& c) {
    return c[0] * c[4] + pow(c[1], 0.5) * c[5] + c[2] * c[3];
  };
  const Jet6 full = jet_lift(field, p);
  const Jet6 masked = jet_lift(field, p, {true, true, false, false, true, false});
  CHECK(masked.v == full.v);
  CHECK(masked.g[2] == cplx(0));
  CHECK(masked.g[3] == cplx(0));
  CHECK(masked.g[slot_v] == cplx(0));
  CHECK(masked.g[0] == full.g[0]);
  CHECK(masked.hess(0, slot_u) == full.hess(0, slot_u));
  CHECK(masked.hess(2, 3) == cplx(0));
}
