// SPDX-License-Identifier: MIT
//
// Nilpotent-radical checks: the bracket and pairing against the 4x4 matrix
// picture, the coadjoint closed form against frozen references and against
// matrix conjugation, the terminating BCH group law, radicals of the skew
// form, orbit classification with its invariants, subordinate-subalgebra
// decisions, and the covector / case-tag JSON round trip.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gwhit/json_io.hpp"
#include "gwhit/linalg.hpp"
#include "gwhit/nilpotent.hpp"
#include "support/reference_values.hpp"

using namespace gwhit;

namespace {

NilElement random_nil(std::mt19937& rng, double span = 2.0) {
  std::uniform_real_distribution<double> u(-span, span);
  return {u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
}

Covector random_covector(std::mt19937& rng, double span = 2.0) {
  std::uniform_real_distribution<double> u(-span, span);
  Covector l;
  l.alpha = u(rng);
  l.beta1 = u(rng);
  l.beta2 = u(rng);
  l.gamma1 = u(rng);
  l.gamma2 = u(rng);
  l.gamma3 = u(rng);
  return l;
}

// a random covector with exact zeros in the pattern of the requested kind
Covector random_of_kind(std::mt19937& rng, OrbitKind kind) {
  Covector l = random_covector(rng);
  std::uniform_real_distribution<double> mag(0.2, 2.0);
  std::bernoulli_distribution coin(0.5);
  switch (kind) {
  case OrbitKind::I:
    l.alpha = coin(rng) ? mag(rng) : -mag(rng);
    break;
  case OrbitKind::II:
    l.alpha = 0.0;
    if (coin(rng)) l.beta1 = 0.0;  // single-beta orbits are still kind II
    if (l.beta1 == 0.0 || coin(rng)) l.beta2 = (coin(rng) ? 1 : -1) * mag(rng);
    if (l.beta1 == 0.0 && l.beta2 == 0.0) l.beta1 = mag(rng);
    break;
  default:
    l.alpha = l.beta1 = l.beta2 = 0.0;
    break;
  }
  return l;
}

double max_coord_diff(const Covector& a, const Covector& b) {
  double m = std::abs(a.alpha - b.alpha);
  m = std::max(m, std::abs(a.beta1 - b.beta1));
  m = std::max(m, std::abs(a.beta2 - b.beta2));
  m = std::max(m, std::abs(a.gamma1 - b.gamma1));
  m = std::max(m, std::abs(a.gamma2 - b.gamma2));
  return std::max(m, std::abs(a.gamma3 - b.gamma3));
}

double max_coord_diff(const NilElement& a, const NilElement& b) {
  return (coords(a) - coords(b)).cwiseAbs().maxCoeff();
}

// orthogonal projector onto the column span, for basis-free span equality
Eigen::MatrixXd projector(const Eigen::MatrixXd& basis) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
  const Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(basis.rows(), basis.cols());
  return q * q.transpose();
}

}  // namespace

TEST_CASE("bracket and pairing agree with the 4x4 matrix picture") {
  std::mt19937 rng(912001u);
  for (int trial = 0; trial < 50; ++trial) {
    const NilElement a = random_nil(rng), b = random_nil(rng);
    const Covector l = random_covector(rng);

    // pairing = trace of the matrix product
    const double tr = (to_matrix(l) * to_matrix(a)).trace();
    CHECK(std::abs(pairing(l, a) - tr) <= 1e-14 * (1.0 + std::abs(tr)));

    // bracket = matrix commutator (strictly lower, so no information lost)
    const Eigen::Matrix4d comm =
        to_matrix(a) * to_matrix(b) - to_matrix(b) * to_matrix(a);
    CHECK(max_coord_diff(bracket(a, b), nil_from_matrix(comm)) <= 1e-14);

    // antisymmetry and the 3-step property: 4-fold brackets vanish exactly
    CHECK(max_coord_diff(bracket(b, a), -bracket(a, b)) == 0.0);
    const NilElement c = random_nil(rng), d = random_nil(rng);
    CHECK(max_coord_diff(bracket(a, bracket(b, bracket(c, d))),
                         NilElement{}) == 0.0);
  }

  // matrix round trips
  std::mt19937 rng2(912002u);
  const NilElement n = random_nil(rng2);
  CHECK(max_coord_diff(nil_from_matrix(to_matrix(n)), n) == 0.0);
  const Covector l = random_covector(rng2);
  CHECK(max_coord_diff(covector_from_matrix(to_matrix(l)), l) == 0.0);
}

TEST_CASE("coadjoint action reproduces the frozen reference rows") {
  for (const auto& row : gwhit_ref::coad_ref) {
    const NilElement n = {row.n[5], row.n[3], row.n[4],
                          row.n[0], row.n[1], row.n[2]};
    const Covector l = {row.l[0], row.l[1], row.l[2],
                        row.l[3], row.l[4], row.l[5]};
    const Covector want = {row.lp[0], row.lp[1], row.lp[2],
                           row.lp[3], row.lp[4], row.lp[5]};
    CHECK(max_coord_diff(coadjoint_act(n, l), want) <= 1e-12);
    CHECK(max_coord_diff(coadjoint_act_matrix(n, l), want) <= 1e-12);
  }
}

TEST_CASE("coadjoint closed form matches matrix conjugation") {
  std::mt19937 rng(912003u);
  for (int trial = 0; trial < 200; ++trial) {
    const NilElement n = random_nil(rng);
    const Covector l = random_covector(rng);
    CHECK(max_coord_diff(coadjoint_act(n, l), coadjoint_act_matrix(n, l)) <=
          1e-12);
  }

  // n = 0 acts as the identity, exactly
  const Covector l = random_covector(rng);
  CHECK(max_coord_diff(coadjoint_act(NilElement{}, l), l) == 0.0);

  // a pure x3 move: only beta1, gamma1(via nothing), gamma2 respond
  NilElement shear;
  shear.x3 = 0.75;
  const Covector moved = coadjoint_act(shear, l);
  CHECK(moved.alpha == l.alpha);
  CHECK(moved.beta1 == doctest::Approx(l.beta1 + l.alpha * 0.75).epsilon(1e-14));
  CHECK(moved.beta2 == l.beta2);
  CHECK(moved.gamma1 == l.gamma1);
  CHECK(moved.gamma2 ==
        doctest::Approx(l.gamma2 + 0.75 * l.beta2).epsilon(1e-14));
  CHECK(moved.gamma3 == l.gamma3);
}

TEST_CASE("BCH group law terminates exactly and matches the matrix oracle") {
  std::mt19937 rng(912004u);
  for (int trial = 0; trial < 200; ++trial) {
    const NilElement a = random_nil(rng), b = random_nil(rng);
    CHECK(max_coord_diff(group_product(a, b), group_product_matrix(a, b)) <=
          1e-12);
  }

  // identity, inverse, associativity
  const NilElement a = random_nil(rng), b = random_nil(rng),
                   c = random_nil(rng);
  CHECK(max_coord_diff(group_product(NilElement{}, a), a) == 0.0);
  CHECK(max_coord_diff(group_product(a, NilElement{}), a) == 0.0);
  CHECK(max_coord_diff(group_product(a, -a), NilElement{}) == 0.0);
  CHECK(max_coord_diff(group_product(a, group_product(b, c)),
                       group_product(group_product(a, b), c)) <= 1e-12);

  // exp(a) exp(b) applied to covectors: acting by a after b is acting by
  // the product taken in reversed order
  for (int trial = 0; trial < 100; ++trial) {
    const NilElement n1 = random_nil(rng), n2 = random_nil(rng);
    const Covector l = random_covector(rng);
    const Covector twice = coadjoint_act(n1, coadjoint_act(n2, l));
    const Covector once = coadjoint_act(group_product(n2, n1), l);
    CHECK(max_coord_diff(twice, once) <= 1e-11);
  }
}

TEST_CASE("the skew form has the expected entries and radicals") {
  const Covector l = {1.9, 0.3, -0.8, 0.5, 1.2, -0.6};
  const auto b = b_form(l);

  // only the four bracket pairs contribute; basis order (Z,Y1,Y2,X1,X2,X3)
  CHECK(b(3, 4) == -l.beta1);
  CHECK(b(4, 5) == -l.beta2);
  CHECK(b(2, 3) == l.alpha);
  CHECK(b(1, 5) == -l.alpha);
  CHECK(b(3, 2) == -l.alpha);
  CHECK(b(5, 1) == l.alpha);
  CHECK((b + b.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(b.col(0).cwiseAbs().maxCoeff() == 0.0);  // Z is central
  double offbracket = std::abs(b(1, 2));         // [Y1,Y2] = 0
  offbracket = std::max(offbracket, std::abs(b(1, 3)));  // [Y1,X1] = 0
  offbracket = std::max(offbracket, std::abs(b(1, 4)));  // [Y1,X2] = 0
  CHECK(offbracket == 0.0);

  // kind-I normal form: radical = span{Z, X2}
  const Covector nf1 = {1.7, 0, 0, 0, 0.9, 0};
  const Eigen::MatrixXd r1 = radical(nf1);
  REQUIRE(r1.cols() == 2);
  Eigen::MatrixXd s1(6, 2);
  s1 << Eigen::Matrix<double, 6, 1>::Unit(0), Eigen::Matrix<double, 6, 1>::Unit(4);
  CHECK((projector(r1) - projector(s1)).cwiseAbs().maxCoeff() <= 1e-10);

  // kind-II: radical = span{beta2 X1 + beta1 X3, Y1, Y2, Z}
  const Covector nf2 = {0, 1.3, -0.4, 0.8, 0, 0.6};
  const Eigen::MatrixXd r2 = radical(nf2);
  REQUIRE(r2.cols() == 4);
  Eigen::MatrixXd s2(6, 4);
  Eigen::Matrix<double, 6, 1> mix = Eigen::Matrix<double, 6, 1>::Zero();
  mix(3) = nf2.beta2;
  mix(5) = nf2.beta1;
  s2 << Eigen::Matrix<double, 6, 1>::Unit(0), Eigen::Matrix<double, 6, 1>::Unit(1),
      Eigen::Matrix<double, 6, 1>::Unit(2), mix;
  CHECK((projector(r2) - projector(s2)).cwiseAbs().maxCoeff() <= 1e-10);

  // kind-III: the form vanishes and the radical is everything
  const Covector nf3 = {0, 0, 0, 0.8, 0, -0.2};
  CHECK(b_form(nf3).cwiseAbs().maxCoeff() == 0.0);
  CHECK(radical(nf3).cols() == 6);
}

TEST_CASE("orbit dimension parity: dim n - dim radical equals the orbit dim") {
  std::mt19937 rng(912005u);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 500; ++trial) {
    const OrbitKind kind = pick(rng) == 0   ? OrbitKind::I
                           : pick(rng) == 1 ? OrbitKind::II
                                            : OrbitKind::III;
    const Covector l = random_of_kind(rng, kind);
    const int rank = 6 - static_cast<int>(radical(l).cols());
    CHECK(rank % 2 == 0);
    CHECK(rank == classify_orbit(l).dim);
  }
}

TEST_CASE("classification: kinds, dimensions, and normal forms") {
  // kind I at a generic point: the printed invariant is gamma2 - b1 b2 / a
  const Covector l1 = {2.0, 0.6, -1.0, 0.3, 1.1, 0.9};
  const OrbitClass o1 = classify_orbit(l1);
  CHECK(o1.kind == OrbitKind::I);
  CHECK(o1.dim == 4);
  CHECK(o1.normal_form.alpha == 2.0);
  CHECK(o1.normal_form.gamma2 ==
        doctest::Approx(1.1 - 0.6 * (-1.0) / 2.0).epsilon(1e-14));
  CHECK(o1.normal_form.beta1 == 0.0);
  CHECK(o1.normal_form.beta2 == 0.0);
  CHECK(o1.normal_form.gamma1 == 0.0);
  CHECK(o1.normal_form.gamma3 == 0.0);

  // the normal form really is on the orbit: moving l1 by the eliminating
  // parameters lands on it exactly up to roundoff
  NilElement elim;
  elim.x3 = -l1.beta1 / l1.alpha;
  elim.x1 = l1.beta2 / l1.alpha;
  const Covector partial = coadjoint_act(elim, l1);
  CHECK(std::abs(partial.beta1) <= 1e-14);
  CHECK(std::abs(partial.beta2) <= 1e-14);
  CHECK(partial.gamma2 == doctest::Approx(o1.normal_form.gamma2).epsilon(1e-13));
  NilElement sweep;  // y-moves then clear gamma1 and gamma3
  sweep.y2 = -partial.gamma1 / partial.alpha;
  sweep.y1 = partial.gamma3 / partial.alpha;
  const Covector settled = coadjoint_act(sweep, partial);
  CHECK(max_coord_diff(settled, o1.normal_form) <= 1e-13);

  // kind II keeps gamma1 and gamma3 verbatim and zeroes gamma2
  const Covector l2 = {0.0, 1.2, 0.5, -0.7, 2.2, 0.4};
  const OrbitClass o2 = classify_orbit(l2);
  CHECK(o2.kind == OrbitKind::II);
  CHECK(o2.dim == 2);
  CHECK(o2.normal_form.beta1 == 1.2);
  CHECK(o2.normal_form.beta2 == 0.5);
  CHECK(o2.normal_form.gamma1 == -0.7);
  CHECK(o2.normal_form.gamma2 == 0.0);
  CHECK(o2.normal_form.gamma3 == 0.4);

  // a single nonzero beta is still kind II
  const Covector l2b = {0.0, 0.0, 0.8, 0.1, -0.5, 0.2};
  CHECK(classify_orbit(l2b).kind == OrbitKind::II);

  // kind III is its own normal form
  const Covector l3 = {0.0, 0.0, 0.0, 0.4, -0.9, 0.0};
  const OrbitClass o3 = classify_orbit(l3);
  CHECK(o3.kind == OrbitKind::III);
  CHECK(o3.dim == 0);
  CHECK(max_coord_diff(o3.normal_form, l3) == 0.0);

  // tolerance switches the kind decision for tiny floating residue
  Covector noisy = l2;
  noisy.alpha = 3e-13;
  CHECK(classify_orbit(noisy).kind == OrbitKind::I);
  CHECK(classify_orbit(noisy, 1e-12).kind == OrbitKind::II);
}

TEST_CASE("orbit data is invariant along random coadjoint moves") {
  std::mt19937 rng(912006u);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const OrbitKind kind = pick(rng) == 0   ? OrbitKind::I
                           : pick(rng) == 1 ? OrbitKind::II
                                            : OrbitKind::III;
    const Covector l = random_of_kind(rng, kind);
    const Covector moved = coadjoint_act(random_nil(rng), l);
    const OrbitClass before = classify_orbit(l);
    const OrbitClass after = classify_orbit(moved, 1e-12);
    CHECK(after.kind == before.kind);
    CHECK(after.dim == before.dim);
    switch (kind) {
    case OrbitKind::I: {
      CHECK(after.normal_form.alpha == before.normal_form.alpha);
      // beta1' beta2' / alpha can reach ~1e2 before cancelling, so allow
      // a little more than the bare coordinate roundoff
      CHECK(std::abs(after.normal_form.gamma2 - before.normal_form.gamma2) <=
            1e-10 * (1.0 + std::abs(before.normal_form.gamma2)));
      break;
    }
    case OrbitKind::II: {
      // betas are themselves invariant; of the gammas only the pairing
      // beta1 gamma3 + gamma1 beta2 survives the orbit
      CHECK(after.normal_form.beta1 == before.normal_form.beta1);
      CHECK(after.normal_form.beta2 == before.normal_form.beta2);
      const double vw_before = l.beta1 * l.gamma3 + l.gamma1 * l.beta2;
      const double vw_after =
          moved.beta1 * moved.gamma3 + moved.gamma1 * moved.beta2;
      CHECK(std::abs(vw_after - vw_before) <= 1e-11 * (1.0 + std::abs(vw_before)));
      break;
    }
    default:
      CHECK(max_coord_diff(moved, l) == 0.0);  // characters are fixed points
      break;
    }
  }
}

TEST_CASE("subordinate subalgebras: stock bases, sizes, and rejections") {
  std::mt19937 rng(912007u);
  const Covector l1 = random_of_kind(rng, OrbitKind::I);
  const Covector l2 = random_of_kind(rng, OrbitKind::II);
  const Covector l3 = random_of_kind(rng, OrbitKind::III);

  const Eigen::MatrixXd s1 = subordinate_basis(OrbitKind::I);
  const Eigen::MatrixXd s2 = subordinate_basis(OrbitKind::II);
  const Eigen::MatrixXd s3 = subordinate_basis(OrbitKind::III);
  REQUIRE(s1.cols() == 4);
  REQUIRE(s2.cols() == 5);
  REQUIRE(s3.cols() == 6);

  // each stock basis fits its own kind and fails the others
  CHECK(is_subordinate(l1, s1));
  CHECK(is_subordinate(l2, s2));
  CHECK(is_subordinate(l3, s3));
  CHECK_FALSE(is_subordinate(l2, s1));  // isotropic but wrong codimension
  CHECK_FALSE(is_subordinate(l1, s2));  // not isotropic when alpha != 0
  CHECK_FALSE(is_subordinate(l1, s3));
  CHECK_FALSE(is_subordinate(l2, s3));

  // a line is a subalgebra but never maximal for kind I
  Eigen::MatrixXd line(6, 1);
  line << 0, 0, 0, 1, 0, 0;
  CHECK_FALSE(is_subordinate(l1, line));

  // non-subalgebras and degenerate spans are input errors
  Eigen::MatrixXd open_span(6, 4);
  open_span << Eigen::Matrix<double, 6, 1>::Unit(3),
      Eigen::Matrix<double, 6, 1>::Unit(4), Eigen::Matrix<double, 6, 1>::Unit(5),
      Eigen::Matrix<double, 6, 1>::Unit(0);
  CHECK_THROWS_AS(is_subordinate(l1, open_span), config_error);
  Eigen::MatrixXd dup(6, 2);
  dup << line.col(0), line.col(0);
  CHECK_THROWS_AS(is_subordinate(l1, dup), config_error);
  CHECK_THROWS_AS(is_subordinate(l1, Eigen::MatrixXd::Identity(5, 2)),
                  config_error);
  CHECK_THROWS_AS(is_subordinate(l1, Eigen::MatrixXd(6, 0)), config_error);

  // 100 random 4-dim subalgebras span{Y1,Y2,Z,v}: closed for any v in the
  // X-space, but isotropic for kind I only when v is along X2
  std::uniform_real_distribution<double> mag(0.1, 1.0);
  std::bernoulli_distribution coin(0.5);
  int rejected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::MatrixXd cand(6, 4);
    Eigen::Matrix<double, 6, 1> v = Eigen::Matrix<double, 6, 1>::Zero();
    v(3) = (coin(rng) ? 1 : -1) * mag(rng);
    v(4) = (coin(rng) ? 1 : -1) * mag(rng);
    v(5) = (coin(rng) ? 1 : -1) * mag(rng);
    cand << Eigen::Matrix<double, 6, 1>::Unit(1),
        Eigen::Matrix<double, 6, 1>::Unit(2), Eigen::Matrix<double, 6, 1>::Unit(0),
        v;
    if (!is_subordinate(l1, cand)) ++rejected;
  }
  CHECK(rejected == 100);

  // the isotropy escape hatch: v exactly along X2 is accepted
  Eigen::MatrixXd good(6, 4);
  good << Eigen::Matrix<double, 6, 1>::Unit(1), Eigen::Matrix<double, 6, 1>::Unit(2),
      Eigen::Matrix<double, 6, 1>::Unit(0),
      -0.3 * Eigen::Matrix<double, 6, 1>::Unit(4);
  CHECK(is_subordinate(l1, good));
}

TEST_CASE("induced-model classification reaches all fourteen tags") {
  using C = Covector;
  // kind I
  CHECK(classify_induced(C{2, 0, 0, 0, 1.5, 0}, OrbitKind::I) == CaseTag::I1);
  CHECK(classify_induced(C{2, 0, 0, 0, 0, 0}, OrbitKind::I) == CaseTag::I2);
  // kind II: the pairing beta1 gamma3 + gamma1 beta2 splits II1 off first
  CHECK(classify_induced(C{0, 1, 1, 0, 0, 1}, OrbitKind::II) == CaseTag::II1);
  CHECK(classify_induced(C{0, 1, 0, 0, 0, 5}, OrbitKind::II) == CaseTag::II1);
  CHECK(classify_induced(C{0, 0, 1, 5, 0, 0}, OrbitKind::II) == CaseTag::II1);
  CHECK(classify_induced(C{0, 1, 1, 1, 0, -1}, OrbitKind::II) == CaseTag::II2);
  CHECK(classify_induced(C{0, 1, 1, 0, 0, 0}, OrbitKind::II) == CaseTag::II2);
  CHECK(classify_induced(C{0, 1, 0, 7, 0, 0}, OrbitKind::II) == CaseTag::II3);
  CHECK(classify_induced(C{0, 1, 0, 0, 0, 0}, OrbitKind::II) == CaseTag::II3);
  CHECK(classify_induced(C{0, 0, 1, 0, 0, 7}, OrbitKind::II) == CaseTag::II4);
  CHECK(classify_induced(C{0, 0, 1, 0, 0, 0}, OrbitKind::II) == CaseTag::II4);
  CHECK_FALSE(covered(CaseTag::II4));
  // kind III by the gamma zero pattern
  CHECK(classify_induced(C{0, 0, 0, 1, 1, 1}, OrbitKind::III) == CaseTag::III1);
  CHECK(classify_induced(C{0, 0, 0, 1, 1, 0}, OrbitKind::III) == CaseTag::III2);
  CHECK(classify_induced(C{0, 0, 0, 1, 0, 1}, OrbitKind::III) == CaseTag::III3);
  CHECK(classify_induced(C{0, 0, 0, 0, 1, 1}, OrbitKind::III) == CaseTag::III4);
  CHECK(classify_induced(C{0, 0, 0, 1, 0, 0}, OrbitKind::III) == CaseTag::III5);
  CHECK(classify_induced(C{0, 0, 0, 0, 1, 0}, OrbitKind::III) == CaseTag::III6);
  CHECK(classify_induced(C{0, 0, 0, 0, 0, 1}, OrbitKind::III) == CaseTag::III7);
  CHECK(classify_induced(C{0, 0, 0, 0, 0, 0}, OrbitKind::III) == CaseTag::III8);

  // covectors outside the declared parameter family are input errors
  CHECK_THROWS_AS(classify_induced(C{1, 1, 0, 0, 0, 0}, OrbitKind::I),
                  config_error);
  CHECK_THROWS_AS(classify_induced(C{0, 0, 0, 0, 0, 0}, OrbitKind::I),
                  config_error);
  CHECK_THROWS_AS(classify_induced(C{0, 0, 0, 0, 0, 0}, OrbitKind::II),
                  config_error);
  CHECK_THROWS_AS(classify_induced(C{0, 1, 0, 0, 1, 0}, OrbitKind::II),
                  config_error);
  CHECK_THROWS_AS(classify_induced(C{0, 1, 0, 0, 0, 0}, OrbitKind::III),
                  config_error);
  CHECK_THROWS_AS(classify_induced(C{0.5, 0, 0, 0, 0, 0}, OrbitKind::III),
                  config_error);

  // with a tolerance, floating residue in a zero slot is forgiven
  CHECK(classify_induced(C{2, 1e-14, 0, 0, 0, 0}, OrbitKind::I, 1e-12) ==
        CaseTag::I2);
  CHECK_THROWS_AS(classify_induced(C{2, 1e-14, 0, 0, 0, 0}, OrbitKind::I),
                  config_error);

  // end to end: classify the orbit, then the induced model
  const Covector raw = {1.5, 0.9, -0.3, 0.2, 0.7, -0.4};
  const OrbitClass oc = classify_orbit(raw);
  CHECK(classify_induced(oc.normal_form, oc.kind) == CaseTag::I1);
}

TEST_CASE("covectors and case tags round-trip through json") {
  const Covector l = {1.5, 0.0, -0.3, 0.2, 0.7, -0.4};
  const nlohmann::json j = l;
  CHECK(j.at("alpha") == 1.5);
  CHECK(j.at("gamma3") == -0.4);
  const Covector back = nlohmann::json::parse(j.dump()).get<Covector>();
  CHECK(max_coord_diff(back, l) == 0.0);

  const nlohmann::json missing = {{"alpha", 1.0}, {"beta1", 0.0}};
  CHECK_THROWS_AS((void)missing.get<Covector>(), config_error);

  const nlohmann::json jt = CaseTag::II3;
  CHECK(jt == "II3");
  CHECK(jt.get<CaseTag>() == CaseTag::II3);
  const nlohmann::json badtag = "IV9";
  CHECK_THROWS_AS((void)badtag.get<CaseTag>(), config_error);
  const nlohmann::json nonstring = 7;
  CHECK_THROWS_AS((void)nonstring.get<CaseTag>(), config_error);

  const OrbitClass oc = classify_orbit(l);
  const nlohmann::json joc = oc;
  CHECK(joc.at("kind") == "I");
  CHECK(joc.at("dim") == 4);
  CHECK(joc.at("normal_form").at("alpha") == 1.5);
}
