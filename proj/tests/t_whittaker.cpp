// SPDX-License-Identifier: MIT
//
// Whittaker-basis checks: frozen references pin every atom value at one
// point per chart family; chart round-trips, Jacobians and jet consistency
// pin the coordinate maps; the dimension table, growth verdicts, tempered
// subspaces and full residual certification are property-tested across the
// spectral-parameter sweep.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gwhit/atoms.hpp"
#include "gwhit/basis.hpp"
#include "gwhit/certify.hpp"
#include "gwhit/growth.hpp"
#include "gwhit/sampling.hpp"
#include "support/reference_values.hpp"

using namespace gwhit;

namespace {

const SpectralParam lambda_cert{cplx{1.647, 0.0}, cplx{-0.287, 0.0}};

Point case_point(CaseTag t) {
  switch (family(t)) {
    case CaseFamily::I:
      return Point{gwhit_ref::atom_point_I[0], gwhit_ref::atom_point_I[1],
                   gwhit_ref::atom_point_I[2], gwhit_ref::atom_point_I[3],
                   gwhit_ref::atom_point_I[4], gwhit_ref::atom_point_I[5]};
    case CaseFamily::II:
      return Point{gwhit_ref::atom_point_II[0], gwhit_ref::atom_point_II[1],
                   gwhit_ref::atom_point_II[2], gwhit_ref::atom_point_II[3],
                   gwhit_ref::atom_point_II[4], 0.0};
    case CaseFamily::III:
      return Point{gwhit_ref::atom_point_III[0], gwhit_ref::atom_point_III[1],
                   gwhit_ref::atom_point_III[2], gwhit_ref::atom_point_III[3], 0.0,
                   0.0};
  }
  throw config_error("unreachable");
}

double rel_diff(cplx got, cplx want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

}  // namespace

TEST_CASE("every atom value matches its frozen reference") {
  std::map<std::string, cplx> refs;
  for (const auto& r : gwhit_ref::atom_val_ref)
    refs[r.key] = cplx{r.val.re, r.val.im};

  std::size_t used = 0;
  for (CaseTag t : all_case_tags) {
    if (!covered(t)) continue;
    for (int k = 1; k <= 2; ++k) {
      const auto atoms = case_atoms(t, k, lambda_cert);
      CHECK(static_cast<int>(atoms.size()) == dimension(t, k));
      const Point p = case_point(t);
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        const std::string key =
            std::string(to_string(t)) + "/" + std::to_string(k) + "/" +
            std::to_string(i);
        INFO("atom ", key, " (", atoms[i].label, ")");
        REQUIRE(refs.count(key) == 1);
        const cplx got = eval_atom_value(atoms[i], p);
        CHECK(rel_diff(got, refs.at(key)) < 1e-10);
        ++used;
      }
    }
  }
  // the reference table is exhausted: no certified atom is left untested
  CHECK(used == refs.size());
}

TEST_CASE("chart round-trips, Jacobians and jet consistency") {
  std::mt19937_64 rng(20260818u);
  std::uniform_real_distribution<double> da(0.5, 2.0), duv(-1.0, 1.0);
  const MapId maps[] = {MapId::I1,   MapId::I0,   MapId::II,  MapId::IIIa,
                        MapId::IIIb, MapId::IIIc, MapId::IIId, MapId::IIIe};
  for (MapId m : maps) {
    for (int trial = 0; trial < 20; ++trial) {
      Point p{da(rng), da(rng), da(rng), da(rng), duv(rng), duv(rng)};
      if (p.v - p.u <= 0.1) {
        --trial;
        continue;
      }
      if (m == MapId::I0) p.v = std::abs(p.v) + 0.1;
      REQUIRE(chart_admits(m, p));

      // analytic inverse undoes the forward map
      const auto x = chart_forward(m, p);
      const Point q = chart_inverse(m, x);
      for (int i = 0; i < 6; ++i)
        CHECK(std::abs(q.coord(i) - p.coord(i)) < 1e-10 * (1.0 + std::abs(p.coord(i))));

      // the scale-frame Jacobian never vanishes on the chart domain
      CHECK(std::abs(chart_jacobian(m, p)) > 1e-12);

      // jet gradients agree with central differences in the scale frame
      if (trial < 3) {
        const auto jets = chart_jets(m, p);
        const double h = 1e-5;
        for (int dir = 0; dir < 6; ++dir) {
          Point pp = p, pm = p;
          if (dir < 4) {
            const double f = std::exp(h);
            (dir == 0 ? pp.a1 : dir == 1 ? pp.a2 : dir == 2 ? pp.a3 : pp.a4) *= f;
            (dir == 0 ? pm.a1 : dir == 1 ? pm.a2 : dir == 2 ? pm.a3 : pm.a4) /= f;
          } else if (dir == 4) {
            pp.u += h;
            pm.u -= h;
          } else {
            pp.v += h;
            pm.v -= h;
          }
          const auto xp = chart_forward(m, pp), xm = chart_forward(m, pm);
          for (int i = 0; i < 6; ++i) {
            const double fd = (xp[static_cast<std::size_t>(i)] -
                               xm[static_cast<std::size_t>(i)]) /
                              (2.0 * h);
            const double an = jets[static_cast<std::size_t>(i)]
                                  .g[static_cast<std::size_t>(dir)]
                                  .real();
            CHECK(std::abs(fd - an) < 1e-6 * (1.0 + std::abs(an)));
          }
        }
      }
    }
  }
}

TEST_CASE("dimension table and its error paths") {
  // certified dimensions, both parabolic indices
  const std::map<CaseTag, std::pair<int, int>> expect = {
      {CaseTag::I1, {0, 4}},   {CaseTag::I2, {2, 4}},   {CaseTag::II1, {0, 0}},
      {CaseTag::II2, {0, 4}},  {CaseTag::II3, {2, 4}},  {CaseTag::III1, {0, 0}},
      {CaseTag::III2, {0, 0}}, {CaseTag::III3, {0, 4}}, {CaseTag::III4, {0, 0}},
      {CaseTag::III5, {2, 4}}, {CaseTag::III6, {2, 4}}, {CaseTag::III7, {2, 4}},
      {CaseTag::III8, {4, 6}}};
  int total = 0;
  for (const auto& [t, dims] : expect) {
    CHECK(dimension(t, 1) == dims.first);
    CHECK(dimension(t, 2) == dims.second);
    total += dims.first + dims.second;
  }
  // all nonzero entries carry exactly one frozen reference value each
  CHECK(total == static_cast<int>(std::size(gwhit_ref::atom_val_ref)));

  CHECK_THROWS_AS(dimension(CaseTag::II4, 1), uncovered_error);
  CHECK_THROWS_AS(dimension(CaseTag::I1, 3), config_error);
  CHECK_THROWS_AS(case_atoms(CaseTag::II4, 1, lambda_cert), uncovered_error);
  CHECK_THROWS_AS(case_atoms(CaseTag::I1, 0, lambda_cert), config_error);
  const SpectralParam integral{cplx{2.0, 0.0}, cplx{-1.0, 0.0}};
  CHECK_THROWS_AS(case_atoms(CaseTag::I2, 1, integral), config_error);

  const std::string csv = dimension_table_csv();
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 27);  // header + 26 rows
  CHECK(csv.find("I1,2,4") != std::string::npos);
  CHECK(csv.find("III8,2,6") != std::string::npos);
  CHECK(csv.find("\nII4,") == std::string::npos);
}

TEST_CASE("atom jets agree with scale-frame finite differences") {
  // spot checks across factor kinds: series, transformed series, Bessel
  struct Probe { CaseTag t; int k; std::size_t idx; };
  const Probe probes[] = {{CaseTag::I1, 2, 0},  {CaseTag::I1, 2, 3},
                          {CaseTag::I2, 2, 1},  {CaseTag::II2, 2, 2},
                          {CaseTag::III6, 2, 3}, {CaseTag::III8, 1, 0}};
  for (const Probe& pr : probes) {
    const auto atoms = case_atoms(pr.t, pr.k, lambda_cert);
    const SolutionAtom& atom = atoms.at(pr.idx);
    const Point p = case_point(pr.t);
    const Jet6 j = eval_atom_jet(atom, p);
    const double h = 1e-4;
    for (int dir = 0; dir < 6; ++dir) {
      auto shift = [&](double step) {
        Point q = p;
        if (dir < 4) {
          const double f = std::exp(step);
          (dir == 0 ? q.a1 : dir == 1 ? q.a2 : dir == 2 ? q.a3 : q.a4) *= f;
        } else if (dir == 4) {
          q.u += step;
        } else {
          q.v += step;
        }
        return eval_atom_value(atom, q);
      };
      const cplx fd = (shift(h) - shift(-h)) / (2.0 * h);
      INFO("atom ", atom.label, " dir ", dir);
      CHECK(std::abs(fd - j.g[static_cast<std::size_t>(dir)]) <
            2e-6 * (1.0 + std::abs(j.g[static_cast<std::size_t>(dir)])));
    }
  }
}

TEST_CASE("full residual certification across the spectral sweep") {
  for (std::size_t s = 0; s < 3; ++s) {
    const double ld = gwhit_ref::sweep_ld[s];
    const SpectralParam sp{cplx{-0.287 + ld, 0.0}, cplx{-0.287, 0.0}};
    for (CaseTag t : all_case_tags) {
      if (!covered(t)) continue;
      for (int k = 1; k <= 2; ++k) {
        const CertifyReport rep = certify(t, k, sp, 20, 1e-6, 20260818u);
        INFO("case ", to_string(t), " k=", k, " ld=", ld,
             " maxh=", rep.max_rel_hardcoded, " maxr=", rep.max_rel_realized);
        CHECK(rep.pass);
        CHECK(rep.max_rel_hardcoded < 1e-6);
        CHECK(rep.max_rel_realized < 1e-6);
        if (rep.dim_expected > 0) {
          CHECK(rep.rank == rep.dim_expected);
        } else {
          CHECK(rep.probe_residual > 0.01);
        }
        // each rejected transcription shows an O(1) defect
        for (const VariantResidualReport& v : rep.variants) {
          INFO("variant ", v.label, ": ", v.note);
          CHECK(v.defect > 0.01);
        }
      }
    }
  }
}

TEST_CASE("the two system presentations agree on generic probes") {
  double worst = 0.0;
  for (CaseTag t : all_case_tags) {
    if (!covered(t)) continue;
    for (int k = 1; k <= 2; ++k)
      worst = std::max(worst, oracle_defect(t, k, lambda_cert, 5, 20260818u));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("growth verdicts and tempered subspace dimensions") {
  std::map<std::string, BasisReport> reports;
  for (CaseTag t : all_case_tags) {
    if (!covered(t)) continue;
    for (int k = 1; k <= 2; ++k) {
      if (dimension(t, k) == 0) continue;
      const std::string key = std::string(to_string(t)) + "/" + std::to_string(k);
      reports.emplace(key, basis(t, k, lambda_cert));
    }
  }

  auto tag_of = [&](const std::string& key, const std::string& label) {
    const BasisReport& r = reports.at(key);
    for (const GrowthReport& g : r.growth)
      if (g.label == label) return g.tag;
    throw config_error("no growth entry " + label + " in " + key);
  };

  // Bessel I drives growth, Bessel K does not; pure monomials stay slow
  for (const auto& [key, rep] : reports) {
    for (std::size_t i = 0; i < rep.atoms.size(); ++i) {
      bool has_i = false, has_k = false;
      for (const AtomFactor& f : rep.atoms[i].factors) {
        has_i = has_i || f.kind == FactorKind::bessel_i;
        has_k = has_k || f.kind == FactorKind::bessel_k;
      }
      INFO(key, " atom ", rep.atoms[i].label);
      if (has_i) CHECK(rep.growth[i].tag == GrowthTag::growing);
      if (has_k && !has_i) CHECK(rep.growth[i].tag != GrowthTag::growing);
      if (!has_k && !has_i && rep.tag == CaseTag::III8)
        CHECK(rep.growth[i].tag == GrowthTag::slowly_increasing);
    }
  }

  // the degenerate-stratum K atoms are the slowly increasing directions
  CHECK(tag_of("I2/1", "K") == GrowthTag::slowly_increasing);
  CHECK(tag_of("I2/1", "I") == GrowthTag::growing);
  CHECK(tag_of("I2/2", "b1:K") == GrowthTag::slowly_increasing);
  CHECK(tag_of("I2/2", "b2:K") == GrowthTag::slowly_increasing);
  CHECK(tag_of("II3/1", "K") == GrowthTag::slowly_increasing);

  // the integral combination is the rapidly decreasing direction of the
  // open stratum, where every series atom alone grows
  CHECK(tag_of("I1/2", "mb-combination") == GrowthTag::rapidly_decreasing);
  for (const char* lbl : {"F1", "F2", "F3", "F4"})
    CHECK(tag_of("I1/2", lbl) == GrowthTag::growing);
  CHECK(reports.at("I1/2").has_mb);

  // tempered-subspace dimensions: one K direction per branch pair, the
  // single integral direction in the open stratum, none measurable on the
  // purely polynomial stratum
  const std::map<std::string, int> tempered = {
      {"I1/2", 1},  {"I2/1", 1},  {"I2/2", 2},  {"II2/2", 1}, {"II3/1", 1},
      {"II3/2", 2}, {"III3/2", 1}, {"III5/1", 1}, {"III5/2", 2}, {"III6/1", 1},
      {"III6/2", 2}, {"III7/1", 1}, {"III7/2", 2}, {"III8/1", -1}, {"III8/2", -1}};
  for (const auto& [key, want] : tempered) {
    const SubspaceWitness& w = reports.at(key).tempered;
    INFO(key, " tempered dim ", w.dim, " sigma_in ", w.sigma_in, " sigma_out ",
         w.sigma_out, " note ", w.note);
    CHECK(w.dim == want);
  }
}

TEST_CASE("report serialization carries the full structure") {
  const BasisReport rep = basis(CaseTag::I2, 2, lambda_cert);
  const nlohmann::json jb = rep;
  CHECK(jb.at("case") == "I2");
  CHECK(jb.at("dim") == 4);
  CHECK(jb.at("atoms").size() == 4);
  CHECK(jb.at("growth").size() == 4);
  CHECK(jb.at("tempered").at("dim") == 2);

  // atoms survive a JSON round-trip exactly
  const SolutionAtom a0 = rep.atoms.front();
  const nlohmann::json ja = a0;
  const SolutionAtom back = ja.get<SolutionAtom>();
  const Point p = case_point(CaseTag::I2);
  CHECK(std::abs(eval_atom_value(back, p) - eval_atom_value(a0, p)) == 0.0);

  const CertifyReport cr = certify(CaseTag::III5, 2, lambda_cert, 4, 1e-6, 3u);
  const nlohmann::json jc = cr;
  CHECK(jc.at("pass") == true);
  CHECK(jc.at("atoms").size() == 4);
  CHECK(jc.at("rank") == 4);

  const CertifyReport ce = certify(CaseTag::III2, 1, lambda_cert, 4, 1e-6, 3u);
  const nlohmann::json je = ce;
  CHECK(je.at("dim_expected") == 0);
  CHECK(je.at("probe_residual").get<double>() > 0.01);
  CHECK(je.at("pass") == true);
}
