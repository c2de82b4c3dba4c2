// SPDX-License-Identifier: MIT
//
// Deterministic sampling of certification points.  Torus coordinates are
// drawn from [0.5, 2] and the unipotent coordinates from [-1, 1]; case-
// specific rejection keeps every sample inside the window where the closed
// forms of that case are certified to evaluate accurately (series margin,
// bounded series argument, chart admissibility).  Seeding is per case and
// index so reports are reproducible row by row.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "gwhit/atoms.hpp"
#include "gwhit/common.hpp"

namespace gwhit {

inline std::uint64_t sample_seed(CaseTag t, int k, std::uint64_t seed) {
  return seed * 1000003ull + static_cast<std::uint64_t>(t) * 101ull +
         static_cast<std::uint64_t>(k);
}

inline Point sample_point(CaseTag t, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> da(0.5, 2.0), duv(-1.0, 1.0);
  for (int tries = 0; tries < 4000; ++tries) {
    Point p{da(rng), da(rng), da(rng), da(rng), duv(rng), duv(rng)};
    if (family(t) == CaseFamily::I) {
      if (std::abs(p.v - p.u) <= 0.1) continue;
      if (t == CaseTag::I1) {
        // the series chart needs v > u, a small series variable and a
        // bounded second argument
        if (p.v - p.u <= 0.1) continue;
        const auto x = chart_forward(MapId::I1, p);
        if (!(x[2] > 0.0 && x[2] <= 0.18)) continue;
        if (!(-x[1] <= 15.0)) continue;
      } else {
        // the degenerate chart sees only v^2; keep it positive and away
        // from the fold at v = 0
        p.v = std::max(0.1, std::abs(p.v));
        if (std::abs(p.v - p.u) <= 0.1) continue;
      }
    }
    return p;
  }
  throw numeric_error("point sampling failed to find an admissible point");
}

}  // namespace gwhit
