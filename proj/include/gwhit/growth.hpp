// SPDX-License-Identifier: MIT
//
// Growth classification of solution atoms along torus rays.  A ray moves the
// torus coordinates as a_i(t) = base_i * t^{speed_i} and watches the atom
// through a scale coordinate s (the decisive factor argument, or t itself on
// purely polynomial rays).  Three verdicts are possible per atom: rapidly
// decreasing (every s^w-weighted profile peaks in the interior and collapses
// by the end of every ray), slowly increasing (tamed by (1+s)^N somewhere it
// fails to decay), or growing (some ray defeats every polynomial bound).
// Witness data — the suprema, end ratios and the taming order — travel with
// the verdict so a report can be audited without rerunning the scan.
//
// The same rays also certify the dimension of the tempered subspace: the
// span of coefficient vectors whose combination stays polynomially bounded
// while individual atoms blow up exponentially.  Far samples on the
// exponential rays, with each atom normalised by its value at the shared ray
// base, give a matrix whose numerical kernel is exactly that subspace; rows
// are equilibrated and the kernel is counted by singular values.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <json.hpp>

#include "gwhit/atoms.hpp"
#include "gwhit/common.hpp"

namespace gwhit {

enum class GrowthTag { rapidly_decreasing, slowly_increasing, growing, not_classified };

inline std::string to_string(GrowthTag t) {
  switch (t) {
    case GrowthTag::rapidly_decreasing: return "rapidly-decreasing";
    case GrowthTag::slowly_increasing: return "slowly-increasing";
    case GrowthTag::growing: return "growing";
    case GrowthTag::not_classified: return "not-classified";
  }
  throw config_error("unknown growth tag");
}

struct Ray {
  std::string name;
  Point base;
  std::array<double, 4> speed{};  // a_i(t) = base_i * t^{speed_i}
  double tmax = 6.0;
  int nsamples = 9;
  // exponential rays drive a Bessel argument or the series variable to
  // infinity; only they enter the tempered-subspace witness
  bool exponential = false;
  // scale coordinate as |monomial| in the chart coordinates; all-zero powers
  // mean s = t (polynomial rays have no distinguished factor argument)
  ArgSpec scale{};
  std::vector<double> weights{0.0, 1.0, 2.0};
  // explicit far times for the subspace matrix; empty takes the last four
  // regular samples
  std::vector<double> subspace_ts;
};

inline Point ray_point(const Ray& r, double t) {
  Point p = r.base;
  p.a1 *= std::pow(t, r.speed[0]);
  p.a2 *= std::pow(t, r.speed[1]);
  p.a3 *= std::pow(t, r.speed[2]);
  p.a4 *= std::pow(t, r.speed[3]);
  return p;
}

inline std::vector<double> ray_times(const Ray& r) {
  if (r.nsamples < 2 || r.tmax <= 1.0)
    throw config_error("ray '" + r.name + "': need tmax > 1 and at least two samples");
  std::vector<double> ts(static_cast<std::size_t>(r.nsamples));
  for (int j = 0; j < r.nsamples; ++j)
    ts[static_cast<std::size_t>(j)] =
        std::pow(r.tmax, static_cast<double>(j) / (r.nsamples - 1));
  return ts;
}

inline double ray_scale(const Ray& r, MapId map, const Point& p, double t) {
  bool monomial = false;
  for (double e : r.scale.pw) monomial = monomial || e != 0.0;
  if (!monomial) return t;
  const auto x = chart_forward(map, p);
  double s = r.scale.coeff;
  for (int i = 0; i < 6; ++i) {
    const double e = r.scale.pw[static_cast<std::size_t>(i)];
    if (e == 0.0) continue;
    const double b = r.scale.neg[static_cast<std::size_t>(i)]
                         ? -x[static_cast<std::size_t>(i)]
                         : x[static_cast<std::size_t>(i)];
    s *= std::pow(b, e);
  }
  return std::abs(s);
}

struct RayWitness {
  std::string ray;
  bool ok = true;
  std::string error;
  bool decays = false;
  bool poly_bounded = false;
  int poly_order = -1;   // smallest taming exponent, when one exists
  double sup = 0.0;      // largest weighted magnitude met (heaviest weight)
  double end_ratio = 0.0;  // final weighted magnitude over that supremum
  double slope_gain = 0.0;  // far minus near log-log slope (medians)
};

struct GrowthReport {
  std::string label;
  GrowthTag tag = GrowthTag::not_classified;
  std::vector<RayWitness> rays;
};

inline constexpr int growth_poly_order_max = 8;

inline GrowthReport classify_growth(const std::function<cplx(const Point&)>& field,
                                    const std::string& label, MapId map,
                                    const std::vector<Ray>& rays) {
  GrowthReport rep;
  rep.label = label;
  bool any_fail = rays.empty(), any_grow = false, all_decay = !rays.empty();
  for (const Ray& r : rays) {
    RayWitness w;
    w.ray = r.name;
    const auto ts = ray_times(r);
    const std::size_t n = ts.size();
    std::vector<double> mag(n), sc(n);
    try {
      for (std::size_t j = 0; j < n; ++j) {
        const Point p = ray_point(r, ts[j]);
        mag[j] = std::abs(field(p));
        sc[j] = ray_scale(r, map, p, ts[j]);
        if (!std::isfinite(mag[j]) || !std::isfinite(sc[j]))
          throw numeric_error("non-finite sample on ray '" + r.name + "'");
      }
    } catch (const std::exception& e) {
      w.ok = false;
      w.error = e.what();
      any_fail = true;
      rep.rays.push_back(w);
      continue;
    }

    // rapid decay: every weighted profile s^w |f| must top out strictly
    // before the end of the ray and fall by a factor ten afterwards
    w.decays = true;
    for (double al : r.weights) {
      std::vector<double> g(n);
      for (std::size_t j = 0; j < n; ++j) g[j] = std::pow(sc[j], al) * mag[j];
      const auto it = std::max_element(g.begin(), g.end());
      const double gm = *it;
      const bool pass =
          gm == 0.0 ||
          (static_cast<std::size_t>(it - g.begin()) + 1 < n && g.back() <= 0.1 * gm);
      if (al == r.weights.back()) {
        w.sup = gm;
        w.end_ratio = gm > 0.0 ? g.back() / gm : 0.0;
      }
      w.decays = w.decays && pass;
    }

    // polynomial bound: the far half of m / (1+s)^N must stay within a factor
    // two of the near half for some moderate N
    for (int nn = 0; nn <= growth_poly_order_max && !w.poly_bounded; ++nn) {
      double head = 0.0, tail = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double h = mag[j] / std::pow(1.0 + sc[j], nn);
        (j <= n / 2 ? head : tail) = std::max(j <= n / 2 ? head : tail, h);
      }
      if (tail <= 2.0 * head) {
        w.poly_bounded = true;
        w.poly_order = nn;
      }
    }

    // taming by (1+s)^N is only polynomial evidence while the log-log slope
    // has settled: exp(c*sqrt(s)) slips under a fixed N over a short window,
    // but its slope keeps climbing, whereas a power law holds a constant one
    if (w.poly_bounded) {
      std::vector<double> slopes;
      for (std::size_t j = 0; j + 1 < n; ++j) {
        if (mag[j] > 0.0 && mag[j + 1] > 0.0 && sc[j + 1] > sc[j] * (1.0 + 1e-9))
          slopes.push_back((std::log(mag[j + 1]) - std::log(mag[j])) /
                           (std::log(sc[j + 1]) - std::log(sc[j])));
      }
      if (slopes.size() >= 4) {
        const auto med = [](std::vector<double> v) {
          std::nth_element(v.begin(), v.begin() + static_cast<long>(v.size() / 2), v.end());
          return v[v.size() / 2];
        };
        const std::size_t half = slopes.size() / 2;
        const double near_med = med({slopes.begin(), slopes.begin() + static_cast<long>(half)});
        const double far_med = med({slopes.begin() + static_cast<long>(half), slopes.end()});
        w.slope_gain = far_med - near_med;
        if (w.slope_gain > 1.0) {
          w.poly_bounded = false;
          w.poly_order = -1;
        }
      }
    }

    if (!w.decays) {
      all_decay = false;
      if (!w.poly_bounded) any_grow = true;
    }
    rep.rays.push_back(w);
  }
  if (any_fail)
    rep.tag = GrowthTag::not_classified;
  else if (any_grow)
    rep.tag = GrowthTag::growing;
  else if (all_decay)
    rep.tag = GrowthTag::rapidly_decreasing;
  else
    rep.tag = GrowthTag::slowly_increasing;
  return rep;
}

struct SubspaceWitness {
  int dim = -1;  // -1: witness not applicable (no exponential ray)
  int candidates = 0;  // singular directions below tol, before the growth cull
  double tol = 1e-3;
  double sigma_max = 0.0;
  double sigma_in = 0.0;   // largest singular value counted into the kernel
  double sigma_out = 0.0;  // smallest singular value left outside it
  std::string note;
};

// Dimension of the span of coefficient vectors whose atom combination stays
// tempered on the exponential rays.  Columns are anchored at the shared ray
// base so that prefactor scales cancel, rows are far samples equilibrated to
// unit peak; the kernel is read off the singular values.
inline SubspaceWitness tempered_subspace(
    const std::vector<std::function<cplx(const Point&)>>& fields, MapId map,
    const std::vector<Ray>& rays, double tol = 1e-3) {
  (void)map;
  SubspaceWitness w;
  w.tol = tol;
  if (fields.empty()) {
    w.note = "no atoms";
    return w;
  }
  std::vector<const Ray*> exp_rays;
  for (const Ray& r : rays)
    if (r.exponential) exp_rays.push_back(&r);
  if (exp_rays.empty()) {
    w.note = "no exponential ray; witness not applicable";
    return w;
  }
  const std::size_t na = fields.size();
  try {
    const Point p0 = exp_rays.front()->base;
    std::vector<double> anchor(na, 1.0);
    for (std::size_t i = 0; i < na; ++i) {
      const double a = std::abs(fields[i](p0));
      if (a > 0.0 && std::isfinite(a)) anchor[i] = a;
    }
    std::vector<Eigen::RowVectorXcd> rows;
    for (const Ray* r : exp_rays) {
      std::vector<double> far = r->subspace_ts;
      if (far.empty()) {
        const auto ts = ray_times(*r);
        const std::size_t keep = std::min<std::size_t>(4, ts.size());
        far.assign(ts.end() - static_cast<std::ptrdiff_t>(keep), ts.end());
      }
      for (double t : far) {
        const Point p = ray_point(*r, t);
        Eigen::RowVectorXcd row(static_cast<Eigen::Index>(na));
        for (std::size_t i = 0; i < na; ++i)
          row(static_cast<Eigen::Index>(i)) = fields[i](p) / anchor[i];
        const double mx = row.cwiseAbs().maxCoeff();
        if (mx > 0.0 && std::isfinite(mx)) rows.push_back(row / mx);
      }
    }
    if (rows.size() < na) {
      w.note = "too few usable far samples";
      return w;
    }
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()),
                       static_cast<Eigen::Index>(na));
    for (std::size_t j = 0; j < rows.size(); ++j)
      m.row(static_cast<Eigen::Index>(j)) = rows[j];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    w.sigma_max = s(0);
    // a small singular value is only a candidate: the far rows compare each
    // combination against the fastest-growing atom, so a sub-dominant grower
    // can still slide under the threshold there.  A genuinely tempered
    // combination is small relative to the dominant atom at every scale; a
    // spurious one merely cancels the leading branches asymptotically and
    // still carries atom-sized values at mid range.  (The far values of the
    // candidates themselves are useless for this check: the extraction
    // leaves sigma-level contamination by the growing atoms, which
    // eventually dwarfs a decaying branch.)
    std::vector<Point> mids;
    for (const Ray* r : exp_rays) {
      const auto ts = ray_times(*r);
      const std::size_t n = ts.size();
      for (std::size_t j = n / 4; j <= n / 2 && j < n; ++j)
        mids.push_back(ray_point(*r, ts[j]));
    }
    int accepted = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      if (s(i) >= tol * w.sigma_max) {
        w.sigma_out = s(i);
        continue;
      }
      ++w.candidates;
      const Eigen::VectorXcd v = svd.matrixV().col(i);
      bool tempered = true;
      for (const Point& p : mids) {
        cplx acc = 0.0;
        double mx = 0.0;
        for (std::size_t q = 0; q < na; ++q) {
          const cplx val = fields[q](p) / anchor[q];
          acc += v(static_cast<Eigen::Index>(q)) * val;
          mx = std::max(mx, std::abs(val));
        }
        if (!(mx > 0.0) || !std::isfinite(mx)) continue;
        if (std::abs(acc) > tol * mx) {
          tempered = false;
          break;
        }
      }
      if (tempered) {
        ++accepted;
        w.sigma_in = std::max(w.sigma_in, s(i));
      } else {
        w.sigma_out = s(i);
      }
    }
    if (w.candidates > accepted)
      w.note = std::to_string(w.candidates - accepted) +
               " candidate direction(s) rejected at mid-range samples";
    w.dim = accepted;
  } catch (const std::exception& e) {
    w.dim = -1;
    w.note = std::string("evaluation failed: ") + e.what();
  }
  return w;
}

// ---------------------------------------------------------------------------
// JSON encodings

inline void to_json(nlohmann::json& j, const GrowthTag& t) { j = to_string(t); }

inline void to_json(nlohmann::json& j, const RayWitness& w) {
  j = nlohmann::json{{"ray", w.ray},         {"ok", w.ok},
                     {"error", w.error},     {"decays", w.decays},
                     {"poly_bounded", w.poly_bounded},
                     {"poly_order", w.poly_order},
                     {"sup", w.sup},         {"end_ratio", w.end_ratio},
                     {"slope_gain", w.slope_gain}};
}

inline void to_json(nlohmann::json& j, const GrowthReport& r) {
  j = nlohmann::json{{"label", r.label}, {"tag", r.tag}, {"rays", r.rays}};
}

inline void to_json(nlohmann::json& j, const SubspaceWitness& w) {
  j = nlohmann::json{{"dim", w.dim},
                     {"candidates", w.candidates},
                     {"tol", w.tol},
                     {"sigma_max", w.sigma_max},
                     {"sigma_in", w.sigma_in},
                     {"sigma_out", w.sigma_out},
                     {"note", w.note}};
}

}  // namespace gwhit
