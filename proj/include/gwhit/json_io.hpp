// SPDX-License-Identifier: MIT
//
// JSON encodings for the data types that cross the tool boundary.  An
// affine factor is a flat array [normal_1, ..., normal_n, shift_re,
// shift_im]; the aggregate types are objects keyed by their field names.

#pragma once

#include <json.hpp>

#include <string>

#include "gwhit/nilpotent.hpp"
#include "gwhit/ore_sato.hpp"

namespace gwhit {

inline void to_json(nlohmann::json& j, const AffineFactor& f) {
  j = f.normal;
  j.push_back(f.shift.real());
  j.push_back(f.shift.imag());
}

inline void from_json(const nlohmann::json& j, AffineFactor& f) {
  if (!j.is_array() || j.size() < 3)
    throw config_error("factor: expected [normal..., shift_re, shift_im]");
  f.normal.clear();
  for (std::size_t k = 0; k + 2 < j.size(); ++k)
    f.normal.push_back(j[k].get<double>());
  f.shift = cplx(j[j.size() - 2].get<double>(), j[j.size() - 1].get<double>());
}

inline void to_json(nlohmann::json& j, const HornSystemData& d) {
  j = nlohmann::json{{"n", d.n}, {"P", d.P}, {"Q", d.Q}};
}

inline void from_json(const nlohmann::json& j, HornSystemData& d) {
  try {
    d.n = j.at("n").get<int>();
    d.P = j.at("P").get<std::vector<std::vector<AffineFactor>>>();
    d.Q = j.at("Q").get<std::vector<std::vector<AffineFactor>>>();
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("system data: ") + e.what());
  }
  require_valid(d);
}

inline void to_json(nlohmann::json& j, const GammaProductData& g) {
  j = nlohmann::json{{"t", g.t},
                     {"numerator", g.numerator},
                     {"denominator", g.denominator}};
}

inline void from_json(const nlohmann::json& j, GammaProductData& g) {
  try {
    g.t = j.at("t").get<std::vector<double>>();
    g.numerator = j.at("numerator").get<std::vector<AffineFactor>>();
    g.denominator = j.at("denominator").get<std::vector<AffineFactor>>();
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("gamma product: ") + e.what());
  }
}

inline void to_json(nlohmann::json& j, const Covector& l) {
  j = nlohmann::json{{"alpha", l.alpha},   {"beta1", l.beta1},
                     {"beta2", l.beta2},   {"gamma1", l.gamma1},
                     {"gamma2", l.gamma2}, {"gamma3", l.gamma3}};
}

inline void from_json(const nlohmann::json& j, Covector& l) {
  try {
    l.alpha = j.at("alpha").get<double>();
    l.beta1 = j.at("beta1").get<double>();
    l.beta2 = j.at("beta2").get<double>();
    l.gamma1 = j.at("gamma1").get<double>();
    l.gamma2 = j.at("gamma2").get<double>();
    l.gamma3 = j.at("gamma3").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("covector: ") + e.what());
  }
}

inline void to_json(nlohmann::json& j, const CaseTag& t) { j = to_string(t); }

inline void from_json(const nlohmann::json& j, CaseTag& t) {
  if (!j.is_string()) throw config_error("case tag: expected a string");
  const auto parsed = parse_case_tag(j.get<std::string>());
  if (!parsed)
    throw config_error("case tag: unknown tag '" + j.get<std::string>() + "'");
  t = *parsed;
}

inline void to_json(nlohmann::json& j, const OrbitClass& oc) {
  j = nlohmann::json{{"kind", to_string(oc.kind)},
                     {"dim", oc.dim},
                     {"normal_form", oc.normal_form}};
}

}  // namespace gwhit
