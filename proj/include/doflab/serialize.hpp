// Copyright 2026 The doflab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOFLAB_SERIALIZE_HPP
#define DOFLAB_SERIALIZE_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "doflab/polytope.hpp"
#include "doflab/rate.hpp"
#include "doflab/regions.hpp"
#include "doflab/scheme.hpp"
#include "doflab/three_user.hpp"

namespace doflab {

using Json = nlohmann::ordered_json;

inline Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline RationalVector rational_vector_from_json(const Json& j) {
  RationalVector v;
  for (const auto& x : j) v.push_back(Rational::parse(x.get<std::string>()));
  return v;
}

inline Json to_json(const HalfSpace& h) {
  return Json{{"coefficients", to_json(h.coefficients)}, {"bound", h.bound.str()}};
}

inline Json to_json(const AntennaConfig& c) { return Json{{"M", c.M}, {"N", c.N}}; }

inline Json to_json(const AchievabilityPlan& plan) {
  Json comps = Json::array();
  for (const auto& c : plan.components)
    comps.push_back(Json{{"point", to_json(c.point)},
                         {"weight", c.weight.str()},
                         {"source", std::string(name(c.source))},
                         {"users", c.users}});
  return Json{{"M", plan.M}, {"N", plan.N}, {"target", to_json(plan.target)}, {"components", comps}};
}

inline AchievabilityPlan plan_from_json(const Json& j) {
  AchievabilityPlan p;
  p.M = j.at("M").get<int>();
  p.N = j.at("N").get<int>();
  p.target = rational_vector_from_json(j.at("target"));
  for (const auto& c : j.at("components"))
    p.components.push_back({rational_vector_from_json(c.at("point")), Rational::parse(c.at("weight").get<std::string>()),
                            parse_plan_source(c.at("source").get<std::string>()),
                            c.at("users").get<std::vector<std::size_t>>()});
  return p;
}

/// One row per component: "d1,d2,d3,weight,source".
inline std::string plan_csv(const AchievabilityPlan& plan) {
  std::string out;
  for (std::size_t i = 0; i < plan.target.size(); ++i) out += "d" + std::to_string(i + 1) + ",";
  out += "weight,source\n";
  for (const auto& c : plan.components)
    out += to_string(c.point, ",") + "," + c.weight.str() + "," + std::string(name(c.source)) + "\n";
  return out;
}

/// {config, halfspaces, vertices, plan}
inline Json region_document(const AntennaConfig& config, const DoFRegion& region,
                            const std::optional<std::vector<RationalVector>>& vertices,
                            const std::optional<AchievabilityPlan>& plan = std::nullopt) {
  Json hs = Json::array();
  for (const auto& h : region.halfspaces()) hs.push_back(to_json(h));
  Json vs = nullptr;
  if (vertices) {
    vs = Json::array();
    for (const auto& v : *vertices) vs.push_back(to_json(v));
  }
  return Json{{"config", to_json(config)},
              {"dimension", region.dimension()},
              {"halfspaces", hs},
              {"vertices", vs},
              {"plan", plan ? to_json(*plan) : Json(nullptr)}};
}

inline DoFRegion region_from_document(const Json& doc) {
  std::vector<HalfSpace> hs;
  for (const auto& h : doc.at("halfspaces"))
    hs.emplace_back(rational_vector_from_json(h.at("coefficients")), Rational::parse(h.at("bound").get<std::string>()));
  return DoFRegion(doc.at("dimension").get<std::size_t>(), std::move(hs));
}

inline Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline Json to_json(const CVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
  return a;
}

inline Json to_json(const LcRef& r) {
  return Json{{"observer", r.observer + 1}, {"slot", r.slot + 1}, {"antenna", r.antenna + 1}};
}

inline Json to_json(const SchemeSpec& s) {
  Json routing = Json::array();
  for (std::size_t k = 0; k < s.lc_routing.size(); ++k) {
    Json u1 = Json::array(), u2 = Json::array();
    for (std::size_t j = 0; j < s.lc_routing[k].to_user1.size(); ++j)
      u1.push_back(Json{{"position", j + 1}, {"lc", to_json(s.lc_routing[k].to_user1[j])}});
    for (std::size_t j = 0; j < s.lc_routing[k].to_user2.size(); ++j)
      u2.push_back(Json{{"position", s.user2_position(j) + 1}, {"lc", to_json(s.lc_routing[k].to_user2[j])}});
    routing.push_back(Json{{"slot", s.phase_start(2) + k + 1}, {"to_user1", u1}, {"to_user2", u2}});
  }
  return Json{{"case", std::string(1, case_letter(s.which))},
              {"M", s.M},
              {"N", {s.N1, s.N2}},
              {"effective_M", s.effective_M},
              {"phase_lengths", s.phase_lengths},
              {"symbols_per_slot", s.symbols_per_slot},
              {"lc_routing", routing}};
}

/// Per-slot complex matrices as [re, im] pairs.
inline Json to_json(const Transcript& tr) {
  Json slots = Json::array();
  for (std::size_t t = 0; t < tr.transmissions.size(); ++t)
    slots.push_back(Json{{"slot", t + 1},
                         {"H1", to_json(tr.channels.H[t][0])},
                         {"H2", to_json(tr.channels.H[t][1])},
                         {"X", to_json(tr.transmissions[t])},
                         {"Y1", to_json(tr.received[t][0])},
                         {"Y2", to_json(tr.received[t][1])}});
  Json symbols = Json::array();
  for (std::size_t i = 0; i < 2; ++i) {
    Json per = Json::array();
    for (const auto& v : tr.symbols.user[i]) per.push_back(to_json(v));
    symbols.push_back(per);
  }
  Json lcs = Json::array();
  for (const auto& [ref, value] : tr.overheard_lcs) {
    Json e = to_json(ref);
    e["value"] = to_json(value);
    lcs.push_back(e);
  }
  return Json{{"spec", to_json(tr.spec)},
              {"seed", tr.channels.seed},
              {"symbols", symbols},
              {"overheard_lcs", lcs},
              {"slots", slots}};
}

inline Json to_json(const DecodingReport& rep) {
  Json users = Json::array();
  for (const auto& u : rep.users)
    users.push_back(Json{{"recovered_symbols", u.recovered_symbols},
                         {"max_residual", u.max_residual},
                         {"inversions", u.inversions},
                         {"worst_condition", u.worst_condition},
                         {"best_condition", u.inversions ? u.best_condition : 0.0}});
  return Json{{"total_slots", rep.total_slots}, {"users", users}, {"achieved_dof", to_json(rep.achieved_dof)}};
}

inline Json to_json(const TrialsSummary& s) {
  Json failures = Json::array();
  for (const auto& f : s.failure_log)
    failures.push_back(Json{{"trial", f.trial}, {"sub_seed", f.sub_seed}, {"slot", f.slot}, {"user", f.user},
                            {"message", f.message}});
  return Json{{"spec", to_json(s.spec)},
              {"trials", s.trials},
              {"failures", s.failures},
              {"max_residual", s.max_residual},
              {"worst_condition", s.worst_condition},
              {"achieved_dof", s.achieved_dof ? to_json(*s.achieved_dof) : Json(nullptr)},
              {"dof_consistent", s.dof_consistent},
              {"failure_log", failures}};
}

}  // namespace doflab

#endif  // DOFLAB_SERIALIZE_HPP
