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

#ifndef DOFLAB_EXECUTE_HPP
#define DOFLAB_EXECUTE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "doflab/scheme.hpp"
#include "doflab/three_user.hpp"

namespace doflab {

enum class ComponentStatus { simulated, trivial, not_simulated };

inline std::string_view name(ComponentStatus s) {
  switch (s) {
    case ComponentStatus::simulated: return "simulated";
    case ComponentStatus::trivial: return "trivial";
    case ComponentStatus::not_simulated: return "not simulated";
  }
  return "?";
}

struct ComponentRun {
  PlanComponent component;
  ComponentStatus status = ComponentStatus::trivial;
  std::optional<TrialsSummary> summary;
  DoFPoint achieved;  // lifted to 3 users; empty when not simulated
  bool verified = false;
};

struct PlanExecution {
  AchievabilityPlan plan;
  std::vector<ComponentRun> runs;

  /// Every component that could be run reached its point exactly.
  bool ok() const {
    for (const auto& r : runs)
      if (r.status != ComponentStatus::not_simulated && !r.verified) return false;
    return true;
  }
  bool complete() const { return plan.executable(); }
};

/// Runs each component of a three-user plan on the (M, N, N) two-user
/// machinery: pairs through the three-phase scheme, single users through a
/// one-slot time-division plan. The origin needs no transmission and the
/// symmetric corner is reported as not simulated.
inline PlanExecution execute_plan(const AchievabilityPlan& plan, std::size_t trials, std::uint64_t seed) {
  PlanExecution ex{plan, {}};
  for (const auto& c : plan.components) {
    ComponentRun run{c, ComponentStatus::trivial, std::nullopt, {}, false};
    std::optional<SchemeSpec> spec;
    if (c.source == PlanSource::two_user_scheme)
      spec = plan_two_user(plan.M, plan.N, plan.N);
    else if (c.source == PlanSource::single_user)
      spec = plan_time_division(plan.M, plan.N, plan.N, 1, 0);

    if (spec) {
      run.status = ComponentStatus::simulated;
      run.summary = simulate_trials(*spec, trials, seed);
      if (run.summary->ok()) {
        run.achieved = DoFPoint(3);
        for (std::size_t j = 0; j < c.users.size(); ++j) run.achieved[c.users[j]] = (*run.summary->achieved_dof)[j];
        run.verified = run.achieved == c.point;
      }
    } else if (c.source == PlanSource::time_division) {
      run.achieved = DoFPoint(3);
      run.verified = run.achieved == c.point;
    } else {
      run.status = ComponentStatus::not_simulated;
    }
    ex.runs.push_back(std::move(run));
  }
  return ex;
}

}  // namespace doflab

#endif  // DOFLAB_EXECUTE_HPP
