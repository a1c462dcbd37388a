// Copyright 2026 The dlcf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dlcf/runner.hpp"

#include "json.hpp"

#include "dlcf/logics.hpp"
#include "dlcf/script.hpp"

namespace dlcf {

namespace {

const char* tag(const ProofState<Judgment>& s) {
  if (s.is_fail()) return "fail";
  if (s.is_bot()) return "bot";
  return "state";
}

std::string join_extract(const std::vector<std::string>& ts) {
  if (ts.size() == 1) return ts[0];
  std::string out = "[";
  for (std::size_t i = 0; i < ts.size(); ++i) out += (i ? ", " : "") + ts[i];
  return out + "]";
}

}  // namespace

RunOutcome run_refinement(const RunConfig& config) {
  RunOutcome o;
  const Logic* logic = find_logic(config.logic);
  if (!logic) {
    o.error = "unknown logic '" + config.logic + "' (expected arith or dep)";
    return o;
  }
  if (config.fuel == 0) {
    o.error = "fuel must be at least 1";
    return o;
  }
  try {
    Judgment goal = logic->parse_goal(config.goal);
    Tac script = parse_script(config.script);
    const Printer& p = logic->printer;
    RuleHook<Judgment> hook;
    if (config.trace)
      hook = [&o, &p](const std::string& rule, const Judgment& x,
                      const ProofState<Judgment>& r) {
        o.trace.push_back(std::to_string(o.trace.size() + 1) + " " + rule +
                          " " + render(x, p) + " -> " + tag(r));
      };
    Tactic<Judgment> tactic = Interpreter<Judgment>(logic->refiner, hook).tactic(script);
    Context gamma = free_vars(goal);
    RunResult<ProofState<Judgment>> r =
        run(tactic(gamma, goal), Fuel{config.fuel});
    o.steps_used = r.steps;
    if (!r.resolved()) {
      o.status = RunStatus::kOutOfFuel;
      return o;
    }
    const ProofState<Judgment>& s = *r.value;
    o.state = render(s, p);
    if (s.is_fail()) {
      o.status = RunStatus::kFailed;
    } else if (s.is_bot()) {
      o.status = RunStatus::kUnsuccess;
    } else if (s.subgoals().empty()) {
      o.status = RunStatus::kComplete;
      std::vector<std::string> ex;
      for (const auto& t : s.validation()) ex.push_back(p.term(t));
      o.extract = std::move(ex);
    } else {
      o.status = RunStatus::kIncomplete;
      for (const auto& e : s.subgoals())
        o.residual_goals.push_back(render(e.goal, p));
    }
  } catch (const KernelError& e) {
    o = RunOutcome{};
    o.error = e.what();
  }
  return o;
}

const char* status_name(RunStatus s) {
  switch (s) {
    case RunStatus::kComplete:
      return "complete";
    case RunStatus::kIncomplete:
      return "incomplete";
    case RunStatus::kFailed:
      return "failed";
    case RunStatus::kUnsuccess:
      return "unsuccess";
    case RunStatus::kOutOfFuel:
      return "out_of_fuel";
    case RunStatus::kError:
      return "error";
  }
  return "error";
}

int exit_code(RunStatus s) {
  switch (s) {
    case RunStatus::kComplete:
      return 0;
    case RunStatus::kIncomplete:
      return 1;
    case RunStatus::kFailed:
      return 2;
    case RunStatus::kUnsuccess:
      return 3;
    case RunStatus::kOutOfFuel:
      return 4;
    case RunStatus::kError:
      return 5;
  }
  return 5;
}

std::string render_pretty(const RunOutcome& o) {
  std::string out;
  if (!o.state.empty()) out += o.state + "\n";
  out += std::string("status: ") + status_name(o.status) + "\n";
  out += "steps_used: " + std::to_string(o.steps_used) + "\n";
  if (o.extract) out += "extract: " + join_extract(*o.extract) + "\n";
  return out;
}

std::string render_json(const RunOutcome& o) {
  nlohmann::ordered_json j;
  j["status"] = status_name(o.status);
  j["steps_used"] = o.steps_used;
  j["residual_goals"] = o.residual_goals;
  if (o.extract)
    j["extract"] = *o.extract;
  else
    j["extract"] = nullptr;
  return j.dump() + "\n";
}

}  // namespace dlcf
