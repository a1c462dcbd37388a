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

// Batch refinement runs: goal + script + fuel in, outcome out.

#ifndef DLCF_RUNNER_HPP_
#define DLCF_RUNNER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dlcf {

struct RunConfig {
  std::string logic;
  std::string goal;
  std::string script;
  std::size_t fuel = 100000;
  bool trace = false;
  bool json = false;
};

enum class RunStatus {
  kComplete,
  kIncomplete,
  kFailed,
  kUnsuccess,
  kOutOfFuel,
  kError,
};

struct RunOutcome {
  RunStatus status = RunStatus::kError;
  std::string state;  // rendered final state, empty when none
  std::vector<std::string> residual_goals;
  std::optional<std::vector<std::string>> extract;  // iff complete
  std::size_t steps_used = 0;
  std::vector<std::string> trace;
  std::string error;
};

RunOutcome run_refinement(const RunConfig& config);

const char* status_name(RunStatus s);
int exit_code(RunStatus s);

// Text written to stdout.
std::string render_pretty(const RunOutcome& o);
std::string render_json(const RunOutcome& o);

}  // namespace dlcf

#endif  // DLCF_RUNNER_HPP_
