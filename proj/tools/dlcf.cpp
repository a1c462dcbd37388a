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

// dlcf: run a tactic script against a goal.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dlcf/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Refine a goal with a tactic script."};
  dlcf::RunConfig config;
  std::string script_file;

  app.add_option("--logic", config.logic, "arith or dep")
      ->required()
      ->check(CLI::IsMember({"arith", "dep"}));
  app.add_option("--goal", config.goal, "goal, e.g. \"eval (num 2 + num 3)\"")
      ->required();
  auto* script = app.add_option("--script", config.script, "tactic script");
  auto* file =
      app.add_option("--script-file", script_file, "read the script from a file")
          ->check(CLI::ExistingFile);
  script->excludes(file);
  app.add_option("--fuel", config.fuel, "maximum number of delayed steps")
      ->check(CLI::PositiveNumber);
  app.add_flag("--trace", config.trace, "print rule applications to stderr");
  app.add_flag("--json", config.json, "machine-readable output");

  try {
    app.parse(argc, argv);
    if (!*script && !*file)
      throw CLI::RequiredError("--script or --script-file");
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 5;
  }

  if (*file) {
    std::ifstream in(script_file);
    std::stringstream buf;
    buf << in.rdbuf();
    config.script = buf.str();
  }

  dlcf::RunOutcome outcome = dlcf::run_refinement(config);
  for (const auto& line : outcome.trace) std::cerr << line << '\n';
  if (outcome.status == dlcf::RunStatus::kError)
    std::cerr << "error: " << outcome.error << '\n';
  std::cout << (config.json ? dlcf::render_json(outcome)
                            : dlcf::render_pretty(outcome));
  return dlcf::exit_code(outcome.status);
}
