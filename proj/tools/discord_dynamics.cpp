// Copyright 2026 The discord-dynamics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: scan, reproduce, verify, predict.
//
// Exit codes: 0 success, 2 validation error, 3 verification failure.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "discord/errors.hpp"
#include "discord/io.hpp"
#include "discord/scenario.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit correlation dynamics under local Kraus channels"};
  app.require_subcommand(1);

  std::string config_path;
  auto* scan = app.add_subcommand("scan", "Sweep parametrized time for a scenario config");
  scan->add_option("--config", config_path, "Scenario JSON file")->required();

  std::string figure;
  std::string out_dir = ".";
  auto* reproduce = app.add_subcommand("reproduce", "Write the data behind a figure preset");
  reproduce->add_option("figure", figure, "fig2, fig3, fig4 or fig5")->required();
  reproduce->add_option("--out", out_dir, "Output directory");

  std::uint64_t seed = 42;
  int n = 100;
  auto* verify = app.add_subcommand("verify", "Cross-check closed forms against oracles");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--n", n, "Samples per suite");

  std::string state_text;
  std::string channel_text;
  auto* predict = app.add_subcommand("predict", "Analytic sudden-change predictions");
  predict->add_option("--state", state_text, "State as JSON text or a path to a JSON file")->required();
  predict->add_option("--channel", channel_text, "Channel: JSON, 'pd', or 'bf/pf@0.8'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*scan) {
      const auto config = discord::ScenarioConfig::from_json(discord::io::read_json_file(config_path));
      const auto result = discord::run_scan(config);
      if (config.output_csv.empty()) discord::io::write_csv(std::cout, result.curves);
      if (config.output_report.empty()) {
        auto j = discord::io::to_json(result.report);
        j["method"] = result.method;
        std::cerr << j.dump(2) << '\n';
      }
    } else if (*reproduce) {
      std::cout << discord::reproduce(figure, out_dir).dump(2) << '\n';
    } else if (*verify) {
      const auto report = discord::verify(seed, n);
      std::cout << report.to_json().dump(2) << '\n';
      if (!report.passed()) return kExitVerification;
    } else if (*predict) {
      discord::io::json state_json;
      const auto first = state_text.find_first_not_of(" \t\n");
      if (first != std::string::npos && state_text[first] == '{') {
        try {
          state_json = discord::io::json::parse(state_text);
        } catch (const discord::io::json::parse_error& e) {
          throw discord::ValidationError(std::string("--state: invalid JSON: ") + e.what());
        }
      } else {
        state_json = discord::io::read_json_file(state_text);
      }
      const auto state = discord::io::initial_state_from_json(state_json);
      const auto pair = discord::io::parse_channel_spec(channel_text);
      std::cout << discord::predict(state, pair).dump(2) << '\n';
    }
  } catch (const discord::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const discord::UnsupportedScenario& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
