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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "discord/io.hpp"
#include "discord/suddenchange.hpp"

namespace discord {

struct GridSpec {
  double p_min = 0.0;
  double p_max = 1.0;
  double step = 1e-3;

  /// p_min + k step for every point not beyond p_max; a last point within
  /// round-off of p_max is set to p_max exactly.
  std::vector<double> points() const;
};

inline constexpr const char* kMeasureIds[] = {"mi", "hv", "oz", "tdd", "ctr", "itr"};

struct ScenarioConfig {
  std::string name = "scan";
  io::InitialState initial_state = BellDiagonalState(0.0, 0.0, 0.0);
  ChannelPair channel;
  GridSpec grid;
  std::vector<std::string> measures;
  std::uint64_t seed = 0;
  std::string output_csv;     ///< empty: not written
  std::string output_report;  ///< empty: not written

  /// Throws ValidationError naming the offending field.
  void validate() const;

  static ScenarioConfig from_json(const io::json& j);
};

struct ScanResult {
  std::vector<CorrelationCurve> curves;
  SuddenChangeReport report;
  /// "bell_diagonal_closed_form", "x_state_closed_form" or "general_oracle".
  std::string method;
};

ScanResult run_scan(const ScenarioConfig& config);

/// Preset configurations behind `reproduce`.
ScenarioConfig preset(const std::string& figure_id);

/// Writes <out>/<figure>.csv and <out>/<figure>_summary.json and returns the
/// summary.
io::json reproduce(const std::string& figure_id, const std::string& out_dir);

struct SuiteResult {
  std::string name;
  int samples = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  int n = 0;
  std::vector<SuiteResult> suites;

  bool passed() const;
  io::json to_json() const;
};

/// Oracle-versus-closed-form suites on n seeded random states.
VerifyReport verify(std::uint64_t seed, int n);

/// Analytic predictions for a state and channel pair.
io::json predict(const io::InitialState& state, const ChannelPair& pair);

}  // namespace discord
