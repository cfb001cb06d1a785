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

// Variational oracles. Each one minimizes or maximizes directly over
// measurements or classical-quantum states, without using any closed form,
// so it can be used to cross-check the closed formulas.

#include <cstdint>
#include <string>
#include <vector>

#include "discord/correlations.hpp"
#include "discord/states.hpp"

namespace discord {

struct OracleOptions {
  int restarts = 16;
  std::uint64_t seed = 0;
  int grid_theta = 64;
  int grid_phi = 128;
  double tolerance = 1e-6;  ///< final refinement step
};

/// Structured record of one oracle evaluation.
struct OracleResult {
  std::string measure_id;
  double value = 0.0;  ///< reported value (clipped where the quantity is >= 0)
  double raw = 0.0;    ///< optimizer output before clipping
  std::vector<double> argopt;
  MeasurementBasis basis;  ///< optimal basis on the measured side, if any
  int restarts = 0;
  long evaluations = 0;
};

/// Maximal Holevo quantity S(rho_other) - sum_j p_j S(rho_other | j) over
/// projective measurements on `measured`.
OracleResult holevo_oracle(const DensityMatrix& rho, Subsystem measured,
                           const OracleOptions& opt = {});

/// mutual_information(rho) - holevo_oracle(rho); small negatives clipped to 0.
OracleResult oz_discord_general(const DensityMatrix& rho, Subsystem measured,
                                const OracleOptions& opt = {});

/// min over sum_j p_j Pi_j x rho_j of the trace norm of rho minus that state,
/// with the projectors on `measured`.
OracleResult tdd_oracle(const DensityMatrix& rho, const OracleOptions& opt = {},
                        Subsystem measured = Subsystem::a);

enum class DistanceMetric { trace, relative_entropy };
enum class MeasuredSide { a, b, both };

/// min over bases of d(rho, Pi(rho)) for measurement on one or both sides.
OracleResult mid_distance(const DensityMatrix& rho, MeasuredSide side, DistanceMetric metric,
                          const OracleOptions& opt = {});

/// max over bases on a of the trace norm of Pi_a(rho) - Pi_a(rho_a x rho_b).
OracleResult ctr_oracle(const DensityMatrix& rho, const OracleOptions& opt = {});

/// Trace norm of rho - rho_a x rho_b.
double itr_direct(const DensityMatrix& rho);

/// Local Bloch vectors and correlation matrix, oriented for `measured`.
struct BlochData {
  std::array<double, 3> measured{};
  std::array<double, 3> other{};
  std::array<std::array<double, 3>, 3> t{};
};
BlochData bloch_data(const Matrix4& rho, Subsystem measured);

}  // namespace discord
