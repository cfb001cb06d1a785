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

#include <functional>
#include <span>
#include <vector>

namespace discord::optimize {

using Objective = std::function<double(std::span<const double>)>;

struct Minimum {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section search for a minimum of f on [lo, hi].
struct Scalar1d {
  double x;
  double value;
  int evaluations;
};
Scalar1d golden_section(const std::function<double(double)>& f, double lo, double hi, double tol);

struct CoordinateOptions {
  double initial_step = 0.1;
  double tolerance = 1e-6;  ///< final bracket half-width per coordinate
  int max_cycles = 200;
};

/// Cyclic coordinate descent: golden-section along one coordinate at a time
/// inside [x_i - step, x_i + step]; step halves when a cycle stalls.
Minimum coordinate_search(const Objective& f, std::vector<double> x0, const CoordinateOptions& opt);

struct NelderMeadOptions {
  double initial_step = 0.1;
  double x_tolerance = 1e-9;
  double f_tolerance = 1e-12;
  int max_evaluations = 6000;
  /// Number of times the simplex is rebuilt around the incumbent.
  int rebuilds = 2;
};

/// Adaptive Nelder-Mead (dimension-dependent coefficients).
Minimum nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& opt);

}  // namespace discord::optimize
