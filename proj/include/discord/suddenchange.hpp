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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discord/channels.hpp"
#include "discord/states.hpp"

namespace discord {

enum class Mechanism { max_switch, intermediate_switch, itr_kink };
enum class Regime { classical_then_quantum, quantum_then_classical, none };

std::string_view to_string(Mechanism m);
std::string_view to_string(Regime r);

/// Sampled correlation values over parametrized time.
struct CorrelationCurve {
  std::string measure_id;
  std::vector<double> grid;
  std::vector<double> values;
  bool nonuniform = false;

  /// Throws ValidationError on length mismatch, non-increasing or
  /// out-of-[0,1] grids, or an unflagged nonuniform step.
  void validate() const;
  double step() const;
  double range() const;
};

struct PredictedChange {
  double p = 0.0;
  Mechanism mechanism = Mechanism::max_switch;
  std::string measure;
  bool degenerate = false;
};

struct DetectedKink {
  double p = 0.0;
  double confidence = 0.0;
  std::string measure;
};

struct FreezingInterval {
  double p_lo = 0.0;
  double p_hi = 0.0;
  double frozen_value = 0.0;
  std::string measure;
};

struct SuddenChangeReport {
  std::vector<PredictedChange> predicted;
  std::vector<DetectedKink> detected;
  std::vector<FreezingInterval> freezing_intervals;
  Regime regime = Regime::none;
  std::optional<double> pointer_emergence_p;
};

// ---------------------------------------------------------------------------
// Analytic predictors

struct SingleSc {
  double p = 0.0;
  bool degenerate = false;
};

/// Identical channels of `kind` on both qubits. The constant component is
/// c3 (pd, pf), c1 (bf) or c2 (bpf).
std::optional<SingleSc> predict_sc_single(const BellDiagonalState& c0, ChannelKind kind);

/// Bit flip on a at p, phase flip on b at q = r p.
struct DoubleScPrediction {
  std::vector<double> times;  ///< interior sudden-change times, ascending
  std::optional<double> boundary_time;  ///< a crossing at the domain edge p = 1/2
  bool ordering_holds = false;          ///< |c2| > |c3| > |c1|
  double threshold = 0.0;               ///< (|c2| - |c3|) / (|c2| - |c1|)
  bool double_sc = false;
  std::string explanation;
};
DoubleScPrediction predict_sc_double_bfpf(const BellDiagonalState& c0, double r);

/// Switches of the intermediate value of (|c11|, |c22|)(1-p)^2 and
/// |c33 - a3 b3| under phase damping on both qubits.
std::vector<double> predict_tdd_sc(const XStateParams& x0);

/// Switch of the maximum (C_tr) under the same evolution.
std::vector<double> predict_ctr_sc(const XStateParams& x0);

struct ItrKinks {
  std::optional<double> p_minus;
  std::optional<double> p_plus;
};
ItrKinks predict_itr_kinks(const XStateParams& x0);

/// Points in (p_lo, p_hi) where the index of max_j |c_j(p)| changes for a
/// Bell-diagonal state under a supported pair.
std::vector<double> argmax_switches(const BellDiagonalState& c0, const ChannelPair& pair, double p_lo,
                                    double p_hi);

/// Index of max_j |c_j| with the first index winning exact ties.
int argmax_index(const std::array<double, 3>& c);

/// (1 - p)^2 / (1 + 2 (1 - p)^2).
double tdd_freeze_bound(double p_sc2);

// ---------------------------------------------------------------------------
// Numerical detection

struct DetectOptions {
  /// Global threshold on the normalized second difference. When absent a
  /// local rule is used: factor x the median over +-window points.
  std::optional<double> threshold;
  int window = 10;
  int exclusion = 2;
  double factor = 10.0;
  /// Minimum slope jump (normalized by range) for the local rule.
  double slope_floor = 1e-3;
  std::size_t min_points = 50;
};

std::vector<DetectedKink> detect_kinks(const CorrelationCurve& curve, const DetectOptions& opt = {});
inline std::vector<DetectedKink> detect_kinks(const CorrelationCurve& curve, double threshold) {
  DetectOptions o;
  o.threshold = threshold;
  return detect_kinks(curve, o);
}

/// Maximal runs where |dv/dp| <= tol * range over at least min_steps steps.
std::vector<FreezingInterval> freezing_intervals(const CorrelationCurve& curve, double tol = 1e-6,
                                                 int min_steps = 3);

/// Classical measure: hv (or ctr); quantum measure: oz (or tdd). Fills
/// detections and freezing intervals for every curve; `predicted` is left
/// empty.
SuddenChangeReport classify_regimes(const std::map<std::string, CorrelationCurve>& curves,
                                    double tol = 1e-6);

}  // namespace discord
