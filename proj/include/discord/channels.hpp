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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discord/states.hpp"

namespace discord {

enum class ChannelKind { phase_damping, bit_flip, phase_flip, bit_phase_flip, identity };

/// Short config name: "pd", "bf", "pf", "bpf", "id".
std::string_view short_name(ChannelKind kind);
/// Parses a short name; throws ValidationError on anything else.
ChannelKind parse_channel_kind(std::string_view name);
bool is_flip(ChannelKind kind);

/// Single-qubit Kraus set at parametrized time p.
struct KrausChannel {
  ChannelKind kind = ChannelKind::identity;
  double p = 0.0;
  std::vector<Matrix2> operators;
  /// max |(sum_l K_l^dagger K_l - I)_ij|, computed at construction.
  double completeness_error = 0.0;

  bool is_complete(double tol = 1e-12) const { return completeness_error <= tol; }
};

/// Computes max |(sum_l K_l^dagger K_l - I)_ij|.
double completeness_defect(const std::vector<Matrix2>& operators);

KrausChannel make_pauli_channel(ChannelKind kind, double p);

/// Local channels on qubits a and b; qubit b runs at q = rate_ratio * p.
struct ChannelPair {
  ChannelKind kind_a = ChannelKind::identity;
  ChannelKind kind_b = ChannelKind::identity;
  double rate_ratio = 1.0;

  /// Throws RangeError unless rate_ratio is in (0, 1].
  void validate() const;
  bool involves_flip() const { return is_flip(kind_a) || is_flip(kind_b); }
  /// Upper end of the parametrized-time domain: 1/2 with flips, else 1.
  double p_max() const { return involves_flip() ? 0.5 : 1.0; }
};

/// sum_{i,j} (K_i x K_j) rho (K_i x K_j)^dagger. Throws ContractError if
/// either Kraus set is incomplete.
DensityMatrix apply_local_channels(const DensityMatrix& rho, const KrausChannel& chan_a,
                                   const KrausChannel& chan_b);
DensityMatrix apply_local_channels(const DensityMatrix& rho, const ChannelPair& pair, double p);

/// Unchecked kernel used by the public overloads and the verification suite.
Matrix4 apply_local_channels(const Matrix4& rho, const std::vector<Matrix2>& ops_a,
                             const std::vector<Matrix2>& ops_b);

/// Whether propagate_bd has a closed form for this pair.
bool bd_closed_form_supported(const ChannelPair& pair);

/// Multiplicative decay of (c1, c2, c3) written as c_j (1 - u_j p)(1 - v_j p).
struct BdDecay {
  std::array<double, 3> u{};
  std::array<double, 3> v{};
};

/// Decay coefficients for a supported pair; throws UnsupportedScenario.
BdDecay bd_decay(const ChannelPair& pair);

/// Closed-form evolved correlation vector. Supported: identical kinds on
/// both qubits and bit flip (a) x phase flip (b, at q = r p).
BellDiagonalState propagate_bd(const BellDiagonalState& c0, const ChannelPair& pair, double p);

/// p = 1 - exp(-gamma t).
double parametrized_time(double gamma, double t);
/// t = -ln(1 - p) / gamma.
double physical_time(double p, double gamma);

}  // namespace discord
