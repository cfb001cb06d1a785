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

#include "discord/channels.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "discord/errors.hpp"

namespace discord {

namespace {

// Per-qubit contraction: component j of the local Bloch/correlation frame is
// multiplied by (1 - w_j p) under a channel of the given kind.
std::array<double, 3> local_decay_rates(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::phase_damping: return {1.0, 1.0, 0.0};
    case ChannelKind::bit_flip: return {0.0, 2.0, 2.0};
    case ChannelKind::phase_flip: return {2.0, 2.0, 0.0};
    case ChannelKind::bit_phase_flip: return {2.0, 0.0, 2.0};
    case ChannelKind::identity: return {0.0, 0.0, 0.0};
  }
  return {0.0, 0.0, 0.0};
}

void require_unit_interval(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << what << " = " << p << " is outside [0, 1]";
    throw RangeError(os.str());
  }
}

}  // namespace

std::string_view short_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::phase_damping: return "pd";
    case ChannelKind::bit_flip: return "bf";
    case ChannelKind::phase_flip: return "pf";
    case ChannelKind::bit_phase_flip: return "bpf";
    case ChannelKind::identity: return "id";
  }
  return "?";
}

ChannelKind parse_channel_kind(std::string_view name) {
  if (name == "pd" || name == "phase_damping") return ChannelKind::phase_damping;
  if (name == "bf" || name == "bit_flip") return ChannelKind::bit_flip;
  if (name == "pf" || name == "phase_flip") return ChannelKind::phase_flip;
  if (name == "bpf" || name == "bit_phase_flip") return ChannelKind::bit_phase_flip;
  if (name == "id" || name == "identity") return ChannelKind::identity;
  throw ValidationError("unknown channel kind '" + std::string(name) +
                        "' (expected pd, bf, pf, bpf or id)");
}

bool is_flip(ChannelKind kind) {
  return kind == ChannelKind::bit_flip || kind == ChannelKind::phase_flip ||
         kind == ChannelKind::bit_phase_flip;
}

double completeness_defect(const std::vector<Matrix2>& operators) {
  Matrix2 sum = Matrix2::Zero();
  for (const auto& k : operators) sum += k.adjoint() * k;
  return (sum - Matrix2::Identity()).cwiseAbs().maxCoeff();
}

KrausChannel make_pauli_channel(ChannelKind kind, double p) {
  require_unit_interval(p, "channel parameter p");
  KrausChannel ch;
  ch.kind = kind;
  ch.p = p;
  const double keep = std::sqrt(1.0 - p);
  const double flip = std::sqrt(p);
  switch (kind) {
    case ChannelKind::identity:
      ch.operators = {Matrix2::Identity()};
      break;
    case ChannelKind::phase_damping: {
      Matrix2 up = Matrix2::Zero();
      up(0, 0) = 1.0;
      Matrix2 down = Matrix2::Zero();
      down(1, 1) = 1.0;
      ch.operators = {keep * Matrix2::Identity(), flip * up, flip * down};
      break;
    }
    case ChannelKind::bit_flip:
      ch.operators = {keep * Matrix2::Identity(), flip * pauli(1)};
      break;
    case ChannelKind::phase_flip:
      ch.operators = {keep * Matrix2::Identity(), flip * pauli(3)};
      break;
    case ChannelKind::bit_phase_flip:
      ch.operators = {keep * Matrix2::Identity(), flip * pauli(2)};
      break;
  }
  ch.completeness_error = completeness_defect(ch.operators);
  return ch;
}

void ChannelPair::validate() const {
  if (!(rate_ratio > 0.0 && rate_ratio <= 1.0)) {
    std::ostringstream os;
    os << "rate ratio r = " << rate_ratio << " is outside (0, 1]";
    throw RangeError(os.str());
  }
}

Matrix4 apply_local_channels(const Matrix4& rho, const std::vector<Matrix2>& ops_a,
                             const std::vector<Matrix2>& ops_b) {
  Matrix4 out = Matrix4::Zero();
  for (const auto& ka : ops_a) {
    for (const auto& kb : ops_b) {
      const Matrix4 k = kron(ka, kb);
      out.noalias() += k * rho * k.adjoint();
    }
  }
  return out;
}

DensityMatrix apply_local_channels(const DensityMatrix& rho, const KrausChannel& chan_a,
                                   const KrausChannel& chan_b) {
  for (const KrausChannel* ch : {&chan_a, &chan_b}) {
    const double defect = completeness_defect(ch->operators);
    if (!(defect <= 1e-12)) {
      std::ostringstream os;
      os << "Kraus set for channel '" << short_name(ch->kind)
         << "' is not complete (max |sum K^dagger K - I| = " << defect << ")";
      throw ContractError(os.str());
    }
  }
  return DensityMatrix(apply_local_channels(rho.as_matrix4(), chan_a.operators, chan_b.operators));
}

DensityMatrix apply_local_channels(const DensityMatrix& rho, const ChannelPair& pair, double p) {
  pair.validate();
  return apply_local_channels(rho, make_pauli_channel(pair.kind_a, p),
                              make_pauli_channel(pair.kind_b, pair.rate_ratio * p));
}

bool bd_closed_form_supported(const ChannelPair& pair) {
  if (pair.kind_a == pair.kind_b) return true;
  return pair.kind_a == ChannelKind::bit_flip && pair.kind_b == ChannelKind::phase_flip;
}

BdDecay bd_decay(const ChannelPair& pair) {
  pair.validate();
  if (!bd_closed_form_supported(pair)) {
    throw UnsupportedScenario("no closed-form Bell-diagonal propagator for " +
                              std::string(short_name(pair.kind_a)) + " x " +
                              std::string(short_name(pair.kind_b)) +
                              " (supported: identical kinds, bf x pf)");
  }
  const auto wa = local_decay_rates(pair.kind_a);
  const auto wb = local_decay_rates(pair.kind_b);
  BdDecay d;
  for (std::size_t j = 0; j < 3; ++j) {
    d.u[j] = wa[j];
    d.v[j] = pair.rate_ratio * wb[j];
  }
  return d;
}

BellDiagonalState propagate_bd(const BellDiagonalState& c0, const ChannelPair& pair, double p) {
  const BdDecay d = bd_decay(pair);
  require_unit_interval(p, "parametrized time p");
  require_unit_interval(pair.rate_ratio * p, "parametrized time q = r p");
  std::array<double, 3> c{};
  for (std::size_t j = 0; j < 3; ++j) c[j] = c0.c()[j] * (1.0 - d.u[j] * p) * (1.0 - d.v[j] * p);
  return BellDiagonalState(c);
}

double parametrized_time(double gamma, double t) {
  if (!(gamma >= 0.0) || !(t >= 0.0)) {
    throw RangeError("parametrized_time requires gamma >= 0 and t >= 0");
  }
  return -std::expm1(-gamma * t);
}

double physical_time(double p, double gamma) {
  if (!(p >= 0.0 && p < 1.0) || !(gamma > 0.0)) {
    throw RangeError("physical_time requires p in [0, 1) and gamma > 0");
  }
  return -std::log1p(-p) / gamma;
}

}  // namespace discord
