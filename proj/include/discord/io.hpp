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

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "discord/channels.hpp"
#include "discord/states.hpp"
#include "discord/suddenchange.hpp"

namespace discord::io {

using json = nlohmann::json;

using InitialState = std::variant<BellDiagonalState, XStateRaw, DensityMatrix>;

/// {"dim": n, "re": [[...]], "im": [[...]]}
json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const json& j);

/// {"c": [c1, c2, c3]}
json to_json(const BellDiagonalState& c);
BellDiagonalState bell_diagonal_from_json(const json& j);

/// {"rho11", "rho22", "rho33", "rho44", "abs_rho14", "abs_rho23", "phi14", "phi23"}
json to_json(const XStateRaw& x);
XStateRaw x_state_from_json(const json& j);

json to_json(const XStateParams& x);

/// Dispatches on the keys present: "c", "dim", or "rho11".
InitialState initial_state_from_json(const json& j);

/// {"kind": k} (same kind on both qubits) or
/// {"a": {"kind": k}, "b": {"kind": k}, "r": ratio}. A "p" field is accepted
/// and ignored; parametrized time comes from the grid.
ChannelPair channel_from_json(const json& j);
json to_json(const ChannelPair& pair);

/// Channel given on the command line: JSON text, "pd", or "bf/pf@0.8".
ChannelPair parse_channel_spec(const std::string& text);

json to_json(const SuddenChangeReport& report);

/// Header "p,<measure_id>,...", values at 12 significant digits. All curves
/// must share the grid.
void write_csv(std::ostream& os, const std::vector<CorrelationCurve>& curves);
void write_csv(const std::string& path, const std::vector<CorrelationCurve>& curves);
std::vector<CorrelationCurve> read_csv(std::istream& is);
std::vector<CorrelationCurve> read_csv(const std::string& path);

/// %.12g formatting.
std::string format_value(double v);

void write_text(const std::string& path, const std::string& text);
json read_json_file(const std::string& path);

}  // namespace discord::io
