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

#include "discord/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "discord/errors.hpp"

namespace discord::io {

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ValidationError(where + ": missing field '" + key + "'");
  return *it;
}

double number(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number()) throw ValidationError(where + ": field '" + key + "' must be a number");
  return v.get<double>();
}

std::vector<std::vector<double>> matrix_field(const json& j, const char* key, int dim) {
  const json& v = require(j, key, "density matrix");
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    throw ValidationError("density matrix: field '" + std::string(key) + "' must have " +
                          std::to_string(dim) + " rows");
  std::vector<std::vector<double>> rows;
  for (const json& row : v) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw ValidationError("density matrix: every row of '" + std::string(key) + "' must have " +
                            std::to_string(dim) + " entries");
    std::vector<double> r;
    for (const json& x : row) {
      if (!x.is_number()) throw ValidationError("density matrix: non-numeric entry in '" + std::string(key) + "'");
      r.push_back(x.get<double>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

ChannelKind kind_field(const json& j, const std::string& where) {
  const json& v = require(j, "kind", where);
  if (!v.is_string()) throw ValidationError(where + ": field 'kind' must be a string");
  return parse_channel_kind(v.get<std::string>());
}

}  // namespace

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json to_json(const DensityMatrix& rho) {
  json re = json::array();
  json im = json::array();
  for (int i = 0; i < rho.dim(); ++i) {
    json rr = json::array();
    json ri = json::array();
    for (int k = 0; k < rho.dim(); ++k) {
      rr.push_back(rho(i, k).real());
      ri.push_back(rho(i, k).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  return {{"dim", rho.dim()}, {"re", re}, {"im", im}};
}

DensityMatrix density_from_json(const json& j) {
  const json& d = require(j, "dim", "density matrix");
  if (!d.is_number_integer() || (d.get<int>() != 2 && d.get<int>() != 4))
    throw ValidationError("density matrix: field 'dim' must be 2 or 4");
  const int dim = d.get<int>();
  const auto re = matrix_field(j, "re", dim);
  std::vector<std::vector<double>> im(static_cast<std::size_t>(dim), std::vector<double>(static_cast<std::size_t>(dim), 0.0));
  if (j.contains("im")) im = matrix_field(j, "im", dim);
  Eigen::MatrixXcd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k)
      m(i, k) = Complex(re[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                        im[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
  return DensityMatrix(m);
}

json to_json(const BellDiagonalState& c) { return {{"c", {c[0], c[1], c[2]}}}; }

BellDiagonalState bell_diagonal_from_json(const json& j) {
  const json& c = require(j, "c", "bell-diagonal state");
  if (!c.is_array() || c.size() != 3) throw ValidationError("bell-diagonal state: field 'c' must hold three numbers");
  std::array<double, 3> v{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!c[i].is_number()) throw ValidationError("bell-diagonal state: field 'c' must hold three numbers");
    v[i] = c[i].get<double>();
  }
  return BellDiagonalState(v);
}

json to_json(const XStateRaw& x) {
  return {{"rho11", x.rho11},         {"rho22", x.rho22},         {"rho33", x.rho33},
          {"rho44", x.rho44},         {"abs_rho14", x.abs_rho14}, {"abs_rho23", x.abs_rho23},
          {"phi14", x.phi14},         {"phi23", x.phi23}};
}

XStateRaw x_state_from_json(const json& j) {
  const std::string where = "x state";
  XStateRaw x;
  x.rho11 = number(j, "rho11", where);
  x.rho22 = number(j, "rho22", where);
  x.rho33 = number(j, "rho33", where);
  x.rho44 = number(j, "rho44", where);
  x.abs_rho14 = j.contains("abs_rho14") ? number(j, "abs_rho14", where) : 0.0;
  x.abs_rho23 = j.contains("abs_rho23") ? number(j, "abs_rho23", where) : 0.0;
  x.phi14 = j.contains("phi14") ? number(j, "phi14", where) : 0.0;
  x.phi23 = j.contains("phi23") ? number(j, "phi23", where) : 0.0;
  x.validate();
  return x;
}

json to_json(const XStateParams& x) {
  return {{"a3", x.a3}, {"b3", x.b3}, {"c11", x.c11}, {"c22", x.c22}, {"c33", x.c33}};
}

InitialState initial_state_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("initial_state: expected a JSON object");
  if (j.contains("c")) return bell_diagonal_from_json(j);
  if (j.contains("dim")) return density_from_json(j);
  if (j.contains("rho11")) return x_state_from_json(j);
  throw ValidationError("initial_state: expected one of the fields 'c', 'dim' or 'rho11'");
}

ChannelPair channel_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("channel: expected a JSON object");
  ChannelPair pair;
  if (j.contains("kind")) {
    pair.kind_a = pair.kind_b = kind_field(j, "channel");
  } else {
    pair.kind_a = kind_field(require(j, "a", "channel"), "channel.a");
    pair.kind_b = kind_field(require(j, "b", "channel"), "channel.b");
  }
  if (j.contains("p")) {
    const double p = number(j, "p", "channel");
    if (!(p >= 0.0 && p <= 1.0)) throw RangeError("channel: field 'p' outside [0, 1]");
  }
  if (j.contains("r")) pair.rate_ratio = number(j, "r", "channel");
  pair.validate();
  return pair;
}

json to_json(const ChannelPair& pair) {
  return {{"a", {{"kind", std::string(short_name(pair.kind_a))}}},
          {"b", {{"kind", std::string(short_name(pair.kind_b))}}},
          {"r", pair.rate_ratio}};
}

ChannelPair parse_channel_spec(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("channel: invalid JSON: ") + e.what());
    }
    return channel_from_json(j);
  }
  ChannelPair pair;
  std::string body = text;
  const auto at = body.find('@');
  if (at != std::string::npos) {
    try {
      pair.rate_ratio = std::stod(body.substr(at + 1));
    } catch (const std::exception&) {
      throw ValidationError("channel: cannot read the rate ratio in '" + text + "'");
    }
    body = body.substr(0, at);
  }
  const auto slash = body.find('/');
  if (slash == std::string::npos) {
    pair.kind_a = pair.kind_b = parse_channel_kind(body);
  } else {
    pair.kind_a = parse_channel_kind(body.substr(0, slash));
    pair.kind_b = parse_channel_kind(body.substr(slash + 1));
  }
  pair.validate();
  return pair;
}

json to_json(const SuddenChangeReport& report) {
  json predicted = json::array();
  for (const auto& p : report.predicted) {
    predicted.push_back({{"p_sc", p.p},
                         {"mechanism", std::string(to_string(p.mechanism))},
                         {"measure", p.measure},
                         {"degenerate", p.degenerate}});
  }
  json detected = json::array();
  for (const auto& d : report.detected)
    detected.push_back({{"p", d.p}, {"confidence", d.confidence}, {"measure", d.measure}});
  json frozen = json::array();
  for (const auto& f : report.freezing_intervals) {
    frozen.push_back(
        {{"p_lo", f.p_lo}, {"p_hi", f.p_hi}, {"frozen_value", f.frozen_value}, {"measure", f.measure}});
  }
  json out = {{"predicted", predicted},
              {"detected", detected},
              {"freezing_intervals", frozen},
              {"regime", std::string(to_string(report.regime))}};
  out["pointer_emergence_p"] = report.pointer_emergence_p ? json(*report.pointer_emergence_p) : json(nullptr);
  return out;
}

void write_csv(std::ostream& os, const std::vector<CorrelationCurve>& curves) {
  if (curves.empty()) throw ValidationError("write_csv: no curves");
  const auto& grid = curves.front().grid;
  for (const auto& c : curves) {
    if (c.grid != grid) throw ValidationError("write_csv: curve '" + c.measure_id + "' is on a different grid");
    if (c.values.size() != grid.size())
      throw ValidationError("write_csv: curve '" + c.measure_id + "' has the wrong length");
  }
  os << "p";
  for (const auto& c : curves) os << ',' << c.measure_id;
  os << '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    os << format_value(grid[i]);
    for (const auto& c : curves) os << ',' << format_value(c.values[i]);
    os << '\n';
  }
}

void write_csv(const std::string& path, const std::vector<CorrelationCurve>& curves) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  write_csv(os, curves);
}

std::vector<CorrelationCurve> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ValidationError("read_csv: empty input");
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  if (header.empty() || header.front() != "p") throw ValidationError("read_csv: first column must be 'p'");
  std::vector<CorrelationCurve> curves(header.size() - 1);
  for (std::size_t k = 1; k < header.size(); ++k) curves[k - 1].measure_id = header[k];
  std::vector<double> grid;
  std::size_t row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::size_t col = 0;
    while (std::getline(ss, cell, ',')) {
      if (col >= header.size()) throw ValidationError("read_csv: too many columns on row " + std::to_string(row));
      double v = 0.0;
      try {
        v = std::stod(cell);
      } catch (const std::exception&) {
        throw ValidationError("read_csv: non-numeric cell on row " + std::to_string(row));
      }
      if (col == 0) grid.push_back(v);
      else curves[col - 1].values.push_back(v);
      ++col;
    }
    if (col != header.size()) throw ValidationError("read_csv: too few columns on row " + std::to_string(row));
  }
  for (auto& c : curves) c.grid = grid;
  return curves;
}

std::vector<CorrelationCurve> read_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ValidationError("cannot open '" + path + "'");
  return read_csv(is);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  os << text;
}

json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ValidationError("cannot open '" + path + "'");
  try {
    return json::parse(is);
  } catch (const json::parse_error& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace discord::io
