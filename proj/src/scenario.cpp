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

#include "discord/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>

#include "discord/correlations.hpp"
#include "discord/errors.hpp"
#include "discord/kernels.hpp"
#include "discord/oracles.hpp"
#include "discord/parallel.hpp"
#include "discord/random.hpp"

namespace discord {

namespace {

using io::json;

constexpr std::size_t kMinDetectionPoints = 50;

bool is_measure(const std::string& id) {
  return std::any_of(std::begin(kMeasureIds), std::end(kMeasureIds), [&](const char* m) { return id == m; });
}

bool wants(const ScenarioConfig& c, const char* id) {
  return std::find(c.measures.begin(), c.measures.end(), id) != c.measures.end();
}

bool plain_pd_pair(const ChannelPair& pair) {
  return pair.kind_a == ChannelKind::phase_damping && pair.kind_b == ChannelKind::phase_damping &&
         pair.rate_ratio == 1.0;
}

std::optional<XStateParams> x_params_at_zero(const io::InitialState& s) {
  if (const auto* bd = std::get_if<BellDiagonalState>(&s)) return XStateParams::from_bell_diagonal(*bd);
  if (const auto* raw = std::get_if<XStateRaw>(&s)) return x_standard_form(*raw);
  try {
    return bloch_extract(std::get<DensityMatrix>(s));
  } catch (const StructuralError&) {
    return std::nullopt;
  }
}

DensityMatrix to_density(const io::InitialState& s) {
  if (const auto* bd = std::get_if<BellDiagonalState>(&s)) return bell_diagonal_to_density(*bd);
  if (const auto* raw = std::get_if<XStateRaw>(&s)) return raw->to_density();
  return std::get<DensityMatrix>(s);
}

void add_predictions(std::vector<PredictedChange>& out, const std::vector<double>& times, Mechanism m,
                     const std::string& measure, const GridSpec& grid) {
  for (double p : times) {
    if (p >= grid.p_min && p <= grid.p_max) out.push_back({p, m, measure, p == 0.0});
  }
}

std::vector<double> itr_times(const XStateParams& x) {
  const ItrKinks k = predict_itr_kinks(x);
  std::vector<double> t;
  if (k.p_minus) t.push_back(*k.p_minus);
  if (k.p_plus && (!k.p_minus || *k.p_plus != *k.p_minus)) t.push_back(*k.p_plus);
  std::sort(t.begin(), t.end());
  return t;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::vector<double> GridSpec::points() const {
  const auto n = static_cast<std::size_t>(std::floor((p_max - p_min) / step + 1e-9));
  std::vector<double> out;
  out.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out.push_back(p_min + static_cast<double>(k) * step);
  if (std::abs(out.back() - p_max) <= 1e-9 * step) out.back() = p_max;
  return out;
}

void ScenarioConfig::validate() const {
  channel.validate();
  if (!(grid.step > 0.0)) throw ValidationError("grid.step must be positive");
  if (!(grid.p_min >= 0.0)) throw ValidationError("grid.p_min must be >= 0");
  if (!(grid.p_max > grid.p_min)) throw ValidationError("grid.p_max must exceed grid.p_min");
  if (grid.p_max > channel.p_max()) {
    std::ostringstream os;
    os << "grid.p_max = " << grid.p_max << " exceeds " << channel.p_max()
       << (channel.involves_flip() ? ": flip channels restrict scans to p in [0, 1/2]"
                                   : ": parametrized time lies in [0, 1]");
    throw ValidationError(os.str());
  }
  if (grid.step > grid.p_max - grid.p_min) throw ValidationError("grid.step is larger than the grid span");
  if (measures.empty()) throw ValidationError("measures must not be empty");
  std::set<std::string> seen;
  for (const auto& m : measures) {
    if (!is_measure(m)) throw ValidationError("measures: unknown measure '" + m + "' (expected mi, hv, oz, tdd, ctr, itr)");
    if (!seen.insert(m).second) throw ValidationError("measures: '" + m + "' listed twice");
  }
}

ScenarioConfig ScenarioConfig::from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("config: expected a JSON object");
  ScenarioConfig c;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ValidationError("name must be a string");
    c.name = j["name"].get<std::string>();
  }
  if (!j.contains("initial_state")) throw ValidationError("config: missing field 'initial_state'");
  try {
    c.initial_state = io::initial_state_from_json(j["initial_state"]);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("initial_state: ") + e.what());
  }
  if (!j.contains("channel")) throw ValidationError("config: missing field 'channel'");
  c.channel = io::channel_from_json(j["channel"]);
  if (j.contains("grid")) {
    const json& g = j["grid"];
    if (!g.is_object()) throw ValidationError("grid must be an object");
    for (const char* key : {"p_min", "p_max", "step"}) {
      if (g.contains(key) && !g[key].is_number())
        throw ValidationError(std::string("grid.") + key + " must be a number");
    }
    c.grid.p_min = g.value("p_min", c.grid.p_min);
    c.grid.p_max = g.value("p_max", c.channel.p_max());
    c.grid.step = g.value("step", c.grid.step);
  } else {
    c.grid.p_max = c.channel.p_max();
  }
  if (!j.contains("measures") || !j["measures"].is_array())
    throw ValidationError("measures must be an array of measure ids");
  for (const json& m : j["measures"]) {
    if (!m.is_string()) throw ValidationError("measures must be an array of measure ids");
    c.measures.push_back(m.get<std::string>());
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0)
      throw ValidationError("seed must be a non-negative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("output")) {
    const json& o = j["output"];
    if (!o.is_object()) throw ValidationError("output must be an object");
    if (o.contains("csv")) c.output_csv = o["csv"].get<std::string>();
    if (o.contains("report")) c.output_report = o["report"].get<std::string>();
  }
  c.validate();
  return c;
}

ScanResult run_scan(const ScenarioConfig& config) {
  config.validate();
  const std::vector<double> grid = config.grid.points();
  const std::size_t n = grid.size();
  ScanResult result;
  std::map<std::string, std::vector<double>> values;
  for (const auto& m : config.measures) values[m].assign(n, 0.0);

  const auto* bd0 = std::get_if<BellDiagonalState>(&config.initial_state);
  const std::optional<XStateParams> x0 = x_params_at_zero(config.initial_state);

  if (bd0 && bd_closed_form_supported(config.channel)) {
    result.method = "bell_diagonal_closed_form";
    const BdDecay d = bd_decay(config.channel);
    const auto& kt = kernels::active();
    std::array<std::vector<double>, 3> c;
    for (std::size_t j = 0; j < 3; ++j) {
      c[j].resize(n);
      kt.quadratic_decay((*bd0)[static_cast<int>(j)], d.u[j], d.v[j], grid, c[j]);
    }
    std::vector<double> total(n), classical(n), hi(n), mid(n), lo(n);
    kt.bell_diagonal_entropic(c[0], c[1], c[2], total, classical);
    kt.order_statistics3(c[0], c[1], c[2], hi, mid, lo);
    for (std::size_t i = 0; i < n; ++i) {
      if (values.count("mi")) values["mi"][i] = total[i];
      if (values.count("hv")) values["hv"][i] = classical[i];
      if (values.count("oz")) values["oz"][i] = std::max(total[i] - classical[i], 0.0);
      if (values.count("tdd")) values["tdd"][i] = tdd_x(XStateParams::from_bloch(0.0, 0.0, c[0][i], c[1][i], c[2][i]));
      if (values.count("ctr")) values["ctr"][i] = hi[i];
      if (values.count("itr")) values["itr"][i] = 0.5 * (hi[i] + std::max(hi[i], mid[i] + lo[i]));
    }
  } else {
    const DensityMatrix rho0 = to_density(config.initial_state);
    const bool x_route = x0.has_value();
    result.method = x_route ? "x_state_closed_form" : "general_oracle";
    const std::vector<std::string> ids = config.measures;
    const auto rows = parallel_map<std::vector<double>>(n, [&](std::size_t i) {
      const DensityMatrix rho = apply_local_channels(rho0, config.channel, grid[i]);
      OracleOptions opt;
      opt.seed = derive_seed(config.seed, i);
      std::optional<XStateParams> x;
      if (x_route) x = bloch_extract(rho);
      std::optional<OracleResult> holevo;
      std::vector<double> row;
      for (const auto& id : ids) {
        if (id == "mi") {
          row.push_back(mutual_information(rho));
        } else if (id == "hv" || id == "oz") {
          if (!holevo) holevo = holevo_oracle(rho, Subsystem::a, opt);
          row.push_back(id == "hv" ? holevo->value : std::max(mutual_information(rho) - holevo->value, 0.0));
        } else if (id == "tdd") {
          row.push_back(x ? tdd_x(*x) : tdd_oracle(rho, opt).value);
        } else if (id == "ctr") {
          row.push_back(x ? ctr_itr_x(*x).classical : ctr_oracle(rho, opt).value);
        } else {
          row.push_back(x ? ctr_itr_x(*x).total : itr_direct(rho));
        }
      }
      return row;
    });
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < ids.size(); ++k) values[ids[k]][i] = rows[i][k];
  }

  std::map<std::string, CorrelationCurve> curves;
  for (const auto& id : config.measures) {
    CorrelationCurve curve{id, grid, values[id], false};
    curves[id] = curve;
    result.curves.push_back(std::move(curve));
  }

  const bool has_pair = (curves.count("hv") && curves.count("oz")) || (curves.count("ctr") && curves.count("tdd"));
  if (n >= kMinDetectionPoints && has_pair) {
    result.report = classify_regimes(curves);
  } else {
    for (const auto& c : result.curves) {
      if (n >= kMinDetectionPoints) {
        const auto k = detect_kinks(c);
        result.report.detected.insert(result.report.detected.end(), k.begin(), k.end());
      }
      const auto f = freezing_intervals(c);
      result.report.freezing_intervals.insert(result.report.freezing_intervals.end(), f.begin(), f.end());
    }
  }

  auto& predicted = result.report.predicted;
  if (bd0 && bd_closed_form_supported(config.channel)) {
    const auto switches = argmax_switches(*bd0, config.channel, config.grid.p_min, config.grid.p_max);
    for (const char* id : {"hv", "oz"})
      if (wants(config, id)) add_predictions(predicted, switches, Mechanism::max_switch, id, config.grid);
  }
  if (x0 && plain_pd_pair(config.channel)) {
    if (wants(config, "tdd"))
      add_predictions(predicted, predict_tdd_sc(*x0), Mechanism::intermediate_switch, "tdd", config.grid);
    if (wants(config, "ctr"))
      add_predictions(predicted, predict_ctr_sc(*x0), Mechanism::max_switch, "ctr", config.grid);
    if (wants(config, "itr")) add_predictions(predicted, itr_times(*x0), Mechanism::itr_kink, "itr", config.grid);
  }

  if (!config.output_csv.empty()) io::write_csv(config.output_csv, result.curves);
  if (!config.output_report.empty()) {
    json j = io::to_json(result.report);
    j["method"] = result.method;
    io::write_text(config.output_report, j.dump(2) + "\n");
  }
  return result;
}

ScenarioConfig preset(const std::string& figure_id) {
  ScenarioConfig c;
  c.name = figure_id;
  c.grid = {0.0, 1.0, 1e-3};
  if (figure_id == "fig2") {
    c.initial_state = BellDiagonalState(-0.26, 0.54, 0.40);
    c.channel = {ChannelKind::phase_damping, ChannelKind::phase_damping, 1.0};
    c.measures = {"mi", "hv", "oz"};
  } else if (figure_id == "fig3") {
    c.initial_state = BellDiagonalState(0.36, -0.76, 0.48);
    c.channel = {ChannelKind::bit_flip, ChannelKind::phase_flip, 0.8};
    c.grid.p_max = 0.5;
    c.measures = {"mi", "hv", "oz"};
  } else if (figure_id == "fig4") {
    c.initial_state = BellDiagonalState(0.49, -0.14, -0.10);
    c.channel = {ChannelKind::phase_damping, ChannelKind::phase_damping, 1.0};
    c.measures = {"tdd", "ctr", "itr"};
  } else {
    throw ValidationError("unknown figure id '" + figure_id + "' (expected fig2, fig3, fig4 or fig5)");
  }
  return c;
}

json reproduce(const std::string& figure_id, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::string csv = (std::filesystem::path(out_dir) / (figure_id + ".csv")).string();
  const std::string summary_path = (std::filesystem::path(out_dir) / (figure_id + "_summary.json")).string();
  json summary = {{"figure", figure_id}, {"csv", csv}};

  if (figure_id == "fig5") {
    const GridSpec g{0.0, 1.0, 1e-3};
    CorrelationCurve bound{"bound", g.points(), {}, false};
    for (double p : bound.grid) bound.values.push_back(tdd_freeze_bound(p));
    io::write_csv(csv, {bound});
    summary["bound"] = {{"1", tdd_freeze_bound(1.0)}, {"0.5", tdd_freeze_bound(0.5)}, {"0.25", tdd_freeze_bound(0.25)}};
    io::write_text(summary_path, summary.dump(2) + "\n");
    return summary;
  }

  ScenarioConfig config = preset(figure_id);
  config.output_csv = csv;
  const ScanResult scan = run_scan(config);
  const auto& c0 = std::get<BellDiagonalState>(config.initial_state);
  json analytic;
  if (figure_id == "fig2") {
    const auto sc = predict_sc_single(c0, ChannelKind::phase_damping);
    analytic["p_sc"] = sc ? json(sc->p) : json(nullptr);
  } else if (figure_id == "fig3") {
    const DoubleScPrediction d = predict_sc_double_bfpf(c0, config.channel.rate_ratio);
    analytic["p_sc"] = d.times;
    analytic["double_sc"] = d.double_sc;
    analytic["threshold"] = d.threshold;
    analytic["explanation"] = d.explanation;
  } else {
    const XStateParams x = XStateParams::from_bell_diagonal(c0);
    const ItrKinks k = predict_itr_kinks(x);
    analytic["tdd_sc"] = predict_tdd_sc(x);
    analytic["ctr_sc"] = predict_ctr_sc(x);
    analytic["itr_kinks"] = {{"p_minus", optional_json(k.p_minus)}, {"p_plus", optional_json(k.p_plus)}};
  }
  summary["analytic"] = analytic;
  summary["method"] = scan.method;
  summary["report"] = io::to_json(scan.report);
  io::write_text(summary_path, summary.dump(2) + "\n");
  return summary;
}

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

json VerifyReport::to_json() const {
  json s = json::array();
  for (const auto& r : suites) {
    s.push_back({{"name", r.name},
                 {"samples", r.samples},
                 {"max_deviation", r.max_deviation},
                 {"tolerance", r.tolerance},
                 {"passed", r.passed}});
  }
  return {{"seed", seed}, {"n", n}, {"suites", s}, {"passed", passed()}};
}

VerifyReport verify(std::uint64_t seed, int n) {
  if (n < 1) throw ValidationError("verify: n must be at least 1");
  VerifyReport report;
  report.seed = seed;
  report.n = n;
  const auto count = static_cast<std::size_t>(n);

  const auto finish = [&](const char* name, const std::vector<double>& dev, double tol) {
    SuiteResult s{name, n, 0.0, tol, false};
    for (double d : dev) s.max_deviation = std::max(s.max_deviation, d);
    s.passed = s.max_deviation <= tol;
    report.suites.push_back(s);
  };

  const std::uint64_t holevo_base = derive_seed(seed, 0x686f6c);
  finish("holevo_vs_closed_form",
         parallel_map<double>(count,
                              [&](std::size_t i) {
                                sample::Rng rng(derive_seed(holevo_base, i));
                                const BellDiagonalState c = sample::bell_diagonal(rng);
                                const DensityMatrix rho = bell_diagonal_to_density(c);
                                OracleOptions opt;
                                opt.seed = derive_seed(holevo_base, i + count);
                                const OracleResult h = holevo_oracle(rho, Subsystem::a, opt);
                                const CorrelationTriple t = hv_oz_bd(c);
                                return std::max(std::abs(h.value - t.classical),
                                                std::abs((mutual_information(rho) - h.value) - t.quantum));
                              }),
         1e-4);

  const std::uint64_t tdd_base = derive_seed(seed, 0x746464);
  finish("tdd_oracle_vs_closed_form",
         parallel_map<double>(count,
                              [&](std::size_t i) {
                                sample::Rng rng(derive_seed(tdd_base, i));
                                const XStateRaw raw = sample::x_state(rng);
                                OracleOptions opt;
                                opt.seed = derive_seed(tdd_base, i + count);
                                return std::abs(tdd_oracle(raw.to_density(), opt).value -
                                                tdd_x(x_standard_form(raw)));
                              }),
         1e-3);

  const std::uint64_t kraus_base = derive_seed(seed, 0x6b7261);
  finish("kraus_vs_propagate_bd",
         parallel_map<double>(count,
                              [&](std::size_t i) {
                                sample::Rng rng(derive_seed(kraus_base, i));
                                const BellDiagonalState c = sample::bell_diagonal(rng);
                                std::uniform_int_distribution<int> pick(0, 4);
                                std::uniform_real_distribution<double> u(0.0, 1.0);
                                static constexpr ChannelKind kinds[] = {
                                    ChannelKind::phase_damping, ChannelKind::bit_flip, ChannelKind::phase_flip,
                                    ChannelKind::bit_phase_flip};
                                const int k = pick(rng);
                                ChannelPair pair;
                                if (k == 4) {
                                  pair = {ChannelKind::bit_flip, ChannelKind::phase_flip, 1.0 - u(rng)};
                                } else {
                                  pair = {kinds[k], kinds[k], 1.0};
                                }
                                const double p = pair.p_max() * u(rng);
                                const BellDiagonalState closed = propagate_bd(c, pair, p);
                                const XStateParams x =
                                    bloch_extract(apply_local_channels(bell_diagonal_to_density(c), pair, p));
                                return std::max({std::abs(x.c11 - closed[0]), std::abs(x.c22 - closed[1]),
                                                 std::abs(x.c33 - closed[2]), std::abs(x.a3), std::abs(x.b3)});
                              }),
         1e-12);
  return report;
}

json predict(const io::InitialState& state, const ChannelPair& pair) {
  pair.validate();
  json out;
  out["channel"] = io::to_json(pair);
  json pred = json::object();
  const auto* bd = std::get_if<BellDiagonalState>(&state);
  if (bd) {
    out["state"] = io::to_json(*bd);
    if (bd_closed_form_supported(pair)) pred["max_switches"] = argmax_switches(*bd, pair, 0.0, pair.p_max());
    if (pair.kind_a == pair.kind_b && pair.kind_a != ChannelKind::identity && pair.rate_ratio == 1.0) {
      const auto sc = predict_sc_single(*bd, pair.kind_a);
      pred["single"] = sc ? json{{"p_sc", sc->p}, {"degenerate", sc->degenerate}} : json(nullptr);
    }
    if (pair.kind_a == ChannelKind::bit_flip && pair.kind_b == ChannelKind::phase_flip) {
      const DoubleScPrediction d = predict_sc_double_bfpf(*bd, pair.rate_ratio);
      pred["double"] = {{"p_sc", d.times},
                        {"boundary_time", optional_json(d.boundary_time)},
                        {"ordering_holds", d.ordering_holds},
                        {"threshold", d.threshold},
                        {"double_sc", d.double_sc},
                        {"explanation", d.explanation}};
    }
  }
  const std::optional<XStateParams> x = x_params_at_zero(state);
  if (!bd) {
    if (!x) throw ValidationError("predict: the state is not an X state; no closed-form predictions apply");
    out["state"] = io::to_json(*x);
  }
  if (x && plain_pd_pair(pair)) {
    const ItrKinks k = predict_itr_kinks(*x);
    pred["tdd_sc"] = predict_tdd_sc(*x);
    pred["ctr_sc"] = predict_ctr_sc(*x);
    pred["itr_kinks"] = {{"p_minus", optional_json(k.p_minus)}, {"p_plus", optional_json(k.p_plus)}};
  }
  out["predictions"] = pred;
  return out;
}

}  // namespace discord
