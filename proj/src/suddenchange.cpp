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

#include "discord/suddenchange.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "discord/errors.hpp"
#include "discord/kernels.hpp"

namespace discord {

namespace {

constexpr double kStepUniformity = 1e-6;  // relative spread of grid steps

std::array<double, 3> abs3(const std::array<double, 3>& c) {
  return {std::abs(c[0]), std::abs(c[1]), std::abs(c[2])};
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (v.size() % 2 == 1) return *mid;
  const double hi = *mid;
  const double lo = *std::max_element(v.begin(), mid);
  return 0.5 * (lo + hi);
}

/// Roots of a p^2 + b p + d in the open interval (lo, hi) where the sign changes.
std::vector<double> sign_changing_roots(double a, double b, double d, double lo, double hi) {
  std::vector<double> roots;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(d)});
  if (scale == 0.0) return roots;
  if (std::abs(a) <= 1e-15 * scale) {
    if (std::abs(b) > 1e-15 * scale) roots.push_back(-d / b);
  } else {
    const double disc = b * b - 4.0 * a * d;
    if (disc > 1e-15 * scale * scale) {
      const double sq = std::sqrt(disc);
      // numerically stable pair
      const double qv = -0.5 * (b + std::copysign(sq, b));
      roots.push_back(qv / a);
      if (qv != 0.0) roots.push_back(d / qv);
    }
  }
  std::vector<double> inside;
  for (double r : roots)
    if (r > lo && r < hi) inside.push_back(r);
  return inside;
}

struct Factors {
  double value(int j, double p) const {
    const auto i = static_cast<std::size_t>(j);
    return c[i] * (1.0 - u[i] * p) * (1.0 - v[i] * p);
  }
  std::array<double, 3> c, u, v;
};

}  // namespace

std::string_view to_string(Mechanism m) {
  switch (m) {
    case Mechanism::max_switch: return "max_switch";
    case Mechanism::intermediate_switch: return "intermediate_switch";
    case Mechanism::itr_kink: return "itr_kink";
  }
  return "max_switch";
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::classical_then_quantum: return "classical_then_quantum";
    case Regime::quantum_then_classical: return "quantum_then_classical";
    case Regime::none: return "none";
  }
  return "none";
}

void CorrelationCurve::validate() const {
  if (grid.size() != values.size()) {
    std::ostringstream os;
    os << "curve '" << measure_id << "': grid has " << grid.size() << " points but values has "
       << values.size();
    throw ValidationError(os.str());
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= 1.0))
      throw ValidationError("curve '" + measure_id + "': grid point outside [0, 1]");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw ValidationError("curve '" + measure_id + "': grid is not strictly increasing");
  }
  if (!nonuniform && grid.size() > 2) {
    const double h = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      if (std::abs((grid[i] - grid[i - 1]) - h) > kStepUniformity * h)
        throw ValidationError("curve '" + measure_id + "': grid step is not uniform");
    }
  }
}

double CorrelationCurve::step() const {
  if (grid.size() < 2) return 0.0;
  return (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
}

double CorrelationCurve::range() const {
  if (values.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi - *lo;
}

int argmax_index(const std::array<double, 3>& c) {
  int best = 0;
  for (int j = 1; j < 3; ++j)
    if (std::abs(c[static_cast<std::size_t>(j)]) > std::abs(c[static_cast<std::size_t>(best)])) best = j;
  return best;
}

std::optional<SingleSc> predict_sc_single(const BellDiagonalState& c0, ChannelKind kind) {
  int constant = 0;
  switch (kind) {
    case ChannelKind::phase_damping:
    case ChannelKind::phase_flip: constant = 2; break;
    case ChannelKind::bit_flip: constant = 0; break;
    case ChannelKind::bit_phase_flip: constant = 1; break;
    case ChannelKind::identity:
      throw ValidationError("predict_sc_single: the identity channel has no decaying components");
  }
  const auto c = abs3(c0.c());
  const double kappa = c[static_cast<std::size_t>(constant)];
  double decaying = 0.0;
  for (int j = 0; j < 3; ++j)
    if (j != constant) decaying = std::max(decaying, c[static_cast<std::size_t>(j)]);
  if (kappa == 0.0 || kappa > decaying) return std::nullopt;
  if (kappa == decaying) return SingleSc{0.0, true};
  const double root = std::sqrt(kappa / decaying);
  const double p = kind == ChannelKind::phase_damping ? 1.0 - root : 0.5 * (1.0 - root);
  return SingleSc{p, false};
}

DoubleScPrediction predict_sc_double_bfpf(const BellDiagonalState& c0, double r) {
  if (!(r > 0.0 && r <= 1.0)) {
    std::ostringstream os;
    os << "rate ratio r = " << r << " outside (0, 1]";
    throw RangeError(os.str());
  }
  const auto c = abs3(c0.c());
  const double a1 = c[0], a2 = c[1], a3 = c[2];
  DoubleScPrediction out;
  out.ordering_holds = a2 > a3 && a3 > a1;
  std::ostringstream why;
  if (out.ordering_holds) {
    out.threshold = (a2 - a3) / (a2 - a1);
    const double margin = 1e-12 * std::max(1.0, out.threshold);
    if (r > out.threshold + margin) {
      const double p1 = (a2 - a3) / (2.0 * r * a2);
      const double p2 = (a3 - a1) / (2.0 * (a3 - r * a1));
      out.times.push_back(p1);
      if (p2 < 0.5) {
        out.times.push_back(p2);
        out.double_sc = true;
        why << "|c2| > |c3| > |c1| and r above the threshold: two switches of the maximal component";
      } else {
        out.boundary_time = 0.5;
        why << "r = 1: the second switch sits at the domain edge p = 1/2, one interior sudden change";
      }
    } else {
      out.times.push_back((a2 - a1) / (2.0 * a2));
      why << "r at or below the threshold " << out.threshold
          << ": |c2| hands the maximum directly to |c1|, single sudden change";
    }
  } else {
    ChannelPair pair{ChannelKind::bit_flip, ChannelKind::phase_flip, r};
    out.times = argmax_switches(c0, pair, 0.0, 0.5);
    why << "ordering |c2| > |c3| > |c1| fails: " << out.times.size()
        << " switch(es) of the maximal component";
  }
  out.explanation = why.str();
  return out;
}

std::vector<double> argmax_switches(const BellDiagonalState& c0, const ChannelPair& pair, double p_lo,
                                    double p_hi) {
  const BdDecay d = bd_decay(pair);
  const Factors f{abs3(c0.c()), d.u, d.v};
  std::vector<double> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const auto si = static_cast<std::size_t>(i);
      const auto sj = static_cast<std::size_t>(j);
      const double a = f.c[si] * f.u[si] * f.v[si] - f.c[sj] * f.u[sj] * f.v[sj];
      const double b = -f.c[si] * (f.u[si] + f.v[si]) + f.c[sj] * (f.u[sj] + f.v[sj]);
      const double dd = f.c[si] - f.c[sj];
      for (double root : sign_changing_roots(a, b, dd, p_lo, p_hi)) {
        const int k = 3 - i - j;
        const double top = std::max(f.value(i, root), f.value(j, root));
        if (f.value(k, root) <= top * (1.0 + 1e-12)) out.push_back(root);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(), [](double x, double y) { return std::abs(x - y) < 1e-12; }),
            out.end());
  return out;
}

std::vector<double> predict_tdd_sc(const XStateParams& x0) {
  const double a = std::abs(x0.c11);
  const double b = std::abs(x0.c22);
  const double kappa = std::abs(x0.c33 - x0.a3 * x0.b3);
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  std::vector<double> out;
  if (kappa == 0.0 || hi == lo || kappa >= hi) return out;
  if (kappa <= lo) out.push_back(1.0 - std::sqrt(kappa / lo));
  out.push_back(1.0 - std::sqrt(kappa / hi));
  return out;
}

std::vector<double> predict_ctr_sc(const XStateParams& x0) {
  const double hi = std::max(std::abs(x0.c11), std::abs(x0.c22));
  const double kappa = std::abs(x0.c33 - x0.a3 * x0.b3);
  if (kappa == 0.0 || kappa >= hi) return {};
  return {1.0 - std::sqrt(kappa / hi)};
}

ItrKinks predict_itr_kinks(const XStateParams& x0) {
  const double a = std::abs(x0.c11);
  const double b = std::abs(x0.c22);
  const double kappa = std::abs(x0.c33 - x0.a3 * x0.b3);
  ItrKinks out;
  if (kappa == 0.0) return out;
  const auto kink = [&](double s) -> std::optional<double> {
    if (!(s > kappa)) return std::nullopt;
    return 1.0 - std::sqrt(kappa / s);
  };
  out.p_minus = kink(std::abs(a - b));
  out.p_plus = kink(a + b);
  return out;
}

double tdd_freeze_bound(double p_sc2) {
  if (!(p_sc2 >= 0.0 && p_sc2 <= 1.0)) {
    std::ostringstream os;
    os << "tdd_freeze_bound: p = " << p_sc2 << " outside [0, 1]";
    throw RangeError(os.str());
  }
  const double s = (1.0 - p_sc2) * (1.0 - p_sc2);
  return s / (1.0 + 2.0 * s);
}

std::vector<DetectedKink> detect_kinks(const CorrelationCurve& curve, const DetectOptions& opt) {
  curve.validate();
  if (curve.nonuniform) throw ValidationError("detect_kinks needs a uniform grid");
  const std::size_t n = curve.grid.size();
  if (n < opt.min_points) {
    std::ostringstream os;
    os << "detect_kinks: curve '" << curve.measure_id << "' has " << n << " points, need at least "
       << opt.min_points;
    throw ValidationError(os.str());
  }
  const double h = curve.step();
  const double range = curve.range();
  std::vector<DetectedKink> out;
  if (!(range > 0.0)) return out;

  std::vector<double> kappa(n - 2);
  kernels::active().abs_second_difference(curve.values, 1.0 / (h * h * range), kappa);

  std::vector<char> flagged(kappa.size(), 0);
  const auto w = static_cast<std::ptrdiff_t>(opt.window);
  const auto ex = static_cast<std::ptrdiff_t>(opt.exclusion);
  const auto m = static_cast<std::ptrdiff_t>(kappa.size());
  std::vector<double> neighbourhood;
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    const double k = kappa[static_cast<std::size_t>(i)];
    if (opt.threshold) {
      flagged[static_cast<std::size_t>(i)] = k > *opt.threshold;
      continue;
    }
    if (!(k * h > opt.slope_floor)) continue;
    neighbourhood.clear();
    for (std::ptrdiff_t j = std::max<std::ptrdiff_t>(0, i - w); j <= std::min(m - 1, i + w); ++j)
      if (std::abs(j - i) > ex) neighbourhood.push_back(kappa[static_cast<std::size_t>(j)]);
    flagged[static_cast<std::size_t>(i)] = k > opt.factor * median(neighbourhood);
  }

  // Flags separated by at most one unflagged point form one kink.
  std::size_t i = 0;
  while (i < flagged.size()) {
    if (!flagged[i]) {
      ++i;
      continue;
    }
    std::size_t best = i;
    std::size_t last = i;
    std::size_t j = i + 1;
    while (j < flagged.size() && j <= last + 2) {
      if (flagged[j]) {
        last = j;
        if (kappa[j] > kappa[best]) best = j;
      }
      ++j;
    }
    out.push_back({curve.grid[best + 1], kappa[best], curve.measure_id});
    i = last + 1;
  }
  return out;
}

std::vector<FreezingInterval> freezing_intervals(const CorrelationCurve& curve, double tol, int min_steps) {
  curve.validate();
  std::vector<FreezingInterval> out;
  const std::size_t n = curve.grid.size();
  if (n < 2) return out;
  const double range = curve.range();
  if (!(range > 0.0)) {
    out.push_back({curve.grid.front(), curve.grid.back(), curve.values.front(), curve.measure_id});
    return out;
  }
  std::size_t start = 0;
  bool in_run = false;
  const auto close = [&](std::size_t begin, std::size_t end) {
    if (end - begin >= static_cast<std::size_t>(std::max(min_steps, 1)))
      out.push_back({curve.grid[begin], curve.grid[end], curve.values[begin], curve.measure_id});
  };
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double slope = std::abs(curve.values[k + 1] - curve.values[k]) / (curve.grid[k + 1] - curve.grid[k]);
    const bool frozen = slope <= tol * range;
    if (frozen && !in_run) {
      start = k;
      in_run = true;
    } else if (!frozen && in_run) {
      close(start, k);
      in_run = false;
    }
  }
  if (in_run) close(start, n - 1);
  return out;
}

namespace {

const std::pair<const std::string, CorrelationCurve>* find_curve(
    const std::map<std::string, CorrelationCurve>& curves, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    const auto it = curves.find(name);
    if (it != curves.end()) return &*it;
  }
  return nullptr;
}

/// First detected kink after which `curve` stays frozen to the end of the grid.
std::optional<double> frozen_after_kink(const CorrelationCurve& curve,
                                        const std::vector<DetectedKink>& kinks,
                                        const std::vector<FreezingInterval>& frozen) {
  const double h = curve.step();
  for (const DetectedKink& k : kinks) {
    for (const FreezingInterval& f : frozen) {
      if (std::abs(f.p_lo - k.p) <= 2.0 * h + 1e-12 && curve.grid.back() - f.p_hi <= 2.0 * h + 1e-12)
        return k.p;
    }
  }
  return std::nullopt;
}

}  // namespace

SuddenChangeReport classify_regimes(const std::map<std::string, CorrelationCurve>& curves, double tol) {
  const auto* classical = find_curve(curves, {"hv", "ctr"});
  const auto* quantum = find_curve(curves, {"oz", "tdd"});
  if (!classical || !quantum)
    throw ValidationError("classify_regimes needs a classical (hv or ctr) and a quantum (oz or tdd) curve");
  for (const auto& [id, c] : curves) {
    if (c.grid != classical->second.grid) throw ValidationError("classify_regimes: curve '" + id + "' is on a different grid");
  }

  SuddenChangeReport report;
  std::map<std::string, std::vector<DetectedKink>> kinks;
  std::map<std::string, std::vector<FreezingInterval>> frozen;
  for (const auto& [id, c] : curves) {
    kinks[id] = detect_kinks(c);
    frozen[id] = freezing_intervals(c, tol);
    report.detected.insert(report.detected.end(), kinks[id].begin(), kinks[id].end());
    report.freezing_intervals.insert(report.freezing_intervals.end(), frozen[id].begin(), frozen[id].end());
  }

  const auto classical_sc =
      frozen_after_kink(classical->second, kinks[classical->first], frozen[classical->first]);
  const auto quantum_sc = frozen_after_kink(quantum->second, kinks[quantum->first], frozen[quantum->first]);
  if (classical_sc) {
    report.regime = Regime::classical_then_quantum;
    report.pointer_emergence_p = classical_sc;
  } else if (quantum_sc) {
    report.regime = Regime::quantum_then_classical;
  }
  return report;
}

}  // namespace discord
