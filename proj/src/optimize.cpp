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

#include "discord/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace discord::optimize {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2

}  // namespace

Scalar1d golden_section(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int evals = 2;
  while (b - a > 2.0 * tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  return fc <= fd ? Scalar1d{c, fc, evals} : Scalar1d{d, fd, evals};
}

Minimum coordinate_search(const Objective& f, std::vector<double> x0, const CoordinateOptions& opt) {
  Minimum best;
  best.x = std::move(x0);
  best.value = f(best.x);
  best.evaluations = 1;
  std::vector<double> trial = best.x;
  double step = opt.initial_step;
  for (int cycle = 0; cycle < opt.max_cycles && step >= opt.tolerance; ++cycle) {
    bool improved = false;
    for (std::size_t i = 0; i < best.x.size(); ++i) {
      trial = best.x;
      const double centre = best.x[i];
      const auto along = [&](double xi) {
        trial[i] = xi;
        return f(trial);
      };
      const Scalar1d r = golden_section(along, centre - step, centre + step, opt.tolerance);
      best.evaluations += r.evaluations;
      if (r.value < best.value) {
        improved = improved || (best.value - r.value) > 1e-15 * std::max(1.0, std::abs(best.value));
        best.value = r.value;
        best.x[i] = r.x;
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

Minimum nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& opt) {
  const std::size_t n = x0.size();
  const double dn = static_cast<double>(n);
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / dn;
  const double gamma = 0.75 - 1.0 / (2.0 * dn);
  const double delta = 1.0 - 1.0 / dn;

  Minimum result;
  result.x = std::move(x0);
  result.value = f(result.x);
  result.evaluations = 1;

  for (int round = 0; round <= opt.rebuilds; ++round) {
    std::vector<std::vector<double>> simplex(n + 1, result.x);
    std::vector<double> values(n + 1, result.value);
    for (std::size_t i = 0; i < n; ++i) {
      const double h = result.x[i] != 0.0 ? opt.initial_step * std::max(1.0, std::abs(result.x[i]))
                                          : opt.initial_step;
      simplex[i + 1][i] += h;
      values[i + 1] = f(simplex[i + 1]);
      ++result.evaluations;
    }
    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    int budget = opt.max_evaluations;
    while (budget > 0) {
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](std::size_t l, std::size_t r) { return values[l] < values[r]; });
      const std::size_t ib = order.front();
      const std::size_t iw = order.back();
      const std::size_t is = order[n - 1];

      double spread = 0.0;
      for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t i = 0; i < n; ++i)
          spread = std::max(spread, std::abs(simplex[k][i] - simplex[ib][i]));
      if (spread <= opt.x_tolerance && values[iw] - values[ib] <= opt.f_tolerance) break;

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t k = 0; k <= n; ++k) {
        if (k == iw) continue;
        for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i] / dn;
      }
      for (std::size_t i = 0; i < n; ++i) xr[i] = centroid[i] + alpha * (centroid[i] - simplex[iw][i]);
      const double fr = f(xr);
      --budget;
      if (fr < values[ib]) {
        for (std::size_t i = 0; i < n; ++i) xe[i] = centroid[i] + beta * (xr[i] - centroid[i]);
        const double fe = f(xe);
        --budget;
        if (fe < fr) {
          simplex[iw] = xe;
          values[iw] = fe;
        } else {
          simplex[iw] = xr;
          values[iw] = fr;
        }
        continue;
      }
      if (fr < values[is]) {
        simplex[iw] = xr;
        values[iw] = fr;
        continue;
      }
      const bool outside = fr < values[iw];
      for (std::size_t i = 0; i < n; ++i) {
        xc[i] = outside ? centroid[i] + gamma * (xr[i] - centroid[i])
                        : centroid[i] - gamma * (centroid[i] - simplex[iw][i]);
      }
      const double fc = f(xc);
      --budget;
      if (fc < (outside ? fr : values[iw])) {
        simplex[iw] = xc;
        values[iw] = fc;
        continue;
      }
      // shrink towards the best vertex
      for (std::size_t k = 0; k <= n; ++k) {
        if (k == ib) continue;
        for (std::size_t i = 0; i < n; ++i)
          simplex[k][i] = simplex[ib][i] + delta * (simplex[k][i] - simplex[ib][i]);
        values[k] = f(simplex[k]);
        --budget;
      }
    }
    result.evaluations += opt.max_evaluations - budget;
    const auto best = static_cast<std::size_t>(
        std::min_element(values.begin(), values.end()) - values.begin());
    if (values[best] <= result.value) {
      result.value = values[best];
      result.x = simplex[best];
    }
  }
  return result;
}

}  // namespace discord::optimize
