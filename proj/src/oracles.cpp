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

#include "discord/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "discord/errors.hpp"
#include "discord/kernels.hpp"
#include "discord/optimize.hpp"

namespace discord {

namespace {

constexpr double kPi = std::numbers::pi;

struct SphereGrid {
  int n_theta = 0;
  int n_phi = 0;
  std::vector<double> theta, phi, x, y, z;

  std::size_t size() const { return theta.size(); }
  kernels::DirectionGrid directions() const { return {x, y, z}; }
};

SphereGrid make_grid(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1) throw ValidationError("oracle grid needs at least one point per angle");
  SphereGrid g;
  g.n_theta = n_theta;
  g.n_phi = n_phi;
  const auto n = static_cast<std::size_t>(n_theta) * static_cast<std::size_t>(n_phi);
  g.theta.reserve(n);
  g.phi.reserve(n);
  g.x.reserve(n);
  g.y.reserve(n);
  g.z.reserve(n);
  for (int i = 0; i < n_theta; ++i) {
    const double t = (i + 0.5) * kPi / n_theta;
    for (int k = 0; k < n_phi; ++k) {
      const double f = 2.0 * kPi * k / n_phi;
      g.theta.push_back(t);
      g.phi.push_back(f);
      g.x.push_back(std::sin(t) * std::cos(f));
      g.y.push_back(std::sin(t) * std::sin(f));
      g.z.push_back(std::cos(t));
    }
  }
  return g;
}

/// Indices of the `k` smallest values, ties broken by index.
std::vector<std::size_t> best_indices(const std::vector<double>& values, int k) {
  std::vector<std::size_t> idx(values.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(std::max(k, 1)), idx.size());
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(count), idx.end(),
                    [&](std::size_t l, std::size_t r) {
                      return values[l] < values[r] || (values[l] == values[r] && l < r);
                    });
  idx.resize(count);
  return idx;
}

double entropy2(const Matrix2& r) {
  const double a = r(0, 0).real();
  const double d = r(1, 1).real();
  const double tr = a + d;
  const double disc = std::sqrt((a - d) * (a - d) + 4.0 * std::norm(r(0, 1)));
  return -xlog2x(0.5 * (tr + disc)) - xlog2x(0.5 * (tr - disc));
}

double trace_norm4(const Matrix4& h) {
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

double entropy4(const Matrix4& h) {
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(h, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s -= xlog2x(std::max(solver.eigenvalues()(i), 0.0));
  return s;
}

Matrix4 lift(const Matrix2& op, Subsystem side) {
  return side == Subsystem::a ? kron(op, Matrix2::Identity()) : kron(Matrix2::Identity(), op);
}

/// sum_j p_j S(rho_other | j) from explicit projectors and partial traces.
double conditional_entropy(const Matrix4& m, Subsystem measured, const MeasurementBasis& basis) {
  double total = 0.0;
  for (int sign : {+1, -1}) {
    const Matrix4 k = lift(basis.projector(sign), measured);
    const Matrix2 r = partial_trace(Matrix4(k * m * k), measured);
    const double pj = r.trace().real();
    if (pj > 1e-15) total += pj * entropy2(r / pj);
  }
  return total;
}

Matrix2 qubit_state(double r, double theta, double phi) {
  const double nx = std::sin(theta) * std::cos(phi);
  const double ny = std::sin(theta) * std::sin(phi);
  const double nz = std::cos(theta);
  return 0.5 * (Matrix2::Identity() + r * (nx * pauli(1) + ny * pauli(2) + nz * pauli(3)));
}

double squash(double v) { return 0.5 * (1.0 + std::sin(v)); }
double unsquash(double u) { return std::asin(std::clamp(2.0 * u - 1.0, -1.0, 1.0)); }

struct BasisSearch {
  MeasurementBasis basis;
  double value = 0.0;
  long evaluations = 0;
};

/// Grid over (theta, phi), then cyclic golden-section refinement from the
/// best `restarts` grid points with seeded jitter.
BasisSearch minimize_over_basis(const std::function<double(const MeasurementBasis&)>& f,
                                const SphereGrid& grid, std::vector<double> grid_values,
                                const OracleOptions& opt) {
  BasisSearch out;
  if (grid_values.empty()) {
    grid_values.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) grid_values[i] = f({grid.theta[i], grid.phi[i]});
    out.evaluations += static_cast<long>(grid.size());
  }
  const double cell_theta = kPi / grid.n_theta;
  const double cell_phi = 2.0 * kPi / grid.n_phi;
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  const optimize::Objective obj = [&](std::span<const double> x) {
    return f({x[0], x[1]});
  };
  optimize::CoordinateOptions copt;
  copt.initial_step = std::max(cell_theta, cell_phi);
  copt.tolerance = opt.tolerance;
  out.value = std::numeric_limits<double>::infinity();
  for (std::size_t idx : best_indices(grid_values, opt.restarts)) {
    std::vector<double> x0{grid.theta[idx] + jitter(rng) * cell_theta,
                           grid.phi[idx] + jitter(rng) * cell_phi};
    const optimize::Minimum m = optimize::coordinate_search(obj, std::move(x0), copt);
    out.evaluations += m.evaluations;
    if (m.value < out.value) {
      out.value = m.value;
      out.basis = {m.x[0], m.x[1]};
    }
  }
  return out;
}

int restarts_used(const OracleOptions& opt, std::size_t grid_size) {
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(std::max(opt.restarts, 1)), grid_size));
}

}  // namespace

BlochData bloch_data(const Matrix4& rho, Subsystem measured) {
  std::array<double, 3> a{}, b{};
  std::array<std::array<double, 3>, 3> t{};
  for (int i = 1; i <= 3; ++i) {
    a[i - 1] = (rho * kron(pauli(i), pauli(0))).trace().real();
    b[i - 1] = (rho * kron(pauli(0), pauli(i))).trace().real();
    for (int j = 1; j <= 3; ++j) t[i - 1][j - 1] = (rho * kron(pauli(i), pauli(j))).trace().real();
  }
  BlochData out;
  if (measured == Subsystem::a) {
    out.measured = a;
    out.other = b;
    out.t = t;
  } else {
    out.measured = b;
    out.other = a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out.t[i][j] = t[j][i];
  }
  return out;
}

OracleResult holevo_oracle(const DensityMatrix& rho, Subsystem measured, const OracleOptions& opt) {
  if (rho.dim() != 4) throw ValidationError("holevo_oracle expects a two-qubit state");
  const Matrix4 m = rho.as_matrix4();
  const BlochData bd = bloch_data(m, measured);
  const kernels::BlochFrame frame{bd.measured, bd.other, bd.t};

  const SphereGrid grid = make_grid(opt.grid_theta, opt.grid_phi);
  std::vector<double> cond(grid.size());
  kernels::active().conditional_entropy(frame, grid.directions(), cond);

  const auto f = [&](const MeasurementBasis& basis) { return conditional_entropy(m, measured, basis); };
  const BasisSearch best = minimize_over_basis(f, grid, std::move(cond), opt);

  const double s_other = entropy2(partial_trace(m, measured));
  OracleResult r;
  r.measure_id = "hv";
  r.raw = s_other - best.value;
  r.value = std::max(r.raw, 0.0);
  r.basis = best.basis;
  r.argopt = {best.basis.theta, best.basis.phi};
  r.restarts = restarts_used(opt, grid.size());
  r.evaluations = best.evaluations + static_cast<long>(grid.size());
  return r;
}

OracleResult oz_discord_general(const DensityMatrix& rho, Subsystem measured, const OracleOptions& opt) {
  OracleResult r = holevo_oracle(rho, measured, opt);
  r.measure_id = "oz";
  r.raw = mutual_information(rho) - r.value;
  r.value = std::max(r.raw, 0.0);
  return r;
}

OracleResult tdd_oracle(const DensityMatrix& rho, const OracleOptions& opt, Subsystem measured) {
  if (rho.dim() != 4) throw ValidationError("tdd_oracle expects a two-qubit state");
  const Matrix4 m = rho.as_matrix4();

  const auto cq_state = [&](std::span<const double> x) {
    const MeasurementBasis basis{x[0], x[1]};
    const double w = squash(x[2]);
    const Matrix2 r0 = qubit_state(squash(x[3]), x[4], x[5]);
    const Matrix2 r1 = qubit_state(squash(x[6]), x[7], x[8]);
    const Matrix2 pp = basis.projector(+1);
    const Matrix2 pm = basis.projector(-1);
    if (measured == Subsystem::a) return Matrix4(w * kron(pp, r0) + (1.0 - w) * kron(pm, r1));
    return Matrix4(w * kron(r0, pp) + (1.0 - w) * kron(r1, pm));
  };
  const optimize::Objective obj = [&](std::span<const double> x) {
    return trace_norm4(m - cq_state(x));
  };

  // Seeds: the measurement-induced CQ state along each grid direction.
  const SphereGrid grid = make_grid(opt.grid_theta, opt.grid_phi);
  std::vector<double> grid_values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid_values[i] = trace_norm4(m - lpmm_apply(m, measured, {grid.theta[i], grid.phi[i]}));
  }
  const auto seed_params = [&](std::size_t idx) {
    const MeasurementBasis basis{grid.theta[idx], grid.phi[idx]};
    std::vector<double> x{basis.theta, basis.phi};
    std::array<double, 2> weights{};
    std::array<Matrix2, 2> states;
    int j = 0;
    for (int sign : {+1, -1}) {
      const Matrix4 k = lift(basis.projector(sign), measured);
      const Matrix2 r = partial_trace(Matrix4(k * m * k), measured);
      const double pj = r.trace().real();
      weights[static_cast<std::size_t>(j)] = pj;
      states[static_cast<std::size_t>(j)] = pj > 1e-12 ? Matrix2(r / pj) : Matrix2(0.5 * Matrix2::Identity());
      ++j;
    }
    x.push_back(unsquash(weights[0]));
    for (const Matrix2& s : states) {
      const double vx = 2.0 * s(0, 1).real();
      const double vy = -2.0 * s(0, 1).imag();
      const double vz = (s(0, 0) - s(1, 1)).real();
      const double len = std::sqrt(vx * vx + vy * vy + vz * vz);
      x.push_back(unsquash(std::min(len, 1.0)));
      x.push_back(len > 0.0 ? std::acos(std::clamp(vz / len, -1.0, 1.0)) : 0.0);
      x.push_back(std::atan2(vy, vx));
    }
    return x;
  };

  optimize::NelderMeadOptions nm;
  nm.x_tolerance = std::min(1e-9, opt.tolerance);
  OracleResult r;
  r.measure_id = "tdd";
  r.raw = std::numeric_limits<double>::infinity();
  r.evaluations = static_cast<long>(grid.size());
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  const double cell = kPi / grid.n_theta;
  for (std::size_t idx : best_indices(grid_values, opt.restarts)) {
    std::vector<double> x0 = seed_params(idx);
    x0[0] += jitter(rng) * cell;
    x0[1] += jitter(rng) * cell;
    const optimize::Minimum mm = optimize::nelder_mead(obj, std::move(x0), nm);
    r.evaluations += mm.evaluations;
    if (mm.value < r.raw) {
      r.raw = mm.value;
      r.argopt = mm.x;
    }
  }
  r.value = std::max(r.raw, 0.0);
  r.basis = {r.argopt[0], r.argopt[1]};
  r.restarts = restarts_used(opt, grid.size());
  return r;
}

OracleResult mid_distance(const DensityMatrix& rho, MeasuredSide side, DistanceMetric metric,
                          const OracleOptions& opt) {
  if (rho.dim() != 4) throw ValidationError("mid_distance expects a two-qubit state");
  const Matrix4 m = rho.as_matrix4();
  const double s_rho = metric == DistanceMetric::relative_entropy ? entropy4(m) : 0.0;
  const auto distance = [&](const Matrix4& measured) {
    if (metric == DistanceMetric::trace) return trace_norm4(m - measured);
    // Pi(rho) is block diagonal in the measured basis and has rho's diagonal
    // there, so Tr rho log Pi(rho) = Tr Pi(rho) log Pi(rho).
    return std::max(entropy4(measured) - s_rho, 0.0);
  };

  OracleResult r;
  r.measure_id = metric == DistanceMetric::trace ? "mid_trace" : "mid_relative_entropy";
  if (side != MeasuredSide::both) {
    const Subsystem s = side == MeasuredSide::a ? Subsystem::a : Subsystem::b;
    const SphereGrid grid = make_grid(opt.grid_theta, opt.grid_phi);
    const auto f = [&](const MeasurementBasis& basis) { return distance(lpmm_apply(m, s, basis)); };
    const BasisSearch best = minimize_over_basis(f, grid, {}, opt);
    r.raw = best.value;
    r.basis = best.basis;
    r.argopt = {best.basis.theta, best.basis.phi};
    r.restarts = restarts_used(opt, grid.size());
    r.evaluations = best.evaluations;
  } else {
    const int nt = std::max(2, opt.grid_theta / 8);
    const int np = std::max(2, opt.grid_phi / 8);
    const SphereGrid grid = make_grid(nt, np);
    const auto both = [&](std::span<const double> x) {
      return distance(lpmm_apply(lpmm_apply(m, Subsystem::a, {x[0], x[1]}), Subsystem::b, {x[2], x[3]}));
    };
    std::vector<double> values;
    std::vector<std::array<std::size_t, 2>> pairs;
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const double x[4] = {grid.theta[i], grid.phi[i], grid.theta[k], grid.phi[k]};
        values.push_back(both(x));
        pairs.push_back({i, k});
      }
    optimize::CoordinateOptions copt;
    copt.initial_step = 2.0 * kPi / np;
    copt.tolerance = opt.tolerance;
    r.raw = std::numeric_limits<double>::infinity();
    r.evaluations = static_cast<long>(values.size());
    for (std::size_t idx : best_indices(values, opt.restarts)) {
      const auto [i, k] = pairs[idx];
      const optimize::Minimum mm = optimize::coordinate_search(
          both, {grid.theta[i], grid.phi[i], grid.theta[k], grid.phi[k]}, copt);
      r.evaluations += mm.evaluations;
      if (mm.value < r.raw) {
        r.raw = mm.value;
        r.argopt = mm.x;
      }
    }
    r.basis = {r.argopt[0], r.argopt[1]};
    r.restarts = restarts_used(opt, values.size());
  }
  r.value = std::max(r.raw, 0.0);
  return r;
}

OracleResult ctr_oracle(const DensityMatrix& rho, const OracleOptions& opt) {
  if (rho.dim() != 4) throw ValidationError("ctr_oracle expects a two-qubit state");
  const Matrix4 m = rho.as_matrix4();
  const Matrix4 product = kron(partial_trace(m, Subsystem::b), partial_trace(m, Subsystem::a));
  const auto f = [&](const MeasurementBasis& basis) {
    return -trace_norm4(lpmm_apply(m, Subsystem::a, basis) - lpmm_apply(product, Subsystem::a, basis));
  };
  const SphereGrid grid = make_grid(opt.grid_theta, opt.grid_phi);
  const BasisSearch best = minimize_over_basis(f, grid, {}, opt);
  OracleResult r;
  r.measure_id = "ctr";
  r.raw = -best.value;
  r.value = r.raw;
  r.basis = best.basis;
  r.argopt = {best.basis.theta, best.basis.phi};
  r.restarts = restarts_used(opt, grid.size());
  r.evaluations = best.evaluations;
  return r;
}

double itr_direct(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw ValidationError("itr_direct expects a two-qubit state");
  const Matrix4 m = rho.as_matrix4();
  return trace_norm4(m - kron(partial_trace(m, Subsystem::b), partial_trace(m, Subsystem::a)));
}

}  // namespace discord
