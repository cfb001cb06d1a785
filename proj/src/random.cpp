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

#include "discord/random.hpp"

#include <cmath>
#include <numbers>

namespace discord::sample {

namespace {

std::array<double, 4> simplex4(Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  std::array<double, 4> w{};
  double s = 0.0;
  for (double& v : w) {
    v = e(rng);
    s += v;
  }
  for (double& v : w) v /= s;
  return w;
}

Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

}  // namespace

BellDiagonalState bell_diagonal(Rng& rng) {
  const auto l = simplex4(rng);
  // Inverse of lambda_ij in the order (00, 01, 10, 11).
  const double c1 = l[0] + l[1] - l[2] - l[3];
  const double c2 = -l[0] + l[1] + l[2] - l[3];
  const double c3 = l[0] - l[1] + l[2] - l[3];
  return {c1, c2, c3};
}

XStateRaw x_state(Rng& rng) {
  const auto pop = simplex4(rng);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  XStateRaw x;
  x.rho11 = pop[0];
  x.rho22 = pop[1];
  x.rho33 = pop[2];
  x.rho44 = pop[3];
  x.abs_rho14 = u(rng) * std::sqrt(pop[0] * pop[3]);
  x.abs_rho23 = u(rng) * std::sqrt(pop[1] * pop[2]);
  x.phi14 = 2.0 * std::numbers::pi * u(rng);
  x.phi23 = 2.0 * std::numbers::pi * u(rng);
  return x;
}

DensityMatrix density(Rng& rng, int dim) {
  Eigen::MatrixXcd g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = gaussian_complex(rng);
  Eigen::MatrixXcd m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix(m);
}

Matrix2 unitary2(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  double q[4];
  double norm = 0.0;
  for (double& v : q) {
    v = n(rng);
    norm += v * v;
  }
  norm = std::sqrt(norm);
  for (double& v : q) v /= norm;
  Matrix2 u;
  u << Complex(q[0], q[1]), Complex(q[2], q[3]), Complex(-q[2], q[3]), Complex(q[0], -q[1]);
  return u;
}

MeasurementBasis basis(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {std::acos(1.0 - 2.0 * u(rng)), 2.0 * std::numbers::pi * u(rng)};
}

CqState cq_state(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const MeasurementBasis b = basis(rng);
  const double p0 = u(rng);
  DensityMatrix r0 = density(rng, 2);
  DensityMatrix r1 = density(rng, 2);
  const Matrix4 m = p0 * kron(b.projector(+1), r0.as_matrix2()) +
                    (1.0 - p0) * kron(b.projector(-1), r1.as_matrix2());
  return {DensityMatrix(Matrix4(0.5 * (m + m.adjoint()))), b, p0, std::move(r0), std::move(r1)};
}

}  // namespace discord::sample
