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

#include "discord/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "discord/errors.hpp"

namespace discord {

namespace {

// Eigenvalue below this on the reference state counts as outside its support.
constexpr double kSupportEigenvalueFloor = 1e-12;
constexpr double kSupportWeightFloor = 1e-10;

}  // namespace

std::string_view to_string(MeasureId id) {
  return id == MeasureId::entropic_oz ? "entropic_oz" : "trace_distance";
}

std::array<double, 3> MeasurementBasis::direction() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

Matrix2 MeasurementBasis::projector(int sign) const {
  const auto n = direction();
  const double s = sign >= 0 ? 1.0 : -1.0;
  Matrix2 ns = n[0] * pauli(1) + n[1] * pauli(2) + n[2] * pauli(3);
  return 0.5 * (Matrix2::Identity() + s * ns);
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double binary_entropy(double x) { return -xlog2x(x) - xlog2x(1.0 - x); }

double von_neumann_entropy(const Eigen::MatrixXcd& m) {
  const Eigen::VectorXd ev = hermitian_eigenvalues(m);
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -kPositivityTolerance) {
      std::ostringstream os;
      os << "invalid state: eigenvalue " << ev(i) << " below -" << kPositivityTolerance;
      throw ValidationError(os.str());
    }
    s -= xlog2x(ev(i));
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho.matrix()); }

double shannon_entropy(std::span<const double> p) {
  double total = 0.0;
  for (double v : p) {
    if (!(v >= 0.0)) throw ValidationError("probability vector has a negative or NaN entry");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "probability vector sums to " << total << ", expected 1";
    throw ValidationError(os.str());
  }
  double h = 0.0;
  for (double v : p) h -= xlog2x(v);
  return h;
}

double mutual_information(const DensityMatrix& rho) {
  const Matrix4 m = rho.as_matrix4();
  const double s_a = von_neumann_entropy(Eigen::MatrixXcd(partial_trace(m, Subsystem::b)));
  const double s_b = von_neumann_entropy(Eigen::MatrixXcd(partial_trace(m, Subsystem::a)));
  const double mi = s_a + s_b - von_neumann_entropy(rho);
  return std::max(mi, 0.0);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& xi) {
  if (rho.dim() != xi.dim()) throw ValidationError("relative_entropy: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(xi.matrix());
  const Eigen::VectorXd& lam = solver.eigenvalues();
  const Eigen::MatrixXcd& vecs = solver.eigenvectors();
  double cross = 0.0;  // Tr rho log2 xi
  for (Eigen::Index k = 0; k < lam.size(); ++k) {
    const double weight = (vecs.col(k).adjoint() * rho.matrix() * vecs.col(k))(0, 0).real();
    if (lam(k) <= kSupportEigenvalueFloor) {
      if (weight > kSupportWeightFloor) return kSupportViolation;
      continue;
    }
    cross += weight * std::log2(lam(k));
  }
  const double d = -von_neumann_entropy(rho) - cross;
  return std::max(d, 0.0);
}

double trace_norm(const Eigen::MatrixXcd& hermitian) {
  return hermitian_eigenvalues(hermitian).cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& x, const DensityMatrix& y) {
  if (x.dim() != y.dim()) throw ValidationError("trace_distance: dimension mismatch");
  return trace_norm(x.matrix() - y.matrix());
}

Matrix4 lpmm_apply(const Matrix4& rho, Subsystem measured, const MeasurementBasis& basis) {
  Matrix4 out = Matrix4::Zero();
  for (int sign : {+1, -1}) {
    const Matrix2 proj = basis.projector(sign);
    const Matrix4 k = measured == Subsystem::a ? kron(proj, Matrix2::Identity())
                                               : kron(Matrix2::Identity(), proj);
    out.noalias() += k * rho * k;
  }
  return out;
}

DensityMatrix lpmm_apply(const DensityMatrix& rho, const std::optional<MeasurementBasis>& basis_a,
                         const std::optional<MeasurementBasis>& basis_b) {
  if (!basis_a && !basis_b) throw ValidationError("lpmm_apply needs at least one basis");
  Matrix4 m = rho.as_matrix4();
  if (basis_a) m = lpmm_apply(m, Subsystem::a, *basis_a);
  if (basis_b) m = lpmm_apply(m, Subsystem::b, *basis_b);
  return DensityMatrix(m);
}

MaxComponent max_abs_component(const std::array<double, 3>& c) {
  MaxComponent best{std::abs(c[0]), 0};
  for (int j = 1; j < 3; ++j) {
    const double v = std::abs(c[static_cast<std::size_t>(j)]);
    if (v > best.value) best = {v, j};
  }
  return best;
}

CorrelationTriple hv_oz_bd(const BellDiagonalState& c) {
  double total = 0.0;
  for (double lam : c.eigenvalues()) {
    const double l = std::max(lam, 0.0);
    total += xlog2x(l) + 2.0 * l;  // lambda log2(4 lambda)
  }
  total = std::max(total, 0.0);
  const double cp = std::min(max_abs_component(c.c()).value, 1.0);
  const double classical = 0.5 * (xlog2x(1.0 + cp) + xlog2x(1.0 - cp));
  CorrelationTriple t;
  t.measure_id = MeasureId::entropic_oz;
  t.classical = classical;
  t.quantum = std::max(total - classical, 0.0);
  t.total = t.classical + t.quantum;
  return t;
}

double tdd_x(const XStateParams& x) {
  const double s11 = x.c11 * x.c11;
  const double s22 = x.c22 * x.c22;
  const double s33 = x.c33 * x.c33;
  const double a3sq = x.a3 * x.a3;
  const double hi = std::max(s11, s22);
  const double lo = std::min(s11, s22);
  const double upper = std::max(s33, a3sq + lo);
  const double lower = std::min(s33, hi);
  const double den = upper - lower + hi - lo;
  if (!(den > 0.0)) return std::sqrt(hi);
  const double num = upper * hi - lower * lo;
  return std::sqrt(std::max(num / den, 0.0));
}

KappaOrder kappa_order(const XStateParams& x) {
  std::array<double, 3> k{std::abs(x.c11), std::abs(x.c22), std::abs(x.c33 - x.a3 * x.b3)};
  std::sort(k.begin(), k.end());
  return {k[2], k[1], k[0]};
}

TraceCorrelations ctr_itr_x(const XStateParams& x) {
  const KappaOrder k = kappa_order(x);
  return {k.plus, 0.5 * (k.plus + std::max(k.plus, k.zero + k.minus))};
}

double itr_sum_form(const XStateParams& x) {
  const double c33 = x.c33 - x.a3 * x.b3;
  double sum = 0.0;
  for (double s2 : {1.0, -1.0})
    for (double s3 : {1.0, -1.0}) sum += std::abs(x.c11 + s2 * x.c22 + s3 * c33);
  return 0.25 * sum;
}

}  // namespace discord
