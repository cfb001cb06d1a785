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

#include "discord/states.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "discord/errors.hpp"

namespace discord {

namespace {

const std::array<Matrix2, 4>& pauli_table() {
  static const std::array<Matrix2, 4> table = [] {
    const Complex i(0.0, 1.0);
    std::array<Matrix2, 4> t;
    t[0] << 1.0, 0.0, 0.0, 1.0;
    t[1] << 0.0, 1.0, 1.0, 0.0;
    t[2] << 0.0, -i, i, 0.0;
    t[3] << 1.0, 0.0, 0.0, -1.0;
    return t;
  }();
  return table;
}

// Coherence with its phase removed modulo pi: real part's sign is kept.
double signed_modulus(Complex z) {
  const double r = std::abs(z);
  return z.real() >= 0.0 ? r : -r;
}

}  // namespace

const Matrix2& pauli(int index) { return pauli_table().at(static_cast<std::size_t>(index)); }

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  if (m.rows() == 4) {
    Eigen::SelfAdjointEigenSolver<Matrix4> solver(Matrix4(m), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
  }
  if (m.rows() == 2) {
    // Closed form keeps the 2x2 path exact to rounding.
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    Eigen::VectorXd out(2);
    out << mean - radius, mean + radius;
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

DensityMatrix::DensityMatrix(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 4)) {
    throw ValidationError("density matrix must be 2x2 or 4x4, got " + std::to_string(m.rows()) +
                          "x" + std::to_string(m.cols()));
  }
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (!(asym <= kHermitianTolerance)) {
    std::ostringstream os;
    os << "density matrix is not Hermitian (max |m - m^dagger| = " << asym << ")";
    throw ValidationError(os.str());
  }
  m_ = 0.5 * (m + m.adjoint());
  const Complex tr = m_.trace();
  if (!(std::abs(tr - Complex(1.0, 0.0)) <= kTraceTolerance)) {
    std::ostringstream os;
    os << "density matrix trace is " << tr.real() << ", expected 1";
    throw ValidationError(os.str());
  }
  const double min_eig = hermitian_eigenvalues(m_).minCoeff();
  if (!(min_eig >= -kPositivityTolerance)) {
    std::ostringstream os;
    os << "density matrix is not positive semidefinite (smallest eigenvalue " << min_eig << ")";
    throw ValidationError(os.str());
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) throw ValidationError("pure state vector is zero");
  const Eigen::VectorXcd v = psi / norm;
  return DensityMatrix(v * v.adjoint());
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::VectorXd ev = hermitian_eigenvalues(m_);
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < 0.0) ev(i) = 0.0;
  }
  return ev;
}

Matrix4 DensityMatrix::as_matrix4() const {
  if (dim() != 4) throw ValidationError("expected a two-qubit (4x4) density matrix");
  return Matrix4(m_);
}

Matrix2 DensityMatrix::as_matrix2() const {
  if (dim() != 2) throw ValidationError("expected a single-qubit (2x2) density matrix");
  return Matrix2(m_);
}

std::array<double, 4> BellDiagonalState::eigenvalues_of(double c1, double c2, double c3) {
  std::array<double, 4> lam{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double si = i == 0 ? 1.0 : -1.0;
      const double sj = j == 0 ? 1.0 : -1.0;
      lam[static_cast<std::size_t>(2 * i + j)] = 0.25 * (1.0 + si * c1 - si * sj * c2 + sj * c3);
    }
  }
  return lam;
}

bool BellDiagonalState::is_valid(double c1, double c2, double c3) {
  if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(c3)) return false;
  for (double l : eigenvalues_of(c1, c2, c3)) {
    if (l < -1e-12) return false;
  }
  return true;
}

BellDiagonalState::BellDiagonalState(double c1, double c2, double c3) : c_{c1, c2, c3} {
  if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(c3)) {
    throw ValidationError("Bell-diagonal correlation vector must be finite");
  }
  static constexpr const char* kNames[4] = {"lambda_00", "lambda_01", "lambda_10", "lambda_11"};
  const auto lam = eigenvalues_of(c1, c2, c3);
  for (std::size_t k = 0; k < lam.size(); ++k) {
    if (lam[k] < -1e-12) {
      std::ostringstream os;
      os << "invalid Bell-diagonal state (" << c1 << ", " << c2 << ", " << c3 << "): " << kNames[k]
         << " = " << lam[k] << " < 0";
      throw ValidationError(os.str());
    }
  }
}

std::array<double, 4> BellDiagonalState::eigenvalues() const {
  return eigenvalues_of(c_[0], c_[1], c_[2]);
}

void XStateRaw::validate() const {
  const double pops[4] = {rho11, rho22, rho33, rho44};
  for (double v : pops) {
    if (!std::isfinite(v) || v < -kPositivityTolerance) {
      throw ValidationError("X-state populations must be finite and nonnegative");
    }
  }
  if (std::abs(rho11 + rho22 + rho33 + rho44 - 1.0) > kTraceTolerance) {
    throw ValidationError("X-state populations must sum to 1");
  }
  if (!(abs_rho14 >= 0.0) || !(abs_rho23 >= 0.0)) {
    throw ValidationError("X-state coherence moduli must be nonnegative");
  }
  if (!std::isfinite(phi14) || !std::isfinite(phi23)) {
    throw ValidationError("X-state phases must be finite");
  }
  if (rho11 * rho44 - abs_rho14 * abs_rho14 < -kPositivityTolerance) {
    throw ValidationError("X state violates rho11*rho44 >= |rho14|^2");
  }
  if (rho22 * rho33 - abs_rho23 * abs_rho23 < -kPositivityTolerance) {
    throw ValidationError("X state violates rho22*rho33 >= |rho23|^2");
  }
}

DensityMatrix XStateRaw::to_density() const {
  validate();
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = rho11;
  m(1, 1) = rho22;
  m(2, 2) = rho33;
  m(3, 3) = rho44;
  m(0, 3) = std::polar(abs_rho14, phi14);
  m(3, 0) = std::conj(m(0, 3));
  m(1, 2) = std::polar(abs_rho23, phi23);
  m(2, 1) = std::conj(m(1, 2));
  return DensityMatrix(m);
}

XStateParams XStateParams::from_bloch(double a3, double b3, double c11, double c22, double c33) {
  XStateParams x;
  x.a3 = a3;
  x.b3 = b3;
  x.c11 = c11;
  x.c22 = c22;
  x.c33 = c33;
  x.populations = {0.25 * (1.0 + a3 + b3 + c33), 0.25 * (1.0 + a3 - b3 - c33),
                   0.25 * (1.0 - a3 + b3 - c33), 0.25 * (1.0 - a3 - b3 + c33)};
  return x;
}

XStateParams XStateParams::from_bell_diagonal(const BellDiagonalState& s) {
  return from_bloch(0.0, 0.0, s[0], s[1], s[2]);
}

DensityMatrix XStateParams::to_density() const {
  Matrix4 m = Matrix4::Zero();
  for (int k = 0; k < 4; ++k) m(k, k) = populations[static_cast<std::size_t>(k)];
  m(0, 3) = m(3, 0) = 0.25 * (c11 - c22);
  m(1, 2) = m(2, 1) = 0.25 * (c11 + c22);
  return DensityMatrix(m);
}

DensityMatrix bell_diagonal_to_density(const BellDiagonalState& c) {
  Matrix4 m = Matrix4::Identity();
  for (int j = 1; j <= 3; ++j) m += c[j - 1] * kron(pauli(j), pauli(j));
  return DensityMatrix(0.25 * m);
}

DensityMatrix apply_standard_form_unitary(const DensityMatrix& rho, double phi14, double phi23) {
  const double alpha = 0.25 * (phi14 + phi23);
  const double beta = 0.25 * (phi14 - phi23);
  Matrix2 ua = Matrix2::Zero();
  ua(0, 0) = std::polar(1.0, -alpha);
  ua(1, 1) = std::polar(1.0, alpha);
  Matrix2 ub = Matrix2::Zero();
  ub(0, 0) = std::polar(1.0, -beta);
  ub(1, 1) = std::polar(1.0, beta);
  const Matrix4 u = kron(ua, ub);
  return DensityMatrix(u * rho.as_matrix4() * u.adjoint());
}

XStateParams x_standard_form(const XStateRaw& raw) {
  raw.validate();
  XStateParams x;
  x.populations = {raw.rho11, raw.rho22, raw.rho33, raw.rho44};
  x.a3 = 2.0 * (raw.rho11 + raw.rho22) - 1.0;
  x.b3 = 2.0 * (raw.rho11 + raw.rho33) - 1.0;
  x.c11 = 2.0 * (raw.abs_rho23 + raw.abs_rho14);
  x.c22 = 2.0 * (raw.abs_rho23 - raw.abs_rho14);
  x.c33 = 1.0 - 2.0 * (raw.rho22 + raw.rho33);
  return x;
}

XStateParams bloch_extract(const DensityMatrix& rho) {
  const Matrix4 m = rho.as_matrix4();
  static constexpr int kOffX[8][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 3},
                                      {2, 0}, {2, 3}, {3, 1}, {3, 2}};
  std::ostringstream offending;
  bool structural = false;
  for (const auto& ij : kOffX) {
    const double mag = std::abs(m(ij[0], ij[1]));
    if (mag > kXShapeTolerance) {
      offending << (structural ? ", " : "") << "rho" << ij[0] + 1 << ij[1] + 1 << " (|.| = " << mag
                << ")";
      structural = true;
    }
  }
  if (structural) throw StructuralError("matrix is not an X state; offending entries: " + offending.str());

  XStateParams x;
  x.populations = {m(0, 0).real(), m(1, 1).real(), m(2, 2).real(), m(3, 3).real()};
  const auto& pop = x.populations;
  const double r14 = signed_modulus(m(0, 3));
  const double r23 = signed_modulus(m(1, 2));
  x.a3 = 2.0 * (pop[0] + pop[1]) - 1.0;
  x.b3 = 2.0 * (pop[0] + pop[2]) - 1.0;
  x.c11 = 2.0 * (r23 + r14);
  x.c22 = 2.0 * (r23 - r14);
  x.c33 = 1.0 - 2.0 * (pop[1] + pop[2]);
  return x;
}

Matrix4 kron(const Matrix2& x, const Matrix2& y) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = x(i, j) * y;
  return out;
}

Matrix2 partial_trace(const Matrix4& rho, Subsystem traced) {
  Matrix2 out;
  if (traced == Subsystem::a) {
    out = rho.block<2, 2>(0, 0) + rho.block<2, 2>(2, 2);
  } else {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem traced) {
  return DensityMatrix(partial_trace(rho.as_matrix4(), traced));
}

DensityMatrix tensor(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
  return DensityMatrix(kron(rho_a.as_matrix2(), rho_b.as_matrix2()));
}

}  // namespace discord
