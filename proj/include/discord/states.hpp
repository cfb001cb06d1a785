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

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace discord {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPositivityTolerance = 1e-10;
/// Off-X entries at or below this magnitude are treated as round-off.
inline constexpr double kXShapeTolerance = 1e-10;

enum class Subsystem { a, b };

/// Standard Pauli matrices sigma_1..sigma_3 (index 0 is the identity).
const Matrix2& pauli(int index);

/// Hermitian, unit-trace, positive-semidefinite matrix of dimension 2 or 4.
///
/// Construction validates; tiny anti-Hermitian parts are symmetrized away so
/// downstream eigensolves see an exactly Hermitian matrix. Eigenvalues within
/// the positivity slack are clipped to zero by `eigenvalues()`.
class DensityMatrix {
 public:
  /// Validates `m` and throws ValidationError on failure.
  explicit DensityMatrix(const Eigen::MatrixXcd& m);

  static DensityMatrix maximally_mixed(int dim);
  /// Projector onto a (not necessarily normalized) state vector.
  static DensityMatrix pure(const Eigen::VectorXcd& psi);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  /// Ascending eigenvalues, clipped to zero inside the positivity slack.
  Eigen::VectorXd eigenvalues() const;

  Matrix4 as_matrix4() const;
  Matrix2 as_matrix2() const;

 private:
  Eigen::MatrixXcd m_;
};

/// Ascending eigenvalues of a Hermitian matrix (no validation, no clipping).
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m);

/// Correlation triple (c1, c2, c3) of 1/4 (I + sum_j c_j sigma_j x sigma_j).
class BellDiagonalState {
 public:
  /// Throws ValidationError naming the first negative lambda_ij.
  BellDiagonalState(double c1, double c2, double c3);
  explicit BellDiagonalState(const std::array<double, 3>& c)
      : BellDiagonalState(c[0], c[1], c[2]) {}

  const std::array<double, 3>& c() const { return c_; }
  double operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }

  /// lambda_ij in the order (00, 01, 10, 11).
  std::array<double, 4> eigenvalues() const;

  static std::array<double, 4> eigenvalues_of(double c1, double c2, double c3);
  static bool is_valid(double c1, double c2, double c3);

 private:
  std::array<double, 3> c_;
};

/// X-shaped two-qubit state as populations plus polar coherences.
struct XStateRaw {
  double rho11 = 0.25;
  double rho22 = 0.25;
  double rho33 = 0.25;
  double rho44 = 0.25;
  double abs_rho14 = 0.0;
  double abs_rho23 = 0.0;
  double phi14 = 0.0;
  double phi23 = 0.0;

  /// Throws ValidationError if populations or the 2x2 blocks are invalid.
  void validate() const;
  DensityMatrix to_density() const;
};

/// Bloch data of an X state in real standard form.
struct XStateParams {
  double a3 = 0.0;
  double b3 = 0.0;
  double c11 = 0.0;
  double c22 = 0.0;
  double c33 = 0.0;
  std::array<double, 4> populations{0.25, 0.25, 0.25, 0.25};

  /// Builds the parameters from Bloch data alone (populations derived).
  static XStateParams from_bloch(double a3, double b3, double c11, double c22, double c33);
  static XStateParams from_bell_diagonal(const BellDiagonalState& s);

  /// 1/4 (I + a3 s3 x I + b3 I x s3 + sum_j c_jj s_j x s_j). Throws when the
  /// result is not a valid density matrix.
  DensityMatrix to_density() const;
};

DensityMatrix bell_diagonal_to_density(const BellDiagonalState& c);

/// Removes the coherence phases with the local unitary
/// exp(-i(phi14+phi23) s3/4) x exp(-i(phi14-phi23) s3/4).
XStateParams x_standard_form(const XStateRaw& raw);

/// The same local unitary applied to the full matrix.
DensityMatrix apply_standard_form_unitary(const DensityMatrix& rho, double phi14, double phi23);

/// Reads Bloch data from an X-shaped 4x4 matrix.
///
/// Coherence phases are removed modulo pi, so real coherences keep their
/// sign and Bell-diagonal inputs come back with their own (c1, c2, c3).
/// Entries off the X pattern above kXShapeTolerance raise StructuralError.
XStateParams bloch_extract(const DensityMatrix& rho);

/// Traces out `traced` and returns the 2x2 state of the other qubit.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem traced);

DensityMatrix tensor(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

/// Unchecked variants for inner loops.
Matrix2 partial_trace(const Matrix4& rho, Subsystem traced);
Matrix4 kron(const Matrix2& x, const Matrix2& y);

}  // namespace discord
