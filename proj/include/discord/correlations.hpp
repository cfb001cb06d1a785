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
#include <limits>
#include <optional>
#include <span>
#include <string_view>

#include "discord/states.hpp"

namespace discord {

enum class MeasureId { entropic_oz, trace_distance };

std::string_view to_string(MeasureId id);

/// Total, classical and quantum correlation of one state under one family of
/// measures. For entropic_oz triples total == classical + quantum exactly.
struct CorrelationTriple {
  double total = 0.0;
  double classical = 0.0;
  double quantum = 0.0;
  MeasureId measure_id = MeasureId::entropic_oz;
};

/// Rank-1 projective measurement along n = (sin t cos f, sin t sin f, cos t).
struct MeasurementBasis {
  double theta = 0.0;
  double phi = 0.0;

  std::array<double, 3> direction() const;
  /// (I + sign n.sigma) / 2 with sign = +1 or -1.
  Matrix2 projector(int sign) const;
};

inline constexpr double kSupportViolation = std::numeric_limits<double>::infinity();

/// Elementwise x log2 x with 0 log 0 = 0.
double xlog2x(double x);
/// Binary entropy in bits.
double binary_entropy(double x);

double von_neumann_entropy(const DensityMatrix& rho);
/// Entropy of a raw Hermitian matrix (eigenvalues within slack clipped).
double von_neumann_entropy(const Eigen::MatrixXcd& m);

/// Throws ValidationError unless p is a probability vector to 1e-10.
double shannon_entropy(std::span<const double> p);

double mutual_information(const DensityMatrix& rho);

/// Tr rho (log2 rho - log2 xi); kSupportViolation (+inf) when supp(rho) is not
/// contained in supp(xi).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& xi);

/// Trace norm of x - y (sum of singular values, no factor 1/2).
double trace_distance(const DensityMatrix& x, const DensityMatrix& y);
double trace_norm(const Eigen::MatrixXcd& hermitian);

/// Non-selective projective measurement on the given side(s). At least one
/// basis must be present; throws ValidationError otherwise.
DensityMatrix lpmm_apply(const DensityMatrix& rho, const std::optional<MeasurementBasis>& basis_a,
                         const std::optional<MeasurementBasis>& basis_b);

/// Unchecked single-side measurement.
Matrix4 lpmm_apply(const Matrix4& rho, Subsystem measured, const MeasurementBasis& basis);

/// Henderson-Vedral / Ollivier-Zurek triple of a Bell-diagonal state in
/// closed form (mutual information, classical, discord).
CorrelationTriple hv_oz_bd(const BellDiagonalState& c);

/// max(|c1|, |c2|, |c3|) and its index (first index on exact ties).
struct MaxComponent {
  double value;
  int index;
};
MaxComponent max_abs_component(const std::array<double, 3>& c);

/// Closed-form trace-distance discord of an X state (measured side a).
double tdd_x(const XStateParams& x);

/// Trace-distance classical and total correlation of an X state.
struct TraceCorrelations {
  double classical = 0.0;  ///< C_tr = kappa_plus
  double total = 0.0;      ///< I_tr
};
TraceCorrelations ctr_itr_x(const XStateParams& x);

/// Sorted (max, mid, min) of {|c11|, |c22|, |c33 - a3 b3|}.
struct KappaOrder {
  double plus;
  double zero;
  double minus;
};
KappaOrder kappa_order(const XStateParams& x);

/// I_tr as 1/4 sum_{j,k} |c11 + (-1)^j c22 + (-1)^k (c33 - a3 b3)|.
double itr_sum_form(const XStateParams& x);

}  // namespace discord
