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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "discord/errors.hpp"
#include "discord/states.hpp"
#include "oracle_support.hpp"

using namespace discord;

namespace {

std::vector<double> sorted(Eigen::VectorXd v) {
  std::vector<double> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("density matrix validation") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4) * 0.25;
  CHECK_NOTHROW(DensityMatrix{m});

  Eigen::MatrixXcd bad_trace = m * 1.01;
  CHECK_THROWS_AS(DensityMatrix{bad_trace}, ValidationError);

  Eigen::MatrixXcd non_hermitian = m;
  non_hermitian(0, 1) = Complex(0.1, 0.0);
  CHECK_THROWS_AS(DensityMatrix{non_hermitian}, ValidationError);

  Eigen::MatrixXcd negative = Eigen::MatrixXcd::Zero(2, 2);
  negative(0, 0) = 1.2;
  negative(1, 1) = -0.2;
  CHECK_THROWS_AS(DensityMatrix{negative}, ValidationError);

  CHECK_THROWS_AS(DensityMatrix{Eigen::MatrixXcd::Identity(3, 3) / 3.0}, ValidationError);
}

TEST_CASE("bell diagonal to density") {
  SUBCASE("zero vector gives the maximally mixed state") {
    const DensityMatrix rho = bell_diagonal_to_density(BellDiagonalState(0, 0, 0));
    CHECK((rho.matrix() - Eigen::MatrixXcd::Identity(4, 4) * 0.25).norm() < 1e-15);
  }
  SUBCASE("(1,-1,1) is the projector onto phi+") {
    const DensityMatrix rho = bell_diagonal_to_density(BellDiagonalState(1, -1, 1));
    CHECK((rho.matrix() - Eigen::MatrixXcd(oracle::phi_plus())).norm() < 1e-15);
    CHECK(oracle::entropy(rho.matrix()) == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("eigenvalues of (-0.26, 0.54, 0.40)") {
    const BellDiagonalState c(-0.26, 0.54, 0.40);
    const auto lam = c.eigenvalues();
    const auto formula = sorted(Eigen::Map<const Eigen::VectorXd>(lam.data(), 4));
    const auto solved = sorted(oracle::eigenvalues(oracle::bell_diagonal(-0.26, 0.54, 0.40)));
    const std::vector<double> expected{0.08, 0.15, 0.22, 0.55};
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(formula[i] == doctest::Approx(expected[i]).epsilon(1e-12));
      CHECK(solved[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    }
    const auto lib = sorted(bell_diagonal_to_density(c).eigenvalues());
    for (std::size_t i = 0; i < 4; ++i) CHECK(lib[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }
  SUBCASE("invalid vector names the violated eigenvalue") {
    try {
      BellDiagonalState c(1, 1, 1);
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("lambda_11") != std::string::npos);
    }
  }
}

TEST_CASE("x standard form") {
  SUBCASE("no phases leaves the coherences unchanged") {
    XStateRaw raw{0.3, 0.2, 0.2, 0.3, 0.05, 0.1, 0.0, 0.0};
    const XStateParams x = x_standard_form(raw);
    CHECK(x.c11 == doctest::Approx(2 * (0.1 + 0.05)));
    CHECK(x.c22 == doctest::Approx(2 * (0.1 - 0.05)));
  }
  SUBCASE("bell diagonal input has no local Bloch vectors") {
    const XStateParams x = XStateParams::from_bell_diagonal(BellDiagonalState(0.3, -0.2, 0.1));
    CHECK(x.a3 == 0.0);
    CHECK(x.b3 == 0.0);
  }
  SUBCASE("imaginary rho23 is rotated onto the real axis") {
    XStateRaw raw{0.25, 0.25, 0.25, 0.25, 0.0, 0.1, 0.0, std::numbers::pi / 2};
    const XStateParams x = x_standard_form(raw);

    oracle::M4 r = oracle::M4::Identity() * 0.25;
    r(1, 2) = oracle::C(0, 0.1);
    r(2, 1) = oracle::C(0, -0.1);
    const double ta = raw.phi14 + raw.phi23;
    const double tb = raw.phi14 - raw.phi23;
    oracle::M2 ua = oracle::M2::Zero(), ub = oracle::M2::Zero();
    ua(0, 0) = std::exp(oracle::C(0, -ta / 4));
    ua(1, 1) = std::exp(oracle::C(0, ta / 4));
    ub(0, 0) = std::exp(oracle::C(0, -tb / 4));
    ub(1, 1) = std::exp(oracle::C(0, tb / 4));
    const oracle::M4 u = oracle::kron(ua, ub);
    const oracle::M4 rotated = u * r * u.adjoint();
    CHECK(std::abs(rotated(1, 2).imag()) < 1e-15);
    CHECK(rotated(1, 2).real() == doctest::Approx(0.1));
    CHECK(oracle::pauli_expectation(rotated, 2, 2) == doctest::Approx(0.2));
    CHECK(x.c22 == doctest::Approx(0.2));

    const DensityMatrix lib = apply_standard_form_unitary(raw.to_density(), raw.phi14, raw.phi23);
    CHECK((lib.matrix() - Eigen::MatrixXcd(rotated)).norm() < 1e-14);
  }
}

TEST_CASE("bloch extract") {
  SUBCASE("maximally mixed") {
    const XStateParams x = bloch_extract(DensityMatrix::maximally_mixed(4));
    CHECK(x.a3 == 0.0);
    CHECK(x.b3 == 0.0);
    CHECK(x.c11 == 0.0);
    CHECK(x.c22 == 0.0);
    CHECK(x.c33 == 0.0);
  }
  SUBCASE("populations with real coherences") {
    oracle::M4 r = oracle::M4::Zero();
    r.diagonal() << 0.3, 0.2, 0.2, 0.3;
    r(1, 2) = r(2, 1) = 0.1;
    r(0, 3) = r(3, 0) = 0.05;
    const XStateParams x = bloch_extract(DensityMatrix(Eigen::MatrixXcd(r)));
    CHECK(x.a3 == doctest::Approx(oracle::pauli_expectation(r, 3, 0)).epsilon(1e-14));
    CHECK(x.b3 == doctest::Approx(oracle::pauli_expectation(r, 0, 3)).epsilon(1e-14));
    CHECK(x.c11 == doctest::Approx(oracle::pauli_expectation(r, 1, 1)));
    CHECK(x.c22 == doctest::Approx(oracle::pauli_expectation(r, 2, 2)));
    CHECK(x.c33 == doctest::Approx(oracle::pauli_expectation(r, 3, 3)));
    CHECK(x.c11 == doctest::Approx(0.3));
    CHECK(x.c22 == doctest::Approx(0.1));
    CHECK(x.c33 == doctest::Approx(0.2));
  }
  SUBCASE("phi+") {
    const XStateParams x = bloch_extract(DensityMatrix(Eigen::MatrixXcd(oracle::phi_plus())));
    CHECK(x.a3 == doctest::Approx(0.0));
    CHECK(x.b3 == doctest::Approx(0.0));
    CHECK(x.c11 == doctest::Approx(1.0));
    CHECK(x.c22 == doctest::Approx(-1.0));
    CHECK(x.c33 == doctest::Approx(1.0));
  }
  SUBCASE("non-X matrix is a structural error listing the entry") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4) * 0.25;
    m(0, 1) = m(1, 0) = 0.05;
    try {
      bloch_extract(DensityMatrix(m));
      FAIL("expected a structural error");
    } catch (const StructuralError& e) {
      CHECK(std::string(e.what()).find("rho12") != std::string::npos);
    }
  }
  SUBCASE("round-off off the X pattern is tolerated") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4) * 0.25;
    m(0, 1) = m(1, 0) = 1e-13;
    CHECK_NOTHROW(bloch_extract(DensityMatrix(m)));
  }
}

TEST_CASE("partial trace and tensor") {
  Eigen::Matrix2cd wa;
  wa << 0.7, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.3;
  Eigen::Matrix2cd wb;
  wb << 0.4, Complex(-0.1, 0.05), Complex(-0.1, -0.05), 0.6;
  const DensityMatrix a{Eigen::MatrixXcd(wa)};
  const DensityMatrix b{Eigen::MatrixXcd(wb)};
  const DensityMatrix ab = tensor(a, b);

  CHECK((partial_trace(ab, Subsystem::a).matrix() - b.matrix()).norm() < 1e-15);
  CHECK((partial_trace(ab, Subsystem::b).matrix() - a.matrix()).norm() < 1e-15);
  CHECK((ab.matrix() - Eigen::MatrixXcd(oracle::kron(wa, wb))).norm() < 1e-15);

  const DensityMatrix mixed = tensor(DensityMatrix::maximally_mixed(2), DensityMatrix::maximally_mixed(2));
  CHECK((mixed.matrix() - DensityMatrix::maximally_mixed(4).matrix()).norm() < 1e-15);

  Eigen::Vector2cd zero(1, 0), one(0, 1);
  const DensityMatrix z1 = tensor(DensityMatrix::pure(zero), DensityMatrix::pure(one));
  CHECK(z1(1, 1).real() == 1.0);
  CHECK(z1.matrix().norm() == doctest::Approx(1.0));

  const DensityMatrix phi{Eigen::MatrixXcd(oracle::phi_plus())};
  for (Subsystem s : {Subsystem::a, Subsystem::b})
    CHECK((partial_trace(phi, s).matrix() - DensityMatrix::maximally_mixed(2).matrix()).norm() < 1e-15);

  const DensityMatrix bd = bell_diagonal_to_density(BellDiagonalState(0.2, -0.5, 0.3));
  CHECK((partial_trace(bd, Subsystem::a).matrix() - DensityMatrix::maximally_mixed(2).matrix()).norm() < 1e-15);
}

TEST_CASE("x state positivity blocks agree with an eigensolve") {
  XStateRaw ok{0.4, 0.1, 0.1, 0.4, 0.4, 0.1, 0.3, -1.2};
  CHECK_NOTHROW(ok.validate());
  CHECK(oracle::eigenvalues(ok.to_density().matrix()).minCoeff() >= -1e-12);

  XStateRaw bad{0.4, 0.1, 0.1, 0.4, 0.41, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}
