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

#include <cmath>

#include "discord/correlations.hpp"
#include "discord/optimize.hpp"
#include "discord/oracles.hpp"
#include "discord/random.hpp"
#include "oracle_support.hpp"

using namespace discord;

namespace {

oracle::M4 dense(const DensityMatrix& rho) { return oracle::M4(rho.as_matrix4()); }

}  // namespace

TEST_CASE("golden section and coordinate search") {
  const auto r = optimize::golden_section([](double x) { return (x - 0.3) * (x - 0.3); }, -1.0, 2.0, 1e-9);
  CHECK(r.x == doctest::Approx(0.3).epsilon(1e-8));

  optimize::CoordinateOptions co;
  co.tolerance = 1e-9;
  const auto m = optimize::coordinate_search(
      [](std::span<const double> x) { return (x[0] - 1) * (x[0] - 1) + 3 * (x[1] + 2) * (x[1] + 2); }, {0.0, 0.0}, co);
  CHECK(m.x[0] == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(m.x[1] == doctest::Approx(-2.0).epsilon(1e-7));
}

TEST_CASE("nelder mead on rosenbrock") {
  optimize::NelderMeadOptions opt;
  opt.max_evaluations = 20000;
  const auto m = optimize::nelder_mead(
      [](std::span<const double> x) {
        return 100 * (x[1] - x[0] * x[0]) * (x[1] - x[0] * x[0]) + (1 - x[0]) * (1 - x[0]);
      },
      {-1.2, 1.0}, opt);
  CHECK(m.x[0] == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(m.x[1] == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("holevo oracle agrees with the bell diagonal closed form") {
  sample::Rng rng(21);
  OracleOptions opt;
  opt.restarts = 4;
  for (int trial = 0; trial < 10; ++trial) {
    const BellDiagonalState c = sample::bell_diagonal(rng);
    const DensityMatrix rho = bell_diagonal_to_density(c);
    const auto t = hv_oz_bd(c);
    opt.seed = static_cast<std::uint64_t>(trial);
    const auto hv = holevo_oracle(rho, Subsystem::a, opt);
    CHECK(std::abs(hv.value - t.classical) < 1e-6);
    CHECK(hv.measure_id == "hv");
    CHECK(hv.evaluations > 0);
    const auto hv_b = holevo_oracle(rho, Subsystem::b, opt);
    CHECK(std::abs(hv_b.value - t.classical) < 1e-6);
    const auto oz = oz_discord_general(rho, Subsystem::a, opt);
    CHECK(std::abs(oz.value - t.quantum) < 1e-6);
    CHECK(oz.value >= 0.0);
  }
}

TEST_CASE("holevo oracle against a brute-force search on general states") {
  sample::Rng rng(22);
  OracleOptions opt;
  opt.restarts = 4;
  for (int trial = 0; trial < 4; ++trial) {
    const DensityMatrix rho = sample::density(rng, 4);
    const double brute = oracle::holevo_dense(dense(rho), 91, 181);
    const double value = holevo_oracle(rho, Subsystem::a, opt).value;
    CHECK(value >= brute - 1e-9);
    CHECK(value - brute < 2e-3);
    CHECK(value <= mutual_information(rho) + 1e-12);
  }
}

TEST_CASE("trace-distance oracle agrees with the x state closed form") {
  sample::Rng rng(23);
  OracleOptions opt;
  opt.restarts = 8;
  for (int trial = 0; trial < 4; ++trial) {
    const XStateParams x = x_standard_form(sample::x_state(rng));
    const auto r = tdd_oracle(x.to_density(), opt);
    CHECK(std::abs(r.value - tdd_x(x)) < 1e-3);
    CHECK(r.argopt.size() == 9);
  }
  const auto phi = tdd_oracle(bell_diagonal_to_density(BellDiagonalState(1, -1, 1)), opt);
  CHECK(phi.value == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("measurement-induced distances") {
  sample::Rng rng(24);
  OracleOptions opt;
  opt.restarts = 4;
  const BellDiagonalState c = sample::bell_diagonal(rng);
  const DensityMatrix rho = bell_diagonal_to_density(c);
  std::array<double, 3> a{std::abs(c[0]), std::abs(c[1]), std::abs(c[2])};
  std::sort(a.begin(), a.end());

  const auto tr = mid_distance(rho, MeasuredSide::a, DistanceMetric::trace, opt);
  CHECK(tr.value == doctest::Approx(a[1]).epsilon(1e-6));
  const auto re = mid_distance(rho, MeasuredSide::a, DistanceMetric::relative_entropy, opt);
  CHECK(re.value == doctest::Approx(hv_oz_bd(c).quantum).epsilon(1e-6));
  const auto both = mid_distance(rho, MeasuredSide::both, DistanceMetric::relative_entropy, opt);
  CHECK(both.value >= re.value - 1e-6);

  const DensityMatrix product = DensityMatrix::maximally_mixed(4);
  CHECK(mid_distance(product, MeasuredSide::both, DistanceMetric::trace, opt).value < 1e-9);
}

TEST_CASE("classical trace correlation and total trace correlation") {
  sample::Rng rng(25);
  OracleOptions opt;
  opt.restarts = 4;
  for (int trial = 0; trial < 5; ++trial) {
    const XStateParams x = x_standard_form(sample::x_state(rng));
    const DensityMatrix rho = x.to_density();
    const auto tc = ctr_itr_x(x);
    CHECK(std::abs(ctr_oracle(rho, opt).value - tc.classical) < 1e-6);
    CHECK(std::abs(itr_direct(rho) - tc.total) < 1e-12);
  }
}

TEST_CASE("bloch data orientation") {
  sample::Rng rng(26);
  const DensityMatrix rho = sample::density(rng, 4);
  const oracle::M4 r = dense(rho);
  const BlochData a = bloch_data(rho.as_matrix4(), Subsystem::a);
  const BlochData b = bloch_data(rho.as_matrix4(), Subsystem::b);
  for (int i = 0; i < 3; ++i) {
    CHECK(a.measured[static_cast<std::size_t>(i)] == doctest::Approx(oracle::pauli_expectation(r, i + 1, 0)));
    CHECK(a.other[static_cast<std::size_t>(i)] == doctest::Approx(oracle::pauli_expectation(r, 0, i + 1)));
    CHECK(b.measured[static_cast<std::size_t>(i)] == doctest::Approx(a.other[static_cast<std::size_t>(i)]));
    for (int j = 0; j < 3; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      CHECK(a.t[ui][uj] == doctest::Approx(oracle::pauli_expectation(r, i + 1, j + 1)));
      CHECK(b.t[uj][ui] == doctest::Approx(a.t[ui][uj]));
    }
  }
}
