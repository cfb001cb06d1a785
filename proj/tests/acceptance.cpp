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

// Acceptance runner. Prints one PASS/FAIL line per criterion; with
// --criterion N only that criterion runs. Exit status is 0 when every
// criterion that ran passed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "discord/channels.hpp"
#include "discord/correlations.hpp"
#include "discord/oracles.hpp"
#include "discord/parallel.hpp"
#include "discord/random.hpp"
#include "discord/scenario.hpp"
#include "discord/suddenchange.hpp"

using namespace discord;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

bool near(double value, double target, double tol) { return std::abs(value - target) <= tol; }

std::vector<double> kinks_of(const ScanResult& r, const std::string& id) {
  std::vector<double> out;
  for (const auto& d : r.report.detected)
    if (d.measure == id) out.push_back(d.p);
  return out;
}

const CorrelationCurve& curve_of(const ScanResult& r, const std::string& id) {
  for (const auto& c : r.curves)
    if (c.measure_id == id) return c;
  throw std::runtime_error("missing curve " + id);
}

bool confirmed(const std::vector<double>& kinks, double p, double tol) {
  for (double k : kinks)
    if (std::abs(k - p) <= tol) return true;
  return false;
}

// Single sudden change under phase damping.
void criterion1(Outcome& o) {
  const auto sc = predict_sc_single(BellDiagonalState(-0.26, 0.54, 0.40), ChannelKind::phase_damping);
  o.require(sc.has_value(), "prediction exists");
  if (!sc) return;
  o.detail << "p_sc=" << sc->p;
  o.require(near(sc->p, 0.1393, 1e-4), "p_sc = 0.1393 +- 1e-4");

  const ScanResult r = run_scan(preset("fig2"));
  const auto oz = kinks_of(r, "oz");
  const auto hv = kinks_of(r, "hv");
  const auto mi = kinks_of(r, "mi");
  o.detail << " kinks oz=" << oz.size() << " hv=" << hv.size() << " mi=" << mi.size();
  o.require(oz.size() == 1 && near(oz[0], sc->p, 2e-3), "one oz kink within 2e-3");
  o.require(hv.size() == 1 && near(hv[0], sc->p, 2e-3), "one hv kink within 2e-3");
  o.require(mi.empty(), "no mi kinks");
}

// Two sudden changes with unequal flip rates.
void criterion2(Outcome& o) {
  const DoubleScPrediction d = predict_sc_double_bfpf(BellDiagonalState(0.36, -0.76, 0.48), 0.8);
  o.require(d.times.size() == 2, "two predicted times");
  if (d.times.size() != 2) return;
  o.detail << "p_sc=(" << d.times[0] << ", " << d.times[1] << ")";
  o.require(near(d.times[0], 0.2303, 1e-4), "first = 0.2303 +- 1e-4");
  o.require(near(d.times[1], 0.3125, 1e-4), "second = 0.3125 +- 1e-4");

  const ScanResult r = run_scan(preset("fig3"));
  const double tol = 2.0 * curve_of(r, "oz").step() + 1e-12;
  for (double p : d.times) {
    o.require(confirmed(kinks_of(r, "oz"), p, tol), "oz kink near " + std::to_string(p));
    o.require(confirmed(kinks_of(r, "hv"), p, tol), "hv kink near " + std::to_string(p));
  }
  o.detail << " detected oz=" << kinks_of(r, "oz").size() << " hv=" << kinks_of(r, "hv").size();
}

// Trace-distance quantities under phase damping.
void criterion3(Outcome& o) {
  const XStateParams x = XStateParams::from_bell_diagonal(BellDiagonalState(0.49, -0.14, -0.10));
  const auto tdd = predict_tdd_sc(x);
  o.require(tdd.size() == 2, "two tdd switches");
  if (tdd.size() == 2) {
    o.detail << "tdd_sc=(" << tdd[0] << ", " << tdd[1] << ")";
    o.require(near(tdd[0], 0.1546, 1e-4), "tdd first = 0.1546 +- 1e-4");
    o.require(near(tdd[1], 0.5482, 1e-4), "tdd second = 0.5482 +- 1e-4");
  }
  const ItrKinks itr = predict_itr_kinks(x);
  o.require(itr.p_minus && itr.p_plus, "two itr kinks");
  if (itr.p_minus && itr.p_plus) {
    o.detail << " itr=(" << *itr.p_minus << ", " << *itr.p_plus << ")";
    o.require(near(*itr.p_minus, 0.4655, 1e-4), "itr first = 0.4655 +- 1e-4");
    o.require(near(*itr.p_plus, 0.6016, 1e-4), "itr second = 0.6016 +- 1e-4");
  }

  const ScanResult r = run_scan(preset("fig4"));
  const auto ctr = kinks_of(r, "ctr");
  o.detail << " ctr kinks=" << ctr.size();
  o.require(ctr.size() == 1 && near(ctr[0], 0.5482, 2e-3), "one ctr kink at 0.5482 +- 2e-3");

  const auto& d = curve_of(r, "tdd");
  double worst = 0.0;
  for (std::size_t i = 0; i < d.grid.size(); ++i)
    if (d.grid[i] >= 0.156 && d.grid[i] <= 0.547) worst = std::max(worst, std::abs(d.values[i] - 0.100));
  o.detail << " max|D_tr-0.1| on [0.156,0.547]=" << worst;
  o.require(worst <= 1e-9, "D_tr frozen at 0.100 +- 1e-9");
}

// Freezing bound values and the sampled tradeoff.
void criterion4(Outcome& o) {
  const double b1 = tdd_freeze_bound(1.0), b2 = tdd_freeze_bound(0.5), b3 = tdd_freeze_bound(0.25);
  o.detail << "bound=(" << b1 << ", " << b2 << ", " << b3 << ")";
  o.require(near(b1, 0.0, 1e-4) && near(b2, 0.1667, 1e-4) && near(b3, 0.2647, 1e-4), "bound values +- 1e-4");

  sample::Rng rng(derive_seed(20260401, 4));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int accepted = 0, violations = 0;
  double worst = 0.0;
  while (accepted < 500) {
    const double c1 = 2.0 * u(rng) - 1.0;
    const double k = u(rng);
    const double s2 = u(rng) < 0.5 ? -1.0 : 1.0;
    const double s3 = u(rng) < 0.5 ? -1.0 : 1.0;
    if (!(k > 0.0 && k < std::abs(c1)) || !BellDiagonalState::is_valid(c1, s2 * k, s3 * k)) continue;
    ++accepted;
    const BellDiagonalState c0(c1, s2 * k, s3 * k);
    const auto sc = predict_tdd_sc(XStateParams::from_bell_diagonal(c0));
    const double p2 = sc.back();
    const BellDiagonalState mid =
        propagate_bd(c0, {ChannelKind::phase_damping, ChannelKind::phase_damping, 1.0}, 0.5 * p2);
    const double frozen = tdd_x(XStateParams::from_bell_diagonal(mid));
    const double excess = frozen - tdd_freeze_bound(p2);
    if (excess > 1e-9) ++violations;
    worst = std::max(worst, excess);
  }
  o.detail << " violations=" << violations << "/" << accepted << " worst excess=" << worst;
  o.require(violations == 0, "zero violations of frozen <= bound + 1e-9");
}

// Oracles against the closed forms.
void criterion5(Outcome& o) {
  const std::uint64_t base = 20260405;
  const auto hv_dev = parallel_map<double>(100, [&](std::size_t i) {
    sample::Rng rng(derive_seed(base, i));
    const BellDiagonalState c = sample::bell_diagonal(rng);
    const DensityMatrix rho = bell_diagonal_to_density(c);
    OracleOptions opt;
    opt.seed = derive_seed(base + 1, i);
    const double h = holevo_oracle(rho, Subsystem::a, opt).value;
    const CorrelationTriple t = hv_oz_bd(c);
    return std::max(std::abs(h - t.classical), std::abs((mutual_information(rho) - h) - t.quantum));
  });
  const auto tdd_dev = parallel_map<double>(50, [&](std::size_t i) {
    sample::Rng rng(derive_seed(base + 2, i));
    const XStateRaw raw = sample::x_state(rng);
    OracleOptions opt;
    opt.seed = derive_seed(base + 3, i);
    return std::abs(tdd_oracle(raw.to_density(), opt).value - tdd_x(x_standard_form(raw)));
  });
  double worst_hv = 0.0, worst_tdd = 0.0;
  for (double d : hv_dev) worst_hv = std::max(worst_hv, d);
  for (double d : tdd_dev) worst_tdd = std::max(worst_tdd, d);
  o.detail << "max dev holevo/oz=" << worst_hv << " (100 BD) tdd=" << worst_tdd << " (50 X)";
  o.require(worst_hv <= 1e-4, "holevo and oz within 1e-4");
  o.require(worst_tdd <= 1e-3, "tdd within 1e-3");
}

// Channel properties on random states and all channel pairs.
void criterion6(Outcome& o) {
  static constexpr ChannelKind kinds[] = {ChannelKind::phase_damping, ChannelKind::bit_flip, ChannelKind::phase_flip,
                                          ChannelKind::bit_phase_flip, ChannelKind::identity};
  struct Dev {
    double trace = 0, negativity = 0, completeness = 0, propagate = 0;
  };
  const std::uint64_t base = 20260406;
  const auto devs = parallel_map<Dev>(1000, [&](std::size_t i) {
    sample::Rng rng(derive_seed(base, i));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const DensityMatrix rho = sample::density(rng, 4);
    const BellDiagonalState c = sample::bell_diagonal(rng);
    Dev d;
    for (ChannelKind ka : kinds)
      for (ChannelKind kb : kinds) {
        const ChannelPair pair{ka, kb, 1.0 - u(rng)};
        const double p = pair.p_max() * u(rng);
        const KrausChannel a = make_pauli_channel(ka, p);
        const KrausChannel b = make_pauli_channel(kb, pair.rate_ratio * p);
        d.completeness = std::max({d.completeness, a.completeness_error, b.completeness_error});
        const Matrix4 out = apply_local_channels(rho.as_matrix4(), a.operators, b.operators);
        d.trace = std::max(d.trace, std::abs(out.trace() - 1.0));
        d.negativity = std::max(d.negativity, -hermitian_eigenvalues(Eigen::MatrixXcd(out)).minCoeff());
        if (bd_closed_form_supported(pair)) {
          const BellDiagonalState closed = propagate_bd(c, pair, p);
          const Matrix4 evolved =
              apply_local_channels(bell_diagonal_to_density(c).as_matrix4(), a.operators, b.operators);
          for (int j = 1; j <= 3; ++j) {
            const double cj = (evolved * kron(pauli(j), pauli(j))).trace().real();
            d.propagate = std::max(d.propagate, std::abs(cj - closed[j - 1]));
          }
        }
      }
    return d;
  });
  Dev worst;
  for (const Dev& d : devs) {
    worst.trace = std::max(worst.trace, d.trace);
    worst.negativity = std::max(worst.negativity, d.negativity);
    worst.completeness = std::max(worst.completeness, d.completeness);
    worst.propagate = std::max(worst.propagate, d.propagate);
  }
  o.detail << "trace=" << worst.trace << " min eig=" << -worst.negativity << " completeness=" << worst.completeness
           << " propagate_bd=" << worst.propagate << " (1000 states x 25 pairs)";
  o.require(worst.trace <= 1e-12, "trace preserved to 1e-12");
  o.require(worst.negativity <= 1e-10, "positive to -1e-10");
  o.require(worst.completeness <= 1e-12, "completeness to 1e-12");
  o.require(worst.propagate <= 1e-12, "propagate_bd matches Kraus to 1e-12");
}

// Entropic identities.
void criterion7(Outcome& o) {
  const std::uint64_t base = 20260407;
  const auto re = parallel_map<double>(1000, [&](std::size_t i) {
    sample::Rng rng(derive_seed(base, i));
    const DensityMatrix rho = sample::density(rng, 4);
    const DensityMatrix prod = tensor(partial_trace(rho, Subsystem::b), partial_trace(rho, Subsystem::a));
    return std::abs(relative_entropy(rho, prod) - mutual_information(rho));
  });
  const auto cq = parallel_map<double>(500, [&](std::size_t i) {
    sample::Rng rng(derive_seed(base + 1, i));
    const auto s = sample::cq_state(rng);
    const double rhs =
        binary_entropy(s.p0) + s.p0 * von_neumann_entropy(s.rho0) + (1 - s.p0) * von_neumann_entropy(s.rho1);
    return std::abs(von_neumann_entropy(s.rho) - rhs);
  });
  double worst_re = 0.0, worst_cq = 0.0;
  for (double d : re) worst_re = std::max(worst_re, d);
  for (double d : cq) worst_cq = std::max(worst_cq, d);

  const DensityMatrix phi = bell_diagonal_to_density(BellDiagonalState(1, -1, 1));
  const CorrelationTriple t = hv_oz_bd(BellDiagonalState(1, -1, 1));
  const double mi = mutual_information(phi);
  o.detail << "re-mi=" << worst_re << " cq=" << worst_cq << " phi+=(" << t.total << ", " << t.classical << ", "
           << t.quantum << ") mi(dense)=" << mi;
  o.require(worst_re <= 1e-10, "relative entropy = MI to 1e-10");
  o.require(worst_cq <= 1e-10, "CQ entropy decomposition to 1e-10");
  o.require(near(t.total, 2, 1e-12) && near(t.classical, 1, 1e-12) && near(t.quantum, 1, 1e-12) && near(mi, 2, 1e-12),
            "phi+ gives (2, 1, 1)");
}

// Every qualifying state has a sudden change inside the domain.
void criterion8(Outcome& o) {
  static constexpr ChannelKind kinds[] = {ChannelKind::phase_damping, ChannelKind::bit_flip, ChannelKind::phase_flip,
                                          ChannelKind::bit_phase_flip};
  sample::Rng rng(derive_seed(20260408, 0));
  int accepted = 0, missing = 0;
  long drawn = 0;
  while (accepted < 1000) {
    const BellDiagonalState c = sample::bell_diagonal(rng);
    ++drawn;
    const ChannelKind kind = kinds[accepted % 4];
    const int constant = kind == ChannelKind::bit_flip ? 0 : (kind == ChannelKind::bit_phase_flip ? 1 : 2);
    const double kappa = std::abs(c[constant]);
    double other = 0.0;
    for (int j = 0; j < 3; ++j)
      if (j != constant) other = std::max(other, std::abs(c[j]));
    if (!(kappa > 0.0 && kappa < other)) continue;
    ++accepted;
    const double p_max = kind == ChannelKind::phase_damping ? 1.0 : 0.5;
    const auto sc = predict_sc_single(c, kind);
    if (!sc || !(sc->p > 0.0 && sc->p < p_max) || !std::isfinite(sc->p)) ++missing;
  }
  o.detail << "states=" << accepted << " (drawn " << drawn << ") without p_sc=" << missing;
  o.require(missing == 0, "a finite p_sc in the open domain for every state");
}

struct Criterion {
  const char* name;
  double budget_s;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
      return 2;
    }
  }

  const std::map<int, Criterion> criteria = {
      {1, {"single sudden change (phase damping)", 5, criterion1}},
      {2, {"double sudden change (bit flip / phase flip)", 5, criterion2}},
      {3, {"trace-distance switches, kinks and freezing", 5, criterion3}},
      {4, {"freezing bound and tradeoff", 60, criterion4}},
      {5, {"oracle equivalence", 600, criterion5}},
      {6, {"channel properties", 60, criterion6}},
      {7, {"entropic identities", 60, criterion7}},
      {8, {"universality of the sudden change", 60, criterion8}},
  };

  bool all = true;
  for (const auto& [id, c] : criteria) {
    if (only != 0 && id != only) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.detail << " runtime=" << secs << "s";
    o.require(secs < c.budget_s, "runtime < " + std::to_string(static_cast<int>(c.budget_s)) + " s");
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", id, c.name, o.detail.str().c_str());
    all = all && o.pass;
  }
  if (only != 0 && criteria.count(only) == 0) {
    std::fprintf(stderr, "unknown criterion %d\n", only);
    return 2;
  }
  return all ? 0 : 1;
}
