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

// Scalar reference kernels. The AVX2 variants are tested against these.

#include <algorithm>
#include <cmath>

#include "discord/kernels.hpp"

namespace discord::kernels {

namespace {

inline double xlog(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

void conditional_entropy(const BlochFrame& f, DirectionGrid dirs, std::span<double> out) {
  const std::size_t n = out.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double nx = dirs.x[k], ny = dirs.y[k], nz = dirs.z[k];
    const double an = f.measured[0] * nx + f.measured[1] * ny + f.measured[2] * nz;
    double tv[3];
    for (int j = 0; j < 3; ++j) tv[j] = f.t[0][j] * nx + f.t[1][j] * ny + f.t[2][j] * nz;
    double acc = 1.0;
    for (double s : {1.0, -1.0}) {
      const double u = 1.0 + s * an;
      const double bx = f.other[0] + s * tv[0];
      const double by = f.other[1] + s * tv[1];
      const double bz = f.other[2] + s * tv[2];
      const double m = std::sqrt(bx * bx + by * by + bz * bz);
      acc += 0.5 * xlog(u) - 0.25 * xlog(u + m) - 0.25 * xlog(u - m);
    }
    out[k] = acc;
  }
}

void bell_diagonal_entropic(std::span<const double> c1, std::span<const double> c2,
                            std::span<const double> c3, std::span<double> total,
                            std::span<double> classical) {
  for (std::size_t k = 0; k < total.size(); ++k) {
    const double a = c1[k], b = c2[k], c = c3[k];
    const double lam[4] = {0.25 * (1.0 + a - b + c), 0.25 * (1.0 + a + b - c),
                           0.25 * (1.0 - a + b + c), 0.25 * (1.0 - a - b - c)};
    double t = 0.0;
    for (double l : lam) {
      const double lc = std::max(l, 0.0);
      t += xlog(lc) + 2.0 * lc;
    }
    const double cp = std::min(std::max(std::max(std::abs(a), std::abs(b)), std::abs(c)), 1.0);
    total[k] = std::max(t, 0.0);
    classical[k] = 0.5 * (xlog(1.0 + cp) + xlog(1.0 - cp));
  }
}

void order_statistics3(std::span<const double> x, std::span<const double> y,
                       std::span<const double> z, std::span<double> hi, std::span<double> mid,
                       std::span<double> lo) {
  for (std::size_t k = 0; k < hi.size(); ++k) {
    const double a = std::abs(x[k]), b = std::abs(y[k]), c = std::abs(z[k]);
    const double ab_lo = std::min(a, b), ab_hi = std::max(a, b);
    hi[k] = std::max(ab_hi, c);
    lo[k] = std::min(ab_lo, c);
    mid[k] = std::max(ab_lo, std::min(ab_hi, c));
  }
}

void abs_second_difference(std::span<const double> v, double scale, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::abs((v[i] + v[i + 2]) - 2.0 * v[i + 1]) * scale;
  }
}

void quadratic_decay(double c0, double u, double w, std::span<const double> p,
                     std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c0 * ((1.0 - u * p[i]) * (1.0 - w * p[i]));
}

void xlog2x(std::span<const double> x, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = xlog(x[i]);
}

}  // namespace

namespace detail {

const KernelTable& scalar_table() {
  static const KernelTable t{Isa::scalar,           conditional_entropy, bell_diagonal_entropic,
                             order_statistics3,     abs_second_difference, quadratic_decay,
                             xlog2x};
  return t;
}

}  // namespace detail

}  // namespace discord::kernels
