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

// AVX2+FMA variants. Compiled with -mavx2 -mfma; only reached after a CPUID
// check in dispatch.cpp.

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "discord/kernels.hpp"

namespace discord::kernels {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256d abs_pd(__m256d x) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
}

// log2 for positive normal inputs. m in [sqrt(1/2), sqrt(2)), then
// ln m = 2 atanh(s) with s = (m - 1) / (m + 1), |s| < 0.172.
inline __m256d log2_pd(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i exp_biased = _mm256_srli_epi64(bits, 52);
  const __m256i mant_bits =
      _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
                      _mm256_set1_epi64x(0x3FF0000000000000LL));
  __m256d m = _mm256_castsi256_pd(mant_bits);
  const __m256d magic = _mm256_set1_pd(4503599627370496.0);  // 2^52
  __m256d e = _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_or_si256(exp_biased, _mm256_castpd_si256(magic))),
      _mm256_set1_pd(4503599627370496.0 + 1023.0));
  const __m256d big = _mm256_cmp_pd(m, _mm256_set1_pd(1.4142135623730951), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
  e = _mm256_add_pd(e, _mm256_and_pd(big, _mm256_set1_pd(1.0)));

  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  const __m256d z = _mm256_mul_pd(s, s);
  __m256d poly = _mm256_set1_pd(1.0 / 25.0);
  for (int k = 11; k >= 0; --k) {
    poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / (2.0 * k + 1.0)));
  }
  const __m256d ln_m = _mm256_mul_pd(_mm256_add_pd(s, s), poly);
  return _mm256_fmadd_pd(ln_m, _mm256_set1_pd(1.4426950408889634), e);
}

inline __m256d xlog_pd(__m256d x) {
  const __m256d pos = _mm256_cmp_pd(x, _mm256_set1_pd(0x1p-1022), _CMP_GE_OQ);
  const __m256d safe = _mm256_blendv_pd(_mm256_set1_pd(1.0), x, pos);
  return _mm256_and_pd(pos, _mm256_mul_pd(safe, log2_pd(safe)));
}

inline double xlog(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

void conditional_entropy(const BlochFrame& f, DirectionGrid dirs, std::span<double> out) {
  const std::size_t n = out.size();
  const std::size_t vec_end = n - n % kLanes;
  const __m256d a0 = _mm256_set1_pd(f.measured[0]);
  const __m256d a1 = _mm256_set1_pd(f.measured[1]);
  const __m256d a2 = _mm256_set1_pd(f.measured[2]);
  __m256d t[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = _mm256_set1_pd(f.t[i][j]);
  const __m256d quarter = _mm256_set1_pd(0.25);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d one = _mm256_set1_pd(1.0);
  for (std::size_t k = 0; k < vec_end; k += kLanes) {
    const __m256d nx = _mm256_loadu_pd(dirs.x.data() + k);
    const __m256d ny = _mm256_loadu_pd(dirs.y.data() + k);
    const __m256d nz = _mm256_loadu_pd(dirs.z.data() + k);
    const __m256d an = _mm256_fmadd_pd(a2, nz, _mm256_fmadd_pd(a1, ny, _mm256_mul_pd(a0, nx)));
    __m256d tv[3];
    for (int j = 0; j < 3; ++j) {
      tv[j] = _mm256_fmadd_pd(t[2][j], nz, _mm256_fmadd_pd(t[1][j], ny, _mm256_mul_pd(t[0][j], nx)));
    }
    __m256d acc = one;
    for (double sign : {1.0, -1.0}) {
      const __m256d s = _mm256_set1_pd(sign);
      const __m256d u = _mm256_fmadd_pd(s, an, one);
      const __m256d bx = _mm256_fmadd_pd(s, tv[0], _mm256_set1_pd(f.other[0]));
      const __m256d by = _mm256_fmadd_pd(s, tv[1], _mm256_set1_pd(f.other[1]));
      const __m256d bz = _mm256_fmadd_pd(s, tv[2], _mm256_set1_pd(f.other[2]));
      const __m256d m =
          _mm256_sqrt_pd(_mm256_fmadd_pd(bz, bz, _mm256_fmadd_pd(by, by, _mm256_mul_pd(bx, bx))));
      acc = _mm256_fmadd_pd(half, xlog_pd(u), acc);
      acc = _mm256_fnmadd_pd(quarter, xlog_pd(_mm256_add_pd(u, m)), acc);
      acc = _mm256_fnmadd_pd(quarter, xlog_pd(_mm256_sub_pd(u, m)), acc);
    }
    _mm256_storeu_pd(out.data() + k, acc);
  }
  for (std::size_t k = vec_end; k < n; ++k) {
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
  const std::size_t n = total.size();
  const std::size_t vec_end = n - n % kLanes;
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d quarter = _mm256_set1_pd(0.25);
  const __m256d zero = _mm256_setzero_pd();
  for (std::size_t k = 0; k < vec_end; k += kLanes) {
    const __m256d a = _mm256_loadu_pd(c1.data() + k);
    const __m256d b = _mm256_loadu_pd(c2.data() + k);
    const __m256d c = _mm256_loadu_pd(c3.data() + k);
    const __m256d l0 = _mm256_mul_pd(quarter, _mm256_add_pd(_mm256_sub_pd(_mm256_add_pd(one, a), b), c));
    const __m256d l1 = _mm256_mul_pd(quarter, _mm256_sub_pd(_mm256_add_pd(_mm256_add_pd(one, a), b), c));
    const __m256d l2 = _mm256_mul_pd(quarter, _mm256_add_pd(_mm256_add_pd(_mm256_sub_pd(one, a), b), c));
    const __m256d l3 = _mm256_mul_pd(quarter, _mm256_sub_pd(_mm256_sub_pd(_mm256_sub_pd(one, a), b), c));
    __m256d t = zero;
    for (__m256d l : {l0, l1, l2, l3}) {
      const __m256d lc = _mm256_max_pd(l, zero);
      t = _mm256_add_pd(t, _mm256_fmadd_pd(two, lc, xlog_pd(lc)));
    }
    const __m256d cp = _mm256_min_pd(
        _mm256_max_pd(_mm256_max_pd(abs_pd(a), abs_pd(b)), abs_pd(c)), one);
    _mm256_storeu_pd(total.data() + k, _mm256_max_pd(t, zero));
    const __m256d cl = _mm256_mul_pd(_mm256_set1_pd(0.5),
                                     _mm256_add_pd(xlog_pd(_mm256_add_pd(one, cp)),
                                                   xlog_pd(_mm256_sub_pd(one, cp))));
    _mm256_storeu_pd(classical.data() + k, cl);
  }
  for (std::size_t k = vec_end; k < n; ++k) {
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
  const std::size_t n = hi.size();
  const std::size_t vec_end = n - n % kLanes;
  for (std::size_t k = 0; k < vec_end; k += kLanes) {
    const __m256d a = abs_pd(_mm256_loadu_pd(x.data() + k));
    const __m256d b = abs_pd(_mm256_loadu_pd(y.data() + k));
    const __m256d c = abs_pd(_mm256_loadu_pd(z.data() + k));
    const __m256d ab_lo = _mm256_min_pd(a, b);
    const __m256d ab_hi = _mm256_max_pd(a, b);
    _mm256_storeu_pd(hi.data() + k, _mm256_max_pd(ab_hi, c));
    _mm256_storeu_pd(lo.data() + k, _mm256_min_pd(ab_lo, c));
    _mm256_storeu_pd(mid.data() + k, _mm256_max_pd(ab_lo, _mm256_min_pd(ab_hi, c)));
  }
  for (std::size_t k = vec_end; k < n; ++k) {
    const double a = std::abs(x[k]), b = std::abs(y[k]), c = std::abs(z[k]);
    const double ab_lo = std::min(a, b), ab_hi = std::max(a, b);
    hi[k] = std::max(ab_hi, c);
    lo[k] = std::min(ab_lo, c);
    mid[k] = std::max(ab_lo, std::min(ab_hi, c));
  }
}

void abs_second_difference(std::span<const double> v, double scale, std::span<double> out) {
  const std::size_t n = out.size();
  const std::size_t vec_end = n - n % kLanes;
  const __m256d sc = _mm256_set1_pd(scale);
  const __m256d two = _mm256_set1_pd(2.0);
  for (std::size_t i = 0; i < vec_end; i += kLanes) {
    const __m256d v0 = _mm256_loadu_pd(v.data() + i);
    const __m256d v1 = _mm256_loadu_pd(v.data() + i + 1);
    const __m256d v2 = _mm256_loadu_pd(v.data() + i + 2);
    const __m256d d = _mm256_fnmadd_pd(two, v1, _mm256_add_pd(v0, v2));
    _mm256_storeu_pd(out.data() + i, _mm256_mul_pd(abs_pd(d), sc));
  }
  for (std::size_t i = vec_end; i < n; ++i) {
    out[i] = std::abs((v[i] + v[i + 2]) - 2.0 * v[i + 1]) * scale;
  }
}

void quadratic_decay(double c0, double u, double w, std::span<const double> p,
                     std::span<double> out) {
  const std::size_t n = out.size();
  const std::size_t vec_end = n - n % kLanes;
  const __m256d vc = _mm256_set1_pd(c0);
  const __m256d vu = _mm256_set1_pd(u);
  const __m256d vw = _mm256_set1_pd(w);
  const __m256d one = _mm256_set1_pd(1.0);
  for (std::size_t i = 0; i < vec_end; i += kLanes) {
    const __m256d pp = _mm256_loadu_pd(p.data() + i);
    const __m256d fa = _mm256_fnmadd_pd(vu, pp, one);
    const __m256d fb = _mm256_fnmadd_pd(vw, pp, one);
    _mm256_storeu_pd(out.data() + i, _mm256_mul_pd(vc, _mm256_mul_pd(fa, fb)));
  }
  for (std::size_t i = vec_end; i < n; ++i) out[i] = c0 * ((1.0 - u * p[i]) * (1.0 - w * p[i]));
}

void xlog2x(std::span<const double> x, std::span<double> out) {
  const std::size_t n = out.size();
  const std::size_t vec_end = n - n % kLanes;
  for (std::size_t i = 0; i < vec_end; i += kLanes) {
    _mm256_storeu_pd(out.data() + i, xlog_pd(_mm256_loadu_pd(x.data() + i)));
  }
  for (std::size_t i = vec_end; i < n; ++i) out[i] = xlog(x[i]);
}

}  // namespace

namespace detail {

const KernelTable& avx2_table() {
  static const KernelTable t{Isa::avx2,         conditional_entropy,   bell_diagonal_entropic,
                             order_statistics3, abs_second_difference, quadratic_decay,
                             xlog2x};
  return t;
}

}  // namespace detail

}  // namespace discord::kernels
