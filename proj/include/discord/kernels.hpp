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

// Data-parallel inner loops. Every kernel has a scalar reference in
// kernels_scalar.cpp and, on x86-64, an AVX2+FMA variant in kernels_avx2.cpp.
// The variant is picked once at runtime from CPUID; DISCORD_DYNAMICS_ISA=scalar
// forces the reference path.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

namespace discord::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// Local Bloch vectors and correlation matrix of a two-qubit state, oriented
/// so that `measured` is the side that gets the projective measurement:
/// rho = 1/4 (I + measured.s x I + I x other.s + sum T_ij s_i x s_j).
struct BlochFrame {
  std::array<double, 3> measured{};
  std::array<double, 3> other{};
  std::array<std::array<double, 3>, 3> t{};  ///< t[i][j]: measured index i
};

/// Structure of arrays for measurement directions on the unit sphere.
struct DirectionGrid {
  std::span<const double> x;
  std::span<const double> y;
  std::span<const double> z;
};

struct KernelTable {
  Isa isa;

  /// out[k] = sum_{s=+-} p_s S(rho_other | s) for the measurement along
  /// direction k (post-measurement conditional entropy, bits).
  void (*conditional_entropy)(const BlochFrame& frame, DirectionGrid dirs, std::span<double> out);

  /// Mutual information and Henderson-Vedral classical correlation of
  /// Bell-diagonal states given component-wise arrays.
  void (*bell_diagonal_entropic)(std::span<const double> c1, std::span<const double> c2,
                                 std::span<const double> c3, std::span<double> total,
                                 std::span<double> classical);

  /// Per index: (max, mid, min) of (|x|, |y|, |z|).
  void (*order_statistics3)(std::span<const double> x, std::span<const double> y,
                            std::span<const double> z, std::span<double> hi,
                            std::span<double> mid, std::span<double> lo);

  /// out[i] = |v[i] - 2 v[i+1] + v[i+2]| * scale, length v.size() - 2.
  void (*abs_second_difference)(std::span<const double> v, double scale, std::span<double> out);

  /// out[i] = c0 (1 - u p[i]) (1 - w p[i]).
  void (*quadratic_decay)(double c0, double u, double w, std::span<const double> p,
                          std::span<double> out);

  /// out[i] = x[i] log2 x[i] (0 for x <= 0).
  void (*xlog2x)(std::span<const double> x, std::span<double> out);
};

/// Table selected for this process (cached after first call).
const KernelTable& active();
/// Table for a specific ISA; throws std::runtime_error if unavailable.
const KernelTable& table(Isa isa);
bool available(Isa isa);

namespace detail {
const KernelTable& scalar_table();
#if defined(DISCORD_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
}  // namespace detail

}  // namespace discord::kernels
