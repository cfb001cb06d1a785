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

// Seeded samplers for tests, the verification suite and sweeps.

#include <random>

#include "discord/correlations.hpp"
#include "discord/states.hpp"

namespace discord::sample {

using Rng = std::mt19937_64;

/// Eigenvalues drawn uniformly from the probability simplex, then mapped to
/// (c1, c2, c3).
BellDiagonalState bell_diagonal(Rng& rng);

/// Uniform populations, coherence moduli uniform within the block bounds,
/// uniform phases.
XStateRaw x_state(Rng& rng);

/// Ginibre-distributed full-rank state of dimension `dim`.
DensityMatrix density(Rng& rng, int dim);

/// Haar-random 2x2 unitary.
Matrix2 unitary2(Rng& rng);

MeasurementBasis basis(Rng& rng);

/// Random state of the form sum_j p_j Pi_j x rho_j with the projectors on a.
struct CqState {
  DensityMatrix rho;
  MeasurementBasis basis;
  double p0;
  DensityMatrix rho0;
  DensityMatrix rho1;
};
CqState cq_state(Rng& rng);

}  // namespace discord::sample
