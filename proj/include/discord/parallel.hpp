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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace discord {

/// Worker count: hardware concurrency, capped by DISCORD_DYNAMICS_THREADS.
unsigned max_threads();

/// Runs body(i) for i in [0, n). Indices are claimed dynamically; the first
/// exception thrown by any worker is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads = 0);

/// Evaluates f(i) for i in [0, n) and returns the results in index order.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, F&& f, unsigned threads = 0) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = f(i); }, threads);
  return out;
}

/// Seed for sample `index` of a run seeded with `base` (splitmix64).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace discord
