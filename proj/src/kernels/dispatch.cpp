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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "discord/kernels.hpp"

namespace discord::kernels {

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool available(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(DISCORD_HAVE_AVX2)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& table(Isa isa) {
  if (!available(isa)) throw std::runtime_error("kernel ISA not available: " + std::string(to_string(isa)));
#if defined(DISCORD_HAVE_AVX2)
  if (isa == Isa::avx2) return detail::avx2_table();
#endif
  return detail::scalar_table();
}

namespace {

const KernelTable& select() {
  if (const char* env = std::getenv("DISCORD_DYNAMICS_ISA")) {
    const std::string want(env);
    if (want == "scalar") return detail::scalar_table();
    if (want == "avx2" && available(Isa::avx2)) return table(Isa::avx2);
  }
  return available(Isa::avx2) ? table(Isa::avx2) : detail::scalar_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& chosen = select();
  return chosen;
}

}  // namespace discord::kernels
