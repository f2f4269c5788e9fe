/*
 * Copyright 2026 The symparity Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdlib>

#include "symparity/simd/kernels.hpp"

namespace symparity::simd {

const Kernels* kernels_by_name(std::string_view name) {
  if (name == "scalar") return &scalar_kernels();
  if (name == "avx2") return avx2_kernels();
  if (name == "neon") return neon_kernels();
  return nullptr;
}

namespace {

const Kernels& pick() {
  if (const char* forced = std::getenv("SYMPARITY_SIMD")) {
    if (const Kernels* k = kernels_by_name(forced)) return *k;
  }
  if (const Kernels* k = avx2_kernels()) return *k;
  if (const Kernels* k = neon_kernels()) return *k;
  return scalar_kernels();
}

}  // namespace

const Kernels& active_kernels() {
  static const Kernels& chosen = pick();
  return chosen;
}

}  // namespace symparity::simd
