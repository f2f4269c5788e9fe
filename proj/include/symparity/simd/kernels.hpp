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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace symparity::simd {

using Word = std::uint64_t;

/**
 * Word-parallel kernels over packed bit vectors. Every entry takes lengths in
 * 64-bit words; `dst` may alias any source.
 */
struct Kernels {
  const char* name;
  void (*bit_or)(Word* dst, const Word* a, const Word* b, std::size_t len);
  void (*bit_and)(Word* dst, const Word* a, const Word* b, std::size_t len);
  void (*bit_andnot)(Word* dst, const Word* a, const Word* b, std::size_t len);  // a & ~b
  bool (*equal)(const Word* a, const Word* b, std::size_t len);
  bool (*subset)(const Word* a, const Word* b, std::size_t len);  // a ⊆ b
  bool (*any)(const Word* a, std::size_t len);
  bool (*intersects)(const Word* a, const Word* b, std::size_t len);
  bool (*intersects3)(const Word* a, const Word* b, const Word* c, std::size_t len);
  // any(row & m & ~b)
  bool (*escapes)(const Word* row, const Word* m, const Word* b, std::size_t len);
  std::size_t (*popcount)(const Word* a, std::size_t len);
};

const Kernels& scalar_kernels();
/// nullptr when the variant was not compiled in or the CPU lacks support.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

/// Picks the widest supported variant. SYMPARITY_SIMD=scalar|avx2|neon
/// overrides the choice (ignored if that variant is unavailable).
const Kernels& active_kernels();

/// Looks a variant up by name; nullptr if unavailable here.
const Kernels* kernels_by_name(std::string_view name);

}  // namespace symparity::simd
