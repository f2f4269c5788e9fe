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

#include <bit>

#include "symparity/simd/kernels.hpp"

namespace symparity::simd {
namespace {

void or_scalar(Word* dst, const Word* a, const Word* b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) dst[i] = a[i] | b[i];
}

void and_scalar(Word* dst, const Word* a, const Word* b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) dst[i] = a[i] & b[i];
}

void andnot_scalar(Word* dst, const Word* a, const Word* b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) dst[i] = a[i] & ~b[i];
}

bool equal_scalar(const Word* a, const Word* b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool subset_scalar(const Word* a, const Word* b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

bool any_scalar(const Word* a, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] != 0) return true;
  }
  return false;
}

bool intersects_scalar(const Word* a, const Word* b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

bool intersects3_scalar(const Word* a, const Word* b, const Word* c, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if ((a[i] & b[i] & c[i]) != 0) return true;
  }
  return false;
}

bool escapes_scalar(const Word* row, const Word* m, const Word* b, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if ((row[i] & m[i] & ~b[i]) != 0) return true;
  }
  return false;
}

std::size_t popcount_scalar(const Word* a, std::size_t len) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < len; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

constexpr Kernels kScalar{
    "scalar",       or_scalar,          and_scalar,     andnot_scalar,
    equal_scalar,   subset_scalar,      any_scalar,     intersects_scalar,
    intersects3_scalar, escapes_scalar, popcount_scalar,
};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

}  // namespace symparity::simd
