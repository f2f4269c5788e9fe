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

#if defined(__ARM_NEON) || defined(__aarch64__)
#include <arm_neon.h>
#define SYMPARITY_HAVE_NEON_TU 1
#endif

namespace symparity::simd {

#if SYMPARITY_HAVE_NEON_TU
namespace {

inline bool nonzero(uint64x2_t v) { return (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0; }

void or_neon(Word* dst, const Word* a, const Word* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < len; ++i) dst[i] = a[i] | b[i];
}

void and_neon(Word* dst, const Word* a, const Word* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < len; ++i) dst[i] = a[i] & b[i];
}

void andnot_neon(Word* dst, const Word* a, const Word* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) vst1q_u64(dst + i, vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < len; ++i) dst[i] = a[i] & ~b[i];
}

bool equal_neon(const Word* a, const Word* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    if (nonzero(veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)))) return false;
  }
  for (; i < len; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool subset_neon(const Word* a, const Word* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    if (nonzero(vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)))) return false;
  }
  for (; i < len; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

bool any_neon(const Word* a, std::size_t len) {
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    if (nonzero(vld1q_u64(a + i))) return true;
  }
  for (; i < len; ++i) {
    if (a[i] != 0) return true;
  }
  return false;
}

bool intersects_neon(const Word* a, const Word* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    if (nonzero(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)))) return true;
  }
  for (; i < len; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

bool intersects3_neon(const Word* a, const Word* b, const Word* c, std::size_t len) {
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    uint64x2_t ab = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (nonzero(vandq_u64(ab, vld1q_u64(c + i)))) return true;
  }
  for (; i < len; ++i) {
    if ((a[i] & b[i] & c[i]) != 0) return true;
  }
  return false;
}

bool escapes_neon(const Word* row, const Word* m, const Word* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    uint64x2_t rm = vandq_u64(vld1q_u64(row + i), vld1q_u64(m + i));
    if (nonzero(vbicq_u64(rm, vld1q_u64(b + i)))) return true;
  }
  for (; i < len; ++i) {
    if ((row[i] & m[i] & ~b[i]) != 0) return true;
  }
  return false;
}

std::size_t popcount_neon(const Word* a, std::size_t len) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < len; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

constexpr Kernels kNeon{
    "neon",      or_neon,          and_neon,     andnot_neon,
    equal_neon,  subset_neon,      any_neon,     intersects_neon,
    intersects3_neon, escapes_neon, popcount_neon,
};

}  // namespace

const Kernels* neon_kernels() { return &kNeon; }

#else

const Kernels* neon_kernels() { return nullptr; }

#endif

}  // namespace symparity::simd
