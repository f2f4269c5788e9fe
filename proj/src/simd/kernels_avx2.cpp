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

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define SYMPARITY_HAVE_AVX2_TU 1
#endif

namespace symparity::simd {

#if SYMPARITY_HAVE_AVX2_TU
namespace {

#define AVX2 __attribute__((target("avx2")))

AVX2 inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

AVX2 inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

AVX2 inline bool nonzero(__m256i v) { return !_mm256_testz_si256(v, v); }

AVX2 void or_avx2(Word* dst, const Word* a, const Word* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) store(dst + i, _mm256_or_si256(load(a + i), load(b + i)));
  for (; i < len; ++i) dst[i] = a[i] | b[i];
}

AVX2 void and_avx2(Word* dst, const Word* a, const Word* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) store(dst + i, _mm256_and_si256(load(a + i), load(b + i)));
  for (; i < len; ++i) dst[i] = a[i] & b[i];
}

AVX2 void andnot_avx2(Word* dst, const Word* a, const Word* b, std::size_t len) {
  std::size_t i = 0;
  // _mm256_andnot_si256(x, y) computes ~x & y
  for (; i + 4 <= len; i += 4) store(dst + i, _mm256_andnot_si256(load(b + i), load(a + i)));
  for (; i < len; ++i) dst[i] = a[i] & ~b[i];
}

AVX2 bool equal_avx2(const Word* a, const Word* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    if (nonzero(_mm256_xor_si256(load(a + i), load(b + i)))) return false;
  }
  for (; i < len; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

AVX2 bool subset_avx2(const Word* a, const Word* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    // testc(b, a) is 1 iff (~b & a) == 0
    if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
  }
  for (; i < len; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

AVX2 bool any_avx2(const Word* a, std::size_t len) {
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    if (nonzero(load(a + i))) return true;
  }
  for (; i < len; ++i) {
    if (a[i] != 0) return true;
  }
  return false;
}

AVX2 bool intersects_avx2(const Word* a, const Word* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
  }
  for (; i < len; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

AVX2 bool intersects3_avx2(const Word* a, const Word* b, const Word* c, std::size_t len) {
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    if (!_mm256_testz_si256(_mm256_and_si256(load(a + i), load(b + i)), load(c + i))) return true;
  }
  for (; i < len; ++i) {
    if ((a[i] & b[i] & c[i]) != 0) return true;
  }
  return false;
}

AVX2 bool escapes_avx2(const Word* row, const Word* m, const Word* b, std::size_t len) {
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256i rm = _mm256_and_si256(load(row + i), load(m + i));
    if (!_mm256_testc_si256(load(b + i), rm)) return true;
  }
  for (; i < len; ++i) {
    if ((row[i] & m[i] & ~b[i]) != 0) return true;
  }
  return false;
}

// No vector popcount without AVX-512 VPOPCNTDQ; the scalar loop with the
// hardware instruction is as fast at these sizes.
__attribute__((target("avx2,popcnt"))) std::size_t popcount_avx2(const Word* a,
                                                                 std::size_t len) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < len; ++i) total += static_cast<std::size_t>(__builtin_popcountll(a[i]));
  return total;
}

#undef AVX2

constexpr Kernels kAvx2{
    "avx2",      or_avx2,          and_avx2,     andnot_avx2,
    equal_avx2,  subset_avx2,      any_avx2,     intersects_avx2,
    intersects3_avx2, escapes_avx2, popcount_avx2,
};

}  // namespace

const Kernels* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &kAvx2 : nullptr;
}

#else

const Kernels* avx2_kernels() { return nullptr; }

#endif

}  // namespace symparity::simd
