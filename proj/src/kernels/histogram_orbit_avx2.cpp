// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Built with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>
#include <cstring>

#include "binmat/kernels/histogram_orbit.hpp"

namespace binmat::kernels {
namespace {

// a > b lexicographically as unsigned bytes. Flipping the sign bit turns the
// signed compare into an unsigned one.
inline bool lex_greater(__m128i a, __m128i b) {
  const __m128i bias = _mm_set1_epi8(static_cast<char>(0x80));
  a = _mm_xor_si128(a, bias);
  b = _mm_xor_si128(b, bias);
  const auto gt = static_cast<unsigned>(_mm_movemask_epi8(_mm_cmpgt_epi8(a, b)));
  const auto lt = static_cast<unsigned>(_mm_movemask_epi8(_mm_cmpgt_epi8(b, a)));
  const unsigned diff = gt | lt;
  return diff != 0 && (gt & diff & (~diff + 1)) != 0;
}

inline __m128i lex_max(__m128i a, __m128i b) {
  return lex_greater(b, a) ? b : a;
}

}  // namespace

Histogram16 max_shuffle_avx2(const Histogram16& hist,
                             std::span<const Shuffle16> perms) {
  static_assert(sizeof(Shuffle16) == 16);
  const __m128i h = _mm_loadu_si128(reinterpret_cast<const __m128i*>(hist.data()));
  const __m256i h2 = _mm256_broadcastsi128_si256(h);
  const __m128i nibble = _mm_set1_epi8(0x0F);
  const __m256i nibble2 = _mm256_set1_epi8(0x0F);

  const auto* base = reinterpret_cast<const std::uint8_t*>(perms.data());
  const std::size_t n = perms.size();

  __m128i best = _mm_shuffle_epi8(
      h, _mm_and_si128(_mm_loadu_si128(reinterpret_cast<const __m128i*>(base)),
                       nibble));
  std::size_t i = 1;
  // Two shuffles per 256-bit vpshufb; vpshufb works per 128-bit lane.
  for (; i + 2 <= n; i += 2) {
    const __m256i idx = _mm256_and_si256(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(base + 16 * i)),
        nibble2);
    const __m256i cand = _mm256_shuffle_epi8(h2, idx);
    const __m128i lo = _mm256_castsi256_si128(cand);
    const __m128i hi = _mm256_extracti128_si256(cand, 1);
    best = lex_max(best, lex_max(lo, hi));
  }
  for (; i < n; ++i) {
    const __m128i idx = _mm_and_si128(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(base + 16 * i)), nibble);
    best = lex_max(best, _mm_shuffle_epi8(h, idx));
  }

  Histogram16 out;
  _mm_storeu_si128(reinterpret_cast<__m128i*>(out.data()), best);
  return out;
}

}  // namespace binmat::kernels
