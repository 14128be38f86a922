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

#include <arm_neon.h>

#include "binmat/kernels/histogram_orbit.hpp"

namespace binmat::kernels {
namespace {

// One nibble per byte lane, lane 0 in the low bits.
inline std::uint64_t lane_mask(uint8x16_t m) {
  const uint8x8_t narrowed = vshrn_n_u16(vreinterpretq_u16_u8(m), 4);
  return vget_lane_u64(vreinterpret_u64_u8(narrowed), 0);
}

inline bool lex_greater(uint8x16_t a, uint8x16_t b) {
  const std::uint64_t gt = lane_mask(vcgtq_u8(a, b));
  const std::uint64_t lt = lane_mask(vcgtq_u8(b, a));
  const std::uint64_t diff = gt | lt;
  return diff != 0 && (gt & diff & (~diff + 1)) != 0;
}

}  // namespace

Histogram16 max_shuffle_neon(const Histogram16& hist,
                             std::span<const Shuffle16> perms) {
  const uint8x16_t h = vld1q_u8(hist.data());
  const uint8x16_t nibble = vdupq_n_u8(0x0F);
  uint8x16_t best = vqtbl1q_u8(h, vandq_u8(vld1q_u8(perms[0].data()), nibble));
  for (std::size_t i = 1; i < perms.size(); ++i) {
    const uint8x16_t cand =
        vqtbl1q_u8(h, vandq_u8(vld1q_u8(perms[i].data()), nibble));
    if (lex_greater(cand, best)) best = cand;
  }
  Histogram16 out;
  vst1q_u8(out.data(), best);
  return out;
}

}  // namespace binmat::kernels
