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

#include <algorithm>

#include "binmat/kernels/histogram_orbit.hpp"

namespace binmat::kernels {

Histogram16 max_shuffle_scalar(const Histogram16& hist,
                               std::span<const Shuffle16> perms) {
  Histogram16 best{};
  bool have = false;
  for (const Shuffle16& p : perms) {
    Histogram16 cand;
    for (std::size_t w = 0; w < 16; ++w) cand[w] = hist[p[w] & 15U];
    if (!have || cand > best) {
      best = cand;
      have = true;
    }
  }
  return best;
}

}  // namespace binmat::kernels
