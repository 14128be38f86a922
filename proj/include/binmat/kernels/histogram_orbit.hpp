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

// Orbit maximum of a 16-bin histogram under a table of byte shuffles.
//
// A multiset of columns in GF(2)^4 is stored as its histogram over the 16
// possible column values. An invertible row transformation g permutes the
// bins, so the image histogram is one byte shuffle: out[w] = hist[g(w)].
// Canonicalization takes the lexicographic maximum over all of GL(4,2),
// which is 20160 shuffles of one 16-byte vector: a pshufb / tbl loop.
//
// Every backend must return bit-identical results; the scalar kernel is the
// reference.

#ifndef BINMAT_KERNELS_HISTOGRAM_ORBIT_HPP_
#define BINMAT_KERNELS_HISTOGRAM_ORBIT_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace binmat::kernels {

using Histogram16 = std::array<std::uint8_t, 16>;
// Shuffle16[w] is the source bin (0..15) for output bin w.
using Shuffle16 = std::array<std::uint8_t, 16>;

enum class Backend { kScalar, kAvx2, kNeon };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);
std::vector<Backend> available_backends();

// Best backend for this CPU, unless BINMAT_KERNEL=scalar|avx2|neon
// overrides it (an unavailable override falls back to scalar).
Backend active_backend();

// Preconditions: perms nonempty; every bin < 128; every shuffle index < 16.
Histogram16 max_shuffle_scalar(const Histogram16& hist,
                               std::span<const Shuffle16> perms);
#if defined(__x86_64__) || defined(_M_X64)
Histogram16 max_shuffle_avx2(const Histogram16& hist,
                             std::span<const Shuffle16> perms);
#endif
#if defined(__aarch64__)
Histogram16 max_shuffle_neon(const Histogram16& hist,
                             std::span<const Shuffle16> perms);
#endif

Histogram16 max_shuffle(const Histogram16& hist,
                        std::span<const Shuffle16> perms, Backend backend);
Histogram16 max_shuffle(const Histogram16& hist,
                        std::span<const Shuffle16> perms);

}  // namespace binmat::kernels

#endif  // BINMAT_KERNELS_HISTOGRAM_ORBIT_HPP_
