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

#ifndef BINMAT_ENUMERATE_HPP_
#define BINMAT_ENUMERATE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "binmat/kernels/histogram_orbit.hpp"
#include "binmat/matroid.hpp"

namespace binmat {

inline constexpr std::size_t kMaxCanonicalRank = 4;
inline constexpr std::size_t kMaxCorpusElements = 9;

class EnumerateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Isomorphism-class key of a binary matroid of rank <= 4.
//
// Columns are read as vectors of GF(2)^4 in a row-reduced frame. `counts`
// is the multiplicity of each of the 16 vectors, maximized lexicographically
// over GL(4,2); that maximum is the same as the lexicographically smallest
// sorted column list, which columns() returns.
struct CanonicalKey {
  std::uint8_t rank = 0;
  std::uint8_t elements = 0;
  kernels::Histogram16 counts{};

  std::vector<std::uint8_t> columns() const;
  std::string to_string() const;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const;
};

// All 20160 elements of GL(4,2) as bin shuffles (identity first).
const std::vector<kernels::Shuffle16>& gl4_shuffles();

// Throws EnumerateError when rank > 4.
CanonicalKey canonical_key(const BinaryMatroid& m);
CanonicalKey canonical_key(const kernels::Histogram16& column_counts);

// Representative on labels e1..en, columns in canonical sorted order.
BinaryMatroid matroid_from_key(const CanonicalKey& key);

struct CorpusMember {
  CanonicalKey key;
  BinaryMatroid matroid;
  bool is_gammoid = false;
};

struct Corpus {
  std::size_t max_elements = 0;
  std::size_t max_rank = 0;
  std::size_t loop_cap = 3;
  std::vector<CorpusMember> members;
};

struct EnumerateOptions {
  // Zero columns allowed per matroid.
  std::size_t loop_cap = 3;
  std::size_t jobs = 1;
};

// One representative per isomorphism class of binary matroids with
// 1..max_elements elements and rank <= max_rank, ordered by
// (elements, key). Throws EnumerateError beyond 9 elements or rank 4.
Corpus enumerate_binary_matroids(std::size_t max_elements,
                                 std::size_t max_rank,
                                 const EnumerateOptions& options = {});

Corpus gammoid_corpus(const Corpus& c);

// Members with at most `max_elements` elements.
Corpus restrict_corpus(const Corpus& c, std::size_t max_elements);

}  // namespace binmat

#endif  // BINMAT_ENUMERATE_HPP_
