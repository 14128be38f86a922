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

#ifndef BINMAT_MINOR_HPP_
#define BINMAT_MINOR_HPP_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "binmat/isomorphism.hpp"
#include "binmat/matroid.hpp"

namespace binmat {

// host \ deleted / contracted is isomorphic to the pattern via `mapping`
// (pattern label -> host label).
struct MinorWitness {
  std::vector<std::string> deleted;
  std::vector<std::string> contracted;
  std::vector<std::pair<std::string, std::string>> mapping;

  friend bool operator==(const MinorWitness&, const MinorWitness&) = default;
};

// Requires the pattern element to land on the given host element.
struct LabelPin {
  std::string pattern;
  std::string host;
};

struct MinorEmbedding {
  ElementSet deleted;
  ElementSet contracted;
  ElementMap pattern_to_host;  // host indices
};

// Minor search against one fixed pattern.
//
// Candidates are pairs (D, C) with C independent, |C| = r(host) - r(pattern)
// and |D| = |E(host)| - |E(pattern)| - |C|. D is visited in increasing
// bitmask order, C likewise within each D; the first isomorphic minor wins.
class MinorSearcher {
 public:
  explicit MinorSearcher(BinaryMatroid pattern);

  const BinaryMatroid& pattern() const { return pattern_; }

  // Throws MatroidError for pins naming unknown labels.
  std::optional<MinorWitness> find(const BinaryMatroid& host,
                                   std::span<const LabelPin> pins = {}) const;

  // Visits every (D, C) and every isomorphism of the pattern onto
  // host \ D / C. Stops when visit returns false.
  void for_each_embedding(
      const BinaryMatroid& host,
      const std::function<bool(const MinorEmbedding&)>& visit) const;

 private:
  BinaryMatroid pattern_;
  IsomorphismMatcher matcher_;
};

std::optional<MinorWitness> find_minor(const BinaryMatroid& host,
                                       const BinaryMatroid& pattern,
                                       std::span<const LabelPin> pins = {});

// Re-applies the witness to the host and checks the mapping is an
// isomorphism onto the pattern.
bool verify_witness(const BinaryMatroid& host, const BinaryMatroid& pattern,
                    const MinorWitness& witness);

// M(K_4) on edges e12 e13 e14 e23 e24 e34.
const BinaryMatroid& k4_matroid();

// An M(K_4) minor witness, or nothing when `m` is a binary gammoid.
std::optional<MinorWitness> gammoid_obstruction(const BinaryMatroid& m);
bool is_binary_gammoid(const BinaryMatroid& m);

}  // namespace binmat

#endif  // BINMAT_MINOR_HPP_
