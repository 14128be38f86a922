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

#ifndef BINMAT_ISOMORPHISM_HPP_
#define BINMAT_ISOMORPHISM_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "binmat/matroid.hpp"

namespace binmat {

// map[i] is the element of the target matched with element i of the source.
using ElementMap = std::vector<std::size_t>;

struct IndexPin {
  std::size_t from = 0;
  std::size_t to = 0;
};

// Circuit-structure invariants used to prune the bijection search.
struct MatroidProfile {
  std::size_t size = 0;
  std::size_t rank = 0;
  std::size_t loop_count = 0;
  std::vector<BitRow> circuits;
  // count of circuits of each size, indexed by size
  std::vector<std::uint32_t> circuit_sizes;
  // per element: count of circuits of each size containing it
  std::vector<std::vector<std::uint32_t>> element_degrees;

  explicit MatroidProfile(const Gf2Matrix& rep);
  explicit MatroidProfile(const BinaryMatroid& m) : MatroidProfile(m.rep()) {}

  bool compatible(const MatroidProfile& other) const;
};

// Searches bijections from a fixed source matroid onto targets. The source
// profile is computed once, so repeated matching (minor search) is cheap.
class IsomorphismMatcher {
 public:
  explicit IsomorphismMatcher(const BinaryMatroid& source);

  const MatroidProfile& profile() const { return profile_; }

  std::optional<ElementMap> match(const BinaryMatroid& target,
                                  std::span<const IndexPin> pins = {}) const;
  std::optional<ElementMap> match(const MatroidProfile& target,
                                  std::span<const IndexPin> pins = {}) const;

  // Calls visit for every isomorphism; stops early when visit returns false.
  void for_each(const MatroidProfile& target,
                const std::function<bool(const ElementMap&)>& visit) const;

 private:
  MatroidProfile profile_;
};

std::optional<ElementMap> find_isomorphism(const BinaryMatroid& a,
                                           const BinaryMatroid& b,
                                           std::span<const IndexPin> pins = {});
std::vector<ElementMap> all_isomorphisms(const BinaryMatroid& a,
                                         const BinaryMatroid& b);
inline bool is_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace binmat

#endif  // BINMAT_ISOMORPHISM_HPP_
