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

#ifndef BINMAT_MATROID_HPP_
#define BINMAT_MATROID_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "binmat/gf2.hpp"

namespace binmat {

class MatroidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A subset of a matroid's ground set, addressed by column index.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(BitRow bits) : bits_(bits) {}

  static constexpr ElementSet single(std::size_t i) {
    return ElementSet(BitRow{1} << i);
  }
  static constexpr ElementSet first(std::size_t n) {
    return ElementSet(low_bits(n));
  }

  constexpr BitRow bits() const { return bits_; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(ElementSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool intersects(ElementSet o) const {
    return (bits_ & o.bits_) != 0;
  }

  std::vector<std::size_t> indices() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;

 private:
  BitRow bits_ = 0;
};

// A binary matroid: the column matroid of `rep`, with one label per column.
class BinaryMatroid {
 public:
  BinaryMatroid() = default;

  // Throws MatroidError on duplicate, empty or whitespace-bearing labels and
  // on a label/column count mismatch.
  static BinaryMatroid from_matrix(std::vector<std::string> labels,
                                   Gf2Matrix rep);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const Gf2Matrix& rep() const { return rep_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t rank() const { return binmat::rank(rep_); }
  ElementSet ground() const { return ElementSet::first(size()); }

  std::optional<std::size_t> find(std::string_view label) const;
  std::size_t index_of(std::string_view label) const;
  ElementSet element_set(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(ElementSet s) const;

  std::size_t subset_rank(ElementSet s) const;
  std::size_t subset_rank(const std::vector<std::string>& labels) const {
    return subset_rank(element_set(labels));
  }

  // Same labels in the same order and the same row space.
  bool represented_equal(const BinaryMatroid& other) const;

 private:
  std::vector<std::string> labels_;
  Gf2Matrix rep_;
};

void validate_label(std::string_view label);

// All k-subsets of pool, in increasing bitmask order.
std::vector<ElementSet> subsets_of_size(ElementSet pool, std::size_t k);

std::vector<ElementSet> circuits(const BinaryMatroid& m);
std::vector<ElementSet> cocircuits(const BinaryMatroid& m);
ElementSet loops(const BinaryMatroid& m);
ElementSet coloops(const BinaryMatroid& m);
// Classes of equal nonzero columns, ordered by smallest member.
std::vector<ElementSet> parallel_classes(const BinaryMatroid& m);

BinaryMatroid deletion(const BinaryMatroid& m, ElementSet s);
// Pivots out each nonloop of `s` in index order; loops of `s` are dropped.
BinaryMatroid contraction(const BinaryMatroid& m, ElementSet s);
BinaryMatroid minor(const BinaryMatroid& m, ElementSet deleted,
                    ElementSet contracted);
BinaryMatroid dual(const BinaryMatroid& m);

// M ∪ {labels}: appends one zero column per label.
BinaryMatroid add_loops(const BinaryMatroid& m,
                        const std::vector<std::string>& labels);

// Representation in reduced form: rref(rep) with the same labels.
BinaryMatroid reduced(const BinaryMatroid& m);

// Same matroid with the ground set reordered; column i of the result is
// column order[i] of `m`.
BinaryMatroid permuted(const BinaryMatroid& m,
                       const std::vector<std::size_t>& order);

}  // namespace binmat

#endif  // BINMAT_MATROID_HPP_
