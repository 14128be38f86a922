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

#include "binmat/matroid.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>
#include <utility>

namespace binmat {

std::vector<std::size_t> ElementSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (BitRow b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

std::vector<ElementSet> subsets_of_size(ElementSet pool, std::size_t k) {
  std::vector<ElementSet> out;
  const auto idx = pool.indices();
  if (k > idx.size()) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    BitRow bits = 0;
    for (auto p : pick) bits |= BitRow{1} << idx[p];
    out.emplace_back(bits);
    // next combination in colex order, which is increasing bitmask order
    std::size_t i = 0;
    while (i < k && (i + 1 < k ? pick[i] + 1 == pick[i + 1]
                               : pick[i] + 1 == idx.size())) {
      ++i;
    }
    if (i == k) break;
    ++pick[i];
    for (std::size_t j = 0; j < i; ++j) pick[j] = j;
  }
  return out;
}

void validate_label(std::string_view label) {
  if (label.empty()) throw MatroidError("empty element label");
  for (char c : label) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      throw MatroidError("label '" + std::string(label) +
                         "' contains whitespace");
    }
  }
}

BinaryMatroid BinaryMatroid::from_matrix(std::vector<std::string> labels,
                                         Gf2Matrix rep) {
  if (labels.size() != rep.cols()) {
    throw MatroidError("got " + std::to_string(labels.size()) +
                       " labels for " + std::to_string(rep.cols()) +
                       " columns");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    validate_label(l);
    if (!seen.insert(l).second) {
      throw MatroidError("duplicate label '" + l + "'");
    }
  }
  BinaryMatroid m;
  m.labels_ = std::move(labels);
  m.rep_ = std::move(rep);
  return m;
}

std::optional<std::size_t> BinaryMatroid::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t BinaryMatroid::index_of(std::string_view label) const {
  auto i = find(label);
  if (!i) throw MatroidError("unknown label '" + std::string(label) + "'");
  return *i;
}

ElementSet BinaryMatroid::element_set(
    const std::vector<std::string>& labels) const {
  ElementSet s;
  for (const auto& l : labels) s = s | ElementSet::single(index_of(l));
  return s;
}

std::vector<std::string> BinaryMatroid::labels_of(ElementSet s) const {
  std::vector<std::string> out;
  for (auto i : s.indices()) out.push_back(labels_.at(i));
  return out;
}

std::size_t BinaryMatroid::subset_rank(ElementSet s) const {
  if (!s.subset_of(ground())) throw MatroidError("subset outside ground set");
  return rank_of_words(rep_.row_words(), s.bits());
}

bool BinaryMatroid::represented_equal(const BinaryMatroid& other) const {
  return labels_ == other.labels_ && rref(rep_) == rref(other.rep_);
}

namespace {

std::vector<ElementSet> as_sets(const std::vector<BitRow>& masks) {
  std::vector<ElementSet> out;
  out.reserve(masks.size());
  for (BitRow b : masks) out.emplace_back(b);
  return out;
}

}  // namespace

std::vector<ElementSet> circuits(const BinaryMatroid& m) {
  return as_sets(null_space_min_supports(m.rep()));
}

std::vector<ElementSet> cocircuits(const BinaryMatroid& m) {
  return as_sets(row_space_min_supports(m.rep()));
}

ElementSet loops(const BinaryMatroid& m) {
  BitRow any = 0;
  for (BitRow r : m.rep().row_words()) any |= r;
  return m.ground() - ElementSet(any);
}

ElementSet coloops(const BinaryMatroid& m) {
  const std::size_t r = m.rank();
  ElementSet out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.subset_rank(m.ground() - ElementSet::single(i)) < r) {
      out = out | ElementSet::single(i);
    }
  }
  return out;
}

std::vector<ElementSet> parallel_classes(const BinaryMatroid& m) {
  std::vector<ElementSet> classes;
  std::vector<BitRow> reps;
  const Gf2Matrix red = rref(m.rep());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const BitRow c = red.column(i);
    if (c == 0) continue;
    auto it = std::find(reps.begin(), reps.end(), c);
    if (it == reps.end()) {
      reps.push_back(c);
      classes.push_back(ElementSet::single(i));
    } else {
      auto k = static_cast<std::size_t>(it - reps.begin());
      classes[k] = classes[k] | ElementSet::single(i);
    }
  }
  return classes;
}

BinaryMatroid deletion(const BinaryMatroid& m, ElementSet s) {
  if (!s.subset_of(m.ground())) throw MatroidError("subset outside ground set");
  const ElementSet keep = m.ground() - s;
  return BinaryMatroid::from_matrix(m.labels_of(keep),
                                    m.rep().select_columns(keep.bits()));
}

BinaryMatroid contraction(const BinaryMatroid& m, ElementSet s) {
  if (!s.subset_of(m.ground())) throw MatroidError("subset outside ground set");
  std::vector<BitRow> rows = m.rep().row_words();
  for (auto c : s.indices()) {
    const BitRow bit = BitRow{1} << c;
    auto piv = std::find_if(rows.begin(), rows.end(),
                            [bit](BitRow r) { return (r & bit) != 0; });
    if (piv == rows.end()) continue;
    const BitRow pr = *piv;
    for (auto& r : rows) {
      if (&r != &*piv && (r & bit)) r ^= pr;
    }
    rows.erase(piv);
  }
  const ElementSet keep = m.ground() - s;
  for (auto& r : rows) r = compress_bits(r, keep.bits());
  return BinaryMatroid::from_matrix(m.labels_of(keep),
                                    Gf2Matrix(keep.size(), std::move(rows)));
}

BinaryMatroid minor(const BinaryMatroid& m, ElementSet deleted,
                    ElementSet contracted) {
  if (deleted.intersects(contracted)) {
    throw MatroidError("deleted and contracted sets overlap");
  }
  // Contract first, then delete the survivors' images of `deleted`.
  BinaryMatroid c = contraction(m, contracted);
  ElementSet del_in_c;
  for (auto i : deleted.indices()) {
    del_in_c = del_in_c | ElementSet::single(c.index_of(m.label(i)));
  }
  return deletion(c, del_in_c);
}

BinaryMatroid dual(const BinaryMatroid& m) {
  const Gf2Matrix red = rref(m.rep());
  const auto piv = pivot_columns(red);
  BitRow pivot_mask = 0;
  for (auto p : piv) pivot_mask |= BitRow{1} << p;

  // One row per non-pivot column j: e_j plus the pivot columns of the rows
  // with a one in column j. This is [P^T | I] in unpermuted order.
  std::vector<BitRow> rows;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (pivot_mask & (BitRow{1} << j)) continue;
    BitRow v = BitRow{1} << j;
    for (std::size_t i = 0; i < red.rows(); ++i) {
      if (red.at(i, j)) v |= BitRow{1} << piv[i];
    }
    rows.push_back(v);
  }
  return BinaryMatroid::from_matrix(m.labels(),
                                    Gf2Matrix(m.size(), std::move(rows)));
}

BinaryMatroid add_loops(const BinaryMatroid& m,
                        const std::vector<std::string>& labels) {
  std::vector<std::string> all = m.labels();
  Gf2Matrix rep = m.rep();
  for (const auto& l : labels) {
    if (m.find(l)) throw MatroidError("label '" + l + "' already in use");
    all.push_back(l);
    rep.append_column(0);
  }
  return BinaryMatroid::from_matrix(std::move(all), std::move(rep));
}

BinaryMatroid reduced(const BinaryMatroid& m) {
  return BinaryMatroid::from_matrix(m.labels(), rref(m.rep()));
}

BinaryMatroid permuted(const BinaryMatroid& m,
                       const std::vector<std::size_t>& order) {
  if (order.size() != m.size()) throw MatroidError("bad permutation size");
  std::vector<std::string> labels;
  std::vector<BitRow> rows(m.rep().rows(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    labels.push_back(m.label(order[k]));
    const BitRow col = m.rep().column(order[k]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i] |= ((col >> i) & 1U) << k;
    }
  }
  return BinaryMatroid::from_matrix(std::move(labels),
                                    Gf2Matrix(m.size(), std::move(rows)));
}

}  // namespace binmat
