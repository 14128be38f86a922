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

#include "binmat/enumerate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "binmat/minor.hpp"
#include "binmat/parallel.hpp"

namespace binmat {

std::vector<std::uint8_t> CanonicalKey::columns() const {
  std::vector<std::uint8_t> out;
  for (std::uint8_t v = 0; v < 16; ++v) {
    out.insert(out.end(), counts[v], v);
  }
  return out;
}

std::string CanonicalKey::to_string() const {
  std::ostringstream os;
  os << "r" << int{rank} << ":";
  const auto cols = columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    os << (i ? "," : "") << std::hex << int{cols[i]};
  }
  return os.str();
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const {
  // FNV-1a over rank, size and bins
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint8_t b) {
    h ^= b;
    h *= 1099511628211ULL;
  };
  mix(k.rank);
  mix(k.elements);
  for (auto b : k.counts) mix(b);
  return static_cast<std::size_t>(h);
}

const std::vector<kernels::Shuffle16>& gl4_shuffles() {
  static const std::vector<kernels::Shuffle16> table = [] {
    std::vector<kernels::Shuffle16> out;
    out.reserve(20160);
    // g is given by the images of e1..e4; g(w) is the XOR of the images of
    // the set bits of w. Enumeration starts at the identity.
    for (unsigned code = 0; code < 65536; ++code) {
      std::uint8_t img[4];
      for (int b = 0; b < 4; ++b) {
        img[b] = static_cast<std::uint8_t>(((code >> (4 * b)) + (1U << b)) & 15U);
      }
      if (rank_of_words({img[0], img[1], img[2], img[3]}, 15) != 4) continue;
      kernels::Shuffle16 s;
      for (unsigned w = 0; w < 16; ++w) {
        std::uint8_t v = 0;
        for (int b = 0; b < 4; ++b) {
          if (w & (1U << b)) v ^= img[b];
        }
        s[w] = v;
      }
      out.push_back(s);
    }
    return out;
  }();
  return table;
}

namespace {

std::size_t support_rank(const kernels::Histogram16& counts) {
  std::vector<BitRow> vals;
  for (unsigned v = 1; v < 16; ++v) {
    if (counts[v]) vals.push_back(v);
  }
  return rank_of_words(vals, 15);
}

}  // namespace

CanonicalKey canonical_key(const kernels::Histogram16& column_counts) {
  CanonicalKey key;
  unsigned total = 0;
  for (auto c : column_counts) total += c;
  if (total > kMaxColumns) throw EnumerateError("too many columns");
  key.elements = static_cast<std::uint8_t>(total);
  key.rank = static_cast<std::uint8_t>(support_rank(column_counts));
  key.counts = kernels::max_shuffle(column_counts, gl4_shuffles());
  return key;
}

CanonicalKey canonical_key(const BinaryMatroid& m) {
  const Gf2Matrix red = rref(m.rep());
  if (red.rows() > kMaxCanonicalRank) {
    throw EnumerateError("canonical keys need rank <= 4, got rank " +
                         std::to_string(red.rows()));
  }
  kernels::Histogram16 counts{};
  for (std::size_t j = 0; j < m.size(); ++j) ++counts[red.column(j)];
  return canonical_key(counts);
}

BinaryMatroid matroid_from_key(const CanonicalKey& key) {
  const auto cols = key.columns();
  std::vector<std::string> labels;
  std::vector<BitRow> rows(kMaxCanonicalRank, 0);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    labels.push_back("e" + std::to_string(j + 1));
    for (std::size_t i = 0; i < kMaxCanonicalRank; ++i) {
      if ((cols[j] >> i) & 1U) rows[i] |= BitRow{1} << j;
    }
  }
  return BinaryMatroid::from_matrix(
      std::move(labels), rref(Gf2Matrix(cols.size(), std::move(rows))));
}

Corpus enumerate_binary_matroids(std::size_t max_elements,
                                 std::size_t max_rank,
                                 const EnumerateOptions& options) {
  if (max_elements > kMaxCorpusElements) {
    throw EnumerateError("max_elements must be <= 9, got " +
                         std::to_string(max_elements));
  }
  if (max_rank > kMaxCanonicalRank) {
    throw EnumerateError("max_rank must be <= 4, got " +
                         std::to_string(max_rank));
  }
  Corpus corpus;
  corpus.max_elements = max_elements;
  corpus.max_rank = max_rank;
  corpus.loop_cap = options.loop_cap;

  // Every multiset of n+1 columns extends one of n columns, so growing each
  // class representative by every vector reaches all classes.
  std::vector<CanonicalKey> level{CanonicalKey{}};
  std::vector<CanonicalKey> all;
  for (std::size_t n = 1; n <= max_elements; ++n) {
    auto children = parallel_map<std::vector<CanonicalKey>>(
        level.size(), options.jobs, [&](std::size_t i) {
          std::vector<CanonicalKey> out;
          const CanonicalKey& parent = level[i];
          for (unsigned v = 0; v < 16; ++v) {
            if (v == 0 && parent.counts[0] >= options.loop_cap) continue;
            kernels::Histogram16 h = parent.counts;
            ++h[v];
            if (support_rank(h) > max_rank) continue;
            out.push_back(canonical_key(h));
          }
          return out;
        });
    std::set<CanonicalKey> next;
    for (auto& c : children) next.insert(c.begin(), c.end());
    level.assign(next.begin(), next.end());
    all.insert(all.end(), level.begin(), level.end());
  }

  auto flags = parallel_map<char>(all.size(), options.jobs, [&](std::size_t i) {
    return static_cast<char>(is_binary_gammoid(matroid_from_key(all[i])));
  });
  corpus.members.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    corpus.members.push_back({all[i], matroid_from_key(all[i]), flags[i] != 0});
  }
  return corpus;
}

Corpus gammoid_corpus(const Corpus& c) {
  Corpus out = c;
  out.members.clear();
  for (const auto& m : c.members) {
    if (m.is_gammoid) out.members.push_back(m);
  }
  return out;
}

Corpus restrict_corpus(const Corpus& c, std::size_t max_elements) {
  Corpus out = c;
  out.max_elements = std::min(c.max_elements, max_elements);
  out.members.clear();
  for (const auto& m : c.members) {
    if (m.matroid.size() <= max_elements) out.members.push_back(m);
  }
  return out;
}

}  // namespace binmat
