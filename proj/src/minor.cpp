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

#include "binmat/minor.hpp"

#include <algorithm>
#include <set>

#include "binmat/graph.hpp"

namespace binmat {
namespace {

BitRow deposit_bits(BitRow packed, const std::vector<std::size_t>& positions) {
  BitRow out = 0;
  for (std::size_t k = 0; packed != 0; ++k, packed >>= 1) {
    if (packed & 1U) out |= BitRow{1} << positions[k];
  }
  return out;
}

// k-subsets of `pool` in increasing bitmask order (Gosper's hack over the
// compressed positions). Returns false if fn asked to stop.
template <typename Fn>
bool for_each_subset(ElementSet pool, std::size_t k, Fn&& fn) {
  const auto positions = pool.indices();
  const std::size_t m = positions.size();
  if (k > m) return true;
  if (k == 0) return fn(ElementSet{});
  BitRow s = low_bits(k);
  const BitRow limit = m >= 64 ? 0 : BitRow{1} << m;
  while (true) {
    if (!fn(ElementSet(deposit_bits(s, positions)))) return false;
    const BitRow c = s & (~s + 1);
    const BitRow r = s + c;
    if (r == 0) break;  // wrapped: all 64-bit subsets done
    s = (((r ^ s) >> 2) / c) | r;
    if (limit != 0 && s >= limit) break;
  }
  return true;
}

// Row words of host / C with the surviving columns packed.
Gf2Matrix minor_rep(const Gf2Matrix& rep, ElementSet contracted,
                    ElementSet keep) {
  std::vector<BitRow> rows = rep.row_words();
  for (auto c : contracted.indices()) {
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
  for (auto& r : rows) r = compress_bits(r, keep.bits());
  return Gf2Matrix(keep.size(), std::move(rows));
}

// Calls fn(D, C, keep, minor) for every candidate pair whose minor has the
// pattern's size and rank. `reserved` elements never enter D or C.
template <typename Fn>
void for_each_candidate(const BinaryMatroid& host, std::size_t pattern_size,
                        std::size_t pattern_rank, ElementSet reserved,
                        Fn&& fn) {
  const std::size_t n = host.size();
  const std::size_t r = host.rank();
  if (pattern_size > n || pattern_rank > r) return;
  const std::size_t c = r - pattern_rank;
  if (n - pattern_size < c) return;
  const std::size_t d = n - pattern_size - c;
  const ElementSet ground = host.ground();
  const ElementSet pool = ground - reserved;
  for_each_subset(pool, d, [&](ElementSet del) {
    if (host.subset_rank(ground - del) != r) return true;
    return for_each_subset(pool - del, c, [&](ElementSet con) {
      if (host.subset_rank(con) != c) return true;
      const ElementSet keep = ground - del - con;
      return fn(del, con, keep, minor_rep(host.rep(), con, keep));
    });
  });
}

std::size_t position_in(ElementSet keep, std::size_t host_index) {
  return static_cast<std::size_t>(
      std::popcount(keep.bits() & low_bits(host_index)));
}

}  // namespace

MinorSearcher::MinorSearcher(BinaryMatroid pattern)
    : pattern_(std::move(pattern)), matcher_(pattern_) {}

std::optional<MinorWitness> MinorSearcher::find(
    const BinaryMatroid& host, std::span<const LabelPin> pins) const {
  std::vector<IndexPin> index_pins;  // pattern index -> host index
  ElementSet reserved;
  for (const auto& p : pins) {
    auto pi = pattern_.find(p.pattern);
    if (!pi) throw MatroidError("pin names unknown pattern label '" + p.pattern + "'");
    auto hi = host.find(p.host);
    if (!hi) throw MatroidError("pin names unknown host label '" + p.host + "'");
    index_pins.push_back({*pi, *hi});
    reserved = reserved | ElementSet::single(*hi);
  }

  std::optional<MinorWitness> found;
  for_each_candidate(
      host, pattern_.size(), matcher_.profile().rank, reserved,
      [&](ElementSet del, ElementSet con, ElementSet keep,
          const Gf2Matrix& rep) {
        std::vector<IndexPin> local;
        for (const auto& p : index_pins) {
          local.push_back({p.from, position_in(keep, p.to)});
        }
        auto map = matcher_.match(MatroidProfile(rep), local);
        if (!map) return true;
        const auto survivors = keep.indices();
        MinorWitness w;
        w.deleted = host.labels_of(del);
        w.contracted = host.labels_of(con);
        for (std::size_t i = 0; i < map->size(); ++i) {
          w.mapping.emplace_back(pattern_.label(i),
                                 host.label(survivors[(*map)[i]]));
        }
        found = std::move(w);
        return false;
      });
  return found;
}

void MinorSearcher::for_each_embedding(
    const BinaryMatroid& host,
    const std::function<bool(const MinorEmbedding&)>& visit) const {
  for_each_candidate(
      host, pattern_.size(), matcher_.profile().rank, ElementSet{},
      [&](ElementSet del, ElementSet con, ElementSet keep,
          const Gf2Matrix& rep) {
        const auto survivors = keep.indices();
        bool keep_going = true;
        matcher_.for_each(MatroidProfile(rep), [&](const ElementMap& map) {
          MinorEmbedding e{del, con, ElementMap(map.size())};
          for (std::size_t i = 0; i < map.size(); ++i) {
            e.pattern_to_host[i] = survivors[map[i]];
          }
          keep_going = visit(e);
          return keep_going;
        });
        return keep_going;
      });
}

std::optional<MinorWitness> find_minor(const BinaryMatroid& host,
                                       const BinaryMatroid& pattern,
                                       std::span<const LabelPin> pins) {
  return MinorSearcher(pattern).find(host, pins);
}

bool verify_witness(const BinaryMatroid& host, const BinaryMatroid& pattern,
                    const MinorWitness& witness) {
  try {
    const ElementSet del = host.element_set(witness.deleted);
    const ElementSet con = host.element_set(witness.contracted);
    if (del.intersects(con) || del.size() != witness.deleted.size() ||
        con.size() != witness.contracted.size()) {
      return false;
    }
    const BinaryMatroid m = minor(host, del, con);
    if (m.size() != pattern.size() ||
        witness.mapping.size() != pattern.size()) {
      return false;
    }
    // order[i] = position in the minor of the image of pattern element i
    std::vector<std::size_t> order(pattern.size());
    std::set<std::size_t> seen_pattern, seen_host;
    for (const auto& [pl, hl] : witness.mapping) {
      const std::size_t pi = pattern.index_of(pl);
      const std::size_t mi = m.index_of(hl);
      if (!seen_pattern.insert(pi).second || !seen_host.insert(mi).second) {
        return false;
      }
      order[pi] = mi;
    }
    auto pc = circuits(pattern);
    auto mc = circuits(m);
    std::vector<BitRow> image;
    for (ElementSet c : pc) {
      BitRow b = 0;
      for (auto i : c.indices()) b |= BitRow{1} << order[i];
      image.push_back(b);
    }
    std::vector<BitRow> target;
    for (ElementSet c : mc) target.push_back(c.bits());
    std::sort(image.begin(), image.end());
    std::sort(target.begin(), target.end());
    return image == target;
  } catch (const MatroidError&) {
    return false;
  }
}

const BinaryMatroid& k4_matroid() {
  static const BinaryMatroid k4 = cycle_matroid(Graph(4)
                                                    .add_edge(1, 2, "e12")
                                                    .add_edge(1, 3, "e13")
                                                    .add_edge(1, 4, "e14")
                                                    .add_edge(2, 3, "e23")
                                                    .add_edge(2, 4, "e24")
                                                    .add_edge(3, 4, "e34"));
  return k4;
}

std::optional<MinorWitness> gammoid_obstruction(const BinaryMatroid& m) {
  static const MinorSearcher searcher(k4_matroid());
  return searcher.find(m);
}

bool is_binary_gammoid(const BinaryMatroid& m) {
  return !gammoid_obstruction(m).has_value();
}

}  // namespace binmat
