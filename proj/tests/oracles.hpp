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

// Slow, independent reference implementations for tests. None of these use
// the library's elimination, circuit or isomorphism code: matrices are
// plain vectors of 0/1 bytes.

#ifndef BINMAT_TESTS_ORACLES_HPP_
#define BINMAT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "binmat/graph.hpp"
#include "binmat/matroid.hpp"

namespace oracle {

using Bytes = std::vector<std::vector<std::uint8_t>>;  // [row][col]

inline Bytes to_bytes(const binmat::Gf2Matrix& m) {
  Bytes out(m.rows(), std::vector<std::uint8_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
  }
  return out;
}

// Rank of the columns in `cols` by schoolbook elimination.
inline std::size_t column_rank(const Bytes& a, const std::vector<std::size_t>& cols) {
  Bytes m;
  for (const auto& row : a) {
    std::vector<std::uint8_t> r;
    for (auto c : cols) r.push_back(row[c]);
    m.push_back(r);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size() && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && !m[p][c]) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != rank && m[i][c]) {
        for (std::size_t k = 0; k < cols.size(); ++k) m[i][k] ^= m[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::size_t> members(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i) {
    if ((mask >> i) & 1U) out.push_back(i);
  }
  return out;
}

inline std::size_t subset_rank(const Bytes& a, std::uint64_t mask) {
  return column_rank(a, members(mask));
}

// Minimal dependent sets by checking every subset.
inline std::set<std::uint64_t> circuits(const Bytes& a, std::size_t n) {
  std::vector<std::uint64_t> dependent;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    if (subset_rank(a, s) < static_cast<std::size_t>(std::popcount(s))) {
      dependent.push_back(s);
    }
  }
  std::set<std::uint64_t> out;
  for (auto s : dependent) {
    bool minimal = true;
    for (auto t : dependent) {
      if (t != s && (t & ~s) == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(s);
  }
  return out;
}

inline std::set<std::uint64_t> circuits(const binmat::BinaryMatroid& m) {
  return oracle::circuits(to_bytes(m.rep()), m.size());
}

// Cocircuits: minimal sets meeting every basis, i.e. minimal S with
// r(E - S) < r(E).
inline std::set<std::uint64_t> cocircuits(const binmat::BinaryMatroid& m) {
  const Bytes a = to_bytes(m.rep());
  const std::size_t n = m.size();
  const std::uint64_t all = n == 64 ? ~0ULL : (std::uint64_t{1} << n) - 1;
  const std::size_t r = subset_rank(a, all);
  std::vector<std::uint64_t> hit;
  for (std::uint64_t s = 1; s <= all; ++s) {
    if (subset_rank(a, all & ~s) < r) hit.push_back(s);
  }
  std::set<std::uint64_t> out;
  for (auto s : hit) {
    bool minimal = std::none_of(hit.begin(), hit.end(), [&](std::uint64_t t) {
      return t != s && (t & ~s) == 0;
    });
    if (minimal) out.insert(s);
  }
  return out;
}

inline std::set<std::uint64_t> to_masks(const std::vector<binmat::ElementSet>& v) {
  std::set<std::uint64_t> out;
  for (auto e : v) out.insert(e.bits());
  return out;
}

inline std::uint64_t permute(std::uint64_t s, const std::vector<std::size_t>& p) {
  std::uint64_t out = 0;
  for (auto i : members(s)) out |= std::uint64_t{1} << p[i];
  return out;
}

// Tries every bijection. Only for small ground sets.
inline bool isomorphic(const binmat::BinaryMatroid& a,
                       const binmat::BinaryMatroid& b) {
  if (a.size() != b.size()) return false;
  const auto ca = oracle::circuits(a);
  const auto cb = oracle::circuits(b);
  if (ca.size() != cb.size()) return false;
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (auto c : ca) {
      if (!cb.count(permute(c, p))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Edge sets of cycles: nonempty edge sets where every vertex has even
// degree (loops count 2), connected, and minimal under that property.
inline std::set<std::uint64_t> graph_cycles(const binmat::Graph& g) {
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  auto even = [&](std::uint64_t s) {
    std::vector<int> deg(g.vertex_count() + 1, 0);
    for (auto i : members(s)) {
      deg[edges[i].u] += 1;
      deg[edges[i].v] += 1;
    }
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
  };
  std::vector<std::uint64_t> eulerian;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
    if (even(s)) eulerian.push_back(s);
  }
  std::set<std::uint64_t> out;
  for (auto s : eulerian) {
    bool minimal = std::none_of(eulerian.begin(), eulerian.end(), [&](std::uint64_t t) {
      return t != s && (t & ~s) == 0;
    });
    if (minimal) out.insert(s);
  }
  return out;
}

// Naive minor test: every disjoint (D, C), contract by explicit elimination
// of one column at a time, then brute-force isomorphism.
inline bool has_minor(const binmat::BinaryMatroid& host,
                      const binmat::BinaryMatroid& pattern) {
  const std::size_t n = host.size();
  if (pattern.size() > n) return false;
  std::vector<std::size_t> assign(n, 0);  // 0 keep, 1 delete, 2 contract
  const Bytes a = to_bytes(host.rep());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    std::size_t kept = 0;
    for (std::size_t i = 0; i < n; ++i) {
      assign[i] = c % 3;
      c /= 3;
      kept += assign[i] == 0;
    }
    if (kept != pattern.size()) continue;
    Bytes m = a;
    for (std::size_t j = 0; j < n; ++j) {
      if (assign[j] != 2) continue;
      std::size_t p = 0;
      while (p < m.size() && !m[p][j]) ++p;
      if (p == m.size()) continue;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i != p && m[i][j]) {
          for (std::size_t k = 0; k < n; ++k) m[i][k] ^= m[p][k];
        }
      }
      m.erase(m.begin() + static_cast<long>(p));
    }
    std::vector<std::string> labels;
    std::vector<std::string> rows(m.size());
    for (std::size_t j = 0; j < n; ++j) {
      if (assign[j] != 0) continue;
      labels.push_back("k" + std::to_string(j));
      for (std::size_t i = 0; i < m.size(); ++i) rows[i] += m[i][j] ? '1' : '0';
    }
    const auto minor = binmat::BinaryMatroid::from_matrix(
        labels, binmat::Gf2Matrix::from_strings(labels.size(), rows));
    if (isomorphic(minor, pattern)) return true;
  }
  return false;
}

}  // namespace oracle

#endif  // BINMAT_TESTS_ORACLES_HPP_
