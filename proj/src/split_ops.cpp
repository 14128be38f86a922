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

#include "binmat/split_ops.hpp"

#include <set>

namespace binmat {

BinaryMatroid splitting(const BinaryMatroid& m, ElementSet t) {
  if (t.empty()) throw SplitError("splitting set is empty");
  if (!t.subset_of(m.ground())) throw SplitError("splitting set outside ground set");
  Gf2Matrix rep = m.rep();
  rep.append_row(t.bits());
  return BinaryMatroid::from_matrix(m.labels(), std::move(rep));
}

BinaryMatroid splitting(const BinaryMatroid& m,
                        const std::vector<std::string>& t) {
  return splitting(m, m.element_set(t));
}

BinaryMatroid element_splitting(const BinaryMatroid& m, ElementSet t,
                                const std::string& new_label) {
  if (m.find(new_label)) {
    throw SplitError("label '" + new_label + "' already in the ground set");
  }
  BinaryMatroid s = splitting(m, t);
  Gf2Matrix rep = s.rep();
  rep.append_column(BitRow{1} << (rep.rows() - 1));
  auto labels = s.labels();
  labels.push_back(new_label);
  return BinaryMatroid::from_matrix(std::move(labels), std::move(rep));
}

BinaryMatroid element_splitting(const BinaryMatroid& m,
                                const std::vector<std::string>& t,
                                const std::string& new_label) {
  return element_splitting(m, m.element_set(t), new_label);
}

bool in_larger_cocircuit(const BinaryMatroid& m, ElementSet t) {
  for (ElementSet c : cocircuits(m)) {
    if (t.subset_of(c) && c.size() > t.size()) return true;
  }
  return false;
}

namespace {

void check_fresh(const BinaryMatroid& m, const ThreeFoldParams& params) {
  std::set<std::string> fresh{params.p, params.q, params.r};
  if (fresh.size() != 3) throw SplitError("new labels p, q, r must be distinct");
  for (const auto& l : fresh) {
    if (m.find(l)) throw SplitError("new label '" + l + "' already in the ground set");
  }
}

}  // namespace

ThreeFoldStages three_fold_stages(const BinaryMatroid& m,
                                  const ThreeFoldParams& params) {
  if (params.x == params.y) throw SplitError("x and y must differ");
  const std::size_t x = m.index_of(params.x);
  const std::size_t y = m.index_of(params.y);
  check_fresh(m, params);
  if (!in_larger_cocircuit(m, ElementSet::single(x) | ElementSet::single(y))) {
    throw SplitError("{" + params.x + "," + params.y +
                     "} not a proper subset of any cocircuit");
  }
  BinaryMatroid with_loops = add_loops(m, {params.p, params.q, params.r});
  BinaryMatroid first =
      splitting(with_loops, {params.x, params.y, params.p, params.r});
  BinaryMatroid result = splitting(first, {params.x, params.q, params.r});
  return {std::move(with_loops), std::move(first), std::move(result)};
}

BinaryMatroid three_fold(const BinaryMatroid& m, const ThreeFoldParams& params) {
  return three_fold_stages(m, params).result;
}

BinaryMatroid three_fold_ghafari(const BinaryMatroid& m, ElementSet t,
                                 ElementSet t_prime, SecondStep mode,
                                 const ThreeFoldParams& labels) {
  check_fresh(m, labels);
  if (!in_larger_cocircuit(m, t)) {
    throw SplitError("T is not a proper subset of any cocircuit");
  }
  if (t_prime.empty() || !t_prime.subset_of(t) || t_prime == t) {
    throw SplitError("T' must be a nonempty proper subset of T");
  }
  // Indices of M survive unchanged as the first |E(M)| columns.
  BinaryMatroid first = element_splitting(m, t, labels.p);
  BinaryMatroid second;
  if (mode == SecondStep::kElementSplit) {
    second = element_splitting(first, t_prime, labels.q);
  } else {
    second = add_loops(splitting(first, t_prime), {labels.q});
  }
  Gf2Matrix rep = second.rep();
  const BitRow pq = rep.column(second.index_of(labels.p)) ^
                    rep.column(second.index_of(labels.q));
  rep.append_column(pq);
  auto all = second.labels();
  all.push_back(labels.r);
  return BinaryMatroid::from_matrix(std::move(all), std::move(rep));
}

std::vector<std::pair<std::size_t, std::size_t>> admissible_pairs(
    const BinaryMatroid& m) {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (ElementSet c : cocircuits(m)) {
    if (c.size() < 3) continue;
    const auto idx = c.indices();
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        pairs.emplace(idx[a], idx[b]);
      }
    }
  }
  return {pairs.begin(), pairs.end()};
}

}  // namespace binmat
