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

#include "binmat/graph.hpp"

#include <numeric>
#include <utility>

namespace binmat {

Graph::Graph(std::size_t n_vertices, std::vector<Edge> edges)
    : n_vertices_(n_vertices) {
  for (auto& e : edges) add_edge(e.u, e.v, std::move(e.label));
}

Graph& Graph::add_edge(std::size_t u, std::size_t v, std::string label) {
  if (u < 1 || u > n_vertices_ || v < 1 || v > n_vertices_) {
    throw MatroidError("edge '" + label + "' has endpoint outside [1, " +
                       std::to_string(n_vertices_) + "]");
  }
  validate_label(label);
  for (const auto& e : edges_) {
    if (e.label == label) throw MatroidError("duplicate edge label '" + label + "'");
  }
  edges_.push_back({u, v, std::move(label)});
  return *this;
}

std::size_t Graph::component_count() const {
  std::vector<std::size_t> parent(n_vertices_ + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = n_vertices_;
  for (const auto& e : edges_) {
    auto a = root(e.u), b = root(e.v);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

BinaryMatroid cycle_matroid(const Graph& g) {
  if (g.vertex_count() > kMaxRows) throw MatroidError("too many vertices");
  const std::size_t n = g.vertex_count();
  std::vector<std::string> labels;
  std::vector<BitRow> incidence(n, 0);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  const auto& edges = g.edges();
  for (std::size_t j = 0; j < edges.size(); ++j) {
    const auto& e = edges[j];
    labels.push_back(e.label);
    if (e.u == e.v) continue;
    incidence[e.u - 1] |= BitRow{1} << j;
    incidence[e.v - 1] |= BitRow{1} << j;
    const std::size_t a = find(e.u - 1), b = find(e.v - 1);
    parent[std::min(a, b)] = std::max(a, b);
  }
  // One vertex row per component is the sum of the others; drop the
  // highest-numbered vertex of each component.
  std::vector<BitRow> rows;
  for (std::size_t v = 0; v < n; ++v) {
    if (find(v) != v) rows.push_back(incidence[v]);
  }
  return BinaryMatroid::from_matrix(std::move(labels),
                                    Gf2Matrix(edges.size(), std::move(rows)));
}

}  // namespace binmat
