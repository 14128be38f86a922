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

#ifndef BINMAT_GRAPH_HPP_
#define BINMAT_GRAPH_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "binmat/matroid.hpp"

namespace binmat {

// Endpoints are 1-based; u == v is a loop.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::string label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Labeled multigraph. Loops and parallel edges are allowed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n_vertices) : n_vertices_(n_vertices) {}
  Graph(std::size_t n_vertices, std::vector<Edge> edges);

  Graph& add_edge(std::size_t u, std::size_t v, std::string label);

  std::size_t vertex_count() const { return n_vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t component_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_vertices_ = 0;
  std::vector<Edge> edges_;
};

// Cycle matroid: one row per vertex, each edge the incidence column.
BinaryMatroid cycle_matroid(const Graph& g);

}  // namespace binmat

#endif  // BINMAT_GRAPH_HPP_
