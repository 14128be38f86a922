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

// Named graphs used by the theorem checks, with their marked elements.
//
//   K4        complete graph on 4 vertices
//   G_1..G_3  forbidden minors for 3-element splitting; marks (x, b, c)
//   G_4       three parallel edges x, y, z; marks (x, y)
//   F         triangle with the left and right sides doubled
//   Q_1..Q_4  quotients of M(F); Q_1 is F
//   F_1..F_4  Q_1..Q_4 with a marked triple (x, y, z)

#ifndef BINMAT_CATALOG_HPP_
#define BINMAT_CATALOG_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "binmat/graph.hpp"
#include "binmat/matroid.hpp"
#include "binmat/report.hpp"

namespace binmat {

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CatalogEntry {
  std::string name;
  Graph graph;
  BinaryMatroid matroid;
  std::vector<std::string> marked;
};

// Throws CatalogError for unknown names, and std::logic_error if the
// catalog fails its own validation.
const CatalogEntry& catalog_get(std::string_view name);
std::vector<std::string> catalog_names();

// Checks every entry against the facts it was decoded from. Does not throw.
VerificationReport validate_catalog();

}  // namespace binmat

#endif  // BINMAT_CATALOG_HPP_
