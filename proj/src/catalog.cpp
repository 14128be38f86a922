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

#include "binmat/catalog.hpp"

#include <algorithm>
#include <chrono>

#include "binmat/io.hpp"
#include "binmat/isomorphism.hpp"
#include "binmat/minor.hpp"
#include "binmat/split_ops.hpp"

namespace binmat {
namespace {

// Vertex 1 and 2 span the bottom side of every triangle; 3 is the apex.
Graph f_graph() {
  return Graph(3)
      .add_edge(1, 2, "bottom")
      .add_edge(1, 3, "left")
      .add_edge(1, 3, "left2")
      .add_edge(2, 3, "right")
      .add_edge(2, 3, "right2");
}

CatalogEntry make(std::string name, Graph g, std::vector<std::string> marked) {
  BinaryMatroid m = cycle_matroid(g);
  return {std::move(name), std::move(g), std::move(m), std::move(marked)};
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  out.push_back(make("K4",
                     Graph(4)
                         .add_edge(1, 2, "e12")
                         .add_edge(1, 3, "e13")
                         .add_edge(1, 4, "e14")
                         .add_edge(2, 3, "e23")
                         .add_edge(2, 4, "e24")
                         .add_edge(3, 4, "e34"),
                     {}));
  // G_1 and G_2 are F plus a loop b; x and c sit on the doubled sides.
  out.push_back(make("G_1",
                     Graph(3)
                         .add_edge(1, 2, "e1")
                         .add_edge(1, 3, "x")
                         .add_edge(1, 3, "e2")
                         .add_edge(2, 3, "c")
                         .add_edge(2, 3, "e3")
                         .add_edge(3, 3, "b"),
                     {"x", "b", "c"}));
  out.push_back(make("G_2",
                     Graph(3)
                         .add_edge(1, 2, "e1")
                         .add_edge(1, 3, "x")
                         .add_edge(1, 3, "e2")
                         .add_edge(2, 3, "c")
                         .add_edge(2, 3, "e3")
                         .add_edge(1, 1, "b"),
                     {"x", "b", "c"}));
  out.push_back(make("G_3",
                     Graph(3)
                         .add_edge(1, 3, "x")
                         .add_edge(1, 3, "e1")
                         .add_edge(2, 3, "b")
                         .add_edge(2, 3, "e2")
                         .add_edge(1, 2, "c")
                         .add_edge(1, 2, "e3"),
                     {"x", "b", "c"}));
  out.push_back(make("G_4",
                     Graph(2).add_edge(1, 2, "x").add_edge(1, 2, "y").add_edge(
                         1, 2, "z"),
                     {"x", "y"}));
  out.push_back(make("F", f_graph(), {}));
  out.push_back(make("Q_1", f_graph(), {}));
  out.push_back(make("Q_2",
                     Graph(2)
                         .add_edge(1, 2, "a1")
                         .add_edge(1, 2, "a2")
                         .add_edge(1, 2, "a3")
                         .add_edge(1, 2, "a4")
                         .add_edge(2, 2, "l1"),
                     {}));
  out.push_back(make("Q_3",
                     Graph(2)
                         .add_edge(1, 2, "a1")
                         .add_edge(1, 2, "a2")
                         .add_edge(1, 2, "a3")
                         .add_edge(2, 2, "l1")
                         .add_edge(2, 2, "l2"),
                     {}));
  out.push_back(make("Q_4",
                     Graph(2)
                         .add_edge(1, 2, "a1")
                         .add_edge(1, 2, "a2")
                         .add_edge(1, 2, "a3")
                         .add_edge(1, 1, "l1")
                         .add_edge(2, 2, "l2"),
                     {}));
  // F_1 marks the three edges at vertex 2.
  out.push_back(make("F_1",
                     Graph(3)
                         .add_edge(1, 2, "x")
                         .add_edge(1, 3, "left")
                         .add_edge(1, 3, "left2")
                         .add_edge(2, 3, "y")
                         .add_edge(2, 3, "z"),
                     {"x", "y", "z"}));
  out.push_back(make("F_2",
                     Graph(2)
                         .add_edge(1, 2, "x")
                         .add_edge(1, 2, "y")
                         .add_edge(1, 2, "a3")
                         .add_edge(1, 2, "a4")
                         .add_edge(2, 2, "z"),
                     {"x", "y", "z"}));
  out.push_back(make("F_3",
                     Graph(2)
                         .add_edge(1, 2, "x")
                         .add_edge(1, 2, "a2")
                         .add_edge(1, 2, "a3")
                         .add_edge(2, 2, "y")
                         .add_edge(2, 2, "z"),
                     {"x", "y", "z"}));
  out.push_back(make("F_4",
                     Graph(2)
                         .add_edge(1, 1, "x")
                         .add_edge(1, 2, "y")
                         .add_edge(1, 2, "a2")
                         .add_edge(1, 2, "a3")
                         .add_edge(2, 2, "z"),
                     {"x", "y", "z"}));
  return out;
}

const std::vector<CatalogEntry>& raw_entries() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const BinaryMatroid& raw(std::string_view name) {
  for (const auto& e : raw_entries()) {
    if (e.name == name) return e.matroid;
  }
  throw CatalogError("unknown catalog entry '" + std::string(name) + "'");
}

const CatalogEntry& raw_entry(std::string_view name) {
  for (const auto& e : raw_entries()) {
    if (e.name == name) return e;
  }
  throw CatalogError("unknown catalog entry '" + std::string(name) + "'");
}

std::vector<std::size_t> class_sizes(const BinaryMatroid& m) {
  std::vector<std::size_t> out;
  for (auto c : parallel_classes(m)) out.push_back(c.size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::string sizes_string(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? "," : "") + std::to_string(v[i]);
  }
  return s + "}";
}

class Checker {
 public:
  explicit Checker(VerificationReport& r) : report_(r) {}

  void expect(const std::string& entry, const std::string& fact, bool ok,
              const std::string& got = "false") {
    ++report_.cases;
    if (ok) return;
    const BinaryMatroid* m = nullptr;
    for (const auto& e : raw_entries()) {
      if (e.name == entry) m = &e.matroid;
    }
    report_.failures.push_back(
        {m ? format_matroid(*m) : std::string(), entry, fact, got});
  }

 private:
  VerificationReport& report_;
};

}  // namespace

VerificationReport validate_catalog() {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.check = "catalog";
  report.universe = std::to_string(raw_entries().size()) + " catalog entries";
  Checker c(report);

  const BinaryMatroid& k4 = raw("K4");
  const BinaryMatroid& f = raw("F");

  c.expect("K4", "6 elements, rank 3, 7 circuits",
           k4.size() == 6 && k4.rank() == 3 && circuits(k4).size() == 7);
  c.expect("K4", "is not a gammoid", !is_binary_gammoid(k4));

  const BinaryMatroid& g4 = raw("G_4");
  const auto g4_cocircuits = cocircuits(g4);
  c.expect("G_4", "rank 1 with the single cocircuit {x,y,z}",
           g4.rank() == 1 && g4_cocircuits.size() == 1 &&
               g4_cocircuits[0] == g4.ground());

  c.expect("F", "rank 2 and 5 elements", f.rank() == 2 && f.size() == 5,
           "rank " + std::to_string(f.rank()) + ", " +
               std::to_string(f.size()) + " elements");
  c.expect("F", "parallel classes {2,2,1}",
           class_sizes(f) == std::vector<std::size_t>{2, 2, 1},
           sizes_string(class_sizes(f)));
  c.expect("F", "is a gammoid", is_binary_gammoid(f));

  for (const char* name : {"G_1", "G_2", "G_3"}) {
    const auto& e = raw_entry(name);
    const BinaryMatroid split = splitting(e.matroid, e.marked);
    c.expect(name, "splitting on the marked triple is isomorphic to M(K4)",
             is_isomorphic(split, k4));
    c.expect(name, "deleting the second mark is isomorphic to M(F)",
             is_isomorphic(
                 deletion(e.matroid, e.matroid.element_set({e.marked[1]})), f));
    c.expect(name, "is a gammoid", is_binary_gammoid(e.matroid));
  }

  c.expect("Q_1", "is isomorphic to M(F)", is_isomorphic(raw("Q_1"), f));
  const BinaryMatroid& q2 = raw("Q_2");
  c.expect("Q_2", "four parallel elements and one loop",
           loops(q2).size() == 1 &&
               class_sizes(q2) == std::vector<std::size_t>{4});
  for (const char* name : {"Q_3", "Q_4"}) {
    const BinaryMatroid& q = raw(name);
    c.expect(name, "three parallel elements and two loops",
             loops(q).size() == 2 &&
                 class_sizes(q) == std::vector<std::size_t>{3});
  }

  const char* quotients[] = {"Q_1", "Q_2", "Q_3", "Q_4"};
  for (int i = 0; i < 4; ++i) {
    const std::string name = "F_" + std::to_string(i + 1);
    const auto& e = raw_entry(name);
    c.expect(name, std::string("is isomorphic to M(") + quotients[i] + ")",
             is_isomorphic(e.matroid, raw(quotients[i])));
    c.expect(name, "splitting on the marked triple is isomorphic to M(F)",
             is_isomorphic(splitting(e.matroid, e.marked), f));
  }
  const auto& f1 = raw_entry("F_1");
  c.expect("F_1", "marked triple lies in the row space (trivial splitting)",
           row_space_contains(f1.matroid.rep(),
                              f1.matroid.element_set(f1.marked).bits()));

  // The decode places loops differently, which the matroids cannot see.
  const bool g12 = is_isomorphic(raw("G_1"), raw("G_2"));
  const bool q34 = is_isomorphic(raw("Q_3"), raw("Q_4"));
  c.expect("G_2", "isomorphic to M(G_1)", g12);
  c.expect("Q_4", "isomorphic to M(Q_3)", q34);
  report.note("decode: M(G_1) ~ M(G_2)", g12 ? "isomorphic" : "not isomorphic");
  report.note("decode: M(Q_3) ~ M(Q_4)", q34 ? "isomorphic" : "not isomorphic");

  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

const CatalogEntry& catalog_get(std::string_view name) {
  static const bool valid = [] {
    const auto r = validate_catalog();
    if (!r.passed()) {
      throw std::logic_error("catalog failed validation:\n" + format_report(r));
    }
    return true;
  }();
  (void)valid;
  const std::string key = name == "K_4" ? std::string("K4") : std::string(name);
  return raw_entry(key);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : raw_entries()) out.push_back(e.name);
  return out;
}

}  // namespace binmat
