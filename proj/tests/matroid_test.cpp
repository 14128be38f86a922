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

#include <gtest/gtest.h>

#include <random>

#include "binmat/catalog.hpp"
#include "binmat/graph.hpp"
#include "binmat/isomorphism.hpp"
#include "binmat/minor.hpp"
#include "binmat/split_ops.hpp"
#include "oracles.hpp"

namespace binmat {
namespace {

BinaryMatroid g4() {
  return BinaryMatroid::from_matrix({"x", "y", "z"},
                                    Gf2Matrix::from_strings(3, {"111"}));
}

std::set<std::set<std::string>> named(const BinaryMatroid& m,
                                      const std::vector<ElementSet>& sets) {
  std::set<std::set<std::string>> out;
  for (auto s : sets) {
    auto l = m.labels_of(s);
    out.emplace(l.begin(), l.end());
  }
  return out;
}

TEST(FromMatrix, Examples) {
  EXPECT_EQ(g4().size(), 3u);
  const auto empty = BinaryMatroid::from_matrix({}, Gf2Matrix(0));
  EXPECT_EQ(empty.size(), 0u);
  EXPECT_EQ(empty.rank(), 0u);
  const auto loop = BinaryMatroid::from_matrix({"e"}, Gf2Matrix::from_strings(1, {"0"}));
  EXPECT_EQ(loops(loop), ElementSet::single(0));
}

TEST(FromMatrix, Errors) {
  EXPECT_THROW(BinaryMatroid::from_matrix({"x", "x"}, Gf2Matrix(2)), MatroidError);
  EXPECT_THROW(BinaryMatroid::from_matrix({"x"}, Gf2Matrix(2)), MatroidError);
  EXPECT_THROW(BinaryMatroid::from_matrix({""}, Gf2Matrix(1)), MatroidError);
  EXPECT_THROW(BinaryMatroid::from_matrix({"a b"}, Gf2Matrix(1)), MatroidError);
}

TEST(FromGraph, Examples) {
  const auto m = cycle_matroid(catalog_get("G_4").graph);
  EXPECT_TRUE(m.represented_equal(g4()));

  const auto one_loop = cycle_matroid(Graph(1).add_edge(1, 1, "l"));
  EXPECT_EQ(one_loop.rep().column(0), 0u);

  const auto tri = cycle_matroid(
      Graph(3).add_edge(1, 2, "a").add_edge(2, 3, "b").add_edge(1, 3, "c"));
  EXPECT_EQ(tri.rank(), 2u);
  EXPECT_EQ(oracle::circuits(tri), (std::set<std::uint64_t>{0b111}));
}

TEST(FromGraph, RankIsVerticesMinusComponents) {
  for (const auto& name : catalog_names()) {
    const auto& g = catalog_get(name).graph;
    EXPECT_EQ(cycle_matroid(g).rank(), g.vertex_count() - g.component_count())
        << name;
  }
  const Graph isolated = Graph(4).add_edge(1, 2, "a");
  EXPECT_EQ(cycle_matroid(isolated).rank(), 1u);
  EXPECT_EQ(isolated.component_count(), 3u);
}

TEST(FromGraph, CircuitsAreGraphCycles) {
  for (const auto& name : catalog_names()) {
    const auto& e = catalog_get(name);
    EXPECT_EQ(oracle::to_masks(circuits(e.matroid)), oracle::graph_cycles(e.graph))
        << name;
  }
}

TEST(Graph, RejectsBadEdges) {
  Graph g(2);
  EXPECT_THROW(g.add_edge(0, 1, "a"), MatroidError);
  EXPECT_THROW(g.add_edge(1, 3, "a"), MatroidError);
  g.add_edge(1, 2, "a");
  EXPECT_THROW(g.add_edge(1, 2, "a"), MatroidError);
}

TEST(SubsetRank, Examples) {
  const auto m = g4();
  EXPECT_EQ(m.subset_rank({"x"}), 1u);
  EXPECT_EQ(m.subset_rank({"x", "y", "z"}), 1u);
  EXPECT_EQ(m.subset_rank(ElementSet{}), 0u);
  EXPECT_THROW(m.subset_rank({"w"}), MatroidError);
}

TEST(SubsetRank, MonotoneAndSubmodularOnCatalog) {
  for (const auto& name : catalog_names()) {
    const auto& m = catalog_get(name).matroid;
    const BitRow n = BitRow{1} << m.size();
    std::vector<std::size_t> r(n);
    for (BitRow s = 0; s < n; ++s) r[s] = m.subset_rank(ElementSet(s));
    for (BitRow a = 0; a < n; ++a) {
      for (std::size_t e = 0; e < m.size(); ++e) {
        const BitRow b = a | (BitRow{1} << e);
        ASSERT_LE(r[a], r[b]) << name;
        ASSERT_LE(r[b], r[a] + 1) << name;
      }
      for (BitRow b = 0; b < n; b += 3) {
        ASSERT_LE(r[a | b] + r[a & b], r[a] + r[b]) << name;
      }
    }
  }
}

TEST(Circuits, Examples) {
  const auto m = g4();
  EXPECT_EQ(named(m, circuits(m)),
            (std::set<std::set<std::string>>{{"x", "y"}, {"x", "z"}, {"y", "z"}}));
  EXPECT_EQ(named(m, cocircuits(m)),
            (std::set<std::set<std::string>>{{"x", "y", "z"}}));
  const auto k4 = circuits(k4_matroid());
  EXPECT_EQ(k4.size(), 7u);
  EXPECT_EQ(std::count_if(k4.begin(), k4.end(), [](ElementSet s) { return s.size() == 3; }), 4);
  EXPECT_EQ(std::count_if(k4.begin(), k4.end(), [](ElementSet s) { return s.size() == 4; }), 3);
}

TEST(Structure, LoopsColoopsParallel) {
  const auto& q2 = catalog_get("Q_2").matroid;
  EXPECT_EQ(loops(q2).size(), 1u);
  ASSERT_EQ(parallel_classes(q2).size(), 1u);
  EXPECT_EQ(parallel_classes(q2)[0].size(), 4u);
  const auto& q3 = catalog_get("Q_3").matroid;
  EXPECT_EQ(loops(q3).size(), 2u);
  ASSERT_EQ(parallel_classes(q3).size(), 1u);
  EXPECT_EQ(parallel_classes(q3)[0].size(), 3u);
  const auto id = BinaryMatroid::from_matrix({"a", "b", "c"}, Gf2Matrix::identity(3));
  EXPECT_EQ(coloops(id), id.ground());
  EXPECT_TRUE(loops(id).empty());
}

TEST(Structure, ColoopsAreElementsInNoCircuit) {
  for (const auto& name : catalog_names()) {
    const auto& m = catalog_get(name).matroid;
    BitRow in_circuit = 0;
    for (auto c : oracle::circuits(m)) in_circuit |= c;
    EXPECT_EQ(coloops(m).bits(), m.ground().bits() & ~in_circuit) << name;
  }
}

TEST(DeleteContract, Examples) {
  const auto m = g4();
  const auto d = deletion(m, m.element_set({"z"}));
  EXPECT_EQ(d.labels(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(named(d, parallel_classes(d)), (std::set<std::set<std::string>>{{"x", "y"}}));
  const auto c = contraction(m, m.element_set({"x"}));
  EXPECT_EQ(c.labels(), (std::vector<std::string>{"y", "z"}));
  EXPECT_EQ(loops(c), c.ground());
  EXPECT_TRUE(contraction(m, ElementSet{}).represented_equal(m));
}

TEST(DeleteContract, RankOfContraction) {
  for (const auto& name : catalog_names()) {
    const auto& m = catalog_get(name).matroid;
    for (BitRow s = 0; s < (BitRow{1} << m.size()); ++s) {
      const ElementSet set(s);
      EXPECT_EQ(contraction(m, set).rank(), m.rank() - m.subset_rank(set));
    }
  }
}

TEST(Dual, Examples) {
  const auto m = g4();
  EXPECT_TRUE(is_isomorphic(dual(dual(m)), m));
  const auto d = dual(m);
  EXPECT_EQ(d.rank(), 2u);
  EXPECT_EQ(oracle::circuits(d), (std::set<std::uint64_t>{0b111}));
  EXPECT_EQ(oracle::to_masks(circuits(dual(k4_matroid()))),
            oracle::cocircuits(k4_matroid()));
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(is_isomorphic(catalog_get("Q_3").matroid, catalog_get("Q_4").matroid));
  EXPECT_TRUE(oracle::isomorphic(catalog_get("Q_3").matroid, catalog_get("Q_4").matroid));
  EXPECT_FALSE(is_isomorphic(g4(), k4_matroid()));
  const auto& k4 = k4_matroid();
  const auto shuffled = permuted(k4, {5, 3, 1, 0, 2, 4});
  const auto phi = find_isomorphism(k4, shuffled);
  ASSERT_TRUE(phi.has_value());
  const auto target = oracle::circuits(shuffled);
  for (auto c : oracle::circuits(k4)) EXPECT_TRUE(target.count(oracle::permute(c, *phi)));
}

TEST(Isomorphism, AgreesWithBruteForceOnCatalogPairs) {
  const auto names = catalog_names();
  for (const auto& a : names) {
    for (const auto& b : names) {
      const auto& ma = catalog_get(a).matroid;
      const auto& mb = catalog_get(b).matroid;
      EXPECT_EQ(is_isomorphic(ma, mb), oracle::isomorphic(ma, mb)) << a << " " << b;
    }
  }
}

TEST(Isomorphism, InvariantUnderRowOperationsAndColumnOrder) {
  std::mt19937_64 rng(21);
  for (const auto& name : catalog_names()) {
    const auto& m = catalog_get(name).matroid;
    EXPECT_TRUE(is_isomorphic(m, m)) << name;
    std::vector<BitRow> rows = m.rep().row_words();
    for (int k = 0; k < 10 && rows.size() > 1; ++k) {
      const auto i = rng() % rows.size(), j = rng() % rows.size();
      if (i != j) rows[i] ^= rows[j];
    }
    std::vector<std::size_t> order(m.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto mixed =
        permuted(BinaryMatroid::from_matrix(m.labels(), Gf2Matrix(m.size(), rows)), order);
    EXPECT_TRUE(is_isomorphic(m, mixed)) << name;
    EXPECT_TRUE(is_isomorphic(mixed, m)) << name;
  }
}

TEST(Minor, Examples) {
  const auto& k4 = k4_matroid();
  const auto self = find_minor(k4, k4);
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(self->deleted.empty());
  EXPECT_TRUE(self->contracted.empty());
  EXPECT_FALSE(find_minor(g4(), k4).has_value());
  const auto d = three_fold(g4(), ThreeFoldParams{"x", "y"});
  const auto w = find_minor(d, k4);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_witness(d, k4, *w));
}

TEST(Minor, PinsAreHonouredAndChecked) {
  const auto& f = catalog_get("F").matroid;
  const auto& g1 = catalog_get("G_1").matroid;
  const std::vector<LabelPin> pins{{"bottom", "e1"}};
  const auto w = find_minor(g1, f, pins);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_witness(g1, f, *w));
  EXPECT_NE(std::find(w->mapping.begin(), w->mapping.end(),
                      std::pair<std::string, std::string>{"bottom", "e1"}),
            w->mapping.end());
  // the loop b can never carry a non-loop
  EXPECT_FALSE(find_minor(g1, f, std::vector<LabelPin>{{"bottom", "b"}}).has_value());
  EXPECT_THROW(find_minor(g1, f, std::vector<LabelPin>{{"nope", "e1"}}), MatroidError);
  EXPECT_THROW(find_minor(g1, f, std::vector<LabelPin>{{"bottom", "nope"}}), MatroidError);
}

TEST(Minor, TieBreakPrefersFewestDeletions) {
  // M(G_4) inside Q_2: deleting the loop and one parallel element is the only
  // way, and the witness must not contract anything
  const auto w = find_minor(catalog_get("Q_2").matroid, catalog_get("G_4").matroid);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->deleted.size(), 2u);
  EXPECT_TRUE(w->contracted.empty());
}

TEST(Minor, AgreesWithNaiveSearchOnCatalog) {
  const std::vector<std::string> patterns{"G_4", "F", "Q_2", "Q_3"};
  for (const auto& host : catalog_names()) {
    for (const auto& pat : patterns) {
      const auto& h = catalog_get(host).matroid;
      const auto& p = catalog_get(pat).matroid;
      const auto w = find_minor(h, p);
      EXPECT_EQ(w.has_value(), oracle::has_minor(h, p)) << host << " " << pat;
      if (w) {
        EXPECT_TRUE(verify_witness(h, p, *w)) << host << " " << pat;
      }
    }
  }
}

TEST(Gammoid, Examples) {
  EXPECT_TRUE(is_binary_gammoid(g4()));
  EXPECT_FALSE(is_binary_gammoid(k4_matroid()));
  const auto d = three_fold(g4(), ThreeFoldParams{"x", "y"});
  EXPECT_FALSE(is_binary_gammoid(d));
  const auto w = gammoid_obstruction(d);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_witness(d, k4_matroid(), *w));
}

TEST(Witness, RejectsTamperedWitness) {
  const auto d = three_fold(g4(), ThreeFoldParams{"x", "y"});
  const auto w = *find_minor(d, k4_matroid());
  EXPECT_TRUE(verify_witness(d, k4_matroid(), w));
  MinorWitness bad = w;
  bad.deleted.push_back(bad.mapping.back().second);
  EXPECT_FALSE(verify_witness(d, k4_matroid(), bad));
}

}  // namespace
}  // namespace binmat
