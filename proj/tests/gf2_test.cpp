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

#include "binmat/gf2.hpp"

#include <gtest/gtest.h>

#include <random>

#include "binmat/catalog.hpp"
#include "oracles.hpp"

namespace binmat {
namespace {

std::set<BitRow> as_set(const std::vector<BitRow>& v) {
  return {v.begin(), v.end()};
}

Gf2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                        std::size_t cols) {
  std::vector<BitRow> r;
  for (std::size_t i = 0; i < rows; ++i) r.push_back(rng() & low_bits(cols));
  return Gf2Matrix(cols, r);
}

TEST(Gf2Matrix, EmptyShapesAreValid) {
  const Gf2Matrix a(5);
  EXPECT_EQ(a.rows(), 0u);
  EXPECT_EQ(a.cols(), 5u);
  const Gf2Matrix b(0, std::vector<BitRow>(3, 0));
  EXPECT_EQ(b.rows(), 3u);
  EXPECT_EQ(rank(b), 0u);
}

TEST(Gf2Matrix, RejectsBitsOutsideWidth) {
  EXPECT_THROW(Gf2Matrix(2, {0b100}), Gf2Error);
  EXPECT_THROW(Gf2Matrix::from_strings(3, {"10"}), Gf2Error);
  EXPECT_THROW(Gf2Matrix::from_strings(2, {"1x"}), Gf2Error);
  EXPECT_THROW(Gf2Matrix(65), Gf2Error);
}

TEST(Gf2Matrix, RowStringIsLabelOrder) {
  const auto m = Gf2Matrix::from_strings(4, {"1100"});
  EXPECT_TRUE(m.at(0, 0));
  EXPECT_FALSE(m.at(0, 3));
  EXPECT_EQ(m.row_string(0), "1100");
  EXPECT_EQ(m.column(1), 1u);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Gf2Matrix::from_strings(3, {"000", "000"})), 0u);
  EXPECT_EQ(rank(Gf2Matrix::identity(3)), 3u);
  EXPECT_EQ(rank(Gf2Matrix::from_strings(6, {"111000", "110101", "100011"})),
            3u);
}

TEST(Rref, Examples) {
  EXPECT_EQ(rref(Gf2Matrix::from_strings(3, {"110", "110"})),
            Gf2Matrix::from_strings(3, {"110"}));
  EXPECT_EQ(rref(Gf2Matrix::identity(3)), Gf2Matrix::identity(3));
  EXPECT_EQ(rref(Gf2Matrix::from_strings(3, {"111"})),
            Gf2Matrix::from_strings(3, {"111"}));
}

TEST(RowSpaceContains, Examples) {
  const auto a = Gf2Matrix::from_strings(3, {"111"});
  EXPECT_TRUE(row_space_contains(a, 0b000));
  EXPECT_FALSE(row_space_contains(a, 0b011));
  EXPECT_THROW(row_space_contains(a, 0b1000), Gf2Error);
}

TEST(RowSpaceContains, MarkedTripleOfF1AgainstRowCombinations) {
  const auto& e = catalog_get("F_1");
  const Gf2Matrix& rep = e.matroid.rep();
  const BitRow v = e.matroid.element_set(e.marked).bits();
  bool found = false;
  for (BitRow combo = 0; combo < (BitRow{1} << rep.rows()); ++combo) {
    BitRow sum = 0;
    for (std::size_t i = 0; i < rep.rows(); ++i) {
      if ((combo >> i) & 1U) sum ^= rep.row(i);
    }
    found |= sum == v;
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(row_space_contains(rep, v));
}

TEST(NullSpaceMinSupports, Examples) {
  EXPECT_EQ(as_set(null_space_min_supports(Gf2Matrix::from_strings(3, {"111"}))),
            (std::set<BitRow>{0b011, 0b101, 0b110}));
  EXPECT_TRUE(null_space_min_supports(Gf2Matrix::identity(3)).empty());
  EXPECT_EQ(as_set(null_space_min_supports(Gf2Matrix::from_strings(2, {"10"}))),
            (std::set<BitRow>{0b10}));
  EXPECT_THROW(null_space_min_supports(Gf2Matrix(kMaxSupportColumns + 1)),
               Gf2Error);
}

TEST(Gf2Properties, RankInvariants) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = rng() % 7, cols = 1 + rng() % 12;
    const Gf2Matrix m = random_matrix(rng, rows, cols);
    const std::size_t r = rank(m);
    EXPECT_EQ(r, rank(rref(m)));
    EXPECT_LE(r, std::min(rows, cols));
    EXPECT_EQ(r, oracle::column_rank(oracle::to_bytes(m), [&] {
                std::vector<std::size_t> all(cols);
                std::iota(all.begin(), all.end(), 0);
                return all;
              }()));
    const BitRow v = rng() & low_bits(cols);
    Gf2Matrix grown = m;
    grown.append_row(v);
    EXPECT_EQ(rank(grown), row_space_contains(m, v) ? r : r + 1);
  }
}

TEST(Gf2Properties, NullSpaceSupportsMatchBruteForce) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t rows = rng() % 6, cols = 1 + rng() % 12;
    const Gf2Matrix m = random_matrix(rng, rows, cols);
    EXPECT_EQ(as_set(null_space_min_supports(m)),
              oracle::circuits(oracle::to_bytes(m), cols));
  }
}

TEST(Gf2Properties, RowSpaceSupportsAreCocircuits) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = rng() % 5, cols = 1 + rng() % 9;
    const Gf2Matrix m = random_matrix(rng, rows, cols);
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < cols; ++j) labels.push_back("c" + std::to_string(j));
    const auto bm = BinaryMatroid::from_matrix(labels, m);
    EXPECT_EQ(as_set(row_space_min_supports(m)), oracle::cocircuits(bm));
  }
}

}  // namespace
}  // namespace binmat
