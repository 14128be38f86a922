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

#ifndef BINMAT_GF2_HPP_
#define BINMAT_GF2_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace binmat {

// One matrix row (or any vector over GF(2)) packed into a machine word.
// Bit j holds the entry of column j.
using BitRow = std::uint64_t;

inline constexpr std::size_t kMaxColumns = 64;
inline constexpr std::size_t kMaxRows = 64;

// Widest matrix for which minimal supports are enumerated; the enumeration
// walks 2^(dimension) vectors.
inline constexpr std::size_t kMaxSupportColumns = 24;

class Gf2Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr BitRow low_bits(std::size_t n) {
  return n >= 64 ? ~BitRow{0} : (BitRow{1} << n) - 1;
}

// Dense matrix over GF(2) with at most 64 columns. Zero rows are kept as
// given; only rref() drops them.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  explicit Gf2Matrix(std::size_t cols);
  Gf2Matrix(std::size_t cols, std::vector<BitRow> rows);

  // Builds from strings of '0'/'1', character j being column j.
  static Gf2Matrix from_strings(std::size_t cols,
                                std::initializer_list<std::string_view> rows);
  static Gf2Matrix from_strings(std::size_t cols,
                                const std::vector<std::string>& rows);
  static Gf2Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  BitRow row(std::size_t i) const { return rows_.at(i); }
  const std::vector<BitRow>& row_words() const { return rows_; }
  bool at(std::size_t i, std::size_t j) const {
    return (rows_.at(i) >> j) & 1U;
  }

  // Column j as a word whose bit i is the entry of row i.
  BitRow column(std::size_t j) const;

  void append_row(BitRow r);
  // Appends a column whose bit i is the entry for row i.
  void append_column(BitRow column_bits);

  // Keeps the columns whose bits are set in `keep`, in order.
  Gf2Matrix select_columns(BitRow keep) const;

  std::string row_string(std::size_t i) const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitRow> rows_;
};

// Packs the bits of `word` selected by `mask` into the low positions.
BitRow compress_bits(BitRow word, BitRow mask);

std::size_t rank(const Gf2Matrix& m);

// Rank of the row vectors, each restricted to `mask`.
std::size_t rank_of_words(const std::vector<BitRow>& words, BitRow mask);

// Reduced row-echelon form with zero rows dropped. Pivots appear in
// increasing column order.
Gf2Matrix rref(const Gf2Matrix& m);

// Column index of the leading one of each row of an rref matrix.
std::vector<std::size_t> pivot_columns(const Gf2Matrix& reduced);

bool row_space_contains(const Gf2Matrix& m, BitRow v);

// Basis of {v : m v = 0}; one vector per non-pivot column.
std::vector<BitRow> null_space_basis(const Gf2Matrix& m);

// Inclusion-minimal nonzero supports of the space spanned by `basis`.
// Sorted by size, then by value.
std::vector<BitRow> minimal_supports(const std::vector<BitRow>& basis,
                                     std::size_t cols);

// Circuits of the column matroid, as column masks.
std::vector<BitRow> null_space_min_supports(const Gf2Matrix& m);

// Cocircuits of the column matroid, as column masks.
std::vector<BitRow> row_space_min_supports(const Gf2Matrix& m);

}  // namespace binmat

#endif  // BINMAT_GF2_HPP_
