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

#include <algorithm>
#include <bit>
#include <utility>

namespace binmat {

Gf2Matrix::Gf2Matrix(std::size_t cols) : cols_(cols) {
  if (cols > kMaxColumns) {
    throw Gf2Error("matrix wider than " + std::to_string(kMaxColumns) +
                   " columns");
  }
}

Gf2Matrix::Gf2Matrix(std::size_t cols, std::vector<BitRow> rows)
    : Gf2Matrix(cols) {
  if (rows.size() > kMaxRows) {
    throw Gf2Error("matrix taller than " + std::to_string(kMaxRows) + " rows");
  }
  for (BitRow r : rows) {
    if ((r & ~low_bits(cols)) != 0) {
      throw Gf2Error("row has bits beyond column count");
    }
  }
  rows_ = std::move(rows);
}

namespace {

BitRow parse_row(std::size_t cols, std::string_view s) {
  if (s.size() != cols) {
    throw Gf2Error("row '" + std::string(s) + "' has length " +
                   std::to_string(s.size()) + ", expected " +
                   std::to_string(cols));
  }
  BitRow r = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == '1') {
      r |= BitRow{1} << j;
    } else if (s[j] != '0') {
      throw Gf2Error("row '" + std::string(s) + "' has a character other "
                     "than 0/1");
    }
  }
  return r;
}

}  // namespace

Gf2Matrix Gf2Matrix::from_strings(
    std::size_t cols, std::initializer_list<std::string_view> rows) {
  std::vector<BitRow> words;
  for (std::string_view s : rows) words.push_back(parse_row(cols, s));
  return Gf2Matrix(cols, std::move(words));
}

Gf2Matrix Gf2Matrix::from_strings(std::size_t cols,
                                  const std::vector<std::string>& rows) {
  std::vector<BitRow> words;
  for (const auto& s : rows) words.push_back(parse_row(cols, s));
  return Gf2Matrix(cols, std::move(words));
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  std::vector<BitRow> words(n);
  for (std::size_t i = 0; i < n; ++i) words[i] = BitRow{1} << i;
  return Gf2Matrix(n, std::move(words));
}

BitRow Gf2Matrix::column(std::size_t j) const {
  BitRow c = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    c |= ((rows_[i] >> j) & 1U) << i;
  }
  return c;
}

void Gf2Matrix::append_row(BitRow r) {
  if (rows_.size() == kMaxRows) throw Gf2Error("row limit reached");
  if ((r & ~low_bits(cols_)) != 0) {
    throw Gf2Error("row has bits beyond column count");
  }
  rows_.push_back(r);
}

void Gf2Matrix::append_column(BitRow column_bits) {
  if (cols_ == kMaxColumns) throw Gf2Error("column limit reached");
  if ((column_bits & ~low_bits(rows_.size())) != 0) {
    throw Gf2Error("column has bits beyond row count");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    rows_[i] |= ((column_bits >> i) & 1U) << cols_;
  }
  ++cols_;
}

Gf2Matrix Gf2Matrix::select_columns(BitRow keep) const {
  keep &= low_bits(cols_);
  std::vector<BitRow> out;
  out.reserve(rows_.size());
  for (BitRow r : rows_) out.push_back(compress_bits(r, keep));
  return Gf2Matrix(static_cast<std::size_t>(std::popcount(keep)),
                   std::move(out));
}

std::string Gf2Matrix::row_string(std::size_t i) const {
  std::string s(cols_, '0');
  BitRow r = rows_.at(i);
  for (std::size_t j = 0; j < cols_; ++j) {
    if ((r >> j) & 1U) s[j] = '1';
  }
  return s;
}

BitRow compress_bits(BitRow word, BitRow mask) {
  BitRow out = 0;
  int k = 0;
  while (mask != 0) {
    int j = std::countr_zero(mask);
    out |= ((word >> j) & 1U) << k++;
    mask &= mask - 1;
  }
  return out;
}

std::size_t rank_of_words(const std::vector<BitRow>& words, BitRow mask) {
  // Basis indexed by leading bit; at most 64 entries.
  BitRow basis[64] = {};
  std::size_t r = 0;
  for (BitRow w : words) {
    w &= mask;
    while (w != 0) {
      int lead = 63 - std::countl_zero(w);
      if (basis[lead] == 0) {
        basis[lead] = w;
        ++r;
        break;
      }
      w ^= basis[lead];
    }
  }
  return r;
}

std::size_t rank(const Gf2Matrix& m) {
  return rank_of_words(m.row_words(), low_bits(m.cols()));
}

Gf2Matrix rref(const Gf2Matrix& m) {
  std::vector<BitRow> rows = m.row_words();
  std::size_t next = 0;
  for (std::size_t j = 0; j < m.cols() && next < rows.size(); ++j) {
    const BitRow bit = BitRow{1} << j;
    std::size_t piv = next;
    while (piv < rows.size() && !(rows[piv] & bit)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[next], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != next && (rows[i] & bit)) rows[i] ^= rows[next];
    }
    ++next;
  }
  rows.resize(next);
  return Gf2Matrix(m.cols(), std::move(rows));
}

std::vector<std::size_t> pivot_columns(const Gf2Matrix& reduced) {
  std::vector<std::size_t> piv;
  piv.reserve(reduced.rows());
  for (BitRow r : reduced.row_words()) {
    piv.push_back(static_cast<std::size_t>(std::countr_zero(r)));
  }
  return piv;
}

bool row_space_contains(const Gf2Matrix& m, BitRow v) {
  if ((v & ~low_bits(m.cols())) != 0) {
    throw Gf2Error("vector length exceeds column count");
  }
  std::vector<BitRow> words = m.row_words();
  const std::size_t before = rank_of_words(words, low_bits(m.cols()));
  words.push_back(v);
  return rank_of_words(words, low_bits(m.cols())) == before;
}

std::vector<BitRow> null_space_basis(const Gf2Matrix& m) {
  const Gf2Matrix red = rref(m);
  const auto piv = pivot_columns(red);
  BitRow pivot_mask = 0;
  for (auto p : piv) pivot_mask |= BitRow{1} << p;

  std::vector<BitRow> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (pivot_mask & (BitRow{1} << j)) continue;
    BitRow v = BitRow{1} << j;
    for (std::size_t i = 0; i < red.rows(); ++i) {
      if (red.at(i, j)) v |= BitRow{1} << piv[i];
    }
    basis.push_back(v);
  }
  return basis;
}

std::vector<BitRow> minimal_supports(const std::vector<BitRow>& basis,
                                     std::size_t cols) {
  if (cols > kMaxSupportColumns) {
    throw Gf2Error("minimal supports limited to " +
                   std::to_string(kMaxSupportColumns) + " columns, got " +
                   std::to_string(cols));
  }
  // Gray-code walk over the span; every nonzero vector is visited once.
  const std::size_t dim = basis.size();
  std::vector<BitRow> all;
  all.reserve((std::size_t{1} << dim) - 1);
  BitRow cur = 0;
  for (std::size_t g = 1; g < (std::size_t{1} << dim); ++g) {
    cur ^= basis[static_cast<std::size_t>(std::countr_zero(g))];
    all.push_back(cur);
  }
  std::sort(all.begin(), all.end(), [](BitRow a, BitRow b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<BitRow> minimal;
  for (BitRow v : all) {
    bool dominated = false;
    for (BitRow u : minimal) {
      if ((u & ~v) == 0) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(v);
  }
  return minimal;
}

std::vector<BitRow> null_space_min_supports(const Gf2Matrix& m) {
  if (m.cols() > kMaxSupportColumns) {
    throw Gf2Error("null-space supports limited to " +
                   std::to_string(kMaxSupportColumns) + " columns");
  }
  return minimal_supports(null_space_basis(m), m.cols());
}

std::vector<BitRow> row_space_min_supports(const Gf2Matrix& m) {
  if (m.cols() > kMaxSupportColumns) {
    throw Gf2Error("row-space supports limited to " +
                   std::to_string(kMaxSupportColumns) + " columns");
  }
  return minimal_supports(rref(m).row_words(), m.cols());
}

}  // namespace binmat
