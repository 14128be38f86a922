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

// Line-oriented text formats.
//
// Matroid file:
//   # comment
//   elements x y z
//   row 111
// Bare "111" lines are accepted as rows. Character j of a row is the entry
// of the j-th label on the elements line.
//
// Graph file:
//   vertices 2
//   edge 1 2 x
//
// Corpus file: a "corpus <max_elements> <max_rank> <loop_cap>" header, then
// one block per member: "matroid gammoid=<0|1>", a matroid file body, "end".

#ifndef BINMAT_IO_HPP_
#define BINMAT_IO_HPP_

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "binmat/enumerate.hpp"
#include "binmat/graph.hpp"
#include "binmat/matroid.hpp"

namespace binmat {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

BinaryMatroid parse_matroid(std::string_view text);
std::string format_matroid(const BinaryMatroid& m);

Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);
std::string graph_to_dot(const Graph& g, std::string_view name);

// Parses either format, converting a graph to its cycle matroid.
BinaryMatroid parse_matroid_or_graph(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

void write_corpus(std::ostream& os, const Corpus& corpus);
Corpus read_corpus(std::istream& is);

// FNV-1a, 16 hex digits.
std::string digest_hex(std::string_view bytes);

}  // namespace binmat

#endif  // BINMAT_IO_HPP_
