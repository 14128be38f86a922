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

#include "binmat/io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace binmat {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::string_view text, std::size_t first_line = 1) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::size_t number = first_line - 1;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    std::istringstream ls(raw);
    Line line{number, {}};
    for (std::string w; ls >> w;) line.words.push_back(w);
    if (line.words.empty() || line.words[0][0] == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

bool is_bits(const std::string& s) {
  return !s.empty() && s.find_first_not_of("01") == std::string::npos;
}

BinaryMatroid matroid_from_lines(const std::vector<Line>& lines,
                                 std::size_t end_line) {
  if (lines.empty() || lines[0].words[0] != "elements") {
    throw ParseError(lines.empty() ? end_line : lines[0].number,
                     "expected 'elements' header");
  }
  std::vector<std::string> labels(lines[0].words.begin() + 1,
                                  lines[0].words.end());
  std::vector<std::string> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& w = lines[i].words;
    std::string bits;
    if (w[0] == "row" && w.size() == 2) {
      bits = w[1];
    } else if (w[0] == "row" && w.size() == 1 && labels.empty()) {
      bits.clear();
    } else if (w.size() == 1 && is_bits(w[0])) {
      bits = w[0];
    } else {
      throw ParseError(lines[i].number, "expected a row of 0/1 characters");
    }
    if (!bits.empty() && !is_bits(bits)) {
      throw ParseError(lines[i].number, "row has characters other than 0/1");
    }
    if (bits.size() != labels.size()) {
      throw ParseError(lines[i].number,
                       "row length " + std::to_string(bits.size()) +
                           " does not match " + std::to_string(labels.size()) +
                           " elements");
    }
    rows.push_back(bits);
  }
  try {
    return BinaryMatroid::from_matrix(
        labels, Gf2Matrix::from_strings(labels.size(), rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines[0].number, e.what());
  }
}

std::size_t parse_count(const Line& line, std::size_t word) {
  try {
    std::size_t pos = 0;
    const std::string& s = line.words.at(word);
    const unsigned long v = std::stoul(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line.number, "expected a nonnegative integer");
  }
}

std::size_t count_lines(std::string_view text) {
  std::size_t n = 1;
  for (char c : text) n += (c == '\n');
  return n;
}

}  // namespace

BinaryMatroid parse_matroid(std::string_view text) {
  return matroid_from_lines(tokenize(text), count_lines(text));
}

std::string format_matroid(const BinaryMatroid& m) {
  std::ostringstream os;
  os << "elements";
  for (const auto& l : m.labels()) os << ' ' << l;
  os << '\n';
  for (std::size_t i = 0; i < m.rep().rows(); ++i) {
    os << "row " << m.rep().row_string(i) << '\n';
  }
  return os.str();
}

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].words[0] != "vertices" ||
      lines[0].words.size() != 2) {
    throw ParseError(lines.empty() ? count_lines(text) : lines[0].number,
                     "expected 'vertices <n>' header");
  }
  Graph g(parse_count(lines[0], 1));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& w = lines[i].words;
    if (w[0] != "edge" || w.size() != 4) {
      throw ParseError(lines[i].number, "expected 'edge <u> <v> <label>'");
    }
    try {
      g.add_edge(parse_count(lines[i], 1), parse_count(lines[i], 2), w[3]);
    } catch (const MatroidError& e) {
      throw ParseError(lines[i].number, e.what());
    }
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  os << "vertices " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) {
    os << "edge " << e.u << ' ' << e.v << ' ' << e.label << '\n';
  }
  return os.str();
}

std::string graph_to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (std::size_t v = 1; v <= g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (const auto& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v << " [label=\"" << e.label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

BinaryMatroid parse_matroid_or_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (!lines.empty() && lines[0].words[0] == "vertices") {
    return cycle_matroid(parse_graph(text));
  }
  return parse_matroid(text);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

void write_corpus(std::ostream& os, const Corpus& corpus) {
  os << "# binmat corpus: one isomorphism class per block\n"
     << "corpus " << corpus.max_elements << ' ' << corpus.max_rank << ' '
     << corpus.loop_cap << '\n';
  for (const auto& m : corpus.members) {
    os << "matroid gammoid=" << (m.is_gammoid ? 1 : 0) << '\n'
       << format_matroid(m.matroid) << "end\n";
  }
}

Corpus read_corpus(std::istream& is) {
  std::ostringstream buf;
  buf << is.rdbuf();
  const auto lines = tokenize(buf.str());
  if (lines.empty() || lines[0].words[0] != "corpus" ||
      lines[0].words.size() != 4) {
    throw ParseError(lines.empty() ? 1 : lines[0].number,
                     "expected 'corpus <max_elements> <max_rank> <loop_cap>'");
  }
  Corpus c;
  c.max_elements = parse_count(lines[0], 1);
  c.max_rank = parse_count(lines[0], 2);
  c.loop_cap = parse_count(lines[0], 3);
  for (std::size_t i = 1; i < lines.size();) {
    const auto& head = lines[i];
    if (head.words[0] != "matroid" || head.words.size() != 2 ||
        (head.words[1] != "gammoid=0" && head.words[1] != "gammoid=1")) {
      throw ParseError(head.number, "expected 'matroid gammoid=<0|1>'");
    }
    std::size_t j = i + 1;
    while (j < lines.size() && lines[j].words[0] != "end") ++j;
    if (j == lines.size()) throw ParseError(head.number, "block without 'end'");
    std::vector<Line> body(lines.begin() + static_cast<long>(i) + 1,
                           lines.begin() + static_cast<long>(j));
    BinaryMatroid m = matroid_from_lines(body, lines[j].number);
    CorpusMember member{canonical_key(m), std::move(m),
                        head.words[1] == "gammoid=1"};
    c.members.push_back(std::move(member));
    i = j + 1;
  }
  return c;
}

std::string digest_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace binmat
