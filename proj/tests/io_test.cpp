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

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "binmat/catalog.hpp"
#include "binmat/enumerate.hpp"

namespace binmat {
namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_matroid_or_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(ParseMatroid, Examples) {
  const auto m = parse_matroid("# G_4\nelements x y z\nrow 111\n");
  EXPECT_EQ(m.labels(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(m.rep(), Gf2Matrix::from_strings(3, {"111"}));
  const auto bare = parse_matroid("elements a b\n\n10\n01\n");
  EXPECT_EQ(bare.rank(), 2u);
  const auto empty_rows = parse_matroid("elements a b\n");
  EXPECT_EQ(empty_rows.rank(), 0u);
}

TEST(ParseMatroid, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("elements a b c\nrow 111\nrow 11\n"), 3u);
  EXPECT_EQ(error_line("\n\nrow 11\n"), 3u);
  EXPECT_EQ(error_line("elements a b\nrow 1x\n"), 2u);
  EXPECT_EQ(error_line("elements a a\nrow 11\n"), 1u);
  EXPECT_EQ(error_line(""), 1u);
  EXPECT_EQ(error_line("vertices 2\nedge 1 3 a\n"), 2u);
  EXPECT_EQ(error_line("vertices two\n"), 1u);
  EXPECT_EQ(error_line("vertices 2\nedge 1 2\n"), 2u);
}

TEST(FormatMatroid, RoundTripsCatalog) {
  for (const auto& name : catalog_names()) {
    const auto& e = catalog_get(name);
    const auto back = parse_matroid(format_matroid(e.matroid));
    EXPECT_TRUE(back.represented_equal(e.matroid)) << name;
    EXPECT_EQ(back.rep(), e.matroid.rep()) << name;
    EXPECT_EQ(parse_graph(format_graph(e.graph)), e.graph) << name;
    EXPECT_TRUE(parse_matroid_or_graph(format_graph(e.graph))
                    .represented_equal(e.matroid))
        << name;
  }
}

TEST(GraphToDot, ListsEveryEdge) {
  const auto dot = graph_to_dot(catalog_get("G_4").graph, "G_4");
  EXPECT_EQ(dot.rfind("graph \"G_4\" {", 0), 0u);
  for (const char* l : {"\"x\"", "\"y\"", "\"z\""}) {
    EXPECT_NE(dot.find(l), std::string::npos);
  }
}

TEST(Files, WriteThenRead) {
  const auto path = std::filesystem::temp_directory_path() / "binmat_io_test.txt";
  write_text_file(path.string(), "elements a\nrow 1\n");
  EXPECT_EQ(read_text_file(path.string()), "elements a\nrow 1\n");
  std::filesystem::remove(path);
  EXPECT_THROW(read_text_file((path / "missing").string()), std::runtime_error);
}

TEST(Corpus, RejectsMalformedBlocks) {
  std::istringstream no_header("matroid gammoid=1\nelements a\nend\n");
  EXPECT_THROW(read_corpus(no_header), ParseError);
  std::istringstream no_end("corpus 1 1 3\nmatroid gammoid=1\nelements a\nrow 1\n");
  EXPECT_THROW(read_corpus(no_end), ParseError);
  std::istringstream bad_flag("corpus 1 1 3\nmatroid gammoid=2\nelements a\nend\n");
  EXPECT_THROW(read_corpus(bad_flag), ParseError);
}

TEST(Digest, IsStableAndSensitive) {
  EXPECT_EQ(digest_hex(""), "cbf29ce484222325");
  EXPECT_EQ(digest_hex("a"), "af63dc4c8601ec8c");
  EXPECT_NE(digest_hex("row 10"), digest_hex("row 01"));
  EXPECT_EQ(digest_hex("x").size(), 16u);
}

}  // namespace
}  // namespace binmat
