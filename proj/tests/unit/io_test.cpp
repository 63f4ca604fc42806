// Copyright 2026 The purenash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "purenash/gadgets.hpp"
#include "purenash/io.hpp"
#include "purenash/random.hpp"

using namespace purenash;
using io::ParseError;
using Category = ParseError::Category;

namespace {

ParseError parse_failure(const std::string& text) {
  try {
    io::parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("document parsed: " << text);
  throw;
}

io::Document random_document(random::Rng& rng, int pick) {
  const auto n = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
  switch (pick % 6) {
    case 0: return io::make_document(random::digraph(rng, n, 0.4, n));
    case 1: return io::make_document(random::hypergraph(rng, n, 4, 3, 3));
    case 2: return io::make_document(random::graphical_game(rng, n, 3, 0.4));
    case 3: return io::make_document(random::chg(rng, n, 2, 0.4));
    case 4: {
      const auto h = random::hypergraph(rng, n, 4, 3, 3);
      const auto primal = primal_graph(h);
      return io::make_document(io::DecompositionDocument{primal, heuristic_decomposition(primal)});
    }
    default: return io::make_document(random::hom_instance(rng, n, 3));
  }
}

}  // namespace

TEST_CASE("minimal digraph") {
  const auto doc = io::parse(R"({"kind": "digraph", "version": "1",
                                 "vertices": ["a", "b"], "arcs": [["a", "b"]]})");
  CHECK(doc.kind == io::DocumentKind::kDigraph);
  CHECK(std::get<Digraph>(doc.payload) == Digraph({"a", "b"}, {{"a", "b"}}));
}

TEST_CASE("diagnostics name the failing stage and path") {
  auto e = parse_failure(R"({"kind": "digraph", "version": "1",
                             "vertices": ["a"], "arcs": [["a", "z"]]})");
  CHECK(e.category() == Category::kInvariant);
  CHECK(e.path() == "arcs[0][1]");

  e = parse_failure("{\"kind\": ");
  CHECK(e.category() == Category::kSyntax);

  e = parse_failure(R"({"kind": "digraph", "version": "1", "vertices": ["a"]})");
  CHECK(e.category() == Category::kSchema);
  CHECK(e.path() == "arcs");

  e = parse_failure(R"({"kind": "digraph", "version": "2", "vertices": [], "arcs": []})");
  CHECK(e.path() == "version");

  e = parse_failure(R"({"kind": "tree", "version": "1"})");
  CHECK(e.path() == "kind");

  e = parse_failure(R"({"kind": "digraph", "version": "1",
                        "vertices": ["a"], "arcs": [["a", "a"]]})");
  CHECK(e.category() == Category::kInvariant);

  e = parse_failure(R"({"kind": "chg", "version": "1", "vertices": ["a", "b"],
                        "edges": [{"tuple": ["a", "b"], "color": "c"}],
                        "actions": ["1"], "utilities": {"c": [1]}})");
  CHECK(e.category() == Category::kInvariant);
  CHECK(e.path() == "edges");

  e = parse_failure(R"({"kind": "graphical_game", "version": "1", "vertices": ["a"],
                        "arcs": [], "actions": {"a": ["x"]}, "utilities": {"a": [1.5]}})");
  CHECK(e.category() == Category::kSchema);
  CHECK(e.path() == "utilities.a[0]");

  e = parse_failure(R"({"kind": "graphical_game", "version": "1", "vertices": ["a"],
                        "arcs": [], "actions": {"a": ["x"]}, "utilities": {"a": ["1/0"]}})");
  CHECK(e.path() == "utilities.a[0]");

  e = parse_failure(R"({"kind": "graphical_game", "version": "1", "vertices": ["a"],
                        "arcs": [], "actions": {"a": ["x", "y"]}, "utilities": {"a": [1]}})");
  CHECK(e.category() == Category::kInvariant);
}

TEST_CASE("rationals") {
  CHECK(io::rational_to_json(Rational(2, 4)) == "1/2");
  CHECK(io::rational_to_json(Rational(-6, 3)) == -2);
  const auto doc = io::parse(R"({"kind": "graphical_game", "version": "1",
      "vertices": ["a"], "arcs": [], "actions": {"a": ["x", "y", "z"]},
      "utilities": {"a": ["2/4", -3, "123456789012345678901234567890"]}})");
  const auto& game = std::get<GraphicalGame>(doc.payload);
  CHECK(game.tables()[0][0] == Rational(1, 2));
  CHECK(game.tables()[0][1] == -3);
  const auto text = io::serialize(doc);
  CHECK(text.find("\"1/2\"") != std::string::npos);
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
}

TEST_CASE("equal values serialize to identical bytes") {
  const auto a = io::serialize(io::make_document(fixtures::matching_pennies()));
  const auto b = io::serialize(io::make_document(fixtures::matching_pennies()));
  CHECK(a == b);
  CHECK(a.back() == '\n');
  CHECK(a.rfind("{\n  \"kind\": \"graphical_game\",\n  \"version\": \"1\"", 0) == 0);
}

TEST_CASE("round trips") {
  random::Rng rng(81);
  for (int trial = 0; trial < 240; ++trial) {
    const auto doc = random_document(rng, trial);
    const auto text = io::serialize(doc);
    const auto back = io::parse(text);
    CHECK(back.kind == doc.kind);
    CHECK(back.payload == doc.payload);
    CHECK(io::serialize(back) == text);
  }
  io::ResultDocument result{"solve", {{"exists", true}, {"witness", {{"a", "x"}}}}};
  const auto doc = io::make_document(result);
  CHECK(std::get<io::ResultDocument>(io::parse(io::serialize(doc)).payload) == result);
  const auto ex = io::make_document(example15_game(1, 2));
  CHECK(io::parse(io::serialize(ex)).payload == ex.payload);
}

TEST_CASE("parse normalizes to a fixpoint") {
  const std::string loose = R"({"arcs": [["b","a"]], "version": "1",
                               "vertices": ["a","b"], "kind": "digraph"})";
  const auto once = io::serialize(io::parse(loose));
  CHECK(io::serialize(io::parse(once)) == once);
  CHECK(once.find("\"kind\"") < once.find("\"vertices\""));
}
