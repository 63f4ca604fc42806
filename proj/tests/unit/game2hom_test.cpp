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
#include "oracles.hpp"
#include "purenash/game2hom.hpp"
#include "purenash/gadgets.hpp"
#include "purenash/random.hpp"

using namespace purenash;

namespace {

ColoredHypergraphicalGame single_player(long u1, long u2) {
  return ColoredHypergraphicalGame(
      GameHypergraph(ColoredHypergraph({"v"}, {{{"v"}, "c"}})), {"1", "2"},
      {{"c", fixtures::values({u1, u2})}});
}

}  // namespace

TEST_CASE("best-response structure of a single player") {
  const auto strict = game_to_hom(single_player(5, 7));
  CHECK(strict.right.vertices().ids() == std::vector<std::string>{"1", "2"});
  CHECK(strict.right == ColoredHypergraph({"1", "2"}, {{{"2"}, "c"}}));
  const auto tie = game_to_hom(single_player(4, 4));
  CHECK(tie.right == ColoredHypergraph({"1", "2"}, {{{"1"}, "c"}, {{"2"}, "c"}}));
}

TEST_CASE("matching pennies has no homomorphism") {
  const auto mp = fixtures::matching_pennies();
  const auto chg = graphical_to_chg(mp);
  CHECK(chg.hypergraph().graph().colors().size() == 2);
  CHECK(oracle::all_psne(chg) == oracle::all_psne(mp));
  CHECK_FALSE(brute_force_hom(game_to_hom(chg)).has_value());
  CHECK_FALSE(brute_force_hom(game_to_hom(mp)).has_value());
}

TEST_CASE("graphical to chg") {
  const GraphicalGame lone(Digraph({"a"}, {}), {{"x", "y"}}, {fixtures::values({1, 0})});
  const auto chg = graphical_to_chg(lone);
  CHECK(chg.hypergraph().graph() == ColoredHypergraph({"a"}, {{{"a"}, "a"}}));
  CHECK(oracle::all_psne(chg) == oracle::all_psne(lone));

  const GraphicalGame uneven(Digraph({"a", "b"}, {}), {{"x", "y"}, {"x"}},
                             {fixtures::values({1, 0}), fixtures::values({1})});
  CHECK_THROWS_AS(graphical_to_chg(uneven), PreconditionError);

  random::Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const auto m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    auto game = random::graphical_game(rng, n, 1, 0.4);
    std::vector<std::vector<std::string>> actions(n);
    std::vector<std::vector<Rational>> tables(n);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t a = 0; a < m; ++a) actions[v].push_back("s" + std::to_string(a));
      std::size_t size = m;
      for (std::size_t k = 0; k < game.graph().in_neighbors(v).size(); ++k) size *= m;
      for (std::size_t k = 0; k < size; ++k) tables[v].push_back(random::small_rational(rng));
    }
    const GraphicalGame even(game.graph(), actions, tables);
    CHECK(oracle::all_psne(graphical_to_chg(even)) == oracle::all_psne(even));
  }
}

TEST_CASE("witnesses correspond in both directions") {
  random::Rng rng(62);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const auto m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const auto game = random::chg(rng, n, m, 0.4);
    const auto inst = game_to_hom(game);
    CHECK(inst.left == game.hypergraph().graph());
    const auto homs = oracle::all_homs(inst);
    const auto psne = oracle::all_psne(game);
    CHECK(homs.size() == psne.size());
    for (const auto& h : homs) {
      CHECK(is_psne(game, profile_from_mapping(game, inst, VertexMapping{h})));
    }
    for (const auto& s : psne) {
      CHECK(check_homomorphism(inst, mapping_from_profile(game, inst, ActionProfile{s})));
    }
  }
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const auto game = random::graphical_game(rng, n, 3, 0.4);
    const auto inst = game_to_hom(game);
    const auto homs = oracle::all_homs(inst);
    CHECK(homs.size() == oracle::all_psne(game).size());
    for (const auto& h : homs) {
      CHECK(is_psne(game, profile_from_mapping(game, inst, VertexMapping{h})));
    }
  }
}

TEST_CASE("pipeline on small fixtures") {
  const auto dag = decide_psne(fixtures::path_game());
  CHECK(dag.exists);
  CHECK(dag.backend == "greedy");
  REQUIRE(dag.witness.has_value());
  CHECK(is_psne(fixtures::path_game(), *dag.witness));
  CHECK(dag.decomposition_width == -1);

  const auto mp = decide_psne(fixtures::matching_pennies());
  CHECK_FALSE(mp.exists);
  CHECK_FALSE(mp.witness.has_value());
  CHECK(mp.backend == "dp");

  const auto spectator = decide_psne(fixtures::pennies_with_spectator());
  CHECK_FALSE(spectator.exists);
  CHECK(spectator.trace.removed == std::vector<std::size_t>{2});

  SolveOptions brute;
  brute.width_threshold = -1;
  const auto co = decide_psne(fixtures::coordination(), brute);
  CHECK(co.exists);
  CHECK(co.backend == "brute");

  SolveOptions tiny;
  tiny.width_threshold = -1;
  tiny.mapping_cap = 1;
  try {
    decide_psne(fixtures::coordination(), tiny);
    FAIL("expected a cap refusal");
  } catch (const CapExceeded& e) {
    CHECK(e.stage() == "brute_force_hom");
  }
}

TEST_CASE("pipeline agrees with brute force") {
  random::Rng rng(63);
  SolveOptions core_first;
  core_first.core_first = true;
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const auto game = random::graphical_game(rng, n, 3, 0.35);
    const bool expected = brute_force_psne(game).has_value();
    for (const auto& options : {SolveOptions{}, core_first}) {
      const auto result = decide_psne(game, options);
      CHECK(result.exists == expected);
      if (result.exists) {
        REQUIRE(result.witness.has_value());
        CHECK(is_psne(game, *result.witness));
      }
    }
  }
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const auto m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const auto game = random::chg(rng, n, m, 0.35);
    const bool expected = brute_force_psne(game).has_value();
    for (const auto& options : {SolveOptions{}, core_first}) {
      const auto result = decide_psne(game, options);
      CHECK(result.exists == expected);
      if (result.witness) CHECK(is_psne(game, *result.witness));
    }
  }
}

TEST_CASE("core-first solving on the bounded core-width family") {
  random::Rng rng(64);
  auto game = example15_game(2, 2);
  std::map<Color, std::vector<Rational>> tables;
  for (const auto& [color, table] : game.color_tables()) {
    std::vector<Rational> filled;
    for (std::size_t k = 0; k < table.size(); ++k) filled.push_back(random::small_rational(rng));
    tables[color] = filled;
  }
  const ColoredHypergraphicalGame filled(game.hypergraph(), game.actions(), tables);
  SolveOptions options;
  options.core_first = true;
  options.core_cap = 12;
  const auto result = decide_psne(filled, options);
  CHECK(result.used_core);
  CHECK(result.exists == brute_force_psne(filled).has_value());
  if (result.witness) CHECK(is_psne(filled, *result.witness));
}
