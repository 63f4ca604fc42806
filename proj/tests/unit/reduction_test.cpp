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
#include "purenash/random.hpp"
#include "purenash/reduction.hpp"

using namespace purenash;

TEST_CASE("path reduces to nothing") {
  const auto [red, trace] = reduce_digraph(Digraph({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}));
  CHECK(red.size() == 0);
  CHECK(trace.removal_rounds ==
        std::vector<std::vector<std::size_t>>{{2}, {1}, {0}});
  CHECK(trace.kept.empty());
}

TEST_CASE("cycle is already reduced") {
  const auto [red, trace] = reduce_digraph(fixtures::two_cycle());
  CHECK(red == fixtures::two_cycle());
  CHECK(trace.removal_rounds.empty());
}

TEST_CASE("cycle with a tail") {
  const Digraph g({"1", "2", "3", "4"},
                  {{"1", "2"}, {"2", "1"}, {"2", "3"}, {"3", "4"}});
  const auto [red, trace] = reduce_digraph(g);
  CHECK(red == fixtures::two_cycle());
  CHECK(trace.removal_rounds == std::vector<std::vector<std::size_t>>{{3}, {2}});
  CHECK(trace.kept == std::vector<std::size_t>{0, 1});
  CHECK(trace.removed == std::vector<std::size_t>{2, 3});
}

TEST_CASE("reduction properties on random digraphs") {
  random::Rng rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(0, 8)(rng);
    const Digraph g = random::digraph(rng, n, 0.25, n);
    const auto [red, trace] = reduce_digraph(g);
    CHECK(trace.kept == oracle::kept_vertices(g));
    CHECK(is_irreducible(red));
    CHECK(reduce_digraph(red).first == red);
    const bool acyclic = scc(g).components.size() == n &&
                         [&] {
                           for (std::size_t v = 0; v < n; ++v) {
                             if (oracle::reachability(g)[v][v]) return false;
                           }
                           return true;
                         }();
    CHECK(acyclic == (red.size() == 0));
    // each round is exactly the sinks of what remains
    std::vector<bool> alive(n, true);
    for (const auto& round : trace.removal_rounds) {
      std::vector<std::size_t> sinks;
      for (std::size_t v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        bool sink = true;
        for (std::size_t w : g.out_neighbors(v)) sink = sink && !alive[w];
        if (sink) sinks.push_back(v);
      }
      CHECK(sinks == round);
      for (std::size_t v : round) alive[v] = false;
    }
  }
}

TEST_CASE("reduced games") {
  const auto [mp, trace] = reduce_game(fixtures::pennies_with_spectator());
  CHECK(mp == fixtures::matching_pennies());
  CHECK(trace.removed == std::vector<std::size_t>{2});

  const auto [empty, path_trace] = reduce_game(fixtures::path_game());
  CHECK(empty.num_players() == 0);
  const auto profile = extend_psne(fixtures::path_game(), path_trace, {{}});
  CHECK(profile.actions == std::vector<std::size_t>{1, 0, 1});
  CHECK(is_psne(fixtures::path_game(), profile));
}

TEST_CASE("extension rejects a reduced profile that is not an equilibrium") {
  const auto game = fixtures::pennies_with_spectator();
  CHECK_THROWS_AS(extend_psne(game, {{0, 1}}), PreconditionError);
}

TEST_CASE("equilibria survive reduction in both directions") {
  random::Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const auto game = random::graphical_game(rng, n, 3, 0.3);
    const auto [reduced, trace] = reduce_game(game);
    const auto full = oracle::all_psne(game);
    const auto small = oracle::all_psne(reduced);
    CHECK(full.empty() == small.empty());
    for (const auto& s : small) {
      const auto ext = extend_psne(game, trace, ActionProfile{s});
      CHECK(is_psne(game, ext));
      for (std::size_t k = 0; k < trace.kept.size(); ++k) {
        CHECK(ext.actions[trace.kept[k]] == s[k]);
      }
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const auto game = random::chg(rng, n, 2, 0.3);
    const auto [reduced, trace] = reduce_game(game);
    CHECK(oracle::all_psne(game).empty() == oracle::all_psne(reduced).empty());
    for (const auto& s : oracle::all_psne(reduced)) {
      CHECK(is_psne(game, extend_psne(game, trace, ActionProfile{s})));
    }
  }
}
