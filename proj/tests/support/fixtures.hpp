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

#ifndef PURENASH_TESTS_SUPPORT_FIXTURES_HPP_
#define PURENASH_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "purenash/games.hpp"
#include "purenash/graphs.hpp"

namespace fixtures {

using purenash::Digraph;
using purenash::GraphicalGame;
using purenash::Rational;

inline std::vector<Rational> values(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline Digraph two_cycle() { return Digraph({"1", "2"}, {{"1", "2"}, {"2", "1"}}); }

// Player 1 wins on a match, player 2 on a mismatch.
inline GraphicalGame matching_pennies() {
  return GraphicalGame(two_cycle(), {{"H", "T"}, {"H", "T"}},
                       {values({1, -1, -1, 1}), values({-1, 1, 1, -1})});
}

inline GraphicalGame coordination() {
  return GraphicalGame(two_cycle(), {{"a", "b"}, {"a", "b"}},
                       {values({1, 0, 0, 1}), values({1, 0, 0, 1})});
}

// Matching Pennies plus player 3 who watches both and likes agreeing with 1.
inline GraphicalGame pennies_with_spectator() {
  Digraph g({"1", "2", "3"}, {{"1", "2"}, {"2", "1"}, {"1", "3"}, {"2", "3"}});
  // scope of 3 is (3, 1, 2)
  return GraphicalGame(std::move(g), {{"H", "T"}, {"H", "T"}, {"H", "T"}},
                       {values({1, -1, -1, 1}), values({-1, 1, 1, -1}),
                        values({1, 1, 0, 0, 0, 0, 1, 1})});
}

// Path 1 -> 2 -> 3 where each player wants to differ from its predecessor.
inline GraphicalGame path_game() {
  Digraph g({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  return GraphicalGame(std::move(g), {{"x", "y"}, {"x", "y"}, {"x", "y"}},
                       {values({0, 3}), values({0, 1, 1, 0}),
                        values({0, 1, 1, 0})});
}

}  // namespace fixtures

#endif  // PURENASH_TESTS_SUPPORT_FIXTURES_HPP_
