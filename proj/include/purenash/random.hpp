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

#ifndef PURENASH_RANDOM_HPP_
#define PURENASH_RANDOM_HPP_

#include <cstddef>
#include <random>

#include "purenash/games.hpp"
#include "purenash/graphs.hpp"
#include "purenash/homomorphism.hpp"

// Seeded generators for test fixtures. The solvers never use randomness.
namespace purenash::random {

using Rng = std::mt19937_64;

// Small rationals p/q with |p| <= 4, 1 <= q <= 3: ties are common.
Rational small_rational(Rng& rng);

// Vertices "0".."n-1"; each ordered pair is an arc with probability
// `density`, and no vertex gets more than `max_in_degree` in-neighbors.
Digraph digraph(Rng& rng, std::size_t n, double density,
                std::size_t max_in_degree = 3);
// Random digraph with every sink given an out-arc, so it is irreducible.
Digraph irreducible_digraph(Rng& rng, std::size_t n, double density,
                            std::size_t max_in_degree = 3);
Digraph strongly_connected_digraph(Rng& rng, std::size_t n, double density);

// Per-player action counts drawn from min_actions..max_actions.
GraphicalGame graphical_game(Rng& rng, std::size_t n, std::size_t max_actions,
                             double density, std::size_t min_actions = 1);
// Lead edges list the in-neighbors of a random digraph in shuffled order;
// colors come from a palette of `colors_per_arity` per arity so tables are
// shared.
GameHypergraph game_hypergraph(Rng& rng, std::size_t n, double density,
                               std::size_t colors_per_arity = 2);
ColoredHypergraphicalGame chg(Rng& rng, std::size_t n, std::size_t actions,
                              double density);

// Arbitrary colored hypergraph: `edges` edges of arity 1..max_arity with
// distinct entries over colors "c0".."c{colors-1}" (arity fixed per color).
ColoredHypergraph hypergraph(Rng& rng, std::size_t n, std::size_t edges,
                             std::size_t colors, std::size_t max_arity);

// A random right-hand side for `left`: vertices "h0".., edges drawn per
// left color with the left arity (entries may repeat). With probability
// `plant`, the image of a random mapping is added so a homomorphism exists.
ColoredHypergraph target_for(Rng& rng, const ColoredHypergraph& left,
                             std::size_t vertices, double density,
                             double plant);

HomInstance hom_instance(Rng& rng, std::size_t left_vertices,
                         std::size_t right_vertices);

}  // namespace purenash::random

#endif  // PURENASH_RANDOM_HPP_
