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

#ifndef PURENASH_GAME2HOM_HPP_
#define PURENASH_GAME2HOM_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "purenash/games.hpp"
#include "purenash/homomorphism.hpp"
#include "purenash/reduction.hpp"

namespace purenash {

// Left side: the game's hypergraph, unchanged. Right side: one vertex per
// action label, and for every color c an edge (a, a1..ar) of color c whenever
// a maximizes U_c(., a1..ar). Ties contribute every maximizer.
HomInstance game_to_hom(const ColoredHypergraphicalGame& game);

// Same construction on H(G) with one color per player. Right vertices are
// the distinct action labels of all players (first appearance order); since
// player i's color only admits tuples drawn from its neighborhood's action
// sets, action sets of different sizes need no padding.
HomInstance game_to_hom(const GraphicalGame& game);

// Profile read off a homomorphism of game_to_hom(game).
ActionProfile profile_from_mapping(const LocalGame& game,
                                   const HomInstance& instance,
                                   const VertexMapping& mapping);
VertexMapping mapping_from_profile(const LocalGame& game,
                                   const HomInstance& instance,
                                   const ActionProfile& profile);

// H(G) with a fresh color per player. Requires every player to have the same
// action labels in the same order (no padding is invented); throws
// PreconditionError otherwise.
ColoredHypergraphicalGame graphical_to_chg(const GraphicalGame& game);

struct SolveOptions {
  // dp_hom runs when the heuristic decomposition width is at most this.
  int width_threshold = 12;
  // Cap for the brute-force fallback.
  std::size_t mapping_cap = kDefaultMappingCap;
  // Solve HOM(core(left), right) and compose with the retraction.
  bool core_first = false;
  std::size_t core_cap = kDefaultCoreCap;
};

struct PsneResult {
  bool exists = false;
  std::optional<ActionProfile> witness;
  ReductionTrace trace;
  // -1 when no homomorphism stage ran.
  int decomposition_width = -1;
  // "greedy", "dp" or "brute".
  std::string backend;
  bool used_core = false;
};

// reduce -> game_to_hom -> min-fill decomposition -> dp_hom (or brute force
// above the width threshold) -> profile -> greedy extension. The witness is a
// PSNE of the original game. Throws CapExceeded naming the refusing stage.
PsneResult decide_psne(const GraphicalGame& game, const SolveOptions& options = {});
PsneResult decide_psne(const ColoredHypergraphicalGame& game,
                       const SolveOptions& options = {});

}  // namespace purenash

#endif  // PURENASH_GAME2HOM_HPP_
