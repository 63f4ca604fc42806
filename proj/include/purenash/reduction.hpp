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

#ifndef PURENASH_REDUCTION_HPP_
#define PURENASH_REDUCTION_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "purenash/games.hpp"
#include "purenash/graphs.hpp"

namespace purenash {

// Iterated sink removal. Indices refer to the input graph.
struct ReductionTrace {
  // Round k holds the sinks of the graph left after rounds 0..k-1, ascending.
  std::vector<std::vector<std::size_t>> removal_rounds;
  // Union of the rounds, ascending.
  std::vector<std::size_t> removed;
  // Complement of `removed`, ascending.
  std::vector<std::size_t> kept;

  bool operator==(const ReductionTrace&) const = default;
};

ReductionTrace reduction_trace(const Digraph& graph);

// red(G) together with the trace that produced it.
std::pair<Digraph, ReductionTrace> reduce_digraph(const Digraph& graph);

// Games restricted to the kept players; tables are carried over unchanged.
std::pair<GraphicalGame, ReductionTrace> reduce_game(const GraphicalGame& game);
std::pair<ColoredHypergraphicalGame, ReductionTrace> reduce_game(
    const ColoredHypergraphicalGame& game);

// Extends a PSNE of the reduced game (players in `trace.kept` order) to the
// full game. Removed players are assigned in reverse removal order, each
// taking its first best response. Throws PreconditionError when the result
// is not a PSNE, which happens iff `reduced` was not one.
ActionProfile extend_psne(const LocalGame& game, const ReductionTrace& trace,
                          const ActionProfile& reduced);
ActionProfile extend_psne(const LocalGame& game, const ActionProfile& reduced);

}  // namespace purenash

#endif  // PURENASH_REDUCTION_HPP_
