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

#ifndef PURENASH_GADGETS_HPP_
#define PURENASH_GADGETS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "purenash/games.hpp"
#include "purenash/graphs.hpp"

namespace purenash {

// Games whose PSNE question encodes a homomorphism question, games without
// any PSNE, and the bounded core-treewidth family.

enum class GadgetVariant {
  kGraphicalTB,
  kChgFailure,
  kCycleModP,
  kStronglyConnected,
  kDirectXY,
  kExample15,
};

struct GadgetSpec {
  GadgetVariant variant;
  std::map<std::string, long> params;
};

std::string_view gadget_variant_name(GadgetVariant variant);
// Accepts the names above: graphical_TB, chg_failure, cycle_mod_p,
// strongly_connected, direct_xy, example15.
std::optional<GadgetVariant> parse_gadget_variant(std::string_view name);
// Throws PreconditionError when a required numeric parameter is missing or
// out of range (cycle_mod_p: n >= 2, p >= 2; example15: m >= 1).
void check_gadget_spec(const GadgetSpec& spec);

// `base`, or `base` with primes appended until it avoids every id in `taken`.
std::string fresh_label(const std::string& base,
                        const std::vector<std::string>& taken);

// The cycle fixed in each terminal SCC: the shortest cycle through the
// component's smallest vertex (under vertex_less), listed from that vertex
// along the arcs. Requires every terminal SCC to have two or more vertices.
std::vector<std::vector<std::size_t>> terminal_cycles(const Digraph& graph);

// Graphical game on `graph` whose PSNE exist iff H(graph) maps into `target`.
// Actions are V(target) followed by the failure actions T and B. Utilities
// follow a priority list: 100 when the local profile is a target edge of
// the player's color; -100 for a non-failure action otherwise; on a fixed
// terminal cycle, imitate (or, for the cycle's first vertex, anti-imitate)
// a failing predecessor for +1/-1 and 0 when it does not fail; 0 elsewhere.
// Throws PreconditionError for an empty or reducible graph.
GraphicalGame hom_to_gg(const Digraph& graph, const ColoredHypergraph& target);

// Directed n-cycle v0 -> v1 -> ... -> v0 with one color; actions 0..p-1 and
// unique best response (a + 1) mod p to a predecessor playing a.
ColoredHypergraphicalGame cycle_game(std::size_t n, std::size_t p);

// Actions 0..n on a strongly connected graph with n >= 2 vertices; best
// response (max of in-neighbors + 1) mod (n + 1). One color per arity.
ColoredHypergraphicalGame strongly_connected_game(const Digraph& graph);

// Arcs (u, v) where u plays a maximal action among v's in-neighbors.
Digraph active_subgraph(const Digraph& graph, const ActionProfile& profile);

// CHG on `graph` whose PSNE exist iff `graph` maps into `target`. Actions are
// V(target) followed by failure actions f1..f(2n+1), n = |V(graph)|.
// Throws PreconditionError when the induced digraph is reducible or empty.
ColoredHypergraphicalGame hom_to_chg(const GameHypergraph& graph,
                                     const ColoredHypergraph& target);

// Graphical game on the vertices of `graph` (actions V(target), constant
// utility 1) plus players x(e), y(e) per edge with actions {g, b}. Only a
// correctly mapped edge lets x(e) and y(e) settle; otherwise they play
// Matching Pennies.
GraphicalGame hom_to_gg_direct(const ColoredHypergraph& graph,
                               const ColoredHypergraph& target);

// l_i, r_j, x_i_j, y_i_j for i, j in 1..m with edges (x_ij, y_ij, l_i, r_j)
// of color X, (y_ij, x_ij, l_i, r_j) of color Y, (l_i) of color L and (r_j)
// of color R: 2m^2 + 2m vertices.
GameHypergraph example15(std::size_t m);
// Substructure of example15(m) induced by l_1, r_1, x_1_1, y_1_1.
ColoredHypergraph example15_fragment(std::size_t m);
// example15(m) with `actions` actions and all-zero tables to be filled in.
ColoredHypergraphicalGame example15_game(std::size_t m, std::size_t actions);

}  // namespace purenash

#endif  // PURENASH_GADGETS_HPP_
