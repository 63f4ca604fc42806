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

#include "purenash/reduction.hpp"

#include <map>

namespace purenash {

ReductionTrace reduction_trace(const Digraph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::size_t> out_degree(n);
  std::vector<bool> alive(n, true);
  for (std::size_t v = 0; v < n; ++v) {
    out_degree[v] = graph.out_neighbors(v).size();
  }
  ReductionTrace trace;
  while (true) {
    std::vector<std::size_t> sinks;
    for (std::size_t v = 0; v < n; ++v) {
      if (alive[v] && out_degree[v] == 0) sinks.push_back(v);
    }
    if (sinks.empty()) break;
    for (std::size_t v : sinks) {
      alive[v] = false;
      for (std::size_t u : graph.in_neighbors(v)) --out_degree[u];
    }
    trace.removal_rounds.push_back(std::move(sinks));
  }
  for (std::size_t v = 0; v < n; ++v) {
    (alive[v] ? trace.kept : trace.removed).push_back(v);
  }
  return trace;
}

std::pair<Digraph, ReductionTrace> reduce_digraph(const Digraph& graph) {
  ReductionTrace trace = reduction_trace(graph);
  Digraph reduced = graph.induced(trace.kept);
  return {std::move(reduced), std::move(trace)};
}

namespace {

// Kept players only ever listen to kept players: anything feeding a kept
// vertex has an out-arc that never disappears.
void assert_closed_under_in_neighbors(const Digraph& graph,
                                      const ReductionTrace& trace) {
  std::vector<bool> kept(graph.size(), false);
  for (std::size_t v : trace.kept) kept[v] = true;
  for (std::size_t v : trace.kept) {
    for (std::size_t u : graph.in_neighbors(v)) {
      if (!kept[u]) {
        throw std::logic_error("kept vertex '" + graph.vertices()[v] +
                               "' has removed in-neighbor '" +
                               graph.vertices()[u] + "'");
      }
    }
  }
}

}  // namespace

std::pair<GraphicalGame, ReductionTrace> reduce_game(
    const GraphicalGame& game) {
  auto [graph, trace] = reduce_digraph(game.graph());
  assert_closed_under_in_neighbors(game.graph(), trace);
  std::vector<std::vector<std::string>> actions;
  std::vector<std::vector<Rational>> tables;
  for (std::size_t v : trace.kept) {
    actions.push_back(game.actions()[v]);
    tables.push_back(game.tables()[v]);
  }
  return {GraphicalGame(std::move(graph), std::move(actions), std::move(tables)),
          std::move(trace)};
}

std::pair<ColoredHypergraphicalGame, ReductionTrace> reduce_game(
    const ColoredHypergraphicalGame& game) {
  ReductionTrace trace = reduction_trace(game.influence_graph());
  assert_closed_under_in_neighbors(game.influence_graph(), trace);
  GameHypergraph graph(game.hypergraph().graph().induced(trace.kept));
  std::map<Color, std::vector<Rational>> tables;
  for (const auto& color : graph.graph().colors()) {
    tables.emplace(color, game.color_tables().at(color));
  }
  return {ColoredHypergraphicalGame(std::move(graph), game.actions(),
                                    std::move(tables)),
          std::move(trace)};
}

ActionProfile extend_psne(const LocalGame& game, const ReductionTrace& trace,
                          const ActionProfile& reduced) {
  if (reduced.actions.size() != trace.kept.size()) {
    throw PreconditionError("reduced profile covers " +
                            std::to_string(reduced.actions.size()) +
                            " players, reduced game has " +
                            std::to_string(trace.kept.size()));
  }
  ActionProfile full{std::vector<std::size_t>(game.num_players(), 0)};
  for (std::size_t k = 0; k < trace.kept.size(); ++k) {
    full.actions[trace.kept[k]] = reduced.actions[k];
  }
  // A vertex removed in round r only listens to kept vertices and vertices
  // removed in later rounds, so walking the rounds backwards sees every
  // in-neighbor assigned.
  for (auto round = trace.removal_rounds.rbegin();
       round != trace.removal_rounds.rend(); ++round) {
    for (std::size_t v : *round) {
      full.actions[v] = best_responses(game, v, full).front();
    }
  }
  if (!is_psne(game, full)) {
    throw PreconditionError(
        "extension is not a PSNE: the reduced profile was not a PSNE of the "
        "reduced game");
  }
  return full;
}

ActionProfile extend_psne(const LocalGame& game, const ActionProfile& reduced) {
  return extend_psne(game, reduction_trace(game.influence_graph()), reduced);
}

}  // namespace purenash
