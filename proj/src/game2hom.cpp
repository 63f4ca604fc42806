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

#include "purenash/game2hom.hpp"

#include <unordered_map>

namespace purenash {
namespace {

// Adds, for every assignment of the non-leading scope entries, one edge per
// maximizer of the leading entry.
void add_best_response_edges(std::span<const Rational> table,
                             std::span<const std::size_t> radices,
                             const std::vector<std::vector<std::size_t>>& labels,
                             const Color& color,
                             std::vector<Hyperedge>& edges) {
  std::size_t rest = 1;
  for (std::size_t k = 1; k < radices.size(); ++k) rest *= radices[k];
  std::vector<std::size_t> others(radices.size(), 0);
  for (std::size_t offset = 0; offset < rest; ++offset) {
    std::size_t code = offset;
    for (std::size_t k = radices.size(); k-- > 1;) {
      others[k] = code % radices[k];
      code /= radices[k];
    }
    const Rational* top = nullptr;
    for (std::size_t a = 0; a < radices[0]; ++a) {
      const Rational& value = table[a * rest + offset];
      if (top == nullptr || value > *top) top = &value;
    }
    for (std::size_t a = 0; a < radices[0]; ++a) {
      if (table[a * rest + offset] != *top) continue;
      Hyperedge edge{{labels[0][a]}, color};
      for (std::size_t k = 1; k < radices.size(); ++k) {
        edge.tuple.push_back(labels[k][others[k]]);
      }
      edges.push_back(std::move(edge));
    }
  }
}

}  // namespace

HomInstance game_to_hom(const ColoredHypergraphicalGame& game) {
  const std::size_t m = game.num_actions();
  std::vector<std::size_t> identity(m);
  for (std::size_t a = 0; a < m; ++a) identity[a] = a;
  std::vector<Hyperedge> edges;
  for (const auto& color : game.hypergraph().graph().colors()) {
    const std::size_t arity = *game.hypergraph().graph().arity(color);
    const std::vector<std::size_t> radices(arity, m);
    const std::vector<std::vector<std::size_t>> labels(arity, identity);
    add_best_response_edges(game.color_tables().at(color), radices, labels,
                            color, edges);
  }
  return HomInstance{game.hypergraph().graph(),
                     ColoredHypergraph(VertexSet(game.actions()),
                                       std::move(edges))};
}

HomInstance game_to_hom(const GraphicalGame& game) {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::vector<std::size_t>> label_of(game.num_players());
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    for (const auto& label : game.actions()[i]) {
      auto [it, fresh] = index.emplace(label, names.size());
      if (fresh) names.push_back(label);
      label_of[i].push_back(it->second);
    }
  }
  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    std::vector<std::size_t> radices;
    std::vector<std::vector<std::size_t>> labels;
    for (std::size_t j : game.scope(i)) {
      radices.push_back(game.num_actions(j));
      labels.push_back(label_of[j]);
    }
    add_best_response_edges(game.local_table(i), radices, labels,
                            game.players()[i], edges);
  }
  return HomInstance{induced_hypergraph(game.graph()).graph(),
                     ColoredHypergraph(VertexSet(std::move(names)),
                                       std::move(edges))};
}

ActionProfile profile_from_mapping(const LocalGame& game,
                                   const HomInstance& instance,
                                   const VertexMapping& mapping) {
  ActionProfile profile;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    profile.actions.push_back(game.action_index(
        i, instance.right.vertices()[mapping.image.at(i)]));
  }
  return profile;
}

VertexMapping mapping_from_profile(const LocalGame& game,
                                   const HomInstance& instance,
                                   const ActionProfile& profile) {
  VertexMapping mapping;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    mapping.image.push_back(instance.right.vertices().index_of(
        game.action_label(i, profile.actions.at(i))));
  }
  return mapping;
}

ColoredHypergraphicalGame graphical_to_chg(const GraphicalGame& game) {
  const auto& actions = game.actions();
  for (std::size_t i = 1; i < actions.size(); ++i) {
    if (actions[i] != actions[0]) {
      throw PreconditionError(
          "players '" + game.players()[0] + "' and '" + game.players()[i] +
          "' have different action lists; a colored hypergraphical game "
          "needs one shared list, so pad the game explicitly first");
    }
  }
  std::map<Color, std::vector<Rational>> tables;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    tables.emplace(game.players()[i], game.tables()[i]);
  }
  return ColoredHypergraphicalGame(
      induced_hypergraph(game.graph()),
      actions.empty() ? std::vector<std::string>{"1"} : actions[0],
      std::move(tables));
}

namespace {

template <class Game>
PsneResult decide(const Game& game, const SolveOptions& options) {
  PsneResult result;
  auto [reduced, trace] = reduce_game(game);
  result.trace = trace;
  if (reduced.num_players() == 0) {
    result.exists = true;
    result.backend = "greedy";
    result.witness = extend_psne(game, trace, ActionProfile{});
    return result;
  }

  const HomInstance instance = game_to_hom(reduced);
  HomInstance target = instance;
  std::optional<CoreResult> folded;
  if (options.core_first && instance.left.size() <= options.core_cap) {
    folded = core_with_retraction(instance.left, options.core_cap);
    target.left = folded->core;
    result.used_core = true;
  }

  const TreeDecomposition decomp =
      heuristic_decomposition(primal_graph(target.left));
  result.decomposition_width = decomp.width();
  std::optional<VertexMapping> found;
  if (decomp.width() <= options.width_threshold) {
    result.backend = "dp";
    found = dp_hom(target, decomp);
  } else {
    result.backend = "brute";
    found = brute_force_hom(target, options.mapping_cap);
  }
  if (!found) return result;

  VertexMapping mapping = *found;
  if (folded) {
    mapping.image.clear();
    for (std::size_t v : folded->retraction.image) {
      mapping.image.push_back(found->image[v]);
    }
  }
  const ActionProfile reduced_profile =
      profile_from_mapping(reduced, instance, mapping);
  result.exists = true;
  result.witness = extend_psne(game, trace, reduced_profile);
  return result;
}

}  // namespace

PsneResult decide_psne(const GraphicalGame& game, const SolveOptions& options) {
  return decide(game, options);
}

PsneResult decide_psne(const ColoredHypergraphicalGame& game,
                       const SolveOptions& options) {
  return decide(game, options);
}

}  // namespace purenash
