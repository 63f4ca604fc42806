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

#include "purenash/games.hpp"

#include <algorithm>
#include <set>

namespace purenash {
namespace {

void check_action_labels(const std::vector<std::string>& labels,
                         const std::string& owner) {
  if (labels.empty()) throw InvariantError(owner + " has no actions");
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw InvariantError(owner + " repeats action '" + label + "'");
    }
  }
}

std::vector<std::size_t> scope_radices(const LocalGame& game,
                                       std::size_t player) {
  std::vector<std::size_t> radices;
  for (std::size_t j : game.scope(player)) {
    radices.push_back(game.num_actions(j));
  }
  return radices;
}

std::size_t product(std::span<const std::size_t> values) {
  std::size_t total = 1;
  for (std::size_t v : values) total = saturating_mul(total, v);
  return total;
}

}  // namespace

std::size_t LocalGame::action_index(std::size_t player,
                                    const std::string& label) const {
  for (std::size_t a = 0; a < num_actions(player); ++a) {
    if (action_label(player, a) == label) return a;
  }
  throw InvariantError("player '" + players()[player] + "' has no action '" +
                       label + "'");
}

// ---------------------------------------------------------------------------

GraphicalGame::GraphicalGame(Digraph graph,
                             std::vector<std::vector<std::string>> actions,
                             std::vector<std::vector<Rational>> tables)
    : graph_(std::move(graph)),
      actions_(std::move(actions)),
      tables_(std::move(tables)) {
  const std::size_t n = graph_.size();
  if (actions_.size() != n || tables_.size() != n) {
    throw InvariantError("graphical game needs one action list and one table "
                         "per player");
  }
  for (std::size_t i = 0; i < n; ++i) {
    check_action_labels(actions_[i], "player '" + graph_.vertices()[i] + "'");
  }
  scopes_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    scopes_[i].push_back(i);
    const auto& in = graph_.in_neighbors(i);
    scopes_[i].insert(scopes_[i].end(), in.begin(), in.end());
    const std::size_t expected = product(scope_radices(*this, i));
    if (tables_[i].size() != expected) {
      throw InvariantError("table of player '" + graph_.vertices()[i] +
                           "' has " + std::to_string(tables_[i].size()) +
                           " entries, expected " + std::to_string(expected));
    }
  }
}

bool GraphicalGame::operator==(const GraphicalGame& other) const {
  return graph_ == other.graph_ && actions_ == other.actions_ &&
         tables_ == other.tables_;
}

ColoredHypergraphicalGame::ColoredHypergraphicalGame(
    GameHypergraph graph, std::vector<std::string> actions,
    std::map<Color, std::vector<Rational>> tables)
    : graph_(std::move(graph)),
      actions_(std::move(actions)),
      tables_(std::move(tables)) {
  check_action_labels(actions_, "colored hypergraphical game");
  const auto& colors = graph_.graph().colors();
  for (const auto& color : colors) {
    auto it = tables_.find(color);
    if (it == tables_.end()) {
      throw InvariantError("no table for color '" + color + "'");
    }
    std::size_t expected = 1;
    for (std::size_t k = 0; k < *graph_.graph().arity(color); ++k) {
      expected = saturating_mul(expected, actions_.size());
    }
    if (it->second.size() != expected) {
      throw InvariantError("table of color '" + color + "' has " +
                           std::to_string(it->second.size()) +
                           " entries, expected " + std::to_string(expected));
    }
  }
  for (const auto& [color, table] : tables_) {
    if (!graph_.graph().arity(color)) {
      throw InvariantError("table given for unused color '" + color + "'");
    }
  }
  digraph_ = induced_digraph(graph_);
}

bool ColoredHypergraphicalGame::operator==(
    const ColoredHypergraphicalGame& other) const {
  return graph_ == other.graph_ && actions_ == other.actions_ &&
         tables_ == other.tables_;
}

// ---------------------------------------------------------------------------

std::size_t table_offset(std::span<const std::size_t> radices,
                         std::span<const std::size_t> tuple) {
  std::size_t offset = 0;
  for (std::size_t k = 0; k < radices.size(); ++k) {
    offset = offset * radices[k] + tuple[k];
  }
  return offset;
}

void check_profile(const LocalGame& game, const ActionProfile& profile) {
  if (profile.actions.size() != game.num_players()) {
    throw InvariantError("profile covers " +
                         std::to_string(profile.actions.size()) +
                         " players, game has " +
                         std::to_string(game.num_players()));
  }
  for (std::size_t i = 0; i < profile.actions.size(); ++i) {
    if (profile.actions[i] >= game.num_actions(i)) {
      throw InvariantError("action out of range for player '" +
                           game.players()[i] + "'");
    }
  }
}

Rational utility(const LocalGame& game, std::size_t player,
                 const ActionProfile& profile) {
  const auto scope = game.scope(player);
  std::vector<std::size_t> tuple;
  tuple.reserve(scope.size());
  for (std::size_t j : scope) tuple.push_back(profile.actions.at(j));
  const auto radices = scope_radices(game, player);
  const auto table = game.local_table(player);
  const std::size_t offset = table_offset(radices, tuple);
  if (offset >= table.size()) {
    throw InvariantError("missing table entry for player '" +
                         game.players()[player] + "'");
  }
  return table[offset];
}

namespace {

// Offsets of the player's own actions given everyone else's: the player is
// the first scope entry, so its stride is the product of the other radices.
std::pair<std::size_t, std::size_t> own_action_slice(
    const LocalGame& game, std::size_t player, const ActionProfile& profile) {
  const auto scope = game.scope(player);
  std::size_t base = 0;
  std::size_t stride = 1;
  for (std::size_t k = scope.size(); k-- > 1;) {
    base += profile.actions[scope[k]] * stride;
    stride *= game.num_actions(scope[k]);
  }
  return {base, stride};
}

}  // namespace

std::vector<std::size_t> best_responses(const LocalGame& game,
                                        std::size_t player,
                                        const ActionProfile& profile) {
  const auto [base, stride] = own_action_slice(game, player, profile);
  const auto table = game.local_table(player);
  std::vector<std::size_t> best;
  const Rational* top = nullptr;
  for (std::size_t a = 0; a < game.num_actions(player); ++a) {
    const Rational& value = table[base + a * stride];
    if (top == nullptr || value > *top) {
      top = &value;
      best.assign(1, a);
    } else if (value == *top) {
      best.push_back(a);
    }
  }
  return best;
}

namespace {

bool plays_best_response(const LocalGame& game, std::size_t player,
                         const ActionProfile& profile) {
  const auto [base, stride] = own_action_slice(game, player, profile);
  const auto table = game.local_table(player);
  const Rational& current = table[base + profile.actions[player] * stride];
  for (std::size_t a = 0; a < game.num_actions(player); ++a) {
    if (table[base + a * stride] > current) return false;
  }
  return true;
}

}  // namespace

bool is_psne(const LocalGame& game, const ActionProfile& profile) {
  check_profile(game, profile);
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    if (!plays_best_response(game, i, profile)) return false;
  }
  return true;
}

std::size_t profile_count(const LocalGame& game) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    total = saturating_mul(total, game.num_actions(i));
  }
  return total;
}

std::optional<ActionProfile> brute_force_psne(const LocalGame& game,
                                              std::size_t cap) {
  const std::size_t total = profile_count(game);
  if (total > cap) {
    throw CapExceeded("brute_force_psne",
                      "profile space exceeds cap " + std::to_string(cap));
  }
  const std::size_t n = game.num_players();
  ActionProfile profile{std::vector<std::size_t>(n, 0)};
  while (true) {
    bool stable = true;
    for (std::size_t i = 0; i < n && stable; ++i) {
      stable = plays_best_response(game, i, profile);
    }
    if (stable) return profile;
    // Odometer: the last player is the least significant digit.
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++profile.actions[k] < game.num_actions(k)) break;
      profile.actions[k] = 0;
      if (k == 0) return std::nullopt;
    }
    if (n == 0) return std::nullopt;
  }
}

GraphicalGame expand_to_graphical(const ColoredHypergraphicalGame& game) {
  const Digraph& graph = game.influence_graph();
  const std::size_t n = graph.size();
  const std::size_t m = game.num_actions();
  std::vector<std::vector<std::string>> actions(n, game.actions());
  std::vector<std::vector<Rational>> tables(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> target_scope{i};
    const auto& in = graph.in_neighbors(i);
    target_scope.insert(target_scope.end(), in.begin(), in.end());
    const auto source_scope = game.scope(i);
    // position in the lead edge of each graphical scope entry
    std::vector<std::size_t> where(target_scope.size());
    for (std::size_t k = 0; k < target_scope.size(); ++k) {
      where[k] = static_cast<std::size_t>(
          std::find(source_scope.begin(), source_scope.end(),
                    target_scope[k]) -
          source_scope.begin());
    }
    const std::vector<std::size_t> radices(target_scope.size(), m);
    const auto source = game.local_table(i);
    std::size_t count = 1;
    for (std::size_t k = 0; k < target_scope.size(); ++k) count *= m;
    tables[i].resize(count);
    std::vector<std::size_t> local(target_scope.size(), 0);
    std::vector<std::size_t> permuted(target_scope.size(), 0);
    for (std::size_t offset = 0; offset < count; ++offset) {
      std::size_t rest = offset;
      for (std::size_t k = target_scope.size(); k-- > 0;) {
        local[k] = rest % m;
        rest /= m;
      }
      for (std::size_t k = 0; k < local.size(); ++k) permuted[where[k]] = local[k];
      tables[i][offset] = source[table_offset(radices, permuted)];
    }
  }
  return GraphicalGame(graph, std::move(actions), std::move(tables));
}

std::vector<std::string> profile_labels(const LocalGame& game,
                                        const ActionProfile& profile) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < profile.actions.size(); ++i) {
    out.push_back(game.action_label(i, profile.actions[i]));
  }
  return out;
}

}  // namespace purenash
