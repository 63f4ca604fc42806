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

#ifndef PURENASH_GAMES_HPP_
#define PURENASH_GAMES_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "purenash/core.hpp"
#include "purenash/graphs.hpp"

namespace purenash {

// One action index per player, players in vertex declaration order.
struct ActionProfile {
  std::vector<std::size_t> actions;

  bool operator==(const ActionProfile&) const = default;
};

// What every game representation here shares: each player's utility is a
// dense table over the actions of a scope of players, the player itself
// first. Tables are row-major with the first scope entry most significant,
// so the last scope entry varies fastest.
class LocalGame {
 public:
  virtual ~LocalGame() = default;

  virtual const VertexSet& players() const = 0;
  virtual const Digraph& influence_graph() const = 0;
  virtual std::size_t num_actions(std::size_t player) const = 0;
  virtual const std::string& action_label(std::size_t player,
                                          std::size_t action) const = 0;
  virtual std::span<const std::size_t> scope(std::size_t player) const = 0;
  virtual std::span<const Rational> local_table(std::size_t player) const = 0;

  std::size_t num_players() const { return players().size(); }
  // Throws InvariantError for unknown labels.
  std::size_t action_index(std::size_t player, const std::string& label) const;
};

// Graphical game: a digraph plus, per player, an action list and a table over
// N(i) = (i, in-neighbors ascending).
class GraphicalGame : public LocalGame {
 public:
  GraphicalGame() = default;
  // Throws InvariantError if an action list is empty or has duplicate labels,
  // or a table's length does not match its neighborhood.
  GraphicalGame(Digraph graph, std::vector<std::vector<std::string>> actions,
                std::vector<std::vector<Rational>> tables);

  const Digraph& graph() const { return graph_; }
  const std::vector<std::vector<std::string>>& actions() const {
    return actions_;
  }
  const std::vector<std::vector<Rational>>& tables() const { return tables_; }

  const VertexSet& players() const override { return graph_.vertices(); }
  const Digraph& influence_graph() const override { return graph_; }
  std::size_t num_actions(std::size_t player) const override {
    return actions_[player].size();
  }
  const std::string& action_label(std::size_t player,
                                  std::size_t action) const override {
    return actions_[player][action];
  }
  std::span<const std::size_t> scope(std::size_t player) const override {
    return scopes_[player];
  }
  std::span<const Rational> local_table(std::size_t player) const override {
    return tables_[player];
  }

  bool operator==(const GraphicalGame& other) const;

 private:
  Digraph graph_;
  std::vector<std::vector<std::string>> actions_;
  std::vector<std::vector<Rational>> tables_;
  std::vector<std::vector<std::size_t>> scopes_;
};

// Colored hypergraphical game: all players share the action list; players
// whose lead edges share a color share the table of that color, read in the
// order of the edge tuple.
class ColoredHypergraphicalGame : public LocalGame {
 public:
  ColoredHypergraphicalGame() = default;
  // Throws InvariantError when a used color lacks a table, a table has the
  // wrong length, a table is given for an unused color, or the action list
  // is empty or has duplicates.
  ColoredHypergraphicalGame(GameHypergraph graph,
                            std::vector<std::string> actions,
                            std::map<Color, std::vector<Rational>> tables);

  const GameHypergraph& hypergraph() const { return graph_; }
  const std::vector<std::string>& actions() const { return actions_; }
  std::size_t num_actions() const { return actions_.size(); }
  const std::map<Color, std::vector<Rational>>& color_tables() const {
    return tables_;
  }

  const VertexSet& players() const override { return graph_.vertices(); }
  const Digraph& influence_graph() const override { return digraph_; }
  std::size_t num_actions(std::size_t) const override {
    return actions_.size();
  }
  const std::string& action_label(std::size_t,
                                  std::size_t action) const override {
    return actions_[action];
  }
  std::span<const std::size_t> scope(std::size_t player) const override {
    return graph_.lead_edge(player).tuple;
  }
  std::span<const Rational> local_table(std::size_t player) const override {
    return tables_.at(graph_.lead_edge(player).color);
  }

  bool operator==(const ColoredHypergraphicalGame& other) const;

 private:
  GameHypergraph graph_;
  std::vector<std::string> actions_;
  std::map<Color, std::vector<Rational>> tables_;
  Digraph digraph_;
};

// Row-major offset of a tuple of action indices in a table whose dimensions
// are `radices`.
std::size_t table_offset(std::span<const std::size_t> radices,
                         std::span<const std::size_t> tuple);

// Throws InvariantError when the profile is not total or out of range.
void check_profile(const LocalGame& game, const ActionProfile& profile);

Rational utility(const LocalGame& game, std::size_t player,
                 const ActionProfile& profile);

// All maximizers of `player`'s utility against the rest of `profile` (the
// player's own entry is ignored), ascending. Never empty.
std::vector<std::size_t> best_responses(const LocalGame& game,
                                        std::size_t player,
                                        const ActionProfile& profile);

bool is_psne(const LocalGame& game, const ActionProfile& profile);

inline constexpr std::size_t kDefaultProfileCap = 10'000'000;

// Number of action profiles, saturating.
std::size_t profile_count(const LocalGame& game);

// First PSNE in odometer order: the first player is the most significant
// digit and actions run in declared order. Throws CapExceeded when the
// profile space exceeds `cap`.
std::optional<ActionProfile> brute_force_psne(
    const LocalGame& game, std::size_t cap = kDefaultProfileCap);

// Expands a CHG into the graphical game it represents: same players, the
// induced digraph, and each player's color table re-indexed to
// (player, in-neighbors ascending).
GraphicalGame expand_to_graphical(const ColoredHypergraphicalGame& game);

// Human-readable labels of a profile.
std::vector<std::string> profile_labels(const LocalGame& game,
                                        const ActionProfile& profile);

}  // namespace purenash

#endif  // PURENASH_GAMES_HPP_
