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

#include "purenash/gadgets.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace purenash {
namespace {

// Visits every tuple of `radices` in row-major order.
template <class Fn>
void for_each_tuple(const std::vector<std::size_t>& radices, Fn&& fn) {
  std::size_t count = 1;
  for (std::size_t r : radices) count *= r;
  std::vector<std::size_t> tuple(radices.size(), 0);
  for (std::size_t offset = 0; offset < count; ++offset) {
    std::size_t code = offset;
    for (std::size_t k = radices.size(); k-- > 0;) {
      tuple[k] = code % radices[k];
      code /= radices[k];
    }
    fn(offset, tuple);
  }
}

std::vector<std::string> numbered_labels(std::size_t from, std::size_t count,
                                         const std::string& prefix = "") {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(prefix + std::to_string(from + k));
  }
  return out;
}

}  // namespace

std::string_view gadget_variant_name(GadgetVariant variant) {
  switch (variant) {
    case GadgetVariant::kGraphicalTB: return "graphical_TB";
    case GadgetVariant::kChgFailure: return "chg_failure";
    case GadgetVariant::kCycleModP: return "cycle_mod_p";
    case GadgetVariant::kStronglyConnected: return "strongly_connected";
    case GadgetVariant::kDirectXY: return "direct_xy";
    case GadgetVariant::kExample15: return "example15";
  }
  return "unknown";
}

std::optional<GadgetVariant> parse_gadget_variant(std::string_view name) {
  for (auto v : {GadgetVariant::kGraphicalTB, GadgetVariant::kChgFailure,
                 GadgetVariant::kCycleModP, GadgetVariant::kStronglyConnected,
                 GadgetVariant::kDirectXY, GadgetVariant::kExample15}) {
    if (gadget_variant_name(v) == name) return v;
  }
  return std::nullopt;
}

void check_gadget_spec(const GadgetSpec& spec) {
  auto need = [&](const std::string& key, long minimum) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) {
      throw PreconditionError(std::string(gadget_variant_name(spec.variant)) +
                              " needs parameter " + key);
    }
    if (it->second < minimum) {
      throw PreconditionError(key + " must be at least " +
                              std::to_string(minimum));
    }
  };
  switch (spec.variant) {
    case GadgetVariant::kCycleModP:
      need("n", 2);
      need("p", 2);
      break;
    case GadgetVariant::kExample15:
      need("m", 1);
      break;
    default:
      break;
  }
}

std::string fresh_label(const std::string& base,
                        const std::vector<std::string>& taken) {
  std::string label = base;
  while (std::find(taken.begin(), taken.end(), label) != taken.end()) {
    label += "'";
  }
  return label;
}

std::vector<std::vector<std::size_t>> terminal_cycles(const Digraph& graph) {
  const SccPartition parts = scc(graph);
  const auto& rank = graph.vertices().rank();
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t c = 0; c < parts.components.size(); ++c) {
    if (!parts.terminal[c]) continue;
    const auto& members = parts.components[c];
    if (members.size() < 2) {
      throw PreconditionError("terminal component {'" +
                              graph.vertices()[members.front()] +
                              "'} is a sink; the graph is reducible");
    }
    const std::size_t start = *std::min_element(
        members.begin(), members.end(),
        [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
    // BFS from start; the first vertex found with an arc back closes the
    // shortest cycle through start.
    std::vector<std::size_t> parent(graph.size(), graph.size());
    std::queue<std::size_t> queue;
    queue.push(start);
    parent[start] = start;
    std::size_t closing = graph.size();
    while (!queue.empty() && closing == graph.size()) {
      const std::size_t x = queue.front();
      queue.pop();
      if (x != start && graph.has_arc(x, start)) {
        closing = x;
        break;
      }
      for (std::size_t y : graph.out_neighbors(x)) {
        if (parent[y] == graph.size()) {
          parent[y] = x;
          queue.push(y);
        }
      }
    }
    std::vector<std::size_t> cycle{closing};
    while (cycle.back() != start) cycle.push_back(parent[cycle.back()]);
    std::reverse(cycle.begin(), cycle.end());
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

GraphicalGame hom_to_gg(const Digraph& graph, const ColoredHypergraph& target) {
  if (graph.size() == 0) throw PreconditionError("hom_to_gg needs a nonempty graph");
  if (!is_irreducible(graph)) {
    throw PreconditionError("hom_to_gg needs an irreducible graph");
  }
  const std::size_t h = target.size();
  std::vector<std::string> labels = target.vertices().ids();
  labels.push_back(fresh_label("T", target.vertices().ids()));
  labels.push_back(fresh_label("B", target.vertices().ids()));
  const std::size_t m = labels.size();

  // predecessor on a fixed cycle, and whether the player leads its cycle
  std::vector<std::size_t> predecessor(graph.size(), graph.size());
  std::vector<bool> leads(graph.size(), false);
  for (const auto& cycle : terminal_cycles(graph)) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      predecessor[cycle[k]] = cycle[(k + cycle.size() - 1) % cycle.size()];
    }
    leads[cycle.front()] = true;
  }

  std::vector<std::vector<Rational>> tables(graph.size());
  for (std::size_t i = 0; i < graph.size(); ++i) {
    std::vector<std::size_t> scope{i};
    const auto& in = graph.in_neighbors(i);
    scope.insert(scope.end(), in.begin(), in.end());
    std::size_t pred_slot = scope.size();
    if (predecessor[i] != graph.size()) {
      pred_slot = static_cast<std::size_t>(
          std::find(scope.begin(), scope.end(), predecessor[i]) -
          scope.begin());
    }
    const std::vector<std::size_t> radices(scope.size(), m);
    auto& table = tables[i];
    table.resize([&] {
      std::size_t c = 1;
      for (std::size_t r : radices) c *= r;
      return c;
    }());
    for_each_tuple(radices, [&](std::size_t offset,
                                const std::vector<std::size_t>& tuple) {
      const bool in_target =
          std::all_of(tuple.begin(), tuple.end(),
                      [&](std::size_t a) { return a < h; }) &&
          target.contains(graph.vertices()[i], tuple);
      int value = 0;
      if (in_target) {
        value = 100;
      } else if (tuple[0] < h) {
        value = -100;
      } else if (pred_slot < scope.size() && tuple[pred_slot] >= h) {
        const bool same = tuple[0] == tuple[pred_slot];
        value = (same != leads[i]) ? 1 : -1;
      }
      table[offset] = value;
    });
  }
  std::vector<std::vector<std::string>> actions(graph.size(), labels);
  return GraphicalGame(graph, std::move(actions), std::move(tables));
}

ColoredHypergraphicalGame cycle_game(std::size_t n, std::size_t p) {
  if (n < 2 || p < 2) throw PreconditionError("cycle_game needs n >= 2, p >= 2");
  const auto names = numbered_labels(0, n, "v");
  std::vector<Hyperedge> edges;
  for (std::size_t k = 0; k < n; ++k) {
    edges.push_back({{k, (k + n - 1) % n}, "c"});
  }
  std::vector<Rational> table(p * p, 0);
  for (std::size_t b = 0; b < p; ++b) table[((b + 1) % p) * p + b] = 1;
  return ColoredHypergraphicalGame(
      GameHypergraph(ColoredHypergraph(VertexSet(names), std::move(edges))),
      numbered_labels(0, p), {{"c", std::move(table)}});
}

ColoredHypergraphicalGame strongly_connected_game(const Digraph& graph) {
  const std::size_t n = graph.size();
  if (n < 2 || scc(graph).components.size() != 1) {
    throw PreconditionError(
        "strongly_connected_game needs a strongly connected graph with at "
        "least two vertices");
  }
  const std::size_t m = n + 1;
  std::vector<Hyperedge> edges;
  std::map<Color, std::vector<Rational>> tables;
  for (std::size_t v = 0; v < n; ++v) {
    const auto& in = graph.in_neighbors(v);
    Hyperedge edge{{v}, "deg" + std::to_string(in.size())};
    edge.tuple.insert(edge.tuple.end(), in.begin(), in.end());
    if (!tables.contains(edge.color)) {
      const std::vector<std::size_t> radices(edge.tuple.size(), m);
      std::vector<Rational> table;
      for_each_tuple(radices, [&](std::size_t,
                                  const std::vector<std::size_t>& tuple) {
        const std::size_t top = *std::max_element(tuple.begin() + 1, tuple.end());
        table.emplace_back(tuple[0] == (top + 1) % m ? 1 : 0);
      });
      tables.emplace(edge.color, std::move(table));
    }
    edges.push_back(std::move(edge));
  }
  return ColoredHypergraphicalGame(
      GameHypergraph(ColoredHypergraph(graph.vertices(), std::move(edges))),
      numbered_labels(0, m), std::move(tables));
}

Digraph active_subgraph(const Digraph& graph, const ActionProfile& profile) {
  std::vector<Arc> arcs;
  for (std::size_t v = 0; v < graph.size(); ++v) {
    const auto& in = graph.in_neighbors(v);
    if (in.empty()) continue;
    std::size_t top = 0;
    for (std::size_t u : in) top = std::max(top, profile.actions.at(u));
    for (std::size_t u : in) {
      if (profile.actions[u] == top) arcs.emplace_back(u, v);
    }
  }
  return Digraph(graph.vertices(), std::move(arcs));
}

ColoredHypergraphicalGame hom_to_chg(const GameHypergraph& graph,
                                     const ColoredHypergraph& target) {
  const Digraph digraph = induced_digraph(graph);
  if (graph.size() == 0) throw PreconditionError("hom_to_chg needs a nonempty graph");
  if (!is_irreducible(digraph)) {
    throw PreconditionError("hom_to_chg needs an irreducible hypergraph");
  }
  const std::size_t n = graph.size();
  const std::size_t h = target.size();
  const std::size_t failures = 2 * n + 1;
  std::vector<std::string> labels = target.vertices().ids();
  for (std::size_t f = 1; f <= failures; ++f) {
    labels.push_back(fresh_label("f" + std::to_string(f), target.vertices().ids()));
  }
  const std::size_t m = labels.size();
  // failure action f (1-based) has index h + f - 1
  auto failure_of = [&](std::size_t a) { return a - h + 1; };

  std::map<Color, std::vector<Rational>> tables;
  for (const auto& color : graph.graph().colors()) {
    const std::size_t arity = *graph.graph().arity(color);
    const std::vector<std::size_t> radices(arity, m);
    std::vector<Rational> table;
    for_each_tuple(radices, [&](std::size_t,
                                const std::vector<std::size_t>& tuple) {
      const bool in_target =
          std::all_of(tuple.begin(), tuple.end(),
                      [&](std::size_t a) { return a < h; }) &&
          target.contains(color, tuple);
      if (in_target) {
        table.emplace_back(100);
        return;
      }
      std::size_t top = 0;  // largest failure action among neighbors, 0 if none
      for (std::size_t k = 1; k < tuple.size(); ++k) {
        if (tuple[k] >= h) top = std::max(top, failure_of(tuple[k]));
      }
      if (top == 0) {
        table.emplace_back(tuple[0] == h ? 1 : -100);
        return;
      }
      const std::size_t reply = top < failures ? top + 1 : n + 1;
      table.emplace_back(tuple[0] >= h && failure_of(tuple[0]) == reply ? 1 : 0);
    });
    tables.emplace(color, std::move(table));
  }
  return ColoredHypergraphicalGame(graph, std::move(labels), std::move(tables));
}

GraphicalGame hom_to_gg_direct(const ColoredHypergraph& graph,
                               const ColoredHypergraph& target) {
  const std::size_t n = graph.size();
  const std::size_t edge_count = graph.edges().size();
  if (n > 0 && target.size() == 0) {
    throw PreconditionError("hom_to_gg_direct needs a target with vertices");
  }
  std::vector<std::string> names = graph.vertices().ids();
  for (std::size_t e = 0; e < edge_count; ++e) {
    names.push_back(fresh_label("x(e" + std::to_string(e) + ")", names));
    names.push_back(fresh_label("y(e" + std::to_string(e) + ")", names));
  }
  auto x_of = [&](std::size_t e) { return n + 2 * e; };
  auto y_of = [&](std::size_t e) { return n + 2 * e + 1; };

  std::vector<Arc> arcs;
  for (std::size_t e = 0; e < edge_count; ++e) {
    std::set<std::size_t> members(graph.edges()[e].tuple.begin(),
                                  graph.edges()[e].tuple.end());
    for (std::size_t v : members) {
      arcs.emplace_back(v, x_of(e));
      arcs.emplace_back(v, y_of(e));
    }
    arcs.emplace_back(x_of(e), y_of(e));
    arcs.emplace_back(y_of(e), x_of(e));
  }
  Digraph digraph(VertexSet(names), std::move(arcs));

  std::vector<std::vector<std::string>> actions(names.size());
  std::vector<std::vector<Rational>> tables(names.size());
  for (std::size_t v = 0; v < n; ++v) {
    actions[v] = target.vertices().ids();
    tables[v].assign(target.size(), Rational(1));
  }
  constexpr std::size_t kGood = 0;
  for (std::size_t e = 0; e < edge_count; ++e) {
    const Hyperedge& edge = graph.edges()[e];
    for (const bool is_x : {true, false}) {
      const std::size_t self = is_x ? x_of(e) : y_of(e);
      const std::size_t other = is_x ? y_of(e) : x_of(e);
      actions[self] = {"g", "b"};
      std::vector<std::size_t> scope{self};
      const auto& in = digraph.in_neighbors(self);
      scope.insert(scope.end(), in.begin(), in.end());
      std::vector<std::size_t> radices;
      for (std::size_t j : scope) radices.push_back(j < n ? target.size() : 2);
      auto slot = [&](std::size_t player) {
        return static_cast<std::size_t>(
            std::find(scope.begin(), scope.end(), player) - scope.begin());
      };
      std::vector<std::size_t> edge_slots;
      for (std::size_t v : edge.tuple) edge_slots.push_back(slot(v));
      const std::size_t other_slot = slot(other);
      std::vector<std::size_t> image(edge.tuple.size());
      auto& table = tables[self];
      for_each_tuple(radices, [&](std::size_t,
                                  const std::vector<std::size_t>& tuple) {
        for (std::size_t k = 0; k < image.size(); ++k) {
          image[k] = tuple[edge_slots[k]];
        }
        const bool correct = target.contains(edge.color, image);
        const bool x_good = (is_x ? tuple[0] : tuple[other_slot]) == kGood;
        const bool y_good = (is_x ? tuple[other_slot] : tuple[0]) == kGood;
        bool pays;
        if (correct) {
          pays = x_good && y_good;
        } else if (is_x) {
          pays = x_good == y_good;
        } else {
          pays = x_good != y_good;
        }
        table.emplace_back(pays ? 1 : 0);
      });
    }
  }
  return GraphicalGame(std::move(digraph), std::move(actions),
                       std::move(tables));
}

GameHypergraph example15(std::size_t m) {
  if (m < 1) throw PreconditionError("example15 needs m >= 1");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i) names.push_back("l_" + std::to_string(i));
  for (std::size_t j = 1; j <= m; ++j) names.push_back("r_" + std::to_string(j));
  for (const char* kind : {"x_", "y_"}) {
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = 1; j <= m; ++j) {
        names.push_back(kind + std::to_string(i) + "_" + std::to_string(j));
      }
    }
  }
  auto l = [](std::size_t i) { return i - 1; };
  auto r = [m](std::size_t j) { return m + j - 1; };
  auto x = [m](std::size_t i, std::size_t j) {
    return 2 * m + (i - 1) * m + (j - 1);
  };
  auto y = [m](std::size_t i, std::size_t j) {
    return 2 * m + m * m + (i - 1) * m + (j - 1);
  };
  std::vector<Hyperedge> edges;
  for (std::size_t i = 1; i <= m; ++i) edges.push_back({{l(i)}, "L"});
  for (std::size_t j = 1; j <= m; ++j) edges.push_back({{r(j)}, "R"});
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      edges.push_back({{x(i, j), y(i, j), l(i), r(j)}, "X"});
    }
  }
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      edges.push_back({{y(i, j), x(i, j), l(i), r(j)}, "Y"});
    }
  }
  return GameHypergraph(ColoredHypergraph(VertexSet(names), std::move(edges)));
}

ColoredHypergraph example15_fragment(std::size_t m) {
  const GameHypergraph full = example15(m);
  const auto& v = full.vertices();
  const std::vector<std::size_t> keep{v.index_of("l_1"), v.index_of("r_1"),
                                      v.index_of("x_1_1"), v.index_of("y_1_1")};
  return full.graph().induced(keep);
}

ColoredHypergraphicalGame example15_game(std::size_t m, std::size_t actions) {
  if (actions < 1) throw PreconditionError("example15_game needs an action");
  GameHypergraph graph = example15(m);
  std::map<Color, std::vector<Rational>> tables;
  for (const auto& color : graph.graph().colors()) {
    std::size_t size = 1;
    for (std::size_t k = 0; k < *graph.graph().arity(color); ++k) size *= actions;
    tables.emplace(color, std::vector<Rational>(size, 0));
  }
  return ColoredHypergraphicalGame(std::move(graph),
                                   numbered_labels(1, actions),
                                   std::move(tables));
}

}  // namespace purenash
