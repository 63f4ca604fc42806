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

#include "purenash/random.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace purenash::random {
namespace {

std::vector<VertexId> numbered(std::size_t n, const std::string& prefix = "") {
  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(prefix + std::to_string(i));
  return ids;
}

bool coin(Rng& rng, double p) {
  return std::bernoulli_distribution(std::clamp(p, 0.0, 1.0))(rng);
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::vector<std::size_t>> random_in_lists(Rng& rng, std::size_t n,
                                                      double density,
                                                      std::size_t max_in) {
  std::vector<std::vector<std::size_t>> in(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> sources(n);
    std::iota(sources.begin(), sources.end(), 0);
    std::shuffle(sources.begin(), sources.end(), rng);
    for (std::size_t u : sources) {
      if (u != v && in[v].size() < max_in && coin(rng, density)) {
        in[v].push_back(u);
      }
    }
  }
  return in;
}

Digraph from_in_lists(std::size_t n,
                      const std::vector<std::vector<std::size_t>>& in) {
  std::vector<Arc> arcs;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u : in[v]) arcs.emplace_back(u, v);
  }
  std::sort(arcs.begin(), arcs.end());
  return Digraph(VertexSet(numbered(n)), std::move(arcs));
}

std::vector<Rational> random_table(Rng& rng, std::size_t size) {
  std::vector<Rational> table;
  table.reserve(size);
  for (std::size_t k = 0; k < size; ++k) table.push_back(small_rational(rng));
  return table;
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t k = 0; k < exp; ++k) out *= base;
  return out;
}

}  // namespace

Rational small_rational(Rng& rng) {
  const long p = static_cast<long>(uniform(rng, 0, 8)) - 4;
  const long q = static_cast<long>(uniform(rng, 1, 3));
  Rational value(p, q);
  value.canonicalize();
  return value;
}

Digraph digraph(Rng& rng, std::size_t n, double density,
                std::size_t max_in_degree) {
  return from_in_lists(n, random_in_lists(rng, n, density, max_in_degree));
}

Digraph irreducible_digraph(Rng& rng, std::size_t n, double density,
                            std::size_t max_in_degree) {
  if (n < 2) return digraph(rng, n, 0.0, max_in_degree);
  auto in = random_in_lists(rng, n, density, max_in_degree);
  std::vector<bool> has_out(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u : in[v]) has_out[u] = true;
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (has_out[u]) continue;
    // every vertex then has an out-arc, so no sink survives pruning
    std::size_t v = uniform(rng, 0, n - 2);
    if (v >= u) ++v;
    in[v].push_back(u);
  }
  return from_in_lists(n, in);
}

Digraph strongly_connected_digraph(Rng& rng, std::size_t n, double density) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::set<Arc> arcs;
  if (n >= 2) {
    for (std::size_t k = 0; k < n; ++k) {
      arcs.emplace(order[k], order[(k + 1) % n]);
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && coin(rng, density)) arcs.emplace(u, v);
    }
  }
  return Digraph(VertexSet(numbered(n)),
                 std::vector<Arc>(arcs.begin(), arcs.end()));
}

GraphicalGame graphical_game(Rng& rng, std::size_t n, std::size_t max_actions,
                             double density, std::size_t min_actions) {
  Digraph graph = digraph(rng, n, density);
  std::vector<std::vector<std::string>> actions(n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t hi = std::max<std::size_t>(1, max_actions);
    actions[v] = numbered(uniform(rng, std::clamp<std::size_t>(min_actions, 1, hi), hi),
                          "a");
  }
  std::vector<std::vector<Rational>> tables(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t size = actions[v].size();
    for (std::size_t u : graph.in_neighbors(v)) size *= actions[u].size();
    tables[v] = random_table(rng, size);
  }
  return GraphicalGame(std::move(graph), std::move(actions), std::move(tables));
}

GameHypergraph game_hypergraph(Rng& rng, std::size_t n, double density,
                               std::size_t colors_per_arity) {
  auto in = random_in_lists(rng, n, density, 3);
  std::vector<Hyperedge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    Hyperedge edge{{v}, ""};
    edge.tuple.insert(edge.tuple.end(), in[v].begin(), in[v].end());
    edge.color = "k" + std::to_string(edge.tuple.size()) + "_" +
                 std::to_string(uniform(rng, 0, std::max<std::size_t>(
                                                    1, colors_per_arity) - 1));
    edges.push_back(std::move(edge));
  }
  return GameHypergraph(ColoredHypergraph(VertexSet(numbered(n)), std::move(edges)));
}

ColoredHypergraphicalGame chg(Rng& rng, std::size_t n, std::size_t actions,
                              double density) {
  GameHypergraph graph = game_hypergraph(rng, n, density);
  std::map<Color, std::vector<Rational>> tables;
  for (const auto& color : graph.graph().colors()) {
    tables[color] = random_table(rng, power(actions, *graph.graph().arity(color)));
  }
  return ColoredHypergraphicalGame(std::move(graph), numbered(actions, "a"),
                                   std::move(tables));
}

ColoredHypergraph hypergraph(Rng& rng, std::size_t n, std::size_t edges,
                             std::size_t colors, std::size_t max_arity) {
  if (n == 0 || colors == 0) return ColoredHypergraph(VertexSet(numbered(n)), {});
  std::vector<std::size_t> arity(colors);
  for (auto& a : arity) a = uniform(rng, 1, std::min(max_arity, n));
  std::set<std::pair<Color, std::vector<std::size_t>>> seen;
  std::vector<Hyperedge> out;
  for (std::size_t e = 0; e < edges; ++e) {
    const std::size_t c = uniform(rng, 0, colors - 1);
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(arity[c]);
    Hyperedge edge{std::move(pool), "c" + std::to_string(c)};
    if (seen.emplace(edge.color, edge.tuple).second) out.push_back(std::move(edge));
  }
  return ColoredHypergraph(VertexSet(numbered(n)), std::move(out));
}

ColoredHypergraph target_for(Rng& rng, const ColoredHypergraph& left,
                             std::size_t vertices, double density,
                             double plant) {
  std::set<std::pair<Color, std::vector<std::size_t>>> edges;
  if (vertices > 0) {
    for (const auto& color : left.colors()) {
      const std::size_t arity = *left.arity(color);
      const std::size_t total = power(vertices, arity);
      for (std::size_t code = 0; code < total; ++code) {
        if (!coin(rng, density)) continue;
        std::vector<std::size_t> tuple(arity);
        std::size_t rest = code;
        for (std::size_t k = arity; k-- > 0;) {
          tuple[k] = rest % vertices;
          rest /= vertices;
        }
        edges.emplace(color, std::move(tuple));
      }
    }
    if (coin(rng, plant)) {
      std::vector<std::size_t> image(left.size());
      for (auto& x : image) x = uniform(rng, 0, vertices - 1);
      for (const auto& edge : left.edges()) {
        std::vector<std::size_t> tuple;
        for (std::size_t v : edge.tuple) tuple.push_back(image[v]);
        edges.emplace(edge.color, std::move(tuple));
      }
    }
  }
  std::vector<Hyperedge> out;
  for (auto& [color, tuple] : edges) out.push_back({tuple, color});
  std::shuffle(out.begin(), out.end(), rng);
  return ColoredHypergraph(VertexSet(numbered(vertices, "h")), std::move(out));
}

HomInstance hom_instance(Rng& rng, std::size_t left_vertices,
                         std::size_t right_vertices) {
  ColoredHypergraph left =
      hypergraph(rng, left_vertices, uniform(rng, 0, 2 * left_vertices), 3, 3);
  ColoredHypergraph right = target_for(rng, left, right_vertices,
                                       std::uniform_real_distribution<double>(
                                           0.1, 0.6)(rng),
                                       0.4);
  return HomInstance{std::move(left), std::move(right)};
}

}  // namespace purenash::random
