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

#include "purenash/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace purenash {

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw InvariantError("duplicate vertex '" + ids_[i] + "'");
    }
  }
  std::vector<std::size_t> order(ids_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return vertex_less(ids_[a], ids_[b]);
  });
  rank_.assign(ids_.size(), 0);
  for (std::size_t r = 0; r < order.size(); ++r) rank_[order[r]] = r;
}

std::optional<std::size_t> VertexSet::find(const VertexId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t VertexSet::index_of(const VertexId& id) const {
  auto found = find(id);
  if (!found) throw InvariantError("'" + id + "' is not a declared vertex");
  return *found;
}

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(VertexSet vertices, std::vector<Arc> arcs)
    : vertices_(std::move(vertices)), arcs_(std::move(arcs)) {
  const std::size_t n = vertices_.size();
  out_.assign(n, {});
  in_.assign(n, {});
  std::set<Arc> seen;
  for (const auto& [u, v] : arcs_) {
    if (u >= n || v >= n) throw InvariantError("arc endpoint out of range");
    if (u == v) {
      throw InvariantError("self-loop on '" + vertices_[u] +
                           "': a player always observes itself");
    }
    if (!seen.insert({u, v}).second) {
      throw InvariantError("duplicate arc ('" + vertices_[u] + "', '" +
                           vertices_[v] + "')");
    }
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  const auto& rank = vertices_.rank();
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(out_[v].begin(), out_[v].end());
    std::sort(in_[v].begin(), in_[v].end(),
              [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
  }
}

namespace {

std::vector<Arc> resolve_arcs(
    const VertexSet& vertices,
    const std::vector<std::pair<VertexId, VertexId>>& arcs) {
  std::vector<Arc> out;
  out.reserve(arcs.size());
  for (const auto& [u, v] : arcs) {
    out.emplace_back(vertices.index_of(u), vertices.index_of(v));
  }
  return out;
}

}  // namespace

Digraph::Digraph(std::vector<VertexId> vertices,
                 const std::vector<std::pair<VertexId, VertexId>>& arcs)
    : Digraph(VertexSet(std::move(vertices)), {}) {
  *this = Digraph(vertices_, resolve_arcs(vertices_, arcs));
}

bool Digraph::has_arc(std::size_t from, std::size_t to) const {
  return std::binary_search(out_[from].begin(), out_[from].end(), to);
}

Digraph Digraph::induced(std::span<const std::size_t> keep) const {
  std::vector<VertexId> ids;
  std::vector<std::size_t> remap(size(), size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    remap[keep[i]] = i;
    ids.push_back(vertices_[keep[i]]);
  }
  std::vector<Arc> arcs;
  for (const auto& [u, v] : arcs_) {
    if (remap[u] != size() && remap[v] != size()) {
      arcs.emplace_back(remap[u], remap[v]);
    }
  }
  return Digraph(VertexSet(std::move(ids)), std::move(arcs));
}

bool Digraph::operator==(const Digraph& other) const {
  if (!(vertices_ == other.vertices_)) return false;
  std::vector<Arc> a = arcs_;
  std::vector<Arc> b = other.arcs_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// ---------------------------------------------------------------------------
// ColoredHypergraph

ColoredHypergraph::ColoredHypergraph(VertexSet vertices,
                                     std::vector<Hyperedge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (const auto& edge : edges_) {
    if (edge.tuple.empty()) throw InvariantError("edge with an empty tuple");
    for (std::size_t v : edge.tuple) {
      if (v >= vertices_.size()) {
        throw InvariantError("edge vertex out of range");
      }
    }
    auto [it, fresh] = arity_.emplace(edge.color, edge.tuple.size());
    if (fresh) {
      colors_.push_back(edge.color);
    } else if (it->second != edge.tuple.size()) {
      throw InvariantError("color '" + edge.color + "' used with arities " +
                           std::to_string(it->second) + " and " +
                           std::to_string(edge.tuple.size()));
    }
    by_color_[edge.color].push_back(edge.tuple);
  }
  for (auto& [color, tuples] : by_color_) {
    std::sort(tuples.begin(), tuples.end());
    auto dup = std::adjacent_find(tuples.begin(), tuples.end());
    if (dup != tuples.end()) {
      std::string names;
      for (std::size_t v : *dup) names += (names.empty() ? "" : ",") + vertices_[v];
      throw InvariantError("duplicate edge (" + names + ") of color '" +
                           color + "'");
    }
  }
}

ColoredHypergraph::ColoredHypergraph(
    std::vector<VertexId> vertices,
    const std::vector<std::pair<std::vector<VertexId>, Color>>& edges) {
  VertexSet set(std::move(vertices));
  std::vector<Hyperedge> resolved;
  resolved.reserve(edges.size());
  for (const auto& [tuple, color] : edges) {
    Hyperedge edge{{}, color};
    for (const auto& id : tuple) edge.tuple.push_back(set.index_of(id));
    resolved.push_back(std::move(edge));
  }
  *this = ColoredHypergraph(std::move(set), std::move(resolved));
}

std::optional<std::size_t> ColoredHypergraph::arity(const Color& color) const {
  auto it = arity_.find(color);
  if (it == arity_.end()) return std::nullopt;
  return it->second;
}

bool ColoredHypergraph::contains(const Color& color,
                                 std::span<const std::size_t> tuple) const {
  auto it = by_color_.find(color);
  if (it == by_color_.end()) return false;
  const auto& tuples = it->second;
  auto pos = std::lower_bound(
      tuples.begin(), tuples.end(), tuple,
      [](const std::vector<std::size_t>& a, std::span<const std::size_t> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                            b.end());
      });
  return pos != tuples.end() &&
         std::equal(pos->begin(), pos->end(), tuple.begin(), tuple.end());
}

ColoredHypergraph ColoredHypergraph::induced(
    std::span<const std::size_t> keep) const {
  std::vector<VertexId> ids;
  std::vector<std::size_t> remap(size(), size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    remap[keep[i]] = i;
    ids.push_back(vertices_[keep[i]]);
  }
  std::vector<Hyperedge> edges;
  for (const auto& edge : edges_) {
    Hyperedge mapped{{}, edge.color};
    bool inside = true;
    for (std::size_t v : edge.tuple) {
      if (remap[v] == size()) {
        inside = false;
        break;
      }
      mapped.tuple.push_back(remap[v]);
    }
    if (inside) edges.push_back(std::move(mapped));
  }
  return ColoredHypergraph(VertexSet(std::move(ids)), std::move(edges));
}

bool ColoredHypergraph::operator==(const ColoredHypergraph& other) const {
  if (!(vertices_ == other.vertices_)) return false;
  std::vector<Hyperedge> a = edges_;
  std::vector<Hyperedge> b = other.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// ---------------------------------------------------------------------------
// GameHypergraph

std::string game_class_violation(const ColoredHypergraph& graph) {
  std::vector<std::size_t> leads(graph.size(), 0);
  for (const auto& edge : graph.edges()) {
    ++leads[edge.tuple.front()];
    std::vector<std::size_t> sorted = edge.tuple;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return "edge led by '" + graph.vertices()[edge.tuple.front()] +
             "' repeats a vertex";
    }
  }
  for (std::size_t v = 0; v < graph.size(); ++v) {
    if (leads[v] != 1) {
      return "vertex '" + graph.vertices()[v] + "' leads " +
             std::to_string(leads[v]) + " edges, expected exactly 1";
    }
  }
  return {};
}

GameHypergraph::GameHypergraph(ColoredHypergraph graph)
    : graph_(std::move(graph)) {
  if (auto why = game_class_violation(graph_); !why.empty()) {
    throw InvariantError("not a game hypergraph: " + why);
  }
  lead_.assign(graph_.size(), 0);
  for (std::size_t e = 0; e < graph_.edges().size(); ++e) {
    lead_[graph_.edges()[e].tuple.front()] = e;
  }
}

// ---------------------------------------------------------------------------
// UndirectedGraph

UndirectedGraph::UndirectedGraph(VertexSet vertices)
    : vertices_(std::move(vertices)), adj_(vertices_.size()) {}

UndirectedGraph::UndirectedGraph(
    std::vector<VertexId> vertices,
    const std::vector<std::pair<VertexId, VertexId>>& edges)
    : UndirectedGraph(VertexSet(std::move(vertices))) {
  for (const auto& [u, v] : edges) {
    add_edge(vertices_.index_of(u), vertices_.index_of(v));
  }
}

void UndirectedGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  auto insert = [](std::vector<std::size_t>& list, std::size_t x) {
    auto pos = std::lower_bound(list.begin(), list.end(), x);
    if (pos == list.end() || *pos != x) list.insert(pos, x);
  };
  insert(adj_[u], v);
  insert(adj_[v], u);
}

bool UndirectedGraph::has_edge(std::size_t u, std::size_t v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<std::size_t, std::size_t>> UndirectedGraph::edges()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (std::size_t v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t UndirectedGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& list : adj_) total += list.size();
  return total / 2;
}

// ---------------------------------------------------------------------------
// Operations

Digraph induced_digraph(const GameHypergraph& graph) {
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  for (const auto& edge : graph.graph().edges()) {
    for (std::size_t k = 1; k < edge.tuple.size(); ++k) {
      Arc arc{edge.tuple[k], edge.tuple[0]};
      if (seen.insert(arc).second) arcs.push_back(arc);
    }
  }
  return Digraph(graph.vertices(), std::move(arcs));
}

GameHypergraph induced_hypergraph(const Digraph& graph) {
  std::vector<Hyperedge> edges;
  edges.reserve(graph.size());
  for (std::size_t v = 0; v < graph.size(); ++v) {
    Hyperedge edge{{v}, graph.vertices()[v]};
    const auto& in = graph.in_neighbors(v);
    edge.tuple.insert(edge.tuple.end(), in.begin(), in.end());
    edges.push_back(std::move(edge));
  }
  return GameHypergraph(ColoredHypergraph(graph.vertices(), std::move(edges)));
}

UndirectedGraph primal_graph(const ColoredHypergraph& graph) {
  UndirectedGraph out(graph.vertices());
  for (const auto& edge : graph.edges()) {
    for (std::size_t i = 0; i < edge.tuple.size(); ++i) {
      for (std::size_t j = i + 1; j < edge.tuple.size(); ++j) {
        out.add_edge(edge.tuple[i], edge.tuple[j]);
      }
    }
  }
  return out;
}

UndirectedGraph undirected(const Digraph& graph) {
  UndirectedGraph out(graph.vertices());
  for (const auto& [u, v] : graph.arcs()) out.add_edge(u, v);
  return out;
}

SccPartition scc(const Digraph& graph) {
  // Iterative Tarjan. Components come out sinks-first and are reversed.
  const std::size_t n = graph.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> found;
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& frame = frames.back();
      const auto& out = graph.out_neighbors(frame.v);
      if (frame.next < out.size()) {
        std::size_t w = out[frame.next++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[frame.v] = std::min(low[frame.v], index[w]);
        }
        continue;
      }
      const std::size_t v = frame.v;
      frames.pop_back();
      if (!frames.empty()) {
        low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> component;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        found.push_back(std::move(component));
      }
    }
  }

  SccPartition out;
  out.components.assign(found.rbegin(), found.rend());
  out.component_of.assign(n, 0);
  for (std::size_t c = 0; c < out.components.size(); ++c) {
    for (std::size_t v : out.components[c]) out.component_of[v] = c;
  }
  out.terminal.assign(out.components.size(), true);
  for (const auto& [u, v] : graph.arcs()) {
    if (out.component_of[u] != out.component_of[v]) {
      out.terminal[out.component_of[u]] = false;
    }
  }
  return out;
}

bool is_irreducible(const Digraph& graph) {
  for (std::size_t v = 0; v < graph.size(); ++v) {
    if (graph.out_neighbors(v).empty()) return false;
  }
  return true;
}

}  // namespace purenash
