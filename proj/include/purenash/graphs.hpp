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

#ifndef PURENASH_GRAPHS_HPP_
#define PURENASH_GRAPHS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "purenash/core.hpp"

namespace purenash {

// Shared vertex bookkeeping: declaration-ordered ids with a reverse index.
class VertexSet {
 public:
  VertexSet() = default;
  // Throws InvariantError on duplicate ids.
  explicit VertexSet(std::vector<VertexId> ids);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<VertexId>& ids() const { return ids_; }
  const VertexId& operator[](std::size_t i) const { return ids_[i]; }
  std::optional<std::size_t> find(const VertexId& id) const;
  // Throws InvariantError for unknown ids.
  std::size_t index_of(const VertexId& id) const;
  // Rank of each index under vertex_less.
  const std::vector<std::size_t>& rank() const { return rank_; }

  bool operator==(const VertexSet& other) const { return ids_ == other.ids_; }

 private:
  std::vector<VertexId> ids_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<std::size_t> rank_;
};

using Arc = std::pair<std::size_t, std::size_t>;

// Directed graph without self-loops or parallel arcs. An arc (u, v) means u
// influences v: u is an in-neighbor of v.
class Digraph {
 public:
  Digraph() = default;
  Digraph(VertexSet vertices, std::vector<Arc> arcs);
  Digraph(std::vector<VertexId> vertices,
          const std::vector<std::pair<VertexId, VertexId>>& arcs);

  const VertexSet& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  // Arcs in declaration order.
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_arc(std::size_t from, std::size_t to) const;
  // Sorted by index.
  const std::vector<std::size_t>& out_neighbors(std::size_t v) const {
    return out_[v];
  }
  // Sorted ascending under vertex_less, the order local profiles use.
  const std::vector<std::size_t>& in_neighbors(std::size_t v) const {
    return in_[v];
  }

  // Subgraph induced by `keep` (indices, kept in the given order).
  Digraph induced(std::span<const std::size_t> keep) const;

  // Same vertex list and same arc set.
  bool operator==(const Digraph& other) const;

 private:
  VertexSet vertices_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

struct Hyperedge {
  std::vector<std::size_t> tuple;
  Color color;

  bool operator==(const Hyperedge&) const = default;
  auto operator<=>(const Hyperedge&) const = default;
};

// Vertices plus ordered, colored hyperedges. Edges of one color share an
// arity and no (tuple, color) pair appears twice. Tuples may repeat a vertex:
// right-hand structures of homomorphism problems need that (an edge (a, a)
// records that action a answers a neighbor playing a).
class ColoredHypergraph {
 public:
  ColoredHypergraph() = default;
  ColoredHypergraph(VertexSet vertices, std::vector<Hyperedge> edges);
  ColoredHypergraph(
      std::vector<VertexId> vertices,
      const std::vector<std::pair<std::vector<VertexId>, Color>>& edges);

  const VertexSet& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  std::optional<std::size_t> arity(const Color& color) const;
  // Colors in order of first appearance.
  const std::vector<Color>& colors() const { return colors_; }
  bool contains(const Color& color, std::span<const std::size_t> tuple) const;

  // Edges whose tuples lie entirely inside `keep`, re-indexed to `keep`.
  ColoredHypergraph induced(std::span<const std::size_t> keep) const;

  // Same vertex list and same edge set.
  bool operator==(const ColoredHypergraph& other) const;

 private:
  VertexSet vertices_;
  std::vector<Hyperedge> edges_;
  std::vector<Color> colors_;
  std::map<Color, std::size_t> arity_;
  std::map<Color, std::vector<std::vector<std::size_t>>> by_color_;
};

// A colored hypergraph that can carry a game: every vertex leads exactly one
// edge, and tuples list distinct vertices.
class GameHypergraph {
 public:
  GameHypergraph() = default;
  // Throws InvariantError when `graph` is outside the class.
  explicit GameHypergraph(ColoredHypergraph graph);

  const ColoredHypergraph& graph() const { return graph_; }
  const VertexSet& vertices() const { return graph_.vertices(); }
  std::size_t size() const { return graph_.size(); }
  // Index of the edge led by vertex v.
  std::size_t edge_of(std::size_t v) const { return lead_[v]; }
  const Hyperedge& lead_edge(std::size_t v) const {
    return graph_.edges()[lead_[v]];
  }

  bool operator==(const GameHypergraph& other) const {
    return graph_ == other.graph_;
  }

 private:
  ColoredHypergraph graph_;
  std::vector<std::size_t> lead_;
};

// Empty string when `graph` belongs to the game class, else the reason.
std::string game_class_violation(const ColoredHypergraph& graph);

class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(VertexSet vertices);
  UndirectedGraph(std::vector<VertexId> vertices,
                  const std::vector<std::pair<VertexId, VertexId>>& edges);

  const VertexSet& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  // Ignores self-pairs and repeats.
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;
  const std::vector<std::size_t>& neighbors(std::size_t v) const {
    return adj_[v];
  }
  // Each edge once as (min, max), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t edge_count() const;

  bool operator==(const UndirectedGraph& other) const {
    return vertices_ == other.vertices_ && adj_ == other.adj_;
  }

 private:
  VertexSet vertices_;
  std::vector<std::vector<std::size_t>> adj_;
};

// Strongly connected components. `components` is topologically ordered:
// every arc between different components goes from a lower to a higher
// component index. Vertex lists inside a component are sorted by index.
struct SccPartition {
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> component_of;
  std::vector<bool> terminal;
};

// D(G): arcs from every later tuple entry to the edge's leader.
Digraph induced_digraph(const GameHypergraph& graph);

// H(G): one edge per vertex v, colored with v's id, listing v followed by
// its in-neighbors ascending.
GameHypergraph induced_hypergraph(const Digraph& graph);

UndirectedGraph primal_graph(const ColoredHypergraph& graph);
UndirectedGraph undirected(const Digraph& graph);

SccPartition scc(const Digraph& graph);

// No vertex has out-degree zero. Vacuously true for the empty graph.
bool is_irreducible(const Digraph& graph);

}  // namespace purenash

#endif  // PURENASH_GRAPHS_HPP_
