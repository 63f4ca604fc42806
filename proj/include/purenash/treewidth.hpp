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

#ifndef PURENASH_TREEWIDTH_HPP_
#define PURENASH_TREEWIDTH_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "purenash/graphs.hpp"

namespace purenash {

// Bags of vertex indices (sorted) joined by undirected tree edges.
struct TreeDecomposition {
  std::vector<std::vector<std::size_t>> bags;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

  // Largest bag size minus one; -1 when there are no non-empty bags.
  int width() const;

  bool operator==(const TreeDecomposition&) const = default;
};

struct DecompositionCheck {
  enum class Violation {
    kNone,
    kNotATree,
    kBadVertex,
    kVertexUncovered,
    kEdgeUncovered,
    kNotConnected,
  };
  Violation violation = Violation::kNone;
  // Names the witness (tree edge, vertex, graph edge or node triple).
  std::string message;

  bool valid() const { return violation == Violation::kNone; }
};

// Checks, in order: tree shape, bag contents, vertex coverage, edge coverage,
// and that every vertex occupies a connected subtree. Reports the first
// failure. A graph with no vertices is decomposed by zero nodes.
DecompositionCheck validate_decomposition(const UndirectedGraph& graph,
                                          const TreeDecomposition& decomp);

// Bags {v} + later neighbors in the filled graph, each linked to the bag of
// its earliest-eliminated later neighbor; component roots are chained; bags
// contained in a neighbor are merged away. Width equals the width of the
// elimination ordering.
TreeDecomposition decomposition_from_order(const UndirectedGraph& graph,
                                           std::span<const std::size_t> order);

// Min-fill elimination ordering, ties to the lowest index.
std::vector<std::size_t> min_fill_order(const UndirectedGraph& graph);

TreeDecomposition heuristic_decomposition(const UndirectedGraph& graph);

inline constexpr std::size_t kDefaultExactTreewidthCap = 14;

struct ExactTreewidth {
  int width = -1;
  std::vector<std::size_t> order;
  TreeDecomposition decomposition;
};

// Exact treewidth by dynamic programming over vertex subsets (the best
// elimination ordering of every prefix set). Throws CapExceeded above `cap`
// vertices.
ExactTreewidth exact_treewidth(const UndirectedGraph& graph,
                               std::size_t cap = kDefaultExactTreewidthCap);

// A node whose bag contains `clique`, lowest index first. Throws
// InvariantError when no bag does, i.e. the decomposition does not belong to
// a graph in which `clique` is complete.
std::size_t clique_in_some_bag(const TreeDecomposition& decomp,
                               std::span<const std::size_t> clique);

}  // namespace purenash

#endif  // PURENASH_TREEWIDTH_HPP_
