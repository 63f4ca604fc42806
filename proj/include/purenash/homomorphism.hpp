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

#ifndef PURENASH_HOMOMORPHISM_HPP_
#define PURENASH_HOMOMORPHISM_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "purenash/graphs.hpp"
#include "purenash/treewidth.hpp"

namespace purenash {

// Does `left` map into `right`? Colors are matched by identifier; a left
// color missing on the right makes its edges unsatisfiable.
struct HomInstance {
  ColoredHypergraph left;
  ColoredHypergraph right;

  bool operator==(const HomInstance&) const = default;
};

// image[v] is the right vertex assigned to left vertex v.
struct VertexMapping {
  std::vector<std::size_t> image;

  bool operator==(const VertexMapping&) const = default;
};

bool check_homomorphism(const HomInstance& instance,
                        const VertexMapping& mapping);

inline constexpr std::size_t kDefaultMappingCap = 10'000'000;

// Lexicographically first homomorphism (left vertex 0 most significant),
// found by depth-first search that rejects an edge as soon as its tuple is
// fully assigned. Throws CapExceeded when |V(right)|^|V(left)| > cap.
std::optional<VertexMapping> brute_force_hom(
    const HomInstance& instance, std::size_t cap = kDefaultMappingCap);

// Dynamic programming over a tree decomposition of primal(left). Each left
// edge is checked in exactly one bag (the first bag containing it); bag
// tables are semi-joined bottom-up from node 0 as root and a witness is read
// off top-down. Throws InvariantError when `decomp` is not valid for
// primal(left).
std::optional<VertexMapping> dp_hom(const HomInstance& instance,
                                    const TreeDecomposition& decomp);

// Homomorphisms in both directions. Caps as for brute_force_hom.
bool homomorphically_equivalent(const ColoredHypergraph& a,
                                const ColoredHypergraph& b,
                                std::size_t cap = kDefaultMappingCap);

inline constexpr std::size_t kDefaultCoreCap = 8;

struct CoreResult {
  // Ascending indices into the input graph.
  std::vector<std::size_t> vertices;
  ColoredHypergraph core;
  // Input vertex -> index into `vertices`; a retraction onto the core.
  VertexMapping retraction;
};

// Smallest vertex set (lexicographically first among the smallest) whose
// induced substructure receives a homomorphism from the whole graph.
// Throws CapExceeded when the graph has more than `cap` vertices.
CoreResult core_with_retraction(const ColoredHypergraph& graph,
                                std::size_t cap = kDefaultCoreCap);
ColoredHypergraph core(const ColoredHypergraph& graph,
                       std::size_t cap = kDefaultCoreCap);

// Treewidth of the primal graph of the core: an upper bound on
// modulo-treewidth (exact for induced hypergraphs of digraphs). Reported as
// core treewidth.
int modulo_treewidth_upper(const ColoredHypergraph& graph,
                           std::size_t core_cap = kDefaultCoreCap,
                           std::size_t treewidth_cap =
                               kDefaultExactTreewidthCap);

}  // namespace purenash

#endif  // PURENASH_HOMOMORPHISM_HPP_
