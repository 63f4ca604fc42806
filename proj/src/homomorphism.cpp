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

#include "purenash/homomorphism.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace purenash {

bool check_homomorphism(const HomInstance& instance,
                        const VertexMapping& mapping) {
  const auto& left = instance.left;
  const auto& right = instance.right;
  if (mapping.image.size() != left.size()) return false;
  for (std::size_t v : mapping.image) {
    if (v >= right.size()) return false;
  }
  std::vector<std::size_t> image;
  for (const auto& edge : left.edges()) {
    image.clear();
    for (std::size_t v : edge.tuple) image.push_back(mapping.image[v]);
    if (!right.contains(edge.color, image)) return false;
  }
  return true;
}

namespace {

std::size_t mapping_space(const HomInstance& instance) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < instance.left.size(); ++i) {
    total = saturating_mul(total, instance.right.size());
  }
  return total;
}

// Depth-first search over left vertices in index order; each edge is checked
// once its highest-index vertex is assigned.
class MappingSearch {
 public:
  explicit MappingSearch(const HomInstance& instance)
      : instance_(instance), due_(instance.left.size()) {
    const auto& edges = instance.left.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto& tuple = edges[e].tuple;
      due_[*std::max_element(tuple.begin(), tuple.end())].push_back(e);
    }
  }

  std::optional<VertexMapping> run() {
    image_.assign(instance_.left.size(), 0);
    if (extend(0)) return VertexMapping{image_};
    return std::nullopt;
  }

 private:
  bool extend(std::size_t v) {
    if (v == image_.size()) return true;
    for (std::size_t target = 0; target < instance_.right.size(); ++target) {
      image_[v] = target;
      if (edges_hold(v) && extend(v + 1)) return true;
    }
    return false;
  }

  bool edges_hold(std::size_t v) {
    for (std::size_t e : due_[v]) {
      const auto& edge = instance_.left.edges()[e];
      scratch_.clear();
      for (std::size_t u : edge.tuple) scratch_.push_back(image_[u]);
      if (!instance_.right.contains(edge.color, scratch_)) return false;
    }
    return true;
  }

  const HomInstance& instance_;
  std::vector<std::vector<std::size_t>> due_;
  std::vector<std::size_t> image_;
  std::vector<std::size_t> scratch_;
};

}  // namespace

std::optional<VertexMapping> brute_force_hom(const HomInstance& instance,
                                             std::size_t cap) {
  if (mapping_space(instance) > cap) {
    throw CapExceeded("brute_force_hom",
                      "mapping space exceeds cap " + std::to_string(cap));
  }
  return MappingSearch(instance).run();
}

// ---------------------------------------------------------------------------
// Tree-decomposition DP

namespace {

using Row = std::vector<std::size_t>;

struct BagTable {
  std::vector<std::size_t> vars;  // left vertices of the bag
  std::vector<std::size_t> edges;  // left edges checked here
  std::vector<Row> rows;          // right vertex per var
};

// All assignments of the bag that satisfy the edges routed to it.
void fill_bag(const HomInstance& instance, BagTable& table) {
  const auto& left = instance.left;
  const std::size_t width = table.vars.size();
  std::vector<std::size_t> slot(left.size(), width);
  for (std::size_t k = 0; k < width; ++k) slot[table.vars[k]] = k;
  std::vector<std::vector<std::size_t>> due(width);
  for (std::size_t e : table.edges) {
    std::size_t last = 0;
    for (std::size_t v : left.edges()[e].tuple) last = std::max(last, slot[v]);
    due[last].push_back(e);
  }
  Row row(width, 0);
  std::vector<std::size_t> image;
  auto holds = [&](std::size_t k) {
    for (std::size_t e : due[k]) {
      const auto& edge = left.edges()[e];
      image.clear();
      for (std::size_t v : edge.tuple) image.push_back(row[slot[v]]);
      if (!instance.right.contains(edge.color, image)) return false;
    }
    return true;
  };
  // Iterative odometer with pruning at each depth.
  const std::size_t range = instance.right.size();
  if (width == 0) {
    table.rows.push_back(row);
    return;
  }
  if (range == 0) return;
  std::size_t depth = 0;
  row[0] = 0;
  while (true) {
    if (holds(depth)) {
      if (depth + 1 == width) {
        table.rows.push_back(row);
      } else {
        row[++depth] = 0;
        continue;
      }
    }
    // advance
    while (true) {
      if (++row[depth] < range) break;
      if (depth == 0) return;
      --depth;
    }
  }
}

Row project(const Row& row, const std::vector<std::size_t>& positions) {
  Row out;
  out.reserve(positions.size());
  for (std::size_t p : positions) out.push_back(row[p]);
  return out;
}

}  // namespace

std::optional<VertexMapping> dp_hom(const HomInstance& instance,
                                    const TreeDecomposition& decomp) {
  const auto& left = instance.left;
  const UndirectedGraph primal = primal_graph(left);
  if (auto check = validate_decomposition(primal, decomp); !check.valid()) {
    throw InvariantError("decomposition does not fit the left structure: " +
                         check.message);
  }
  if (left.size() == 0) return VertexMapping{};
  if (instance.right.size() == 0) return std::nullopt;

  const std::size_t k = decomp.bags.size();
  std::vector<BagTable> tables(k);
  for (std::size_t node = 0; node < k; ++node) {
    tables[node].vars = decomp.bags[node];
  }
  for (std::size_t e = 0; e < left.edges().size(); ++e) {
    tables[clique_in_some_bag(decomp, left.edges()[e].tuple)].edges.push_back(e);
  }

  // Root at node 0.
  std::vector<std::vector<std::size_t>> adj(k);
  for (const auto& [a, b] : decomp.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::size_t> parent(k, k), order;
  std::queue<std::size_t> queue;
  queue.push(0);
  parent[0] = 0;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop();
    order.push_back(x);
    for (std::size_t y : adj[x]) {
      if (parent[y] == k) {
        parent[y] = x;
        queue.push(y);
      }
    }
  }

  // Positions of the shared vertices inside parent and child rows.
  auto separator = [&](std::size_t child) {
    const auto& pv = tables[parent[child]].vars;
    const auto& cv = tables[child].vars;
    std::pair<std::vector<std::size_t>, std::vector<std::size_t>> pos;
    for (std::size_t i = 0; i < pv.size(); ++i) {
      auto it = std::find(cv.begin(), cv.end(), pv[i]);
      if (it != cv.end()) {
        pos.first.push_back(i);
        pos.second.push_back(static_cast<std::size_t>(it - cv.begin()));
      }
    }
    return pos;
  };

  for (std::size_t node : order) fill_bag(instance, tables[node]);

  // Bottom-up semi-joins.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t child = *it;
    if (tables[child].rows.empty()) return std::nullopt;
    if (child == 0) break;
    const auto [in_parent, in_child] = separator(child);
    std::set<Row> keys;
    for (const auto& row : tables[child].rows) {
      keys.insert(project(row, in_child));
    }
    auto& rows = tables[parent[child]].rows;
    std::erase_if(rows, [&](const Row& row) {
      return !keys.contains(project(row, in_parent));
    });
  }
  if (tables[0].rows.empty()) return std::nullopt;

  // Top-down witness.
  VertexMapping mapping{std::vector<std::size_t>(left.size(), 0)};
  std::vector<const Row*> chosen(k, nullptr);
  chosen[0] = &tables[0].rows.front();
  for (std::size_t node : order) {
    if (node != 0) {
      const auto [in_parent, in_child] = separator(node);
      const Row key = project(*chosen[parent[node]], in_parent);
      for (const auto& row : tables[node].rows) {
        if (project(row, in_child) == key) {
          chosen[node] = &row;
          break;
        }
      }
      if (chosen[node] == nullptr) {
        throw std::logic_error("dp_hom: semi-join left a dangling row");
      }
    }
    for (std::size_t i = 0; i < tables[node].vars.size(); ++i) {
      mapping.image[tables[node].vars[i]] = (*chosen[node])[i];
    }
  }
  return mapping;
}

bool homomorphically_equivalent(const ColoredHypergraph& a,
                                const ColoredHypergraph& b, std::size_t cap) {
  return brute_force_hom({a, b}, cap).has_value() &&
         brute_force_hom({b, a}, cap).has_value();
}

// ---------------------------------------------------------------------------
// Cores

CoreResult core_with_retraction(const ColoredHypergraph& graph,
                                std::size_t cap) {
  const std::size_t n = graph.size();
  if (n > cap) {
    throw CapExceeded("core", std::to_string(n) + " vertices exceed cap " +
                                  std::to_string(cap));
  }
  const auto& colors = graph.colors();
  for (std::size_t size = 0; size < n; ++size) {
    // Subsets of this size in lexicographic order.
    std::vector<std::size_t> subset(size);
    for (std::size_t i = 0; i < size; ++i) subset[i] = i;
    while (true) {
      ColoredHypergraph sub = graph.induced(subset);
      const bool colors_survive = std::all_of(
          colors.begin(), colors.end(),
          [&](const Color& c) { return sub.arity(c).has_value(); });
      if (colors_survive && (size > 0 || n == 0)) {
        auto retraction = brute_force_hom(
            {graph, sub}, std::numeric_limits<std::size_t>::max());
        if (retraction) {
          return CoreResult{subset, std::move(sub), std::move(*retraction)};
        }
      }
      // next combination
      std::size_t i = size;
      while (i > 0 && subset[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return CoreResult{all, graph, VertexMapping{all}};
}

ColoredHypergraph core(const ColoredHypergraph& graph, std::size_t cap) {
  return core_with_retraction(graph, cap).core;
}

int modulo_treewidth_upper(const ColoredHypergraph& graph,
                           std::size_t core_cap, std::size_t treewidth_cap) {
  return exact_treewidth(primal_graph(core(graph, core_cap)), treewidth_cap)
      .width;
}

}  // namespace purenash
