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

#include "purenash/treewidth.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>

namespace purenash {

int TreeDecomposition::width() const {
  int widest = -1;
  for (const auto& bag : bags) {
    widest = std::max(widest, static_cast<int>(bag.size()) - 1);
  }
  return widest;
}

namespace {

using Check = DecompositionCheck;

std::vector<std::vector<std::size_t>> tree_adjacency(
    const TreeDecomposition& decomp) {
  std::vector<std::vector<std::size_t>> adj(decomp.bags.size());
  for (const auto& [a, b] : decomp.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

// Nodes on the tree path from `from` to `to`, inclusive.
std::vector<std::size_t> tree_path(
    const std::vector<std::vector<std::size_t>>& adj, std::size_t from,
    std::size_t to) {
  std::vector<std::size_t> parent(adj.size(), adj.size());
  std::queue<std::size_t> queue;
  queue.push(from);
  parent[from] = from;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop();
    for (std::size_t y : adj[x]) {
      if (parent[y] == adj.size()) {
        parent[y] = x;
        queue.push(y);
      }
    }
  }
  std::vector<std::size_t> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

Check fail(Check::Violation violation, std::string message) {
  return Check{violation, std::move(message)};
}

}  // namespace

DecompositionCheck validate_decomposition(const UndirectedGraph& graph,
                                          const TreeDecomposition& decomp) {
  const std::size_t k = decomp.bags.size();
  const auto& names = graph.vertices();

  // Tree shape: k - 1 edges joining all k nodes without a cycle.
  if (k == 0 && !decomp.tree_edges.empty()) {
    return fail(Check::Violation::kNotATree, "tree edges without nodes");
  }
  if (k > 0 && decomp.tree_edges.size() != k - 1) {
    return fail(Check::Violation::kNotATree,
                std::to_string(decomp.tree_edges.size()) + " tree edges for " +
                    std::to_string(k) + " nodes");
  }
  std::vector<std::size_t> root(k);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t e = 0; e < decomp.tree_edges.size(); ++e) {
    const auto [a, b] = decomp.tree_edges[e];
    if (a >= k || b >= k) {
      return fail(Check::Violation::kNotATree,
                  "tree edge " + std::to_string(e) + " names a missing node");
    }
    if (find(a) == find(b)) {
      return fail(Check::Violation::kNotATree,
                  "tree edge " + std::to_string(e) + " (" + std::to_string(a) +
                      ", " + std::to_string(b) + ") closes a cycle");
    }
    root[find(a)] = find(b);
  }

  std::vector<std::vector<std::size_t>> holders(graph.size());
  for (std::size_t node = 0; node < k; ++node) {
    std::vector<std::size_t> bag = decomp.bags[node];
    std::sort(bag.begin(), bag.end());
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (bag[i] >= graph.size()) {
        return fail(Check::Violation::kBadVertex,
                    "bag " + std::to_string(node) + " holds an unknown vertex");
      }
      if (i > 0 && bag[i] == bag[i - 1]) {
        return fail(Check::Violation::kBadVertex,
                    "bag " + std::to_string(node) + " repeats '" +
                        names[bag[i]] + "'");
      }
      holders[bag[i]].push_back(node);
    }
  }

  for (std::size_t v = 0; v < graph.size(); ++v) {
    if (holders[v].empty()) {
      return fail(Check::Violation::kVertexUncovered,
                  "vertex '" + names[v] + "' is in no bag");
    }
  }

  for (const auto& [u, v] : graph.edges()) {
    bool covered = false;
    for (std::size_t node : holders[u]) {
      const auto& bag = decomp.bags[node];
      if (std::find(bag.begin(), bag.end(), v) != bag.end()) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      return fail(Check::Violation::kEdgeUncovered,
                  "edge {'" + names[u] + "', '" + names[v] +
                      "'} is in no bag");
    }
  }

  const auto adj = tree_adjacency(decomp);
  std::vector<char> holds(k, 0);
  std::vector<char> seen(k, 0);
  for (std::size_t v = 0; v < graph.size(); ++v) {
    std::fill(holds.begin(), holds.end(), 0);
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t node : holders[v]) holds[node] = 1;
    std::vector<std::size_t> stack{holders[v].front()};
    seen[holders[v].front()] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      ++reached;
      for (std::size_t y : adj[x]) {
        if (holds[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    if (reached != holders[v].size()) {
      const std::size_t i = holders[v].front();
      std::size_t j = i;
      for (std::size_t node : holders[v]) {
        if (!seen[node]) {
          j = node;
          break;
        }
      }
      std::size_t gap = i;
      for (std::size_t node : tree_path(adj, i, j)) {
        if (!holds[node]) {
          gap = node;
          break;
        }
      }
      return fail(Check::Violation::kNotConnected,
                  "vertex '" + names[v] + "' is in bags " + std::to_string(i) +
                      " and " + std::to_string(j) + " but not in bag " +
                      std::to_string(gap) + " between them");
    }
  }
  return {};
}

TreeDecomposition decomposition_from_order(const UndirectedGraph& graph,
                                           std::span<const std::size_t> order) {
  const std::size_t n = graph.size();
  if (order.size() != n) {
    throw PreconditionError("elimination order must list every vertex once");
  }
  std::vector<std::size_t> position(n, n);
  for (std::size_t step = 0; step < n; ++step) {
    if (order[step] >= n || position[order[step]] != n) {
      throw PreconditionError("elimination order must list every vertex once");
    }
    position[order[step]] = step;
  }

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : graph.edges()) adj[u][v] = adj[v][u] = 1;

  std::vector<std::vector<std::size_t>> bags(n);
  std::vector<std::size_t> parent(n, n);
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t v = order[step];
    std::vector<std::size_t> later;
    for (std::size_t w = 0; w < n; ++w) {
      if (adj[v][w] && position[w] > step) later.push_back(w);
    }
    for (std::size_t a = 0; a < later.size(); ++a) {
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        adj[later[a]][later[b]] = adj[later[b]][later[a]] = 1;
      }
    }
    std::size_t first = n;
    for (std::size_t w : later) {
      if (first == n || position[w] < position[first]) first = w;
    }
    if (first != n) parent[step] = position[first];
    bags[step] = later;
    bags[step].push_back(v);
    std::sort(bags[step].begin(), bags[step].end());
  }

  std::vector<std::vector<std::size_t>> tree(n);
  auto link = [&](std::size_t a, std::size_t b) {
    tree[a].push_back(b);
    tree[b].push_back(a);
  };
  std::size_t previous_root = n;
  for (std::size_t step = 0; step < n; ++step) {
    if (parent[step] != n) {
      link(step, parent[step]);
    } else {
      if (previous_root != n) link(step, previous_root);
      previous_root = step;
    }
  }

  // Contract tree edges whose one side is contained in the other.
  std::vector<bool> alive(n, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n && !changed; ++a) {
      if (!alive[a]) continue;
      for (std::size_t b : tree[a]) {
        if (!std::includes(bags[b].begin(), bags[b].end(), bags[a].begin(),
                           bags[a].end())) {
          continue;
        }
        // Fold a into b.
        for (std::size_t c : tree[a]) {
          if (c == b) continue;
          std::replace(tree[c].begin(), tree[c].end(), a, b);
          tree[b].push_back(c);
        }
        tree[b].erase(std::remove(tree[b].begin(), tree[b].end(), a),
                      tree[b].end());
        tree[a].clear();
        alive[a] = false;
        changed = true;
        break;
      }
    }
  }

  TreeDecomposition out;
  std::vector<std::size_t> renumber(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!alive[a]) continue;
    renumber[a] = out.bags.size();
    out.bags.push_back(bags[a]);
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!alive[a]) continue;
    for (std::size_t b : tree[a]) {
      if (a < b) out.tree_edges.emplace_back(renumber[a], renumber[b]);
    }
  }
  std::sort(out.tree_edges.begin(), out.tree_edges.end());
  return out;
}

std::vector<std::size_t> min_fill_order(const UndirectedGraph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : graph.edges()) adj[u][v] = adj[v][u] = 1;
  std::vector<bool> gone(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    std::size_t best_fill = 0;
    std::vector<std::size_t> nbrs;
    for (std::size_t v = 0; v < n; ++v) {
      if (gone[v]) continue;
      nbrs.clear();
      for (std::size_t w = 0; w < n; ++w) {
        if (!gone[w] && adj[v][w]) nbrs.push_back(w);
      }
      std::size_t fill = 0;
      for (std::size_t a = 0; a < nbrs.size(); ++a) {
        for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
          if (!adj[nbrs[a]][nbrs[b]]) ++fill;
        }
      }
      if (best == n || fill < best_fill) {
        best = v;
        best_fill = fill;
        if (fill == 0) break;
      }
    }
    nbrs.clear();
    for (std::size_t w = 0; w < n; ++w) {
      if (!gone[w] && adj[best][w]) nbrs.push_back(w);
    }
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        adj[nbrs[a]][nbrs[b]] = adj[nbrs[b]][nbrs[a]] = 1;
      }
    }
    gone[best] = true;
    order.push_back(best);
  }
  return order;
}

TreeDecomposition heuristic_decomposition(const UndirectedGraph& graph) {
  return decomposition_from_order(graph, min_fill_order(graph));
}

ExactTreewidth exact_treewidth(const UndirectedGraph& graph, std::size_t cap) {
  constexpr std::size_t kHardLimit = 24;
  const std::size_t n = graph.size();
  if (n > cap || n > kHardLimit) {
    throw CapExceeded("exact_treewidth",
                      std::to_string(n) + " vertices exceed cap " +
                          std::to_string(std::min(cap, kHardLimit)));
  }
  using Mask = std::uint32_t;
  std::vector<Mask> nbr(n, 0);
  for (const auto& [u, v] : graph.edges()) {
    nbr[u] |= Mask{1} << v;
    nbr[v] |= Mask{1} << u;
  }
  // Vertices outside `eliminated` + v reachable from v through `eliminated`:
  // v's neighbors at the moment it is eliminated after `eliminated`.
  auto later_degree = [&](Mask eliminated, std::size_t v) {
    Mask reached = Mask{1} << v;
    Mask frontier = reached;
    Mask outside = 0;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) {
        next |= nbr[static_cast<std::size_t>(__builtin_ctz(f))];
      }
      next &= ~reached;
      reached |= next;
      outside |= next & ~eliminated;
      frontier = next & eliminated;
    }
    return __builtin_popcount(outside);
  };

  const Mask full = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  std::vector<int> best(std::size_t{full} + 1, 0);
  std::vector<std::uint8_t> last(std::size_t{full} + 1, 0);
  best[0] = -1;
  for (Mask set = 1; set <= full && set != 0; ++set) {
    int value = 1 << 30;
    for (Mask s = set; s; s &= s - 1) {
      const auto v = static_cast<std::size_t>(__builtin_ctz(s));
      const Mask rest = set & ~(Mask{1} << v);
      int candidate = best[rest];
      if (candidate >= value) continue;
      candidate = std::max(candidate, later_degree(rest, v));
      if (candidate < value) {
        value = candidate;
        last[set] = static_cast<std::uint8_t>(v);
      }
    }
    best[set] = value;
  }

  ExactTreewidth out;
  out.width = best[full];
  for (Mask set = full; set; set &= ~(Mask{1} << last[set])) {
    out.order.push_back(last[set]);
  }
  std::reverse(out.order.begin(), out.order.end());
  out.decomposition = decomposition_from_order(graph, out.order);
  return out;
}

std::size_t clique_in_some_bag(const TreeDecomposition& decomp,
                               std::span<const std::size_t> clique) {
  std::vector<std::size_t> wanted(clique.begin(), clique.end());
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  for (std::size_t node = 0; node < decomp.bags.size(); ++node) {
    std::vector<std::size_t> bag = decomp.bags[node];
    std::sort(bag.begin(), bag.end());
    if (std::includes(bag.begin(), bag.end(), wanted.begin(), wanted.end())) {
      return node;
    }
  }
  throw InvariantError("no bag contains the clique; the decomposition does "
                       "not fit this graph");
}

}  // namespace purenash
