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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "purenash/gadgets.hpp"
#include "purenash/random.hpp"
#include "purenash/treewidth.hpp"

using namespace purenash;
using Violation = DecompositionCheck::Violation;

namespace {

std::vector<VertexId> ids(std::size_t n) {
  std::vector<VertexId> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

UndirectedGraph complete(std::size_t k) {
  UndirectedGraph g(VertexSet(ids(k)));
  for (std::size_t u = 0; u < k; ++u) {
    for (std::size_t v = u + 1; v < k; ++v) g.add_edge(u, v);
  }
  return g;
}

UndirectedGraph cycle(std::size_t n) {
  UndirectedGraph g(VertexSet(ids(n)));
  for (std::size_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

UndirectedGraph random_tree(random::Rng& rng, std::size_t n) {
  UndirectedGraph g(VertexSet(ids(n)));
  for (std::size_t v = 1; v < n; ++v) {
    g.add_edge(v, std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
  }
  return g;
}

UndirectedGraph random_graph(random::Rng& rng, std::size_t n, double p) {
  UndirectedGraph g(VertexSet(ids(n)));
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// Series-parallel graph grown from one edge by series and parallel steps.
UndirectedGraph series_parallel(random::Rng& rng, std::size_t steps) {
  std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 1}};
  std::size_t n = 2;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto pick = std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng);
    const auto [a, b] = edges[pick];
    const std::size_t c = n++;
    if (std::bernoulli_distribution(0.5)(rng)) {
      edges.erase(edges.begin() + static_cast<long>(pick));
    }
    edges.emplace_back(a, c);
    edges.emplace_back(c, b);
  }
  UndirectedGraph g(VertexSet(ids(n)));
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("validation") {
  const UndirectedGraph path({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  const TreeDecomposition chain{{{0, 1}, {1, 2}}, {{0, 1}}};
  CHECK(validate_decomposition(path, chain).valid());
  CHECK(chain.width() == 1);

  const UndirectedGraph tri({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
  const auto bad = validate_decomposition(tri, chain);
  CHECK(bad.violation == Violation::kEdgeUncovered);
  CHECK(bad.message.find("{'1', '3'}") != std::string::npos);

  const TreeDecomposition single{{{0, 1, 2, 3}}, {}};
  CHECK(validate_decomposition(complete(4), single).valid());
  CHECK(single.width() == 3);

  CHECK(validate_decomposition(path, {{{0, 1}}, {}}).violation ==
        Violation::kVertexUncovered);
  CHECK(validate_decomposition(path, {{{0, 1}, {1, 2}}, {}}).violation ==
        Violation::kNotATree);
  CHECK(validate_decomposition(path, {{{0, 1}, {1, 2}, {0}}, {{0, 1}, {1, 2}, {2, 0}}})
            .violation == Violation::kNotATree);
  CHECK(validate_decomposition(path, {{{0, 7}}, {}}).violation ==
        Violation::kBadVertex);
  const auto split = validate_decomposition(
      path, {{{0, 1}, {2}, {1, 2}}, {{0, 1}, {1, 2}}});
  CHECK(split.violation == Violation::kNotConnected);
  CHECK(split.message.find("'2'") != std::string::npos);

  CHECK(validate_decomposition(UndirectedGraph(), TreeDecomposition{}).valid());
  CHECK(TreeDecomposition{}.width() == -1);
}

TEST_CASE("known widths") {
  random::Rng rng(41);
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto tree = random_tree(rng, n);
    CHECK(exact_treewidth(tree).width == 1);
    CHECK(heuristic_decomposition(tree).width() == 1);
  }
  for (std::size_t k = 1; k <= 8; ++k) {
    CHECK(exact_treewidth(complete(k)).width == static_cast<int>(k) - 1);
    CHECK(heuristic_decomposition(complete(k)).width() == static_cast<int>(k) - 1);
  }
  for (std::size_t n = 3; n <= 12; ++n) {
    CHECK(exact_treewidth(cycle(n)).width == 2);
    CHECK(heuristic_decomposition(cycle(n)).width() == 2);
  }
  CHECK(exact_treewidth(primal_graph(example15_fragment(1))).width == 3);
  CHECK(exact_treewidth(UndirectedGraph()).width == -1);
  CHECK(exact_treewidth(UndirectedGraph(VertexSet(ids(3)))).width == 0);
}

TEST_CASE("exact width matches permutation oracle and heuristic is an upper bound") {
  random::Rng rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const auto g = random_graph(rng, n, 0.45);
    const auto exact = exact_treewidth(g);
    CHECK(exact.width == oracle::treewidth(g));
    CHECK(exact.decomposition.width() == exact.width);
    CHECK(validate_decomposition(g, exact.decomposition).valid());
    const auto heur = heuristic_decomposition(g);
    CHECK(validate_decomposition(g, heur).valid());
    CHECK(heur.width() >= exact.width);
  }
}

TEST_CASE("heuristic is exact on series-parallel graphs") {
  random::Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = series_parallel(rng, std::uniform_int_distribution<std::size_t>(1, 9)(rng));
    const auto heur = heuristic_decomposition(g);
    CHECK(validate_decomposition(g, heur).valid());
    CHECK(heur.width() == exact_treewidth(g).width);
  }
}

TEST_CASE("any elimination order yields a valid decomposition") {
  random::Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(0, 9)(rng);
    const auto g = random_graph(rng, n, 0.3);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(validate_decomposition(g, decomposition_from_order(g, order)).valid());
  }
}

TEST_CASE("exact treewidth refuses large graphs") {
  CHECK_THROWS_AS(exact_treewidth(cycle(15)), CapExceeded);
  CHECK(exact_treewidth(cycle(15), 15).width == 2);
}

TEST_CASE("cliques land in a bag") {
  const TreeDecomposition single{{{0, 1, 2, 3}}, {}};
  const std::vector<std::size_t> all{0, 1, 2, 3};
  CHECK(clique_in_some_bag(single, all) == 0);
  const TreeDecomposition two{{{0, 1}, {1, 2, 3}}, {{0, 1}}};
  const std::vector<std::size_t> tri{3, 1, 2};
  CHECK(clique_in_some_bag(two, tri) == 1);
  const std::vector<std::size_t> missing{0, 3};
  CHECK_THROWS_AS(clique_in_some_bag(two, missing), InvariantError);

  random::Rng rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const auto h = random::game_hypergraph(rng, n, 0.4);
    const auto primal = primal_graph(h.graph());
    const auto decomp = heuristic_decomposition(primal);
    for (const auto& edge : h.graph().edges()) {
      const std::size_t node = clique_in_some_bag(decomp, edge.tuple);
      for (std::size_t v : edge.tuple) {
        CHECK(std::find(decomp.bags[node].begin(), decomp.bags[node].end(), v) !=
              decomp.bags[node].end());
      }
    }
  }
}

TEST_CASE("primal graph of H(G) is at least as wide as G") {
  random::Rng rng(46);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const Digraph g = random::digraph(rng, n, 0.3, n);
    CHECK(exact_treewidth(primal_graph(induced_hypergraph(g).graph())).width >=
          exact_treewidth(undirected(g)).width);
  }
}
