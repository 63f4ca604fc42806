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
#include "purenash/homomorphism.hpp"
#include "purenash/random.hpp"

using namespace purenash;

namespace {

ColoredHypergraph unary(const std::string& color) {
  return ColoredHypergraph({"a"}, {{{"a"}, color}});
}

VertexMapping by_name(const HomInstance& inst,
                      const std::map<std::string, std::string>& names) {
  VertexMapping m;
  for (const auto& id : inst.left.vertices().ids()) {
    m.image.push_back(inst.right.vertices().index_of(names.at(id)));
  }
  return m;
}

}  // namespace

TEST_CASE("homomorphism checks") {
  const HomInstance same{unary("c"), ColoredHypergraph({"x"}, {{{"x"}, "c"}})};
  CHECK(check_homomorphism(same, {{0}}));
  const HomInstance other{unary("c"), ColoredHypergraph({"x"}, {{{"x"}, "d"}})};
  CHECK_FALSE(check_homomorphism(other, {{0}}));
  CHECK_FALSE(check_homomorphism(same, {{}}));

  const auto full = example15(2).graph();
  const auto frag = example15_fragment(2);
  const HomInstance fold{full, frag};
  std::map<std::string, std::string> names;
  for (const auto& id : full.vertices().ids()) {
    names[id] = id.substr(0, 1) == "l"   ? "l_1"
                : id.substr(0, 1) == "r" ? "r_1"
                : id.substr(0, 1) == "x" ? "x_1_1"
                                         : "y_1_1";
  }
  CHECK(check_homomorphism(fold, by_name(fold, names)));
}

TEST_CASE("brute force homomorphism") {
  const HomInstance none{ColoredHypergraph({"a", "b"}, {{{"a", "b"}, "c"}}),
                         ColoredHypergraph({"x", "y"}, {{{"x", "y"}, "d"}})};
  CHECK_FALSE(brute_force_hom(none).has_value());

  random::Rng rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random::hypergraph(rng, 5, 6, 3, 3);
    const auto found = brute_force_hom({g, g});
    REQUIRE(found.has_value());
    CHECK(check_homomorphism({g, g}, *found));
  }
  const HomInstance big{ColoredHypergraph(std::vector<VertexId>(
                            {"1", "2", "3", "4", "5", "6", "7", "8"}), {}),
                        ColoredHypergraph({"x", "y", "z", "w", "u", "v", "s", "t"}, {})};
  CHECK_THROWS_AS(brute_force_hom(big, 1000), CapExceeded);
}

TEST_CASE("brute force returns the first homomorphism in order") {
  random::Rng rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = random::hom_instance(rng, std::uniform_int_distribution<std::size_t>(0, 5)(rng),
                                           std::uniform_int_distribution<std::size_t>(0, 3)(rng));
    const auto all = oracle::all_homs(inst);
    const auto found = brute_force_hom(inst);
    REQUIRE(found.has_value() == !all.empty());
    if (found) CHECK(found->image == all.front());
  }
}

TEST_CASE("dp over decompositions agrees with the oracle") {
  random::Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = random::hom_instance(rng, std::uniform_int_distribution<std::size_t>(0, 6)(rng),
                                           std::uniform_int_distribution<std::size_t>(1, 4)(rng));
    const bool expected = oracle::hom_exists(inst);
    const auto primal = primal_graph(inst.left);
    std::vector<std::size_t> all(inst.left.size());
    std::iota(all.begin(), all.end(), 0);
    const std::vector<TreeDecomposition> decomps{
        heuristic_decomposition(primal), exact_treewidth(primal).decomposition,
        TreeDecomposition{inst.left.size() ? std::vector<std::vector<std::size_t>>{all}
                                           : std::vector<std::vector<std::size_t>>{},
                          {}}};
    for (const auto& d : decomps) {
      const auto found = dp_hom(inst, d);
      CHECK(found.has_value() == expected);
      if (found) CHECK(oracle::is_hom(inst, found->image));
    }
  }
}

TEST_CASE("dp rejects a decomposition of the wrong graph") {
  const HomInstance inst{ColoredHypergraph({"a", "b", "c"}, {{{"a", "b", "c"}, "k"}}),
                         ColoredHypergraph({"x"}, {{{"x", "x", "x"}, "k"}})};
  const TreeDecomposition chain{{{0, 1}, {1, 2}}, {{0, 1}}};
  CHECK_THROWS_AS(dp_hom(inst, chain), InvariantError);
  const TreeDecomposition one{{{0, 1, 2}}, {}};
  const auto found = dp_hom(inst, one);
  REQUIRE(found.has_value());
  CHECK(found->image == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("homomorphic equivalence") {
  const auto g = random::hypergraph(*std::make_unique<random::Rng>(5).get(), 4, 4, 2, 2);
  CHECK(homomorphically_equivalent(g, g));
  // 4^12 mappings: above the default cap, so raise it explicitly
  CHECK_THROWS_AS(homomorphically_equivalent(example15(2).graph(), example15_fragment(2)),
                  CapExceeded);
  CHECK(homomorphically_equivalent(example15(2).graph(), example15_fragment(2),
                                   100'000'000));
  CHECK_FALSE(homomorphically_equivalent(unary("c"), unary("d")));
}

TEST_CASE("cores") {
  CHECK(core(unary("c")) == unary("c"));
  const auto full = example15(2).graph();
  const auto result = core_with_retraction(full, 12);
  CHECK(result.core.size() == 4);
  CHECK(homomorphically_equivalent(result.core, example15_fragment(2)));
  std::vector<std::size_t> image;
  for (std::size_t v : result.retraction.image) image.push_back(result.vertices[v]);
  CHECK(check_homomorphism({full, full}, {image}));
  CHECK_THROWS_AS(core(full), CapExceeded);

  // two disjoint copies of the same edge fold onto one
  const ColoredHypergraph twice({"a", "b", "c", "d"},
                                {{{"a", "b"}, "e"}, {{"c", "d"}, "e"}});
  const auto folded = core_with_retraction(twice);
  CHECK(folded.vertices == std::vector<std::size_t>{0, 1});
  CHECK(core(folded.core) == folded.core);

  random::Rng rng(54);
  for (int trial = 0; trial < 80; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const Digraph g = random::digraph(rng, n, 0.4, n);
    const auto h = induced_hypergraph(g).graph();
    CHECK(core(h) == h);
  }
}

TEST_CASE("core treewidth") {
  CHECK(modulo_treewidth_upper(unary("c")) == 0);
  CHECK(modulo_treewidth_upper(example15(2).graph(), 12) == 3);
  random::Rng rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const Digraph g = random::digraph(rng, 5, 0.4, 5);
    const auto h = induced_hypergraph(g).graph();
    CHECK(modulo_treewidth_upper(h) == exact_treewidth(primal_graph(h)).width);
  }
}
