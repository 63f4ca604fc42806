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

#include "purenash/commands.hpp"

#include <sstream>

#include "purenash/homomorphism.hpp"
#include "purenash/random.hpp"
#include "purenash/reduction.hpp"
#include "purenash/treewidth.hpp"

namespace purenash::commands {
namespace {

using Json = nlohmann::ordered_json;

io::Document result(const std::string& command, Json data) {
  return io::make_document(io::ResultDocument{command, std::move(data)});
}

Json names(const VertexSet& vertices, const std::vector<std::size_t>& indices) {
  Json out = Json::array();
  for (std::size_t v : indices) out.push_back(vertices[v]);
  return out;
}

Json trace_json(const VertexSet& vertices, const ReductionTrace& trace) {
  Json rounds = Json::array();
  for (const auto& round : trace.removal_rounds) rounds.push_back(names(vertices, round));
  return Json{{"removal_rounds", std::move(rounds)},
              {"removed", names(vertices, trace.removed)},
              {"kept", names(vertices, trace.kept)}};
}

// Graph structure a command can work on, whatever document carried it.
Digraph digraph_of(const io::Document& doc) {
  switch (doc.kind) {
    case io::DocumentKind::kDigraph: return std::get<Digraph>(doc.payload);
    case io::DocumentKind::kGraphicalGame:
      return std::get<GraphicalGame>(doc.payload).graph();
    case io::DocumentKind::kChg:
      return std::get<ColoredHypergraphicalGame>(doc.payload).influence_graph();
    case io::DocumentKind::kHypergraph:
      return induced_digraph(GameHypergraph(std::get<ColoredHypergraph>(doc.payload)));
    default:
      throw UsageError("expected a digraph, hypergraph or game document");
  }
}

UndirectedGraph undirected_of(const io::Document& doc) {
  switch (doc.kind) {
    case io::DocumentKind::kDigraph: return undirected(std::get<Digraph>(doc.payload));
    case io::DocumentKind::kHypergraph:
      return primal_graph(std::get<ColoredHypergraph>(doc.payload));
    case io::DocumentKind::kDecomposition:
      return std::get<io::DecompositionDocument>(doc.payload).graph;
    case io::DocumentKind::kGraphicalGame:
      return primal_graph(
          induced_hypergraph(std::get<GraphicalGame>(doc.payload).graph()).graph());
    case io::DocumentKind::kChg:
      return primal_graph(
          std::get<ColoredHypergraphicalGame>(doc.payload).hypergraph().graph());
    default:
      throw UsageError("expected a graph, hypergraph or game document");
  }
}

ColoredHypergraph hypergraph_of(const io::Document& doc) {
  if (doc.kind == io::DocumentKind::kHypergraph) {
    return std::get<ColoredHypergraph>(doc.payload);
  }
  if (doc.kind == io::DocumentKind::kDigraph) {
    return induced_hypergraph(std::get<Digraph>(doc.payload)).graph();
  }
  throw UsageError("expected a hypergraph or digraph document");
}

const LocalGame& game_of(const io::Document& doc, const std::string& command) {
  if (doc.kind == io::DocumentKind::kGraphicalGame) {
    return std::get<GraphicalGame>(doc.payload);
  }
  if (doc.kind == io::DocumentKind::kChg) {
    return std::get<ColoredHypergraphicalGame>(doc.payload);
  }
  throw UsageError(command + " expects a graphical_game or chg document");
}

template <class Game>
Json reduce_json(const Game& game) {
  auto [reduced, trace] = reduce_game(game);
  return Json{{"reduced", io::to_json(io::make_document(std::move(reduced)))},
              {"trace", trace_json(game.players(), trace)}};
}

template <class Game>
Json solve_json(const Game& game, const SolveOptions& options, bool witness) {
  const PsneResult found = decide_psne(game, options);
  Json data{{"exists", found.exists},
            {"backend", found.backend},
            {"decomposition_width", found.decomposition_width},
            {"used_core", found.used_core},
            {"trace", trace_json(game.players(), found.trace)}};
  if (witness && found.witness) {
    data["witness"] = io::profile_to_json(game, *found.witness);
  }
  return data;
}

// Left and right sides from `instance` or `left` / `right`.
std::pair<io::Document, ColoredHypergraph> sides(const GadgetInputs& inputs) {
  if (inputs.instance) {
    if (inputs.instance->kind != io::DocumentKind::kHomInstance) {
      throw UsageError("instance must be a hom_instance document");
    }
    const auto& inst = std::get<HomInstance>(inputs.instance->payload);
    return {io::make_document(inst.left), inst.right};
  }
  if (!inputs.left || !inputs.right) {
    throw UsageError("this variant needs an instance or both left and right");
  }
  return {*inputs.left, hypergraph_of(*inputs.right)};
}

std::size_t param(const GadgetSpec& spec, const std::string& key) {
  return static_cast<std::size_t>(spec.params.at(key));
}

}  // namespace

io::Document reduce(const io::Document& input) {
  if (input.kind == io::DocumentKind::kGraphicalGame) {
    return result("reduce", reduce_json(std::get<GraphicalGame>(input.payload)));
  }
  if (input.kind == io::DocumentKind::kChg) {
    return result("reduce",
                  reduce_json(std::get<ColoredHypergraphicalGame>(input.payload)));
  }
  const Digraph graph = digraph_of(input);
  auto [reduced, trace] = reduce_digraph(graph);
  return result("reduce",
                Json{{"reduced", io::to_json(io::make_document(std::move(reduced)))},
                     {"trace", trace_json(graph.vertices(), trace)}});
}

io::Document scc(const io::Document& input) {
  const Digraph graph = digraph_of(input);
  const SccPartition parts = purenash::scc(graph);
  Json components = Json::array();
  for (std::size_t c = 0; c < parts.components.size(); ++c) {
    components.push_back(Json{{"vertices", names(graph.vertices(), parts.components[c])},
                              {"terminal", static_cast<bool>(parts.terminal[c])}});
  }
  return result("scc", Json{{"order", "arcs point from earlier to later components"},
                            {"components", std::move(components)},
                            {"irreducible", is_irreducible(graph)}});
}

io::Document treewidth(const io::Document& input, bool exact, std::size_t cap) {
  const UndirectedGraph graph = undirected_of(input);
  Json data = Json::object();
  if (input.kind == io::DocumentKind::kDecomposition) {
    const auto& given = std::get<io::DecompositionDocument>(input.payload);
    const auto check = validate_decomposition(given.graph, given.decomposition);
    data["given"] = Json{{"valid", check.valid()}, {"width", given.decomposition.width()}};
    if (!check.valid()) data["given"]["violation"] = check.message;
  }
  TreeDecomposition decomp;
  if (exact) {
    data["method"] = "exact";
    decomp = exact_treewidth(graph, cap).decomposition;
  } else {
    data["method"] = "min_fill";
    decomp = heuristic_decomposition(graph);
  }
  data["width"] = decomp.width();
  data["decomposition"] =
      io::to_json(io::make_document(io::DecompositionDocument{graph, decomp}));
  return result("tw", std::move(data));
}

io::Document hom(const io::Document& input, const std::string& backend,
                 std::size_t cap) {
  if (input.kind != io::DocumentKind::kHomInstance) {
    throw UsageError("hom expects a hom_instance document");
  }
  const auto& instance = std::get<HomInstance>(input.payload);
  Json data{{"backend", backend}};
  std::optional<VertexMapping> found;
  if (backend == "dp") {
    const TreeDecomposition decomp = heuristic_decomposition(primal_graph(instance.left));
    data["decomposition_width"] = decomp.width();
    found = dp_hom(instance, decomp);
  } else if (backend == "brute") {
    found = brute_force_hom(instance, cap);
  } else {
    throw UsageError("unknown backend '" + backend + "'");
  }
  data["exists"] = found.has_value();
  if (found) data["mapping"] = io::mapping_to_json(instance, *found);
  return result("hom", std::move(data));
}

io::Document solve(const io::Document& input, const SolveOptions& options,
                   bool witness) {
  if (input.kind == io::DocumentKind::kGraphicalGame) {
    return result("solve",
                  solve_json(std::get<GraphicalGame>(input.payload), options, witness));
  }
  if (input.kind == io::DocumentKind::kChg) {
    return result("solve", solve_json(std::get<ColoredHypergraphicalGame>(input.payload),
                                      options, witness));
  }
  throw UsageError("solve expects a graphical_game or chg document");
}

io::Document brute(const io::Document& input, std::size_t cap) {
  const LocalGame& game = game_of(input, "brute");
  const auto found = brute_force_psne(game, cap);
  Json data{{"exists", found.has_value()}};
  if (found) data["witness"] = io::profile_to_json(game, *found);
  return result("brute", std::move(data));
}

io::Document validate(const io::Document& input) {
  Json data{{"valid", true}, {"kind", std::string(io::kind_name(input.kind))}};
  if (input.kind == io::DocumentKind::kDecomposition) {
    const auto& d = std::get<io::DecompositionDocument>(input.payload);
    const auto check = validate_decomposition(d.graph, d.decomposition);
    if (!check.valid()) throw InvariantError("invalid decomposition: " + check.message);
    data["width"] = d.decomposition.width();
  }
  return result("validate", std::move(data));
}

std::map<std::string, long> parse_params(const std::string& text) {
  std::map<std::string, long> params;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("parameter '" + item + "' is not k=v");
    const std::string value = item.substr(eq + 1);
    try {
      std::size_t used = 0;
      params[item.substr(0, eq)] = std::stol(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::logic_error&) {
      throw UsageError("parameter '" + item + "' needs an integer value");
    }
  }
  return params;
}

io::Document gadget(const GadgetSpec& spec, const GadgetInputs& inputs) {
  check_gadget_spec(spec);
  switch (spec.variant) {
    case GadgetVariant::kCycleModP:
      return io::make_document(cycle_game(param(spec, "n"), param(spec, "p")));
    case GadgetVariant::kExample15: {
      auto actions = spec.params.find("actions");
      if (actions == spec.params.end()) {
        return io::make_document(example15(param(spec, "m")).graph());
      }
      if (actions->second < 1) throw PreconditionError("actions must be at least 1");
      return io::make_document(
          example15_game(param(spec, "m"), static_cast<std::size_t>(actions->second)));
    }
    case GadgetVariant::kStronglyConnected: {
      const auto& source = inputs.left ? inputs.left : inputs.instance;
      if (!source) throw UsageError("strongly_connected needs a left digraph");
      return io::make_document(strongly_connected_game(digraph_of(*source)));
    }
    case GadgetVariant::kGraphicalTB: {
      auto [g, h] = sides(inputs);
      return io::make_document(hom_to_gg(digraph_of(g), h));
    }
    case GadgetVariant::kChgFailure: {
      auto [g, h] = sides(inputs);
      return io::make_document(hom_to_chg(GameHypergraph(hypergraph_of(g)), h));
    }
    case GadgetVariant::kDirectXY: {
      auto [g, h] = sides(inputs);
      return io::make_document(hom_to_gg_direct(hypergraph_of(g), h));
    }
  }
  throw UsageError("unhandled variant");
}

io::Document random_fixture(const std::string& kind, std::uint64_t seed,
                            std::size_t n, std::size_t m, double density) {
  random::Rng rng(seed);
  if (kind == "digraph") return io::make_document(random::digraph(rng, n, density, n));
  if (kind == "graphical_game") {
    return io::make_document(random::graphical_game(rng, n, m, density));
  }
  if (kind == "chg") return io::make_document(random::chg(rng, n, m, density));
  if (kind == "hypergraph") {
    return io::make_document(random::hypergraph(rng, n, 2 * n, 3, 3));
  }
  if (kind == "hom_instance") return io::make_document(random::hom_instance(rng, n, m));
  throw UsageError("unknown fixture kind '" + kind + "'");
}

}  // namespace purenash::commands
