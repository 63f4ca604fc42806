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

#include "purenash/io.hpp"

#include <limits>
#include <utility>

namespace purenash::io {
namespace {

using Json = nlohmann::ordered_json;
using Category = ParseError::Category;

[[noreturn]] void schema_error(const std::string& path,
                               const std::string& reason) {
  throw ParseError(Category::kSchema, path, reason);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& field(const Json& object, const std::string& key,
                  const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) schema_error(join(path, key), "missing field");
  return *it;
}

const Json& expect_array(const Json& value, const std::string& path) {
  if (!value.is_array()) schema_error(path, "expected an array");
  return value;
}

const Json& expect_object(const Json& value, const std::string& path) {
  if (!value.is_object()) schema_error(path, "expected an object");
  return value;
}

std::string expect_string(const Json& value, const std::string& path) {
  if (!value.is_string()) schema_error(path, "expected a string");
  return value.get<std::string>();
}

std::size_t expect_index(const Json& value, const std::string& path) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    schema_error(path, "expected a non-negative integer");
  }
  return value.get<std::size_t>();
}

std::vector<std::string> string_list(const Json& value,
                                     const std::string& path) {
  expect_array(value, path);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(expect_string(value[i], at(path, i)));
  }
  return out;
}

Rational rational_from_json(const Json& value, const std::string& path) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) {
      return Rational(mpz_class(std::to_string(value.get<std::uint64_t>())));
    }
    return Rational(mpz_class(std::to_string(value.get<std::int64_t>())));
  }
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const Error& e) {
      schema_error(path, e.what());
    }
  }
  schema_error(path, "expected an integer or a \"p/q\" string");
}

std::vector<Rational> rational_list(const Json& value,
                                    const std::string& path) {
  expect_array(value, path);
  std::vector<Rational> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(rational_from_json(value[i], at(path, i)));
  }
  return out;
}

// Runs `build`, turning invariant failures into ParseErrors at `path`.
template <class Fn>
auto guarded(const std::string& path, Fn&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(Category::kInvariant, path, e.what());
  }
}

std::size_t lookup(const VertexSet& vertices, const Json& value,
                   const std::string& path) {
  const std::string id = expect_string(value, path);
  auto index = vertices.find(id);
  if (!index) {
    throw ParseError(Category::kInvariant, path, "unknown vertex '" + id + "'");
  }
  return *index;
}

VertexSet vertices_from(const Json& object, const std::string& path) {
  const std::string p = join(path, "vertices");
  auto ids = string_list(field(object, "vertices", path), p);
  return guarded(p, [&] { return VertexSet(std::move(ids)); });
}

std::vector<Arc> arcs_from(const VertexSet& vertices, const Json& value,
                           const std::string& path) {
  expect_array(value, path);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string p = at(path, i);
    const Json& pair = expect_array(value[i], p);
    if (pair.size() != 2) schema_error(p, "expected a pair of vertex ids");
    arcs.emplace_back(lookup(vertices, pair[0], at(p, 0)),
                      lookup(vertices, pair[1], at(p, 1)));
  }
  return arcs;
}

Digraph digraph_from(const Json& object, const std::string& path) {
  VertexSet vertices = vertices_from(object, path);
  const std::string p = join(path, "arcs");
  auto arcs = arcs_from(vertices, field(object, "arcs", path), p);
  return guarded(p, [&] { return Digraph(std::move(vertices), std::move(arcs)); });
}

ColoredHypergraph hypergraph_from(const Json& object, const std::string& path) {
  expect_object(object, path.empty() ? "$" : path);
  VertexSet vertices = vertices_from(object, path);
  const std::string p = join(path, "edges");
  const Json& list = expect_array(field(object, "edges", path), p);
  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string ep = at(p, i);
    const Json& edge = expect_object(list[i], ep);
    Hyperedge out;
    out.color = expect_string(field(edge, "color", ep), join(ep, "color"));
    const std::string tp = join(ep, "tuple");
    const Json& tuple = expect_array(field(edge, "tuple", ep), tp);
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      out.tuple.push_back(lookup(vertices, tuple[k], at(tp, k)));
    }
    edges.push_back(std::move(out));
  }
  return guarded(p, [&] {
    return ColoredHypergraph(std::move(vertices), std::move(edges));
  });
}

GraphicalGame graphical_game_from(const Json& object) {
  Digraph graph = digraph_from(object, "");
  const std::size_t n = graph.size();
  std::vector<std::vector<std::string>> actions(n);
  std::vector<std::vector<Rational>> tables(n);
  std::vector<bool> seen_actions(n, false);
  std::vector<bool> seen_tables(n, false);
  const Json& action_map = expect_object(field(object, "actions", ""), "actions");
  for (const auto& [key, value] : action_map.items()) {
    const std::string p = join("actions", key);
    auto index = graph.vertices().find(key);
    if (!index) throw ParseError(Category::kInvariant, p, "unknown player");
    actions[*index] = string_list(value, p);
    seen_actions[*index] = true;
  }
  const Json& utility_map =
      expect_object(field(object, "utilities", ""), "utilities");
  for (const auto& [key, value] : utility_map.items()) {
    const std::string p = join("utilities", key);
    auto index = graph.vertices().find(key);
    if (!index) throw ParseError(Category::kInvariant, p, "unknown player");
    tables[*index] = rational_list(value, p);
    seen_tables[*index] = true;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen_actions[v]) {
      schema_error(join("actions", graph.vertices()[v]), "missing player");
    }
    if (!seen_tables[v]) {
      schema_error(join("utilities", graph.vertices()[v]), "missing player");
    }
  }
  return guarded("utilities", [&] {
    return GraphicalGame(std::move(graph), std::move(actions),
                         std::move(tables));
  });
}

ColoredHypergraphicalGame chg_from(const Json& object) {
  ColoredHypergraph graph = hypergraph_from(object, "");
  GameHypergraph game_graph =
      guarded("edges", [&] { return GameHypergraph(std::move(graph)); });
  auto actions = string_list(field(object, "actions", ""), "actions");
  std::map<Color, std::vector<Rational>> tables;
  const Json& utility_map =
      expect_object(field(object, "utilities", ""), "utilities");
  for (const auto& [key, value] : utility_map.items()) {
    tables[key] = rational_list(value, join("utilities", key));
  }
  return guarded("utilities", [&] {
    return ColoredHypergraphicalGame(std::move(game_graph), std::move(actions),
                                     std::move(tables));
  });
}

DecompositionDocument decomposition_from(const Json& object) {
  VertexSet vertices = vertices_from(object, "");
  auto edges = arcs_from(vertices, field(object, "edges", ""), "edges");
  DecompositionDocument doc;
  doc.graph = UndirectedGraph(vertices);
  for (const auto& [u, v] : edges) {
    if (u == v) throw ParseError(Category::kInvariant, "edges", "self-loop");
    doc.graph.add_edge(u, v);
  }
  const Json& bags = expect_array(field(object, "bags", ""), "bags");
  for (std::size_t i = 0; i < bags.size(); ++i) {
    const std::string p = at("bags", i);
    expect_array(bags[i], p);
    std::vector<std::size_t> bag;
    for (std::size_t k = 0; k < bags[i].size(); ++k) {
      bag.push_back(lookup(vertices, bags[i][k], at(p, k)));
    }
    doc.decomposition.bags.push_back(std::move(bag));
  }
  const Json& tree =
      expect_array(field(object, "tree_edges", ""), "tree_edges");
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const std::string p = at("tree_edges", i);
    const Json& pair = expect_array(tree[i], p);
    if (pair.size() != 2) schema_error(p, "expected a pair of bag indices");
    doc.decomposition.tree_edges.emplace_back(expect_index(pair[0], at(p, 0)),
                                              expect_index(pair[1], at(p, 1)));
  }
  return doc;
}

Json vertices_json(const VertexSet& vertices) {
  return Json(vertices.ids());
}

Json edges_json(const ColoredHypergraph& graph) {
  Json edges = Json::array();
  for (const auto& edge : graph.edges()) {
    Json tuple = Json::array();
    for (std::size_t v : edge.tuple) tuple.push_back(graph.vertices()[v]);
    edges.push_back(Json{{"tuple", std::move(tuple)}, {"color", edge.color}});
  }
  return edges;
}

Json hypergraph_body(const ColoredHypergraph& graph) {
  return Json{{"vertices", vertices_json(graph.vertices())},
              {"edges", edges_json(graph)}};
}

Json arcs_json(const Digraph& graph) {
  Json arcs = Json::array();
  for (const auto& [u, v] : graph.arcs()) {
    arcs.push_back(Json::array({graph.vertices()[u], graph.vertices()[v]}));
  }
  return arcs;
}

Json table_json(std::span<const Rational> table) {
  Json out = Json::array();
  for (const auto& value : table) out.push_back(rational_to_json(value));
  return out;
}

Json header(DocumentKind kind) {
  return Json{{"kind", std::string(kind_name(kind))},
              {"version", std::string(kFormatVersion)}};
}

}  // namespace

ParseError::ParseError(Category category, std::string path,
                       const std::string& reason)
    : Error((path.empty() ? std::string("$") : path) + ": " + reason),
      category_(category),
      path_(std::move(path)),
      reason_(reason) {}

std::string_view kind_name(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::kDigraph: return "digraph";
    case DocumentKind::kHypergraph: return "hypergraph";
    case DocumentKind::kGraphicalGame: return "graphical_game";
    case DocumentKind::kChg: return "chg";
    case DocumentKind::kDecomposition: return "decomposition";
    case DocumentKind::kHomInstance: return "hom_instance";
    case DocumentKind::kResult: return "result";
  }
  return "unknown";
}

std::optional<DocumentKind> parse_kind(std::string_view name) {
  for (auto kind :
       {DocumentKind::kDigraph, DocumentKind::kHypergraph,
        DocumentKind::kGraphicalGame, DocumentKind::kChg,
        DocumentKind::kDecomposition, DocumentKind::kHomInstance,
        DocumentKind::kResult}) {
    if (kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

Json rational_to_json(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1 && v.get_num().fits_slong_p()) {
    const long n = v.get_num().get_si();
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max()) {
      return Json(static_cast<std::int64_t>(n));
    }
  }
  return Json(format_rational(v));
}

Json profile_to_json(const LocalGame& game, const ActionProfile& profile) {
  Json out = Json::object();
  const auto labels = profile_labels(game, profile);
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    out[game.players()[p]] = labels[p];
  }
  return out;
}

Json mapping_to_json(const HomInstance& instance,
                     const VertexMapping& mapping) {
  Json out = Json::object();
  for (std::size_t v = 0; v < instance.left.size(); ++v) {
    out[instance.left.vertices()[v]] =
        instance.right.vertices()[mapping.image.at(v)];
  }
  return out;
}

Json decomposition_to_json(const UndirectedGraph& graph,
                           const TreeDecomposition& decomp) {
  Json bags = Json::array();
  for (const auto& bag : decomp.bags) {
    Json ids = Json::array();
    for (std::size_t v : bag) ids.push_back(graph.vertices()[v]);
    bags.push_back(std::move(ids));
  }
  Json tree = Json::array();
  for (const auto& [a, b] : decomp.tree_edges) tree.push_back(Json::array({a, b}));
  return Json{{"bags", std::move(bags)}, {"tree_edges", std::move(tree)}};
}

Document make_document(Payload payload) {
  static constexpr DocumentKind kKinds[] = {
      DocumentKind::kDigraph,       DocumentKind::kHypergraph,
      DocumentKind::kGraphicalGame, DocumentKind::kChg,
      DocumentKind::kDecomposition, DocumentKind::kHomInstance,
      DocumentKind::kResult};
  const DocumentKind kind = kKinds[payload.index()];
  return Document{kind, std::move(payload)};
}

Json to_json(const Document& document) {
  Json out = header(document.kind);
  std::visit(
      [&](const auto& value) {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, Digraph>) {
          out["vertices"] = vertices_json(value.vertices());
          out["arcs"] = arcs_json(value);
        } else if constexpr (std::is_same_v<T, ColoredHypergraph>) {
          out.update(hypergraph_body(value));
        } else if constexpr (std::is_same_v<T, GraphicalGame>) {
          out["vertices"] = vertices_json(value.players());
          out["arcs"] = arcs_json(value.graph());
          Json actions = Json::object();
          Json utilities = Json::object();
          for (std::size_t p = 0; p < value.num_players(); ++p) {
            actions[value.players()[p]] = value.actions()[p];
            utilities[value.players()[p]] = table_json(value.tables()[p]);
          }
          out["actions"] = std::move(actions);
          out["utilities"] = std::move(utilities);
        } else if constexpr (std::is_same_v<T, ColoredHypergraphicalGame>) {
          out.update(hypergraph_body(value.hypergraph().graph()));
          out["actions"] = value.actions();
          Json utilities = Json::object();
          for (const auto& color : value.hypergraph().graph().colors()) {
            utilities[color] = table_json(value.color_tables().at(color));
          }
          out["utilities"] = std::move(utilities);
        } else if constexpr (std::is_same_v<T, DecompositionDocument>) {
          out["vertices"] = vertices_json(value.graph.vertices());
          Json edges = Json::array();
          for (const auto& [u, v] : value.graph.edges()) {
            edges.push_back(Json::array(
                {value.graph.vertices()[u], value.graph.vertices()[v]}));
          }
          out["edges"] = std::move(edges);
          out.update(decomposition_to_json(value.graph, value.decomposition));
        } else if constexpr (std::is_same_v<T, HomInstance>) {
          out["left"] = hypergraph_body(value.left);
          out["right"] = hypergraph_body(value.right);
        } else {
          out["command"] = value.command;
          out["data"] = value.data;
        }
      },
      document.payload);
  return out;
}

Document from_json(const Json& json) {
  expect_object(json, "$");
  const std::string kind_text = expect_string(field(json, "kind", ""), "kind");
  const auto kind = parse_kind(kind_text);
  if (!kind) schema_error("kind", "unknown document kind '" + kind_text + "'");
  const Json& version = field(json, "version", "");
  if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
    schema_error("version", "unsupported format version");
  }
  switch (*kind) {
    case DocumentKind::kDigraph:
      return {*kind, digraph_from(json, "")};
    case DocumentKind::kHypergraph:
      return {*kind, hypergraph_from(json, "")};
    case DocumentKind::kGraphicalGame:
      return {*kind, graphical_game_from(json)};
    case DocumentKind::kChg:
      return {*kind, chg_from(json)};
    case DocumentKind::kDecomposition:
      return {*kind, decomposition_from(json)};
    case DocumentKind::kHomInstance: {
      HomInstance instance{
          hypergraph_from(expect_object(field(json, "left", ""), "left"), "left"),
          hypergraph_from(expect_object(field(json, "right", ""), "right"),
                          "right")};
      return {*kind, std::move(instance)};
    }
    case DocumentKind::kResult: {
      ResultDocument result;
      result.command = expect_string(field(json, "command", ""), "command");
      result.data = expect_object(field(json, "data", ""), "data");
      return {*kind, std::move(result)};
    }
  }
  schema_error("kind", "unhandled kind");
}

Document parse(std::string_view text) {
  Json json;
  try {
    json = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(Category::kSyntax, "", e.what());
  }
  return from_json(json);
}

std::string serialize(const Document& document) {
  return to_json(document).dump(2) + "\n";
}

}  // namespace purenash::io
