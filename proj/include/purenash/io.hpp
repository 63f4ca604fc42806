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

#ifndef PURENASH_IO_HPP_
#define PURENASH_IO_HPP_

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "purenash/games.hpp"
#include "purenash/graphs.hpp"
#include "purenash/homomorphism.hpp"
#include "purenash/treewidth.hpp"

namespace purenash::io {

inline constexpr std::string_view kFormatVersion = "1";

enum class DocumentKind {
  kDigraph,
  kHypergraph,
  kGraphicalGame,
  kChg,
  kDecomposition,
  kHomInstance,
  kResult,
};

std::string_view kind_name(DocumentKind kind);
std::optional<DocumentKind> parse_kind(std::string_view name);

// A decomposition travels with the graph it decomposes so it can be checked
// on its own.
struct DecompositionDocument {
  UndirectedGraph graph;
  TreeDecomposition decomposition;

  bool operator==(const DecompositionDocument&) const = default;
};

// Output of a CLI command: the command name and a free-form JSON object.
struct ResultDocument {
  std::string command;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();

  bool operator==(const ResultDocument&) const = default;
};

using Payload =
    std::variant<Digraph, ColoredHypergraph, GraphicalGame,
                 ColoredHypergraphicalGame, DecompositionDocument, HomInstance,
                 ResultDocument>;

struct Document {
  DocumentKind kind;
  Payload payload;
};

// Parse failures, split by stage. `path` locates the offending value, e.g.
// "arcs[0]" or "utilities.a[3]".
class ParseError : public Error {
 public:
  enum class Category { kSyntax, kSchema, kInvariant };

  ParseError(Category category, std::string path, const std::string& reason);

  Category category() const { return category_; }
  const std::string& path() const { return path_; }
  const std::string& reason() const { return reason_; }

 private:
  Category category_;
  std::string path_;
  std::string reason_;
};

Document parse(std::string_view text);

// Canonical text: fixed key order, declaration order for vertices and edges,
// rationals in lowest terms (integers as JSON numbers when they fit in 64
// bits, otherwise "p/q" strings), two-space indentation, trailing newline.
std::string serialize(const Document& document);

Document make_document(Payload payload);

// Building blocks shared with the CLI and the Python module.
nlohmann::ordered_json to_json(const Document& document);
Document from_json(const nlohmann::ordered_json& json);
nlohmann::ordered_json rational_to_json(const Rational& value);
nlohmann::ordered_json profile_to_json(const LocalGame& game,
                                       const ActionProfile& profile);
nlohmann::ordered_json mapping_to_json(const HomInstance& instance,
                                       const VertexMapping& mapping);
nlohmann::ordered_json decomposition_to_json(const UndirectedGraph& graph,
                                             const TreeDecomposition& decomp);

}  // namespace purenash::io

#endif  // PURENASH_IO_HPP_
