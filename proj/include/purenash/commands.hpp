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

#ifndef PURENASH_COMMANDS_HPP_
#define PURENASH_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "purenash/gadgets.hpp"
#include "purenash/game2hom.hpp"
#include "purenash/io.hpp"

// Document-in, document-out versions of the toolkit's operations, shared by
// the command line and the Python module.
namespace purenash::commands {

// The request does not fit the command (wrong document kind, missing input).
class UsageError : public Error {
 public:
  using Error::Error;
};

io::Document reduce(const io::Document& input);
io::Document scc(const io::Document& input);
io::Document treewidth(const io::Document& input, bool exact,
                       std::size_t cap = kDefaultExactTreewidthCap);
// backend: "dp" or "brute".
io::Document hom(const io::Document& input, const std::string& backend,
                 std::size_t cap = kDefaultMappingCap);
io::Document solve(const io::Document& input, const SolveOptions& options,
                   bool witness);
io::Document brute(const io::Document& input,
                   std::size_t cap = kDefaultProfileCap);
// Throws InvariantError for an invalid decomposition.
io::Document validate(const io::Document& input);

// "n=3,p=4" -> {n: 3, p: 4}.
std::map<std::string, long> parse_params(const std::string& text);

// Structural inputs of a gadget: either `instance` (a hom_instance) or
// `left` and `right`.
struct GadgetInputs {
  std::optional<io::Document> instance;
  std::optional<io::Document> left;
  std::optional<io::Document> right;
};

// Emits the constructed game (or, for example15 without an `actions`
// parameter, the hypergraph).
io::Document gadget(const GadgetSpec& spec, const GadgetInputs& inputs);

// Seeded fixture: kind is digraph, hypergraph, graphical_game, chg or
// hom_instance.
io::Document random_fixture(const std::string& kind, std::uint64_t seed,
                            std::size_t n, std::size_t m, double density);

}  // namespace purenash::commands

#endif  // PURENASH_COMMANDS_HPP_
