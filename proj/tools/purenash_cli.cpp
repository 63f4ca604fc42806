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

// Command-line front end. Results go to stdout as result documents (or, for
// generators, as input documents); diagnostics go to stderr.
//
// Exit codes: 0 computed, 1 usage or format error, 2 resource cap refused.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "purenash/commands.hpp"

namespace {

using namespace purenash;
using commands::UsageError;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCap = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

io::Document load(const std::string& path) { return io::parse(read_input(path)); }

std::optional<io::Document> load_optional(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return load(path);
}

void emit(const io::Document& doc) { std::cout << io::serialize(doc); }

void run_gadget(const std::string& variant_name, const std::string& params,
                const std::string& instance, const std::string& left,
                const std::string& right) {
  const auto variant = parse_gadget_variant(variant_name);
  if (!variant) throw UsageError("unknown variant '" + variant_name + "'");
  const GadgetSpec spec{*variant, commands::parse_params(params)};
  emit(commands::gadget(spec, {load_optional(instance), load_optional(left),
                               load_optional(right)}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pure Nash equilibria via hypergraph homomorphisms"};
  app.require_subcommand(1);
  std::string input;

  auto* reduce = app.add_subcommand("reduce", "Iterated sink removal");
  reduce->add_option("input", input, "Document (default: stdin)");
  auto* scc_cmd = app.add_subcommand("scc", "Strongly connected components");
  scc_cmd->add_option("input", input, "Document (default: stdin)");

  auto* tw = app.add_subcommand("tw", "Tree decomposition of the (primal) graph");
  tw->add_option("input", input, "Document (default: stdin)");
  bool exact = false;
  std::size_t tw_cap = kDefaultExactTreewidthCap;
  tw->add_flag("--exact", exact, "Exact treewidth instead of min-fill");
  tw->add_option("--cap", tw_cap, "Largest vertex count for --exact")->capture_default_str();

  auto* hom = app.add_subcommand("hom", "Homomorphism decision and witness");
  hom->add_option("input", input, "hom_instance document (default: stdin)");
  std::string backend = "dp";
  hom->add_option("--backend", backend, "dp or brute")
      ->check(CLI::IsMember({"dp", "brute"}))
      ->capture_default_str();
  std::size_t hom_cap = kDefaultMappingCap;
  hom->add_option("--cap", hom_cap, "Mapping cap for brute force")->capture_default_str();

  auto* solve = app.add_subcommand("solve", "Decide PSNE existence");
  solve->add_option("input", input, "Game document (default: stdin)");
  bool witness = false;
  SolveOptions options;
  solve->add_flag("--witness", witness, "Print a PSNE when one exists");
  solve->add_option("--width-threshold", options.width_threshold,
                    "Largest decomposition width handled by DP")
      ->capture_default_str();
  solve->add_option("--cap", options.mapping_cap, "Mapping cap for the brute fallback")
      ->capture_default_str();
  solve->add_flag("--core-first", options.core_first, "Solve on the core of the hypergraph");
  solve->add_option("--core-cap", options.core_cap, "Largest hypergraph for --core-first")
      ->capture_default_str();

  auto* brute = app.add_subcommand("brute", "Brute-force PSNE search");
  brute->add_option("input", input, "Game document (default: stdin)");
  std::size_t profile_cap = kDefaultProfileCap;
  brute->add_option("--cap", profile_cap, "Profile cap")->capture_default_str();

  auto* gadget = app.add_subcommand("gadget", "Build a gadget game");
  std::string variant, params, instance, left, right;
  gadget->add_option("--variant", variant,
                     "graphical_TB, chg_failure, cycle_mod_p, strongly_connected, "
                     "direct_xy or example15")
      ->required();
  gadget->add_option("--params", params, "Comma-separated k=v integers");
  gadget->add_option("--instance", instance, "hom_instance document");
  gadget->add_option("--left", left, "Left side (digraph or hypergraph document)");
  gadget->add_option("--right", right, "Right side (hypergraph document)");

  auto* gen15 = app.add_subcommand("gen-example15", "Emit the bounded core-width family");
  std::size_t m = 1;
  std::size_t actions = 0;
  gen15->add_option("--m", m, "Family parameter")->required()->check(CLI::PositiveNumber);
  gen15->add_option("--actions", actions, "Emit a chg with this many actions and zero tables");

  auto* validate = app.add_subcommand("validate", "Schema and invariant check");
  validate->add_option("input", input, "Document (default: stdin)");

  auto* gen = app.add_subcommand("gen-random", "Emit a seeded random fixture");
  std::string kind = "graphical_game";
  std::uint64_t seed = 0;
  std::size_t n = 4, k = 2;
  double density = 0.4;
  gen->add_option("--kind", kind,
                  "digraph, hypergraph, graphical_game, chg or hom_instance")
      ->capture_default_str();
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--n", n, "Vertices")->capture_default_str();
  gen->add_option("--m", k, "Actions (or right-hand vertices)")->capture_default_str();
  gen->add_option("--density", density)->check(CLI::Range(0.0, 1.0))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*reduce) emit(commands::reduce(load(input)));
    else if (*scc_cmd) emit(commands::scc(load(input)));
    else if (*tw) emit(commands::treewidth(load(input), exact, tw_cap));
    else if (*hom) emit(commands::hom(load(input), backend, hom_cap));
    else if (*solve) emit(commands::solve(load(input), options, witness));
    else if (*brute) emit(commands::brute(load(input), profile_cap));
    else if (*gadget) run_gadget(variant, params, instance, left, right);
    else if (*gen15) {
      if (actions > 0) emit(io::make_document(example15_game(m, actions)));
      else emit(io::make_document(example15(m).graph()));
    } else if (*validate) emit(commands::validate(load(input)));
    else if (*gen) emit(commands::random_fixture(kind, seed, n, k, density));
  } catch (const CapExceeded& e) {
    std::cerr << "refused (" << e.stage() << "): " << e.what() << "\n";
    return kCap;
  } catch (const io::ParseError& e) {
    std::cerr << "invalid document: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
