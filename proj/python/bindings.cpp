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

// Python module: every operation takes and returns canonical JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "purenash/commands.hpp"

namespace py = pybind11;
using namespace purenash;

namespace {

io::Document load(const std::string& text) { return io::parse(text); }

std::optional<io::Document> load_optional(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return load(*text);
}

std::string text(const io::Document& doc) { return io::serialize(doc); }

}  // namespace

PYBIND11_MODULE(_purenash, m) {
  m.doc() = "Pure Nash equilibria in graphical and colored hypergraphical games";

  auto base = py::register_exception<Error>(m, "PurenashError", PyExc_RuntimeError);
  py::register_exception<io::ParseError>(m, "DocumentError", base);
  py::register_exception<commands::UsageError>(m, "UsageError", base);
  py::register_exception<InvariantError>(m, "InvariantError", base);
  py::register_exception<PreconditionError>(m, "PreconditionError", base);
  py::register_exception<CapExceeded>(m, "CapExceededError", base);

  m.attr("FORMAT_VERSION") = std::string(io::kFormatVersion);
  m.attr("DEFAULT_MAPPING_CAP") = kDefaultMappingCap;
  m.attr("DEFAULT_PROFILE_CAP") = kDefaultProfileCap;
  m.attr("DEFAULT_CORE_CAP") = kDefaultCoreCap;
  m.attr("DEFAULT_TREEWIDTH_CAP") = kDefaultExactTreewidthCap;

  m.def("canonicalize", [](const std::string& doc) { return text(load(doc)); },
        py::arg("doc"));
  m.def("validate",
        [](const std::string& doc) { return text(commands::validate(load(doc))); },
        py::arg("doc"));
  m.def("reduce",
        [](const std::string& doc) { return text(commands::reduce(load(doc))); },
        py::arg("doc"));
  m.def("scc", [](const std::string& doc) { return text(commands::scc(load(doc))); },
        py::arg("doc"));
  m.def(
      "treewidth",
      [](const std::string& doc, bool exact, std::size_t cap) {
        return text(commands::treewidth(load(doc), exact, cap));
      },
      py::arg("doc"), py::arg("exact") = false,
      py::arg("cap") = kDefaultExactTreewidthCap);
  m.def(
      "hom",
      [](const std::string& doc, const std::string& backend, std::size_t cap) {
        return text(commands::hom(load(doc), backend, cap));
      },
      py::arg("doc"), py::arg("backend") = "dp", py::arg("cap") = kDefaultMappingCap);
  m.def(
      "solve",
      [](const std::string& doc, bool witness, int width_threshold, std::size_t cap,
         bool core_first, std::size_t core_cap) {
        SolveOptions options;
        options.width_threshold = width_threshold;
        options.mapping_cap = cap;
        options.core_first = core_first;
        options.core_cap = core_cap;
        return text(commands::solve(load(doc), options, witness));
      },
      py::arg("doc"), py::arg("witness") = true,
      py::arg("width_threshold") = SolveOptions{}.width_threshold,
      py::arg("cap") = kDefaultMappingCap, py::arg("core_first") = false,
      py::arg("core_cap") = kDefaultCoreCap);
  m.def(
      "brute",
      [](const std::string& doc, std::size_t cap) {
        return text(commands::brute(load(doc), cap));
      },
      py::arg("doc"), py::arg("cap") = kDefaultProfileCap);
  m.def(
      "gadget",
      [](const std::string& variant, const std::map<std::string, long>& params,
         const std::optional<std::string>& instance,
         const std::optional<std::string>& left,
         const std::optional<std::string>& right) {
        const auto parsed = parse_gadget_variant(variant);
        if (!parsed) throw commands::UsageError("unknown variant '" + variant + "'");
        return text(commands::gadget(
            GadgetSpec{*parsed, params},
            {load_optional(instance), load_optional(left), load_optional(right)}));
      },
      py::arg("variant"), py::arg("params") = std::map<std::string, long>{},
      py::arg("instance") = std::nullopt, py::arg("left") = std::nullopt,
      py::arg("right") = std::nullopt);
  m.def("parse_params", &commands::parse_params, py::arg("text"));
  m.def(
      "random_fixture",
      [](const std::string& kind, std::uint64_t seed, std::size_t n, std::size_t m,
         double density) {
        return text(commands::random_fixture(kind, seed, n, m, density));
      },
      py::arg("kind"), py::arg("seed") = 0, py::arg("n") = 4, py::arg("m") = 2,
      py::arg("density") = 0.4);
}
