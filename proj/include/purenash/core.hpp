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

#ifndef PURENASH_CORE_HPP_
#define PURENASH_CORE_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace purenash {

// Vertex, player, color and action identifiers are opaque strings.
using VertexId = std::string;
using Color = std::string;

// Utilities are exact; argmax ties carry meaning.
using Rational = mpq_class;

// Base of everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violates a structural invariant (self-loop, non-total table,
// hypergraph outside the game class, invalid decomposition, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap would be exceeded; the operation refuses to run
// rather than truncating.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// Total order on vertex identifiers. Canonical non-negative integers
// ("0", "7", "12"; no leading zeros) compare numerically and sort before all
// other identifiers; everything else compares bytewise.
bool vertex_less(std::string_view a, std::string_view b);

struct VertexLess {
  bool operator()(std::string_view a, std::string_view b) const {
    return vertex_less(a, b);
  }
};

// Parses "p", "-p" or "p/q" (q > 0) into a canonical rational.
// Throws Error on anything else.
Rational parse_rational(std::string_view text);

// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

// Saturating product used by cap checks.
std::size_t saturating_mul(std::size_t a, std::size_t b);

}  // namespace purenash

#endif  // PURENASH_CORE_HPP_
