#pragma once

#include <cstddef>
#include <utility>

#include "relkit/limits.hpp"
#include "relkit/value.hpp"

namespace relkit {

/// The Kuratowski encoding of an ordered pair: {{a},{a,b}}.
/// When a == b the two members collapse and the result is {{a}}.
FinSet kuratowski_encode(const Value& a, const Value& b);

/// Inverse of kuratowski_encode. Throws TypeError on sets that are not
/// of the shape {{a}} or {{a},{a,b}}.
std::pair<Value, Value> kuratowski_decode(const FinSet& s);

/// The von Neumann numeral for n: 0 is {} and n+1 is n ∪ {n}.
FinSet von_neumann_encode(std::size_t n, const Limits& limits = default_limits());

/// s ∪ {s}.
FinSet von_neumann_succ(const FinSet& s);

/// Inverse of von_neumann_encode; throws TypeError on non-numerals.
std::size_t von_neumann_decode(const FinSet& s,
                               const Limits& limits = default_limits());

}  // namespace relkit
