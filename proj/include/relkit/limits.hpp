#pragma once

#include <cstddef>

namespace relkit {

/// Size ceilings for operations that materialize combinatorial objects.
/// These are configuration, not hard-coded constants: every bounded
/// operation takes a Limits argument defaulting to default_limits().
struct Limits {
  /// powerset: max |S| (result has 2^|S| elements).
  std::size_t powerset_elements = 20;
  /// von Neumann numerals: max encodable natural.
  std::size_t ordinal_max = 10;
  /// enumerate_functions / count_functions: max |T|^|S|.
  std::size_t function_enumeration = 100000;
  /// Cartesian products, cylinders, inverse projections, universal
  /// binary relations: max number of materialized tuples/pairs.
  std::size_t materialization = 1000000;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace relkit
