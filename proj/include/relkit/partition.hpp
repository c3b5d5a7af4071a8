#pragma once

#include "relkit/value.hpp"

namespace relkit {

/// True when cells is a set of nonempty subsets of ground whose union
/// is ground.
bool is_cover(const FinSet& cells, const FinSet& ground);

/// A cover whose cells are pairwise disjoint.
bool is_partition(const FinSet& cells, const FinSet& ground);

/// A validated partition of a ground set.
class Partition {
 public:
  Partition(FinSet cells, FinSet ground);

  const FinSet& cells() const { return cells_; }
  const FinSet& ground() const { return ground_; }

  /// The finest partition: one singleton cell per element.
  static Partition singletons(const FinSet& ground);
  /// The coarsest partition. Its cells are {ground}: one cell, the
  /// ground set itself. (Some texts display this with an extra level of
  /// braces, but every cell must be a subset of the ground set, which
  /// {{ground}} would violate.) An empty ground set has no cells at
  /// all, since cells are nonempty.
  static Partition coarsest(const FinSet& ground);

 private:
  FinSet cells_;
  FinSet ground_;
};

bool operator==(const Partition& a, const Partition& b);

/// fine is finer than coarse: every cell of fine lies inside some cell
/// of coarse. Both must partition the same ground set.
bool finer(const Partition& fine, const Partition& coarse);

}  // namespace relkit
