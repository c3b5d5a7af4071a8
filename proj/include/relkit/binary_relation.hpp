#pragma once

#include <set>
#include <utility>
#include <vector>

#include "relkit/limits.hpp"
#include "relkit/partition.hpp"
#include "relkit/value.hpp"

namespace relkit {

using ValuePair = std::pair<Value, Value>;

/// A binary relation: a source set, a target set, and an extent of
/// pairs drawn from source × target. The extent is held sorted and
/// deduplicated; construction validates that no pair escapes.
class BinaryRelation {
 public:
  BinaryRelation(FinSet source, FinSet target, std::vector<ValuePair> extent);

  const FinSet& source() const { return source_; }
  const FinSet& target() const { return target_; }
  const std::vector<ValuePair>& extent() const { return extent_; }

  bool contains(const Value& x, const Value& y) const;
  bool empty() const { return extent_.empty(); }
  bool is_endo() const { return source_ == target_; }

 private:
  FinSet source_;
  FinSet target_;
  std::vector<ValuePair> extent_;
};

bool operator==(const BinaryRelation& a, const BinaryRelation& b);
bool operator!=(const BinaryRelation& a, const BinaryRelation& b);

/// The relation with extent source × target.
BinaryRelation universal_relation(const FinSet& source, const FinSet& target,
                                  const Limits& limits = default_limits());

/// {(x,x) | x ∈ s}.
BinaryRelation identity_relation(const FinSet& s);

/// Extent-wise set operation; operands must share source and target.
BinaryRelation br_set_ops(const BinaryRelation& r0, const BinaryRelation& r1,
                          SetOpKind kind);

/// Extent inclusion; operands must share source and target.
bool subrelation(const BinaryRelation& r0, const BinaryRelation& r1);

/// Source and target swapped, pairs flipped.
BinaryRelation inverse(const BinaryRelation& r);

/// r0 ; r1 — pairs (x,z) with a witness y. Requires target(r0) == source(r1).
BinaryRelation compose(const BinaryRelation& r0, const BinaryRelation& r1);

enum class RelProperty { Total, SingleValued, Surjective, Injective };

/// The quantified definition of the property, decided by enumeration.
bool has_property(const BinaryRelation& r, RelProperty p);

/// Single-valued and total.
bool is_functional(const BinaryRelation& r);

enum class EndoProperty {
  Reflexive,
  Symmetric,
  Transitive,
  Antisymmetric,
  OrderTotal,
  Equivalence,
  Preorder,
  PartialOrder,
  TotalOrder,
};

/// All labels that apply to an endo-relation:
///   reflexive      iff id ⊂ r
///   symmetric      iff r = r⁻¹
///   transitive     iff r;r ⊂ r
///   antisymmetric  iff r ∩ r⁻¹ ⊂ id
///   order-total    iff r ∪ r⁻¹ = U(S,S)
/// plus the derived labels equivalence, preorder, partial order, and
/// total order. Throws TypeError when source ≠ target.
std::set<EndoProperty> endo_properties(const BinaryRelation& r);

bool is_equivalence(const BinaryRelation& r);

/// The cells {y | (x,y) ∈ E} for each x; requires an equivalence.
Partition equivalence_classes(const BinaryRelation& r);

}  // namespace relkit
