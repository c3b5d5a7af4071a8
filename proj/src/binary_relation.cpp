#include "relkit/binary_relation.hpp"

#include <algorithm>

#include "relkit/error.hpp"

namespace relkit {

namespace {
const auto kPairLess = [](const ValuePair& a, const ValuePair& b) {
  if (a.first != b.first) return a.first < b.first;
  return a.second < b.second;
};
}  // namespace

BinaryRelation::BinaryRelation(FinSet source, FinSet target,
                               std::vector<ValuePair> extent)
    : source_(std::move(source)),
      target_(std::move(target)),
      extent_(std::move(extent)) {
  std::sort(extent_.begin(), extent_.end(), kPairLess);
  extent_.erase(std::unique(extent_.begin(), extent_.end()), extent_.end());
  for (const auto& [x, y] : extent_) {
    if (!source_.contains(x))
      throw TypeError("binary relation: " + to_string(x) + " is not in the source");
    if (!target_.contains(y))
      throw TypeError("binary relation: " + to_string(y) + " is not in the target");
  }
}

bool BinaryRelation::contains(const Value& x, const Value& y) const {
  return std::binary_search(extent_.begin(), extent_.end(), ValuePair{x, y},
                            kPairLess);
}

bool operator==(const BinaryRelation& a, const BinaryRelation& b) {
  return a.source() == b.source() && a.target() == b.target() &&
         a.extent() == b.extent();
}

bool operator!=(const BinaryRelation& a, const BinaryRelation& b) {
  return !(a == b);
}

BinaryRelation universal_relation(const FinSet& source, const FinSet& target,
                                  const Limits& limits) {
  if (!target.empty() && source.size() > limits.materialization / target.size())
    throw LimitError("universal_relation: extent would exceed limit");
  std::vector<ValuePair> extent;
  extent.reserve(source.size() * target.size());
  for (const Value& x : source)
    for (const Value& y : target) extent.emplace_back(x, y);
  return BinaryRelation(source, target, std::move(extent));
}

BinaryRelation identity_relation(const FinSet& s) {
  std::vector<ValuePair> extent;
  extent.reserve(s.size());
  for (const Value& x : s) extent.emplace_back(x, x);
  return BinaryRelation(s, s, std::move(extent));
}

namespace {
void require_same_type(const BinaryRelation& r0, const BinaryRelation& r1,
                       const char* op) {
  if (r0.source() != r1.source() || r0.target() != r1.target())
    throw TypeError(std::string(op) + ": operands have different source or target");
}
}  // namespace

BinaryRelation br_set_ops(const BinaryRelation& r0, const BinaryRelation& r1,
                          SetOpKind kind) {
  require_same_type(r0, r1, "br_set_ops");
  std::vector<ValuePair> out;
  switch (kind) {
    case SetOpKind::Union:
      std::set_union(r0.extent().begin(), r0.extent().end(), r1.extent().begin(),
                     r1.extent().end(), std::back_inserter(out), kPairLess);
      break;
    case SetOpKind::Intersection:
      std::set_intersection(r0.extent().begin(), r0.extent().end(),
                            r1.extent().begin(), r1.extent().end(),
                            std::back_inserter(out), kPairLess);
      break;
    case SetOpKind::Difference:
      std::set_difference(r0.extent().begin(), r0.extent().end(),
                          r1.extent().begin(), r1.extent().end(),
                          std::back_inserter(out), kPairLess);
      break;
  }
  return BinaryRelation(r0.source(), r0.target(), std::move(out));
}

bool subrelation(const BinaryRelation& r0, const BinaryRelation& r1) {
  require_same_type(r0, r1, "subrelation");
  return std::includes(r1.extent().begin(), r1.extent().end(),
                       r0.extent().begin(), r0.extent().end(), kPairLess);
}

BinaryRelation inverse(const BinaryRelation& r) {
  std::vector<ValuePair> extent;
  extent.reserve(r.extent().size());
  for (const auto& [x, y] : r.extent()) extent.emplace_back(y, x);
  return BinaryRelation(r.target(), r.source(), std::move(extent));
}

BinaryRelation compose(const BinaryRelation& r0, const BinaryRelation& r1) {
  if (r0.target() != r1.source())
    throw TypeError("compose: target of the first is not the source of the second");
  std::vector<ValuePair> extent;
  for (const auto& [x, y] : r0.extent())
    for (const auto& [y1, z] : r1.extent())
      if (y == y1) extent.emplace_back(x, z);
  return BinaryRelation(r0.source(), r1.target(), std::move(extent));
}

bool has_property(const BinaryRelation& r, RelProperty p) {
  switch (p) {
    case RelProperty::Total:
      for (const Value& x : r.source()) {
        bool hit = false;
        for (const auto& [a, b] : r.extent())
          if (a == x) {
            hit = true;
            break;
          }
        if (!hit) return false;
      }
      return true;
    case RelProperty::SingleValued:
      for (const auto& p0 : r.extent())
        for (const auto& p1 : r.extent())
          if (p0.first == p1.first && p0.second != p1.second) return false;
      return true;
    case RelProperty::Surjective:
      for (const Value& y : r.target()) {
        bool hit = false;
        for (const auto& [a, b] : r.extent())
          if (b == y) {
            hit = true;
            break;
          }
        if (!hit) return false;
      }
      return true;
    case RelProperty::Injective:
      for (const auto& p0 : r.extent())
        for (const auto& p1 : r.extent())
          if (p0.second == p1.second && p0.first != p1.first) return false;
      return true;
  }
  throw Error("unknown property");
}

bool is_functional(const BinaryRelation& r) {
  return has_property(r, RelProperty::SingleValued) &&
         has_property(r, RelProperty::Total);
}

std::set<EndoProperty> endo_properties(const BinaryRelation& r) {
  if (!r.is_endo()) throw TypeError("endo_properties: source differs from target");
  const BinaryRelation id = identity_relation(r.source());
  const BinaryRelation inv = inverse(r);

  std::set<EndoProperty> out;
  const bool reflexive = subrelation(id, r);
  const bool symmetric = r == inv;
  const bool transitive = subrelation(compose(r, r), r);
  const bool antisymmetric =
      subrelation(br_set_ops(r, inv, SetOpKind::Intersection), id);
  const bool order_total =
      br_set_ops(r, inv, SetOpKind::Union) == universal_relation(r.source(), r.source());

  if (reflexive) out.insert(EndoProperty::Reflexive);
  if (symmetric) out.insert(EndoProperty::Symmetric);
  if (transitive) out.insert(EndoProperty::Transitive);
  if (antisymmetric) out.insert(EndoProperty::Antisymmetric);
  if (order_total) out.insert(EndoProperty::OrderTotal);
  if (reflexive && transitive) {
    out.insert(EndoProperty::Preorder);
    if (symmetric) out.insert(EndoProperty::Equivalence);
    if (antisymmetric) {
      out.insert(EndoProperty::PartialOrder);
      if (order_total) out.insert(EndoProperty::TotalOrder);
    }
  }
  return out;
}

bool is_equivalence(const BinaryRelation& r) {
  return r.is_endo() && endo_properties(r).count(EndoProperty::Equivalence) > 0;
}

Partition equivalence_classes(const BinaryRelation& r) {
  if (!is_equivalence(r))
    throw TypeError("equivalence_classes: relation is not an equivalence");
  std::vector<Value> cells;
  for (const Value& x : r.source()) {
    std::vector<Value> cell;
    for (const auto& [a, b] : r.extent())
      if (a == x) cell.push_back(b);
    cells.emplace_back(FinSet(std::move(cell)));
  }
  return Partition(FinSet(std::move(cells)), r.source());
}

}  // namespace relkit
