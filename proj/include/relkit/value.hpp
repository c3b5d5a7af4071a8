#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "relkit/limits.hpp"

namespace relkit {

/// An atom payload: a natural/integer or a text string.
using Payload = std::variant<std::int64_t, std::string>;

/// A domain-tagged atomic value. Atoms from distinct domains never
/// compare equal, which makes distinct domains disjoint by construction.
struct Atom {
  std::string domain;
  Payload payload;
};

bool operator==(const Atom& a, const Atom& b);
bool operator!=(const Atom& a, const Atom& b);
/// Canonical order: domain name, then payload kind (integers before
/// text), then payload value.
bool operator<(const Atom& a, const Atom& b);

class Value;

/// A finite set of values with structural equality. Elements are held
/// sorted in the canonical Value order with duplicates collapsed, so
/// equal sets have equal representations.
class FinSet {
 public:
  FinSet() = default;
  explicit FinSet(std::vector<Value> elements);

  static FinSet of_atoms(std::vector<Atom> atoms);

  bool empty() const { return elements_.empty(); }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Value>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(const Value& v) const;
  bool subset_of(const FinSet& other) const;

 private:
  std::vector<Value> elements_;
};

bool operator==(const FinSet& a, const FinSet& b);
bool operator!=(const FinSet& a, const FinSet& b);
bool operator<(const FinSet& a, const FinSet& b);

/// A value is an atom or a finite set of values (hereditarily finite
/// sets are reachable by nesting). Immutable after construction.
class Value {
 public:
  Value(Atom atom) : rep_(std::move(atom)) {}
  Value(FinSet set) : rep_(std::move(set)) {}

  bool is_atom() const { return std::holds_alternative<Atom>(rep_); }
  bool is_set() const { return std::holds_alternative<FinSet>(rep_); }
  const Atom& atom() const;
  const FinSet& set() const;

 private:
  std::variant<Atom, FinSet> rep_;
};

bool operator==(const Value& a, const Value& b);
bool operator!=(const Value& a, const Value& b);
/// Canonical total order: atoms before sets; atoms by Atom order; sets
/// lexicographically over their sorted elements.
bool operator<(const Value& a, const Value& b);

enum class SetOpKind { Union, Intersection, Difference };

FinSet set_union(const FinSet& a, const FinSet& b);
FinSet set_intersect(const FinSet& a, const FinSet& b);
FinSet set_difference(const FinSet& a, const FinSet& b);
FinSet set_ops(const FinSet& a, const FinSet& b, SetOpKind kind);

/// All 2^|s| subsets of s, each exactly once.
/// Throws LimitError when |s| exceeds limits.powerset_elements.
FinSet powerset(const FinSet& s, const Limits& limits = default_limits());

/// Union of a set of sets. Every element of s must itself be a set.
FinSet big_union(const FinSet& s);
/// Intersection of a nonempty set of sets.
FinSet big_intersect(const FinSet& s);

std::string payload_string(const Payload& p);
/// Rendered as domain:payload for atoms, {..} for sets.
std::string to_string(const Value& v);
std::string to_string(const FinSet& s);

}  // namespace relkit
