#include "relkit/value.hpp"

#include <algorithm>
#include <sstream>

#include "relkit/error.hpp"

namespace relkit {

bool operator==(const Atom& a, const Atom& b) {
  return a.domain == b.domain && a.payload == b.payload;
}

bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }

bool operator<(const Atom& a, const Atom& b) {
  if (a.domain != b.domain) return a.domain < b.domain;
  return a.payload < b.payload;  // variant: index first, then value
}

const Atom& Value::atom() const {
  if (!is_atom()) throw TypeError("value is a set, not an atom");
  return std::get<Atom>(rep_);
}

const FinSet& Value::set() const {
  if (!is_set()) throw TypeError("value is an atom, not a set");
  return std::get<FinSet>(rep_);
}

bool operator<(const Value& a, const Value& b) {
  if (a.is_atom() != b.is_atom()) return a.is_atom();  // atoms first
  if (a.is_atom()) return a.atom() < b.atom();
  return a.set() < b.set();
}

bool operator==(const Value& a, const Value& b) {
  if (a.is_atom() != b.is_atom()) return false;
  if (a.is_atom()) return a.atom() == b.atom();
  return a.set() == b.set();
}

bool operator!=(const Value& a, const Value& b) { return !(a == b); }

FinSet::FinSet(std::vector<Value> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(),
            [](const Value& x, const Value& y) { return x < y; });
  elements_.erase(std::unique(elements_.begin(), elements_.end(),
                              [](const Value& x, const Value& y) { return x == y; }),
                  elements_.end());
}

FinSet FinSet::of_atoms(std::vector<Atom> atoms) {
  std::vector<Value> values;
  values.reserve(atoms.size());
  for (auto& a : atoms) values.emplace_back(std::move(a));
  return FinSet(std::move(values));
}

bool FinSet::contains(const Value& v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v,
                            [](const Value& x, const Value& y) { return x < y; });
}

bool FinSet::subset_of(const FinSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end(),
                       [](const Value& x, const Value& y) { return x < y; });
}

bool operator==(const FinSet& a, const FinSet& b) {
  return a.elements() == b.elements();
}

bool operator!=(const FinSet& a, const FinSet& b) { return !(a == b); }

bool operator<(const FinSet& a, const FinSet& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Value& x, const Value& y) { return x < y; });
}

namespace {
const auto kValueLess = [](const Value& x, const Value& y) { return x < y; };
}

FinSet set_union(const FinSet& a, const FinSet& b) {
  std::vector<Value> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                 kValueLess);
  return FinSet(std::move(out));
}

FinSet set_intersect(const FinSet& a, const FinSet& b) {
  std::vector<Value> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out), kValueLess);
  return FinSet(std::move(out));
}

FinSet set_difference(const FinSet& a, const FinSet& b) {
  std::vector<Value> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out), kValueLess);
  return FinSet(std::move(out));
}

FinSet set_ops(const FinSet& a, const FinSet& b, SetOpKind kind) {
  switch (kind) {
    case SetOpKind::Union:
      return set_union(a, b);
    case SetOpKind::Intersection:
      return set_intersect(a, b);
    case SetOpKind::Difference:
      return set_difference(a, b);
  }
  throw Error("unknown set operation");
}

FinSet powerset(const FinSet& s, const Limits& limits) {
  if (s.size() > limits.powerset_elements)
    throw LimitError("powerset: set of " + std::to_string(s.size()) +
                     " elements exceeds limit of " +
                     std::to_string(limits.powerset_elements));
  const auto& elems = s.elements();
  const std::size_t n = elems.size();
  std::vector<Value> subsets;
  subsets.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Value> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(elems[i]);
    subsets.emplace_back(FinSet(std::move(subset)));
  }
  return FinSet(std::move(subsets));
}

namespace {
const FinSet& member_set(const Value& v, const char* op) {
  if (!v.is_set())
    throw TypeError(std::string(op) + ": member " + to_string(v) + " is not a set");
  return v.set();
}
}  // namespace

FinSet big_union(const FinSet& s) {
  std::vector<Value> out;
  for (const Value& m : s) {
    const FinSet& inner = member_set(m, "big_union");
    out.insert(out.end(), inner.begin(), inner.end());
  }
  return FinSet(std::move(out));
}

FinSet big_intersect(const FinSet& s) {
  if (s.empty()) throw TypeError("big_intersect: empty set of sets");
  FinSet acc = member_set(s.elements()[0], "big_intersect");
  for (std::size_t i = 1; i < s.size(); ++i)
    acc = set_intersect(acc, member_set(s.elements()[i], "big_intersect"));
  return acc;
}

std::string payload_string(const Payload& p) {
  if (std::holds_alternative<std::int64_t>(p))
    return std::to_string(std::get<std::int64_t>(p));
  return std::get<std::string>(p);
}

std::string to_string(const Value& v) {
  if (v.is_atom()) {
    const Atom& a = v.atom();
    return a.domain + ":" + payload_string(a.payload);
  }
  return to_string(v.set());
}

std::string to_string(const FinSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const Value& v : s) {
    if (!first) out << ',';
    first = false;
    out << to_string(v);
  }
  out << '}';
  return out.str();
}

}  // namespace relkit
