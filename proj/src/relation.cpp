#include "relkit/relation.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "relkit/error.hpp"

namespace relkit {

namespace {
// Invariant check for every operation result, active in test builds.
#ifndef NDEBUG
void check_invariant(const Relation& r) {
  for (const Tuple& t : r.extent()) assert(typed_by(t, r.signature()));
  for (std::size_t i = 1; i < r.extent().size(); ++i)
    assert(r.extent()[i - 1] < r.extent()[i]);
}
#else
void check_invariant(const Relation&) {}
#endif

Tuple merge_tuples(const Tuple& a, const Tuple& b) {
  std::vector<std::pair<Index, Atom>> entries(a.entries());
  for (const auto& e : b.entries())
    if (!a.has(e.first)) entries.push_back(e);
  return Tuple(std::move(entries));
}
}  // namespace

Relation::Relation(Signature sig, std::vector<Tuple> extent)
    : sig_(std::move(sig)), extent_(std::move(extent)) {
  for (const Tuple& t : extent_)
    if (!typed_by(t, sig_))
      throw TypeError("relation: tuple is not typed by the signature");
  std::sort(extent_.begin(), extent_.end());
  extent_.erase(std::unique(extent_.begin(), extent_.end()), extent_.end());
}

bool Relation::contains(const Tuple& t) const {
  return std::binary_search(extent_.begin(), extent_.end(), t);
}

bool operator==(const Relation& a, const Relation& b) {
  return a.signature() == b.signature() && a.extent() == b.extent();
}

bool operator!=(const Relation& a, const Relation& b) { return !(a == b); }

Relation rel_set_ops(const Relation& r0, const Relation& r1, SetOpKind kind) {
  if (r0.signature() != r1.signature())
    throw TypeError("rel_set_ops: signatures differ");
  std::vector<Tuple> out;
  switch (kind) {
    case SetOpKind::Union:
      std::set_union(r0.extent().begin(), r0.extent().end(), r1.extent().begin(),
                     r1.extent().end(), std::back_inserter(out));
      break;
    case SetOpKind::Intersection:
      std::set_intersection(r0.extent().begin(), r0.extent().end(),
                            r1.extent().begin(), r1.extent().end(),
                            std::back_inserter(out));
      break;
    case SetOpKind::Difference:
      std::set_difference(r0.extent().begin(), r0.extent().end(),
                          r1.extent().begin(), r1.extent().end(),
                          std::back_inserter(out));
      break;
  }
  Relation result(r0.signature(), std::move(out));
  check_invariant(result);
  return result;
}

Relation project(const Relation& r, const IndexSet& j) {
  if (!index_subset(j, r.indexes()))
    throw TypeError("project: index set escapes the relation's indexes");
  std::vector<Tuple> out;
  out.reserve(r.size());
  for (const Tuple& t : r.extent()) out.push_back(subtuple(t, j));
  Relation result(subtype(r.signature(), j), std::move(out));
  check_invariant(result);
  return result;
}

Relation inverse_project(const Relation& r, const Signature& full,
                         const Limits& limits) {
  const IndexSet j = r.indexes();
  if (!index_subset(j, full.indexes()))
    throw TypeError("inverse_project: the tuple set's indexes escape the full "
                    "index set");
  if (r.signature() != subtype(full, j))
    throw TypeError("inverse_project: the tuple set is not typed by the "
                    "corresponding subtype");
  const Signature added = subtype(full, index_difference(full.indexes(), j));
  const std::uint64_t added_size = cart_size(added, limits);
  if (!r.extent().empty() && added_size != 0 &&
      r.size() > limits.materialization / added_size)
    throw LimitError("inverse_project: result size exceeds limit");

  const std::vector<Tuple> extras = enumerate_cart(added, limits);
  std::vector<Tuple> out;
  out.reserve(r.size() * extras.size());
  for (const Tuple& base : r.extent())
    for (const Tuple& extra : extras) out.push_back(merge_tuples(base, extra));
  Relation result(full, std::move(out));
  check_invariant(result);
  return result;
}

Relation cylinder(const Relation& r, const Signature& other,
                  const Limits& limits) {
  if (!summable(r.signature(), other))
    throw TypeError("cylinder: signatures are not summable");
  return inverse_project(r, sum(r.signature(), other), limits);
}

Relation join(const Relation& r0, const Relation& r1) {
  if (!summable(r0.signature(), r1.signature()))
    throw TypeError("join: signatures are not summable");
  const Signature joined = sum(r0.signature(), r1.signature());
  const IndexSet shared = index_intersect(r0.indexes(), r1.indexes());

  const Relation& small = r0.size() <= r1.size() ? r0 : r1;
  const Relation& large = r0.size() <= r1.size() ? r1 : r0;

  std::map<Tuple, std::vector<const Tuple*>> buckets;
  for (const Tuple& t : small.extent())
    buckets[subtuple(t, shared)].push_back(&t);

  std::vector<Tuple> out;
  for (const Tuple& t : large.extent()) {
    auto it = buckets.find(subtuple(t, shared));
    if (it == buckets.end()) continue;
    for (const Tuple* s : it->second) out.push_back(merge_tuples(t, *s));
  }
  Relation result(joined, std::move(out));
  check_invariant(result);
  return result;
}

Pattern::Pattern(std::vector<std::pair<Index, std::string>> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].first == entries_[i - 1].first)
      throw TypeError("pattern: duplicate index " + to_string(entries_[i].first));
}

IndexSet Pattern::indexes() const {
  IndexSet out;
  out.reserve(entries_.size());
  for (const auto& [i, v] : entries_) out.push_back(i);
  return out;
}

const std::string& Pattern::at(const Index& i) const {
  for (const auto& [idx, v] : entries_)
    if (idx == i) return v;
  throw TypeError("pattern: no entry for index " + to_string(i));
}

std::vector<std::string> Pattern::variables() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [i, v] : entries_) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool operator==(const Pattern& a, const Pattern& b) {
  return a.entries() == b.entries();
}

Relation filter(const Relation& r, const Pattern& p) {
  if (p.indexes() != r.indexes())
    throw TypeError("filter: pattern indexes differ from the relation's");

  // φ(p(i)) = τ(i); a repeated variable must see one domain
  std::vector<std::pair<Index, Domain>> phi_entries;
  for (const auto& [i, var] : p.entries()) {
    const Domain& d = r.signature().at(i);
    const Index vi = Index::name(var);
    bool seen = false;
    for (const auto& [pi, pd] : phi_entries) {
      if (pi == vi) {
        seen = true;
        if (pd != d)
          throw TypeError("filter: variable " + var +
                          " is used at indexes of different domains");
      }
    }
    if (!seen) phi_entries.emplace_back(vi, d);
  }
  Signature phi(std::move(phi_entries));

  std::vector<Tuple> out;
  for (const Tuple& t : r.extent()) {
    std::vector<std::pair<Index, Atom>> sub;
    bool consistent = true;
    for (const auto& [i, var] : p.entries()) {
      const Atom& a = t.at(i);
      const Index vi = Index::name(var);
      bool bound = false;
      for (const auto& [si, sa] : sub) {
        if (si == vi) {
          bound = true;
          if (sa != a) consistent = false;
          break;
        }
      }
      if (!consistent) break;
      if (!bound) sub.emplace_back(vi, a);
    }
    if (consistent) out.emplace_back(std::move(sub));
  }
  Relation result(std::move(phi), std::move(out));
  check_invariant(result);
  return result;
}

bool is_key(const Relation& r, const IndexSet& j) {
  if (!index_subset(j, r.indexes()))
    throw TypeError("is_key: index set escapes the relation's indexes");
  std::vector<Tuple> keys;
  keys.reserve(r.size());
  for (const Tuple& t : r.extent()) keys.push_back(subtuple(t, j));
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

}  // namespace relkit
