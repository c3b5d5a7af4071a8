#include "relkit/tuple.hpp"

#include <algorithm>

#include "relkit/error.hpp"

namespace relkit {

std::string to_string(const Index& i) {
  return i.is_pos() ? std::to_string(i.pos()) : i.name();
}

IndexSet make_index_set(std::vector<Index> indexes) {
  std::sort(indexes.begin(), indexes.end());
  indexes.erase(std::unique(indexes.begin(), indexes.end()), indexes.end());
  return indexes;
}

IndexSet index_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet index_intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

IndexSet index_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool index_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Domain::Domain(std::string name, std::optional<BuiltinKind> builtin,
               std::vector<Atom> members)
    : name_(std::move(name)), builtin_(builtin), members_(std::move(members)) {}

Domain Domain::enumerated(std::string name, std::vector<Payload> members) {
  std::vector<Atom> atoms;
  atoms.reserve(members.size());
  for (auto& p : members) atoms.push_back(Atom{name, std::move(p)});
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return Domain(std::move(name), std::nullopt, std::move(atoms));
}

Domain Domain::natural(std::string name) {
  return Domain(std::move(name), BuiltinKind::Natural, {});
}

Domain Domain::text(std::string name) {
  return Domain(std::move(name), BuiltinKind::Text, {});
}

const std::vector<Atom>& Domain::members() const {
  if (!is_enumerated())
    throw TypeError("domain " + name_ + " is not enumerated");
  return members_;
}

bool Domain::contains(const Atom& a) const {
  if (a.domain != name_) return false;
  if (builtin_ == BuiltinKind::Natural)
    return std::holds_alternative<std::int64_t>(a.payload) &&
           std::get<std::int64_t>(a.payload) >= 0;
  if (builtin_ == BuiltinKind::Text)
    return std::holds_alternative<std::string>(a.payload);
  return std::binary_search(members_.begin(), members_.end(), a);
}

std::optional<PayloadKind> Domain::payload_kind() const {
  if (builtin_ == BuiltinKind::Natural) return PayloadKind::Integer;
  if (builtin_ == BuiltinKind::Text) return PayloadKind::Text;
  std::optional<PayloadKind> kind;
  for (const Atom& a : members_) {
    const PayloadKind k = std::holds_alternative<std::int64_t>(a.payload)
                              ? PayloadKind::Integer
                              : PayloadKind::Text;
    if (kind && *kind != k) return std::nullopt;  // mixed
    kind = k;
  }
  return kind;
}

bool operator==(const Domain& a, const Domain& b) {
  if (a.name() != b.name()) return false;
  if (a.builtin_kind() != b.builtin_kind()) return false;
  if (a.is_enumerated()) return a.members() == b.members();
  return true;
}

bool operator!=(const Domain& a, const Domain& b) { return !(a == b); }

namespace {
template <typename V>
std::vector<std::pair<Index, V>> sorted_entries(
    std::vector<std::pair<Index, V>> entries, const char* what) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].first == entries[i - 1].first)
      throw TypeError(std::string(what) + ": duplicate index " +
                      to_string(entries[i].first));
  return entries;
}

template <typename V>
IndexSet entry_indexes(const std::vector<std::pair<Index, V>>& entries) {
  IndexSet out;
  out.reserve(entries.size());
  for (const auto& [i, v] : entries) out.push_back(i);
  return out;
}

template <typename V>
const V& entry_at(const std::vector<std::pair<Index, V>>& entries,
                  const Index& i, const char* what) {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), i,
      [](const auto& e, const Index& key) { return e.first < key; });
  if (it == entries.end() || it->first != i)
    throw TypeError(std::string(what) + ": no entry for index " + to_string(i));
  return it->second;
}

template <typename V>
bool entry_has(const std::vector<std::pair<Index, V>>& entries, const Index& i) {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), i,
      [](const auto& e, const Index& key) { return e.first < key; });
  return it != entries.end() && it->first == i;
}
}  // namespace

Tuple::Tuple(std::vector<std::pair<Index, Atom>> entries)
    : entries_(sorted_entries(std::move(entries), "tuple")) {}

IndexSet Tuple::indexes() const { return entry_indexes(entries_); }
bool Tuple::has(const Index& i) const { return entry_has(entries_, i); }
const Atom& Tuple::at(const Index& i) const {
  return entry_at(entries_, i, "tuple");
}

bool operator==(const Tuple& a, const Tuple& b) {
  return a.entries() == b.entries();
}

bool operator!=(const Tuple& a, const Tuple& b) { return !(a == b); }

bool operator<(const Tuple& a, const Tuple& b) {
  return std::lexicographical_compare(
      a.entries().begin(), a.entries().end(), b.entries().begin(),
      b.entries().end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

Tuple sequence(std::vector<Atom> values) {
  std::vector<std::pair<Index, Atom>> entries;
  entries.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    entries.emplace_back(Index::pos(i), std::move(values[i]));
  return Tuple(std::move(entries));
}

bool is_sequence(const Tuple& t) {
  std::uint64_t expected = 0;
  for (const auto& [i, a] : t.entries()) {
    if (!i.is_pos() || i.pos() != expected) return false;
    ++expected;
  }
  return true;
}

Tuple concat(const Tuple& a, const Tuple& b) {
  if (!is_sequence(a) || !is_sequence(b))
    throw TypeError("concat: operands must be sequences");
  std::vector<std::pair<Index, Atom>> entries(a.entries());
  const std::uint64_t m = a.size();
  for (const auto& [i, atom] : b.entries())
    entries.emplace_back(Index::pos(m + i.pos()), atom);
  return Tuple(std::move(entries));
}

Tuple subtuple(const Tuple& t, const IndexSet& j) {
  std::vector<std::pair<Index, Atom>> entries;
  for (const auto& e : t.entries())
    if (std::binary_search(j.begin(), j.end(), e.first)) entries.push_back(e);
  return Tuple(std::move(entries));
}

Signature::Signature(std::vector<std::pair<Index, Domain>> entries)
    : entries_(sorted_entries(std::move(entries), "signature")) {}

IndexSet Signature::indexes() const { return entry_indexes(entries_); }
bool Signature::has(const Index& i) const { return entry_has(entries_, i); }
const Domain& Signature::at(const Index& i) const {
  return entry_at(entries_, i, "signature");
}

bool operator==(const Signature& a, const Signature& b) {
  return a.entries() == b.entries();
}

bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

Signature subtype(const Signature& sig, const IndexSet& j) {
  std::vector<std::pair<Index, Domain>> entries;
  for (const auto& e : sig.entries())
    if (std::binary_search(j.begin(), j.end(), e.first)) entries.push_back(e);
  return Signature(std::move(entries));
}

bool typed_by(const Tuple& t, const Signature& sig) {
  if (t.size() != sig.size()) return false;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const auto& [ti, atom] = t.entries()[k];
    const auto& [si, domain] = sig.entries()[k];
    if (ti != si) return false;
    if (!domain.contains(atom)) return false;
  }
  return true;
}

bool summable(const Signature& a, const Signature& b) {
  for (const Index& i : index_intersect(a.indexes(), b.indexes()))
    if (a.at(i) != b.at(i)) return false;
  return true;
}

Signature sum(const Signature& a, const Signature& b) {
  if (!summable(a, b))
    throw TypeError("sum: signatures disagree on a shared index");
  std::vector<std::pair<Index, Domain>> entries(a.entries());
  for (const auto& e : b.entries())
    if (!a.has(e.first)) entries.push_back(e);
  return Signature(std::move(entries));
}

std::uint64_t cart_size(const Signature& sig, const Limits& limits) {
  std::uint64_t total = 1;
  for (const auto& [i, d] : sig.entries()) {
    if (!d.is_enumerated())
      throw TypeError("cart: domain " + d.name() + " of index " + to_string(i) +
                      " is not enumerated");
    if (d.members().empty()) return 0;
    if (total > limits.materialization / d.members().size())
      throw LimitError("cart: product size exceeds limit");
    total *= d.members().size();
  }
  return total;
}

std::vector<Tuple> enumerate_cart(const Signature& sig, const Limits& limits) {
  const std::uint64_t total = cart_size(sig, limits);
  std::vector<Tuple> out;
  out.reserve(total);
  if (total == 0) return out;
  std::vector<std::size_t> digits(sig.size(), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    std::vector<std::pair<Index, Atom>> entries;
    entries.reserve(sig.size());
    for (std::size_t i = 0; i < sig.size(); ++i)
      entries.emplace_back(sig.entries()[i].first,
                           sig.entries()[i].second.members()[digits[i]]);
    out.emplace_back(std::move(entries));
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < sig.entries()[i].second.members().size()) break;
      digits[i] = 0;
    }
  }
  return out;
}

Value index_value(const Index& i) {
  if (i.is_pos())
    return Value(Atom{kIndexDomain, static_cast<std::int64_t>(i.pos())});
  return Value(Atom{kIndexDomain, i.name()});
}

Function as_function(const Tuple& t) {
  std::vector<Value> img;
  img.reserve(t.size());
  for (const auto& [i, a] : t.entries()) img.emplace_back(a);
  return as_function(t, FinSet(std::move(img)));
}

Function as_function(const Tuple& t, const FinSet& target) {
  std::vector<Value> source;
  Function::Table entries;
  source.reserve(t.size());
  entries.reserve(t.size());
  for (const auto& [i, a] : t.entries()) {
    source.push_back(index_value(i));
    entries.emplace_back(index_value(i), Value(a));
  }
  return Function::from_table(FinSet(std::move(source)), target,
                              std::move(entries));
}

}  // namespace relkit
