#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "relkit/function.hpp"
#include "relkit/limits.hpp"
#include "relkit/value.hpp"

namespace relkit {

/// A tuple index: a numeric position or a symbolic name. The canonical
/// order puts all positions before all names; positions are numeric,
/// names lexicographic.
class Index {
 public:
  static Index pos(std::uint64_t p) { return Index(p); }
  static Index name(std::string n) { return Index(std::move(n)); }

  bool is_pos() const { return std::holds_alternative<std::uint64_t>(rep_); }
  bool is_name() const { return std::holds_alternative<std::string>(rep_); }
  std::uint64_t pos() const { return std::get<std::uint64_t>(rep_); }
  const std::string& name() const { return std::get<std::string>(rep_); }

  friend bool operator==(const Index& a, const Index& b) { return a.rep_ == b.rep_; }
  friend bool operator!=(const Index& a, const Index& b) { return !(a == b); }
  friend bool operator<(const Index& a, const Index& b) { return a.rep_ < b.rep_; }

 private:
  explicit Index(std::uint64_t p) : rep_(p) {}
  explicit Index(std::string n) : rep_(std::move(n)) {}
  std::variant<std::uint64_t, std::string> rep_;
};

std::string to_string(const Index& i);

/// A sorted duplicate-free index set.
using IndexSet = std::vector<Index>;

IndexSet make_index_set(std::vector<Index> indexes);
IndexSet index_union(const IndexSet& a, const IndexSet& b);
IndexSet index_intersect(const IndexSet& a, const IndexSet& b);
IndexSet index_difference(const IndexSet& a, const IndexSet& b);
bool index_subset(const IndexSet& a, const IndexSet& b);

enum class PayloadKind { Integer, Text };

/// A named set of admissible atom values. Atoms of a domain carry the
/// domain's name as their tag, so distinct domains are disjoint.
/// Membership is an enumerated finite set or a builtin rule over
/// payloads (any natural, any text).
class Domain {
 public:
  enum class BuiltinKind { Natural, Text };

  static Domain enumerated(std::string name, std::vector<Payload> members);
  static Domain natural(std::string name);
  static Domain text(std::string name);

  const std::string& name() const { return name_; }
  bool is_enumerated() const { return builtin_ == std::nullopt; }
  std::optional<BuiltinKind> builtin_kind() const { return builtin_; }

  /// Members in canonical order; throws TypeError on builtin domains.
  const std::vector<Atom>& members() const;

  bool contains(const Atom& a) const;

  /// An atom of this domain tagged with its name.
  Atom make_atom(Payload p) const { return Atom{name_, std::move(p)}; }

  /// The payload kind all members share, when determinable
  /// (builtin domains always; enumerated ones when homogeneous).
  std::optional<PayloadKind> payload_kind() const;

 private:
  Domain(std::string name, std::optional<BuiltinKind> builtin,
         std::vector<Atom> members);

  std::string name_;
  std::optional<BuiltinKind> builtin_;
  std::vector<Atom> members_;  // sorted, enumerated form only
};

bool operator==(const Domain& a, const Domain& b);
bool operator!=(const Domain& a, const Domain& b);

/// A tuple: a finite map from indexes to atoms, held sorted by index.
class Tuple {
 public:
  Tuple() = default;
  explicit Tuple(std::vector<std::pair<Index, Atom>> entries);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<Index, Atom>>& entries() const { return entries_; }
  IndexSet indexes() const;
  bool has(const Index& i) const;
  const Atom& at(const Index& i) const;

 private:
  std::vector<std::pair<Index, Atom>> entries_;
};

bool operator==(const Tuple& a, const Tuple& b);
bool operator!=(const Tuple& a, const Tuple& b);
/// Canonical order: lexicographic over the sorted (index, atom) entries.
bool operator<(const Tuple& a, const Tuple& b);

/// The sequence ⟨v0,…,vn−1⟩: values indexed by positions 0..n−1.
Tuple sequence(std::vector<Atom> values);

/// Positions 0..n−1, nothing else.
bool is_sequence(const Tuple& t);

/// Concatenation of two sequences: length m+n, the second shifted by m.
Tuple concat(const Tuple& a, const Tuple& b);

/// The subtuple (projection) of t on j ∩ indexes(t); j may mention
/// indexes t lacks, mirroring function restriction.
Tuple subtuple(const Tuple& t, const IndexSet& j);

/// A signature (typing tuple): a finite map from indexes to domains.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<std::pair<Index, Domain>> entries);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<Index, Domain>>& entries() const { return entries_; }
  IndexSet indexes() const;
  bool has(const Index& i) const;
  const Domain& at(const Index& i) const;

 private:
  std::vector<std::pair<Index, Domain>> entries_;
};

bool operator==(const Signature& a, const Signature& b);
bool operator!=(const Signature& a, const Signature& b);

/// The subtype of sig determined by j (restriction to j ∩ indexes).
Signature subtype(const Signature& sig, const IndexSet& j);

/// Index sets equal and every t(i) ∈ sig(i).
bool typed_by(const Tuple& t, const Signature& sig);

/// Signatures agree on their shared indexes.
bool summable(const Signature& a, const Signature& b);

/// Merged signature over the union of the index sets; requires summable.
Signature sum(const Signature& a, const Signature& b);

/// All tuples typed by sig, in canonical order. Every domain must be
/// enumerated and the product size must stay within limits.
std::vector<Tuple> enumerate_cart(const Signature& sig,
                                  const Limits& limits = default_limits());

/// Number of tuples enumerate_cart would yield; same preconditions.
std::uint64_t cart_size(const Signature& sig,
                        const Limits& limits = default_limits());

/// Domain tag of the atoms that stand for indexes in the
/// tuple-as-function view.
inline constexpr const char* kIndexDomain = "#index";

/// The index embedded as a value: positions become integer atoms,
/// names text atoms, all tagged kIndexDomain.
Value index_value(const Index& i);

/// The tuple seen as a function from its embedded index set to its
/// atoms, so function laws (restriction, composition) apply verbatim.
Function as_function(const Tuple& t);
Function as_function(const Tuple& t, const FinSet& target);

}  // namespace relkit
