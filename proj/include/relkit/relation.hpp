#pragma once

#include <string>
#include <vector>

#include "relkit/limits.hpp"
#include "relkit/tuple.hpp"

namespace relkit {

/// A relation: a signature τ plus an extent of tuples typed by τ.
/// The extent is held sorted in canonical tuple order with duplicates
/// collapsed; construction validates typing of every tuple.
class Relation {
 public:
  explicit Relation(Signature sig, std::vector<Tuple> extent = {});

  const Signature& signature() const { return sig_; }
  const std::vector<Tuple>& extent() const { return extent_; }
  IndexSet indexes() const { return sig_.indexes(); }
  std::size_t size() const { return extent_.size(); }
  bool contains(const Tuple& t) const;

 private:
  Signature sig_;
  std::vector<Tuple> extent_;
};

bool operator==(const Relation& a, const Relation& b);
bool operator!=(const Relation& a, const Relation& b);

/// Extent-wise set operation; signatures must be identical.
Relation rel_set_ops(const Relation& r0, const Relation& r1, SetOpKind kind);

/// ⟨τ↓J, {t↓J | t ∈ E}⟩; requires j ⊂ indexes(r).
Relation project(const Relation& r, const IndexSet& j);

/// All tuples of cart(full) whose projection onto r's index set lies in
/// r's extent. r's signature must be the corresponding subtype of full;
/// the added domains must be enumerated.
Relation inverse_project(const Relation& r, const Signature& full,
                         const Limits& limits = default_limits());

/// The cylinder of r in the union of its index set with other's:
/// ⟨τ+other, {t ∈ cart(τ+other) | t↓I ∈ E}⟩. Signatures must be
/// summable and any newly added domain enumerated.
Relation cylinder(const Relation& r, const Signature& other,
                  const Limits& limits = default_limits());

/// Natural join: the relation over the summed signature whose tuples
/// project into both extents. Computed by bucketing the smaller extent
/// on the shared indexes, never by materializing cylinders.
Relation join(const Relation& r0, const Relation& r1);

/// A pattern: a finite map from indexes to variable symbols.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<std::pair<Index, std::string>> entries);

  std::size_t size() const { return entries_.size(); }
  const std::vector<std::pair<Index, std::string>>& entries() const {
    return entries_;
  }
  IndexSet indexes() const;
  const std::string& at(const Index& i) const;
  /// The variable set p(I), sorted.
  std::vector<std::string> variables() const;

 private:
  std::vector<std::pair<Index, std::string>> entries_;
};

bool operator==(const Pattern& a, const Pattern& b);

/// Filtering of r by p: tuples matching the pattern are re-read as
/// substitutions over the pattern's variables. A repeated variable
/// demands equal atoms at its indexes; the result is indexed by the
/// variable names, typed by φ with φ(p(i)) = τ(i). The pattern must
/// cover exactly r's index set and repeated variables must share a
/// domain.
Relation filter(const Relation& r, const Pattern& p);

/// True when the projection onto j identifies extent tuples uniquely.
/// Requires j ⊂ indexes(r).
bool is_key(const Relation& r, const IndexSet& j);

}  // namespace relkit
