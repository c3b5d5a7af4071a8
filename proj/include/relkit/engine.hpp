#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relkit/relation.hpp"

namespace relkit {

/// A stored relation's design: its name, the subset of the global
/// attribute set it uses, and an optional key.
struct RelationSchema {
  std::string name;
  IndexSet attributes;
  IndexSet key;  // empty means no declared key
};

/// The design-phase half of a database: domains, the global attribute
/// typing, and the per-relation attribute subsets.
class Scheme {
 public:
  void add_domain(Domain d);
  void add_attribute(Index attr, const std::string& domain_name);
  void add_relation(RelationSchema schema);

  bool has_domain(const std::string& name) const;
  const Domain& domain(const std::string& name) const;
  bool has_attribute(const Index& attr) const;
  const Domain& domain_of(const Index& attr) const;
  bool has_relation(const std::string& name) const;
  const RelationSchema& relation(const std::string& name) const;
  /// Sorted relation names.
  std::vector<std::string> relation_names() const;
  /// τ ↓ I_k — the stored relation's signature.
  Signature signature_of(const std::string& rel_name) const;

 private:
  std::map<std::string, Domain> domains_;
  std::map<Index, std::string> attribute_domain_;
  std::map<std::string, RelationSchema> relations_;
};

/// A scheme with extents loaded. Construction validates that every
/// extent carries the scheme's signature and that declared keys hold.
class Instance {
 public:
  Instance(Scheme scheme, std::map<std::string, Relation> extents);

  const Scheme& scheme() const { return scheme_; }
  const Relation& relation(const std::string& name) const;
  std::vector<std::string> relation_names() const;

 private:
  Scheme scheme_;
  std::map<std::string, Relation> extents_;
};

/// A relation given by a decidable predicate instead of a stored
/// extent. Attribute domains are not pinned: they resolve per use site
/// from the finite atoms that bind the rule variables, subject to
/// validate_binding.
struct IntensionalRelation {
  std::string name;
  /// Attributes in declaration order (also the display order).
  std::vector<Index> attributes;
  /// Checks the per-use-site domains (in `attributes` order); returns
  /// an error message when the binding is unacceptable.
  std::function<std::optional<std::string>(const std::vector<Domain>&)>
      validate_binding;
  /// Total, deterministic test on a tuple over `attributes`.
  std::function<bool(const Tuple&)> predicate;
};

/// The built-in intensional relations:
///   leq(rqty, pqty) — holds when the natural at rqty is ≤ the one at pqty
///   eq(a, b)        — holds when the two payloads are equal
const std::vector<IntensionalRelation>& builtin_relations();

const IntensionalRelation* find_builtin(const std::string& name);

/// A conjunctive rule: head variables plus body atoms. Atoms reference
/// stored or built-in relations, either by named attributes or
/// positionally (for relations indexed 0..n−1).
struct Rule {
  struct Atom {
    std::string relation;
    bool positional = false;
    /// Named form: (attribute token, variable). Positional form: the
    /// attribute token is empty and order carries the position.
    std::vector<std::pair<std::string, std::string>> args;
  };
  std::vector<std::string> head_vars;
  std::vector<Atom> body;
};

struct CompiledAtom {
  std::string relation;
  bool intensional = false;
  Pattern pattern;
  /// Variables in pattern-entry order, for binding checks.
  std::vector<std::string> variables;
};

/// The algebra expression of a rule: one filtering per atom, joined,
/// then projected onto the head.
struct CompiledRule {
  std::vector<std::string> head_vars;
  std::vector<CompiledAtom> atoms;
  /// Domain of every variable bound by a finite atom.
  std::map<std::string, Domain> var_domains;
};

/// Validates the rule against the scheme and the builtins, resolves
/// attribute tokens to indexes, and fixes every variable's domain.
/// Throws QueryError on unknown relations/attributes, arity mismatches,
/// or a variable bound to two different domains.
CompiledRule compile_rule(const Rule& rule, const Scheme& scheme);

/// One evaluation step: join in a finite atom's filtering, or apply an
/// intensional atom as a per-tuple test once its variables are bound.
struct PlanStep {
  enum class Kind { Join, Apply };
  Kind kind;
  std::size_t atom;  // index into CompiledRule::atoms
};

struct Plan {
  CompiledRule rule;
  std::vector<PlanStep> steps;
  /// Filtered extent size per finite atom (by atom index), for explain.
  std::map<std::size_t, std::size_t> filtered_sizes;
};

/// Greedy ordering: finite atoms by ascending filtered extent size
/// (ties broken by body order); each intensional atom applied as soon
/// as its variables are bound. Throws QueryError on unsafe rules —
/// a head or intensional variable never bound by a finite atom.
Plan make_plan(const CompiledRule& rule, const Instance& instance);

/// Same checks, but with the finite join order forced (a permutation
/// of the finite atom indexes). Plans are performance-only: evaluate
/// returns the same relation for every valid order.
Plan make_plan_with_order(const CompiledRule& rule, const Instance& instance,
                          const std::vector<std::size_t>& finite_order);

/// Runs the plan: filter, fold joins, apply intensional tests, project
/// onto the head variables. Intermediate extents are capped by
/// limits.materialization.
Relation evaluate(const Plan& plan, const Instance& instance,
                  const Limits& limits = default_limits());

/// A deterministic, human-readable rendering of the plan.
std::string explain(const Plan& plan);

}  // namespace relkit
