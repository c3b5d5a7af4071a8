// Shared helpers for the test suites: small-value factories, random
// generators with fixed seeds, and independent brute-force oracles kept
// deliberately apart from the implementation paths they check.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "relkit/binary_relation.hpp"
#include "relkit/engine.hpp"
#include "relkit/function.hpp"
#include "relkit/relation.hpp"
#include "relkit/value.hpp"

namespace tk {

using namespace relkit;

inline std::string fixtures_dir() { return RELKIT_FIXTURES_DIR; }
inline std::string fixture(const std::string& name) {
  return fixtures_dir() + "/" + name;
}

using Rng = std::mt19937;

// ---- small values ----------------------------------------------------

inline Atom letter(char c) { return Atom{"letter", std::string(1, c)}; }
inline Value lv(char c) { return Value(letter(c)); }
inline FinSet letters(const std::string& cs) {
  std::vector<Value> vs;
  for (char c : cs) vs.push_back(lv(c));
  return FinSet(std::move(vs));
}

inline Atom nat(std::int64_t n) { return Atom{"nat", n}; }
inline Value nv(std::int64_t n) { return Value(nat(n)); }
inline FinSet nats(std::initializer_list<std::int64_t> ns) {
  std::vector<Value> vs;
  for (auto n : ns) vs.push_back(nv(n));
  return FinSet(std::move(vs));
}

inline FinSet set_of(std::initializer_list<Value> vs) {
  return FinSet(std::vector<Value>(vs));
}

// ---- random generators -----------------------------------------------

inline FinSet random_subset(Rng& rng, const FinSet& universe) {
  std::vector<Value> out;
  for (const Value& v : universe)
    if (rng() % 2 == 0) out.push_back(v);
  return FinSet(std::move(out));
}

inline BinaryRelation random_binrel(Rng& rng, const FinSet& s, const FinSet& t,
                                    unsigned density_percent = 40) {
  std::vector<ValuePair> extent;
  for (const Value& x : s)
    for (const Value& y : t)
      if (rng() % 100 < density_percent) extent.emplace_back(x, y);
  return BinaryRelation(s, t, std::move(extent));
}

inline Function random_function(Rng& rng, const FinSet& s, const FinSet& t) {
  Function::Table entries;
  for (const Value& x : s)
    entries.emplace_back(x, t.elements()[rng() % t.size()]);
  return Function::from_table(s, t, std::move(entries));
}

// all subsets of a set, as plain FinSets
inline std::vector<FinSet> all_subsets(const FinSet& s) {
  std::vector<FinSet> out;
  for (const Value& v : powerset(s)) out.push_back(v.set());
  return out;
}

// ---- direct-definition oracles for binary relations -------------------

inline bool oracle_total(const BinaryRelation& r) {
  for (const Value& x : r.source()) {
    bool hit = false;
    for (const Value& y : r.target())
      if (r.contains(x, y)) hit = true;
    if (!hit) return false;
  }
  return true;
}

inline bool oracle_single_valued(const BinaryRelation& r) {
  for (const Value& x : r.source()) {
    std::size_t n = 0;
    for (const Value& y : r.target())
      if (r.contains(x, y)) ++n;
    if (n > 1) return false;
  }
  return true;
}

inline bool oracle_surjective(const BinaryRelation& r) {
  for (const Value& y : r.target()) {
    bool hit = false;
    for (const Value& x : r.source())
      if (r.contains(x, y)) hit = true;
    if (!hit) return false;
  }
  return true;
}

inline bool oracle_injective(const BinaryRelation& r) {
  for (const Value& y : r.target()) {
    std::size_t n = 0;
    for (const Value& x : r.source())
      if (r.contains(x, y)) ++n;
    if (n > 1) return false;
  }
  return true;
}

// ---- brute-force rule evaluation ---------------------------------------
// Enumerates every assignment of body variables to values seen in the
// finite atoms' columns and checks all atoms directly. Independent of
// filter/join/plan.

inline Relation oracle_evaluate(const CompiledRule& rule,
                                const Instance& instance) {
  // candidate atoms per variable, from finite atom columns
  std::map<std::string, std::set<Atom>> candidates;
  for (const CompiledAtom& atom : rule.atoms) {
    if (atom.intensional) continue;
    const Relation& rel = instance.relation(atom.relation);
    for (const auto& [i, var] : atom.pattern.entries())
      for (const Tuple& t : rel.extent()) candidates[var].insert(t.at(i));
  }

  std::vector<std::string> vars;
  for (const auto& [v, c] : candidates) vars.push_back(v);

  const auto holds = [&](const std::map<std::string, Atom>& assignment) {
    for (const CompiledAtom& atom : rule.atoms) {
      std::vector<std::pair<Index, Atom>> entries;
      for (const auto& [i, var] : atom.pattern.entries())
        entries.emplace_back(i, assignment.at(var));
      const Tuple t(std::move(entries));
      if (atom.intensional) {
        if (!find_builtin(atom.relation)->predicate(t)) return false;
      } else {
        if (!instance.relation(atom.relation).contains(t)) return false;
      }
    }
    return true;
  };

  std::vector<Tuple> results;
  std::map<std::string, Atom> assignment;
  const std::function<void(std::size_t)> descend = [&](std::size_t k) {
    if (k == vars.size()) {
      if (!holds(assignment)) return;
      std::vector<std::pair<Index, Atom>> entries;
      for (const std::string& v : rule.head_vars)
        entries.emplace_back(Index::name(v), assignment.at(v));
      results.emplace_back(std::move(entries));
      return;
    }
    for (const Atom& a : candidates.at(vars[k])) {
      assignment.insert_or_assign(vars[k], a);
      descend(k + 1);
    }
    assignment.erase(vars[k]);
  };
  descend(0);

  std::vector<std::pair<Index, Domain>> head_sig;
  for (const std::string& v : rule.head_vars)
    head_sig.emplace_back(Index::name(v), rule.var_domains.at(v));
  return Relation(Signature(std::move(head_sig)), std::move(results));
}

// ---- algebraic-law suites ----------------------------------------------
// Return the number of violations; zero is the only acceptable answer.
// Shared between the unit tests and the acceptance harness.

// composition associativity, injectivity/surjectivity propagation, and
// the g∘f = id laws, exhaustively over |S|,|T|,|U| <= max_size
std::size_t composition_law_violations(std::size_t max_size);

// restriction, insertion, sum, and set-extension laws for one function
// against all subsets of its source/target
std::size_t extension_law_violations(const Function& f);

// the same extension laws over every f in S -> T for |S|,|T| <= max_size
std::size_t exhaustive_extension_violations(std::size_t max_size);

// id-characterizations vs direct definitions for `trials` random
// relations over sets of size <= 4, plus equivalence-class validity
std::size_t binrel_characterization_violations(std::size_t trials,
                                               std::uint32_t seed);

// rel_join vs cylinder-intersection brute force for `trials` random
// summable relation pairs
std::size_t join_oracle_violations(std::size_t trials, std::uint32_t seed);

}  // namespace tk
