#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "relkit/binary_relation.hpp"
#include "relkit/limits.hpp"
#include "relkit/value.hpp"

namespace relkit {

/// A total function: a source set, a target set, and a map given either
/// as an explicit table (one entry per source element) or as an opaque
/// deterministic host rule. Combinators always produce table-backed
/// functions; rule-backed ones are spot-checked against the target on
/// construction and fully checked whenever they are materialized.
class Function {
 public:
  using Table = std::vector<std::pair<Value, Value>>;  // sorted by argument
  using RuleMap = std::function<Value(const Value&)>;

  static Function from_table(FinSet source, FinSet target, Table entries);
  static Function from_rule(FinSet source, FinSet target, RuleMap rule);
  static Function identity(const FinSet& s);

  const FinSet& source() const { return source_; }
  const FinSet& target() const { return target_; }
  bool is_table() const { return rule_ == nullptr; }

  /// The explicit table; throws TypeError on rule-backed functions.
  const Table& table() const;

  /// Application; the argument must be a source element.
  Value operator()(const Value& x) const;

  /// A table-backed copy (evaluates a rule over the whole source).
  Function materialized() const;

 private:
  Function(FinSet source, FinSet target, Table table, RuleMap rule);

  FinSet source_;
  FinSet target_;
  Table table_;
  RuleMap rule_;
};

/// Extensional equality: same source, target, and values everywhere.
bool operator==(const Function& f, const Function& g);
bool operator!=(const Function& f, const Function& g);

/// ⟨S,T,{(x,f(x))}⟩ — the functional binary relation of f.
BinaryRelation to_binary_relation(const Function& f);

/// Inverse of to_binary_relation; r must be single-valued and total.
Function function_from_binary_relation(const BinaryRelation& r);

/// The function in (S ∩ s) → T agreeing with f; s need not be ⊂ S.
Function restrict(const Function& f, const FinSet& s);

/// id_whole restricted to subset: the function subset → whole, x ↦ x.
/// Requires subset ⊂ whole.
Function insertion(const FinSet& subset, const FinSet& whole);

/// Domain name of the two-element target {0,1} used by characteristic.
inline constexpr const char* kBitDomain = "bit";

/// whole → {0,1}, mapping x to 1 iff x ∈ subset.
Function characteristic(const FinSet& subset, const FinSet& whole);

/// f and g agree on the intersection of their sources.
bool summable(const Function& f, const Function& g);

/// The function (S0 ∪ S1) → (T0 ∪ T1) agreeing with both; requires
/// summable(f, g).
Function sum(const Function& f, const Function& g);

/// g ∘ f, x ↦ g(f(x)); requires target(f) == source(g).
Function compose(const Function& g, const Function& f);

struct FunctionTraits {
  bool injective = false;
  bool surjective = false;
  bool bijective = false;
};

/// Decided by enumeration of the table; throws TypeError on
/// rule-backed functions (materialize first).
FunctionTraits classify(const Function& f);

/// The unique g with g∘f = id and f∘g = id; requires f bijective.
Function inverse(const Function& f);

/// Some g with g∘f = id_S; requires f injective and S nonempty. Target
/// elements outside the image map to the smallest source element, which
/// makes the choice deterministic.
Function left_inverse(const Function& f);

/// Some g with f∘g = id_T; requires f surjective and S nonempty. Each
/// target element maps to its smallest preimage.
Function right_inverse(const Function& f);

/// All |T|^|S| total maps S → T, in a deterministic order.
std::vector<Function> enumerate_functions(const FinSet& s, const FinSet& t,
                                          const Limits& limits = default_limits());

/// |T|^|S|, with 0^0 = 1.
std::uint64_t count_functions(const FinSet& s, const FinSet& t,
                              const Limits& limits = default_limits());

/// Canonical set extension: {f(x) | x ∈ s ∩ S}.
FinSet image(const Function& f, const FinSet& s);

/// Inverse set extension: {x ∈ S | f(x) ∈ t}.
FinSet preimage(const Function& f, const FinSet& t);

}  // namespace relkit
