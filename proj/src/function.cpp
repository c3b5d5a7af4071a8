#include "relkit/function.hpp"

#include <algorithm>

#include "relkit/error.hpp"

namespace relkit {

namespace {
const auto kEntryLess = [](const std::pair<Value, Value>& a,
                           const std::pair<Value, Value>& b) {
  return a.first < b.first;
};
}  // namespace

Function::Function(FinSet source, FinSet target, Table table, RuleMap rule)
    : source_(std::move(source)),
      target_(std::move(target)),
      table_(std::move(table)),
      rule_(std::move(rule)) {}

Function Function::from_table(FinSet source, FinSet target, Table entries) {
  std::sort(entries.begin(), entries.end(), kEntryLess);
  if (entries.size() != source.size())
    throw TypeError("function table: " + std::to_string(entries.size()) +
                    " entries for a source of " + std::to_string(source.size()) +
                    " elements");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].first == entries[i - 1].first)
      throw TypeError("function table: duplicate entry for " +
                      to_string(entries[i].first));
    if (!source.contains(entries[i].first))
      throw TypeError("function table: argument " + to_string(entries[i].first) +
                      " is not in the source");
    if (!target.contains(entries[i].second))
      throw TypeError("function table: value " + to_string(entries[i].second) +
                      " is not in the target");
  }
  return Function(std::move(source), std::move(target), std::move(entries), nullptr);
}

Function Function::from_rule(FinSet source, FinSet target, RuleMap rule) {
  if (!rule) throw TypeError("function rule: null map");
  // spot-check a sample of the source against the target
  const std::size_t sample = std::min<std::size_t>(source.size(), 8);
  for (std::size_t i = 0; i < sample; ++i) {
    const Value& x = source.elements()[i];
    Value y = rule(x);
    if (!target.contains(y))
      throw TypeError("function rule: value " + to_string(y) + " at " +
                      to_string(x) + " is not in the target");
  }
  return Function(std::move(source), std::move(target), {}, std::move(rule));
}

Function Function::identity(const FinSet& s) {
  Table entries;
  entries.reserve(s.size());
  for (const Value& x : s) entries.emplace_back(x, x);
  return from_table(s, s, std::move(entries));
}

const Function::Table& Function::table() const {
  if (!is_table())
    throw TypeError("function: explicit table required (materialize the rule first)");
  return table_;
}

Value Function::operator()(const Value& x) const {
  if (!source_.contains(x))
    throw TypeError("function: argument " + to_string(x) + " is not in the source");
  if (rule_) {
    Value y = rule_(x);
    if (!target_.contains(y))
      throw TypeError("function rule: value " + to_string(y) + " at " +
                      to_string(x) + " is not in the target");
    return y;
  }
  auto it = std::lower_bound(table_.begin(), table_.end(),
                             std::pair<Value, Value>{x, x}, kEntryLess);
  return it->second;
}

Function Function::materialized() const {
  if (is_table()) return *this;
  Table entries;
  entries.reserve(source_.size());
  for (const Value& x : source_) entries.emplace_back(x, (*this)(x));
  return from_table(source_, target_, std::move(entries));
}

bool operator==(const Function& f, const Function& g) {
  if (f.source() != g.source() || f.target() != g.target()) return false;
  for (const Value& x : f.source())
    if (f(x) != g(x)) return false;
  return true;
}

bool operator!=(const Function& f, const Function& g) { return !(f == g); }

BinaryRelation to_binary_relation(const Function& f) {
  std::vector<ValuePair> extent;
  extent.reserve(f.source().size());
  for (const Value& x : f.source()) extent.emplace_back(x, f(x));
  return BinaryRelation(f.source(), f.target(), std::move(extent));
}

Function function_from_binary_relation(const BinaryRelation& r) {
  if (!is_functional(r))
    throw TypeError("function_from_binary_relation: relation is not functional");
  Function::Table entries(r.extent().begin(), r.extent().end());
  return Function::from_table(r.source(), r.target(), std::move(entries));
}

Function restrict(const Function& f, const FinSet& s) {
  const FinSet new_source = set_intersect(f.source(), s);
  Function::Table entries;
  entries.reserve(new_source.size());
  for (const Value& x : new_source) entries.emplace_back(x, f(x));
  return Function::from_table(new_source, f.target(), std::move(entries));
}

Function insertion(const FinSet& subset, const FinSet& whole) {
  if (!subset.subset_of(whole))
    throw TypeError("insertion: " + to_string(subset) + " is not a subset of " +
                    to_string(whole));
  Function::Table entries;
  entries.reserve(subset.size());
  for (const Value& x : subset) entries.emplace_back(x, x);
  return Function::from_table(subset, whole, std::move(entries));
}

Function characteristic(const FinSet& subset, const FinSet& whole) {
  const Value zero{Atom{kBitDomain, std::int64_t{0}}};
  const Value one{Atom{kBitDomain, std::int64_t{1}}};
  Function::Table entries;
  entries.reserve(whole.size());
  for (const Value& x : whole)
    entries.emplace_back(x, subset.contains(x) ? one : zero);
  return Function::from_table(whole, FinSet({zero, one}), std::move(entries));
}

bool summable(const Function& f, const Function& g) {
  for (const Value& x : set_intersect(f.source(), g.source()))
    if (f(x) != g(x)) return false;
  return true;
}

Function sum(const Function& f, const Function& g) {
  if (!summable(f, g))
    throw TypeError("sum: functions disagree on their shared source");
  Function::Table entries;
  for (const Value& x : f.source()) entries.emplace_back(x, f(x));
  for (const Value& x : g.source())
    if (!f.source().contains(x)) entries.emplace_back(x, g(x));
  return Function::from_table(set_union(f.source(), g.source()),
                              set_union(f.target(), g.target()),
                              std::move(entries));
}

Function compose(const Function& g, const Function& f) {
  if (f.target() != g.source())
    throw TypeError("compose: target of the inner function is not the source "
                    "of the outer");
  Function::Table entries;
  entries.reserve(f.source().size());
  for (const Value& x : f.source()) entries.emplace_back(x, g(f(x)));
  return Function::from_table(f.source(), g.target(), std::move(entries));
}

FunctionTraits classify(const Function& f) {
  const auto& entries = f.table();
  FunctionTraits traits;
  traits.injective = true;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (entries[i].second == entries[j].second) traits.injective = false;
  std::vector<Value> values;
  values.reserve(entries.size());
  for (const auto& [x, y] : entries) values.push_back(y);
  traits.surjective = FinSet(std::move(values)) == f.target();
  traits.bijective = traits.injective && traits.surjective;
  return traits;
}

Function inverse(const Function& f) {
  if (!classify(f).bijective)
    throw TypeError("inverse: function is not a bijection");
  Function::Table entries;
  entries.reserve(f.table().size());
  for (const auto& [x, y] : f.table()) entries.emplace_back(y, x);
  return Function::from_table(f.target(), f.source(), std::move(entries));
}

Function left_inverse(const Function& f) {
  if (f.source().empty()) throw TypeError("left_inverse: empty source");
  if (!classify(f).injective)
    throw TypeError("left_inverse: function is not injective");
  const Value& fallback = f.source().elements()[0];  // smallest source element
  Function::Table entries;
  for (const Value& y : f.target()) {
    const Value* x = &fallback;
    for (const auto& [a, b] : f.table())
      if (b == y) x = &a;
    entries.emplace_back(y, *x);
  }
  return Function::from_table(f.target(), f.source(), std::move(entries));
}

Function right_inverse(const Function& f) {
  if (f.source().empty()) throw TypeError("right_inverse: empty source");
  if (!classify(f).surjective)
    throw TypeError("right_inverse: function is not surjective");
  Function::Table entries;
  for (const Value& y : f.target()) {
    // table is sorted by argument, so the first hit is the smallest preimage
    for (const auto& [a, b] : f.table())
      if (b == y) {
        entries.emplace_back(y, a);
        break;
      }
  }
  return Function::from_table(f.target(), f.source(), std::move(entries));
}

std::uint64_t count_functions(const FinSet& s, const FinSet& t,
                              const Limits& limits) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (t.empty()) return 0;  // no value to assign
    if (count > limits.function_enumeration / t.size())
      throw LimitError("count_functions: |T|^|S| exceeds limit");
    count *= static_cast<std::uint64_t>(t.size());
  }
  return count;
}

std::vector<Function> enumerate_functions(const FinSet& s, const FinSet& t,
                                          const Limits& limits) {
  const std::uint64_t total = count_functions(s, t, limits);
  std::vector<Function> out;
  out.reserve(total);
  if (total == 0) return out;
  // odometer over target choices, source elements in canonical order
  std::vector<std::size_t> digits(s.size(), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    Function::Table entries;
    entries.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      entries.emplace_back(s.elements()[i], t.elements()[digits[i]]);
    out.push_back(Function::from_table(s, t, std::move(entries)));
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < t.size()) break;
      digits[i] = 0;
    }
  }
  return out;
}

FinSet image(const Function& f, const FinSet& s) {
  std::vector<Value> out;
  for (const Value& x : set_intersect(f.source(), s)) out.push_back(f(x));
  return FinSet(std::move(out));
}

FinSet preimage(const Function& f, const FinSet& t) {
  std::vector<Value> out;
  for (const Value& x : f.source())
    if (t.contains(f(x))) out.push_back(x);
  return FinSet(std::move(out));
}

}  // namespace relkit
