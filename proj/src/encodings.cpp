#include "relkit/encodings.hpp"

#include "relkit/error.hpp"

namespace relkit {

FinSet kuratowski_encode(const Value& a, const Value& b) {
  return FinSet({Value(FinSet({a})), Value(FinSet({a, b}))});
}

std::pair<Value, Value> kuratowski_decode(const FinSet& s) {
  const auto malformed = [&] {
    return TypeError("kuratowski_decode: malformed pair " + to_string(s));
  };
  for (const Value& m : s)
    if (!m.is_set()) throw malformed();

  if (s.size() == 1) {
    const FinSet& only = s.elements()[0].set();
    if (only.size() != 1) throw malformed();
    const Value& a = only.elements()[0];
    return {a, a};
  }
  if (s.size() == 2) {
    // canonical Value order puts the singleton {a} before {a,b}
    const FinSet& first = s.elements()[0].set();
    const FinSet& second = s.elements()[1].set();
    const FinSet* single = nullptr;
    const FinSet* pair = nullptr;
    if (first.size() == 1 && second.size() == 2) {
      single = &first;
      pair = &second;
    } else if (first.size() == 2 && second.size() == 1) {
      single = &second;
      pair = &first;
    } else {
      throw malformed();
    }
    const Value& a = single->elements()[0];
    if (!pair->contains(a)) throw malformed();
    const Value& b = pair->elements()[0] == a ? pair->elements()[1]
                                              : pair->elements()[0];
    return {a, b};
  }
  throw malformed();
}

FinSet von_neumann_encode(std::size_t n, const Limits& limits) {
  if (n > limits.ordinal_max)
    throw LimitError("von_neumann_encode: " + std::to_string(n) +
                     " exceeds ordinal limit " + std::to_string(limits.ordinal_max));
  FinSet numeral;
  for (std::size_t i = 0; i < n; ++i) numeral = von_neumann_succ(numeral);
  return numeral;
}

FinSet von_neumann_succ(const FinSet& s) {
  std::vector<Value> elems(s.begin(), s.end());
  elems.emplace_back(s);
  return FinSet(std::move(elems));
}

std::size_t von_neumann_decode(const FinSet& s, const Limits& limits) {
  const std::size_t n = s.size();
  if (n > limits.ordinal_max)
    throw TypeError("von_neumann_decode: not a numeral (too large)");
  if (s != von_neumann_encode(n, limits))
    throw TypeError("von_neumann_decode: " + to_string(s) + " is not a numeral");
  return n;
}

}  // namespace relkit
