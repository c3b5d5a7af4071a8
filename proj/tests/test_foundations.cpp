#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "relkit/encodings.hpp"
#include "relkit/error.hpp"
#include "relkit/partition.hpp"
#include "relkit/value.hpp"
#include "testkit.hpp"

using namespace relkit;
using tk::letters;
using tk::lv;
using tk::set_of;

TEST_CASE("set operations on small sets") {
  const FinSet ab = letters("ab"), bc = letters("bc");
  CHECK(set_ops(ab, bc, SetOpKind::Union) == letters("abc"));
  CHECK(set_ops(ab, bc, SetOpKind::Intersection) == letters("b"));
  CHECK(set_ops(ab, ab, SetOpKind::Difference) == FinSet());
  CHECK(set_difference(ab, bc) == letters("a"));
}

TEST_CASE("union is the least common superset, intersection the greatest "
          "common subset") {
  const FinSet universe = letters("abcd");
  const auto subsets = tk::all_subsets(universe);
  for (const FinSet& a : subsets) {
    for (const FinSet& b : subsets) {
      const FinSet u = set_union(a, b);
      const FinSet i = set_intersect(a, b);
      CHECK(a.subset_of(u));
      CHECK(b.subset_of(u));
      CHECK(i.subset_of(a));
      CHECK(i.subset_of(b));
      for (const FinSet& c : subsets) {
        if (a.subset_of(c) && b.subset_of(c)) CHECK(u.subset_of(c));
        if (c.subset_of(a) && c.subset_of(b)) CHECK(c.subset_of(i));
      }
    }
  }
}

TEST_CASE("empty set and reflexivity of inclusion") {
  for (const FinSet& s : {FinSet(), letters("a"), letters("xyz")}) {
    CHECK(FinSet().subset_of(s));
    CHECK(s.subset_of(s));
  }
}

TEST_CASE("powerset of a three-element set") {
  const FinSet p = powerset(letters("abc"));
  CHECK(p.size() == 8);
  for (const char* sub : {"", "a", "b", "c", "ab", "ac", "bc", "abc"})
    CHECK(p.contains(Value(letters(sub))));
}

TEST_CASE("powerset of empty and singleton sets") {
  CHECK(powerset(FinSet()) == set_of({Value(FinSet())}));
  const FinSet single = letters("p");
  CHECK(powerset(single) == set_of({Value(FinSet()), Value(single)}));
}

TEST_CASE("powerset respects the configured limit") {
  Limits limits;
  limits.powerset_elements = 2;
  CHECK_THROWS_AS(powerset(letters("abc"), limits), LimitError);
  CHECK(powerset(letters("ab"), limits).size() == 4);
}

TEST_CASE("big union and big intersection") {
  const FinSet sets = set_of({Value(letters("a")), Value(letters("ab"))});
  CHECK(big_union(sets) == letters("ab"));
  CHECK(big_intersect(sets) == letters("a"));
  CHECK(big_union(set_of({Value(FinSet())})) == FinSet());
  CHECK(big_union(FinSet()) == FinSet());
  CHECK_THROWS_AS(big_intersect(FinSet()), TypeError);
  CHECK_THROWS_AS(big_union(set_of({lv('a')})), TypeError);
}

TEST_CASE("big union and intersection are monotone over nonempty subsets") {
  const FinSet s0 = set_of({Value(letters("ab")), Value(letters("bc"))});
  const FinSet s1 = set_union(s0, set_of({Value(letters("cd"))}));
  CHECK(big_union(s0).subset_of(big_union(s1)));
  CHECK(big_intersect(s1).subset_of(big_intersect(s0)));
}

TEST_CASE("covers and partitions") {
  const FinSet s = letters("ab");
  const FinSet overlapping = set_of({Value(letters("a")), Value(letters("ab"))});
  CHECK(is_cover(overlapping, s));
  CHECK_FALSE(is_partition(overlapping, s));

  const FinSet split = set_of({Value(letters("a")), Value(letters("b"))});
  CHECK(is_partition(split, s));

  CHECK_FALSE(is_cover(set_of({Value(letters("a"))}), s));    // misses b
  CHECK_FALSE(is_cover(set_of({Value(FinSet())}), FinSet())); // empty cell
  CHECK(is_partition(FinSet(), FinSet()));
}

TEST_CASE("is_partition implies is_cover for every candidate cell set") {
  const FinSet ground = letters("abc");
  const auto cell_candidates = tk::all_subsets(powerset(ground));
  for (const FinSet& cells : cell_candidates)
    if (is_partition(cells, ground)) CHECK(is_cover(cells, ground));
}

TEST_CASE("partition construction validates") {
  const FinSet s = letters("abc");
  CHECK_THROWS_AS(Partition(set_of({Value(letters("ab"))}), s), TypeError);
  CHECK_THROWS_AS(
      Partition(set_of({Value(letters("ab")), Value(letters("bc"))}), s),
      TypeError);
  CHECK_THROWS_AS(Partition(set_of({Value(letters("abcd"))}), s), TypeError);
  const Partition fine = Partition::singletons(s);
  CHECK(fine.cells().size() == 3);
}

namespace {
// all partitions of a ground set, by assigning each element a cell label
std::vector<Partition> all_partitions(const FinSet& ground) {
  const std::size_t n = ground.size();
  std::vector<Partition> out;
  std::vector<std::size_t> label(n, 0);
  while (true) {
    std::vector<std::vector<Value>> buckets(n);
    for (std::size_t i = 0; i < n; ++i)
      buckets[label[i]].push_back(ground.elements()[i]);
    std::vector<Value> cells;
    for (auto& b : buckets)
      if (!b.empty()) cells.emplace_back(FinSet(std::move(b)));
    Partition p(FinSet(std::move(cells)), ground);
    if (std::find_if(out.begin(), out.end(), [&](const Partition& q) {
          return q == p;
        }) == out.end())
      out.push_back(std::move(p));
    // next label vector
    std::size_t k = n;
    bool done = true;
    while (k-- > 0) {
      if (++label[k] < n) {
        done = false;
        break;
      }
      label[k] = 0;
    }
    if (done) break;
  }
  return out;
}
}  // namespace

TEST_CASE("finer is reflexive, transitive, and bounded by the extremes") {
  const FinSet ground = letters("abcd");
  const auto partitions = all_partitions(ground);
  CHECK(partitions.size() == 15);  // Bell(4)
  const Partition finest = Partition::singletons(ground);
  const Partition coarsest = Partition::coarsest(ground);
  for (const Partition& p : partitions) {
    CHECK(finer(p, p));
    CHECK(finer(finest, p));
    CHECK(finer(p, coarsest));
    for (const Partition& q : partitions)
      for (const Partition& r : partitions)
        if (finer(p, q) && finer(q, r)) CHECK(finer(p, r));
  }
}

TEST_CASE("finer requires a shared ground set") {
  CHECK_THROWS_AS(finer(Partition::singletons(letters("ab")),
                        Partition::singletons(letters("abc"))),
                  TypeError);
}

TEST_CASE("kuratowski pairs") {
  const Value a = lv('a'), b = lv('b');
  const FinSet enc = kuratowski_encode(a, b);
  CHECK(enc == set_of({Value(set_of({a})), Value(set_of({a, b}))}));
  CHECK(enc != kuratowski_encode(b, a));
  CHECK(letters("ab") == letters("ba"));  // while the plain sets agree

  CHECK(kuratowski_encode(a, a) == set_of({Value(set_of({a}))}));
  CHECK(kuratowski_decode(kuratowski_encode(a, a)) ==
        std::pair<Value, Value>(a, a));

  // decode ∘ encode is the identity on pairs, sets included
  const std::vector<Value> pool = {a, b, Value(letters("xy")), Value(FinSet())};
  for (const Value& x : pool)
    for (const Value& y : pool)
      CHECK(kuratowski_decode(kuratowski_encode(x, y)) ==
            std::pair<Value, Value>(x, y));
}

TEST_CASE("kuratowski decode rejects malformed sets") {
  const Value a = lv('a'), b = lv('b'), c = lv('c');
  CHECK_THROWS_AS(kuratowski_decode(FinSet()), TypeError);
  CHECK_THROWS_AS(kuratowski_decode(letters("ab")), TypeError);  // atoms
  CHECK_THROWS_AS(kuratowski_decode(set_of({Value(set_of({a, b}))})), TypeError);
  CHECK_THROWS_AS(
      kuratowski_decode(set_of({Value(set_of({a})), Value(set_of({b, c}))})),
      TypeError);
  CHECK_THROWS_AS(kuratowski_decode(set_of({Value(set_of({a})),
                                            Value(set_of({b})),
                                            Value(set_of({c}))})),
                  TypeError);
}

TEST_CASE("von Neumann numerals") {
  CHECK(von_neumann_encode(0) == FinSet());
  const FinSet zero;
  const FinSet one = set_of({Value(zero)});
  const FinSet two = set_of({Value(zero), Value(one)});
  CHECK(von_neumann_encode(1) == one);
  CHECK(von_neumann_encode(2) == two);

  for (std::size_t n = 0; n <= 6; ++n)
    CHECK(von_neumann_encode(n).size() == n);
  for (std::size_t n = 0; n <= 9; ++n) {
    CHECK(von_neumann_encode(n).subset_of(von_neumann_encode(n + 1)));
    CHECK(von_neumann_succ(von_neumann_encode(n)) == von_neumann_encode(n + 1));
    CHECK(von_neumann_decode(von_neumann_encode(n)) == n);
  }
}

TEST_CASE("von Neumann successor adds the set itself") {
  const FinSet s = letters("ab");
  const FinSet succ = von_neumann_succ(s);
  CHECK(succ.size() == 3);
  CHECK(s.subset_of(succ));
  CHECK(succ.contains(Value(s)));
}

TEST_CASE("von Neumann limits and decode errors") {
  Limits limits;
  limits.ordinal_max = 4;
  CHECK_THROWS_AS(von_neumann_encode(5, limits), LimitError);
  CHECK_THROWS_AS(von_neumann_decode(letters("a")), TypeError);
  CHECK_THROWS_AS(von_neumann_decode(set_of({Value(letters("a"))})), TypeError);
  // right size, wrong element
  const FinSet not_two = set_of({Value(FinSet()), Value(letters("a"))});
  CHECK_THROWS_AS(von_neumann_decode(not_two), TypeError);
}

TEST_CASE("canonical value order is total and consistent") {
  const std::vector<Value> pool = {lv('a'), lv('b'), tk::nv(0), tk::nv(1),
                                   Value(FinSet()), Value(letters("a")),
                                   Value(letters("ab"))};
  for (const Value& x : pool) {
    CHECK_FALSE(x < x);
    for (const Value& y : pool) {
      CHECK(((x < y) ? 1 : 0) + ((y < x) ? 1 : 0) + ((x == y) ? 1 : 0) == 1);
      for (const Value& z : pool)
        if (x < y && y < z) CHECK(x < z);
    }
  }
  // atoms compare equal only within the same domain
  CHECK(Value(Atom{"d0", std::int64_t{1}}) != Value(Atom{"d1", std::int64_t{1}}));
}
