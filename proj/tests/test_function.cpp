#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relkit/error.hpp"
#include "relkit/function.hpp"
#include "testkit.hpp"

using namespace relkit;
using tk::letters;
using tk::lv;
using tk::nats;
using tk::nv;

namespace {
// the running example: a ↦ 0, b ↦ 1
Function f01() {
  return Function::from_table(letters("ab"), nats({0, 1}),
                              {{lv('a'), nv(0)}, {lv('b'), nv(1)}});
}
}  // namespace

TEST_CASE("construction and application") {
  const Function f = f01();
  CHECK(f(lv('a')) == nv(0));
  CHECK(f(lv('b')) == nv(1));
  CHECK_THROWS_AS(f(lv('z')), TypeError);

  // the unique function out of the empty set
  CHECK_NOTHROW(Function::from_table(FinSet(), nats({0}), {}));

  CHECK_THROWS_AS(
      Function::from_table(letters("ab"), nats({0}), {{lv('a'), nv(0)}}),
      TypeError);  // missing entry for b
  CHECK_THROWS_AS(Function::from_table(letters("a"), nats({0}),
                                       {{lv('a'), nv(0)}, {lv('a'), nv(0)}}),
                  TypeError);  // duplicate
  CHECK_THROWS_AS(
      Function::from_table(letters("a"), nats({0}), {{lv('a'), nv(7)}}),
      TypeError);  // value outside the target
}

TEST_CASE("conversion to and from binary relations") {
  const Function f = f01();
  const BinaryRelation r = to_binary_relation(f);
  CHECK(r.extent() == std::vector<ValuePair>{{lv('a'), nv(0)}, {lv('b'), nv(1)}});
  CHECK(function_from_binary_relation(r) == f);

  const BinaryRelation not_single(letters("a"), nats({0, 1}),
                                  {{lv('a'), nv(0)}, {lv('a'), nv(1)}});
  CHECK_THROWS_AS(function_from_binary_relation(not_single), TypeError);
  const BinaryRelation not_total(letters("ab"), nats({0}), {{lv('a'), nv(0)}});
  CHECK_THROWS_AS(function_from_binary_relation(not_total), TypeError);
}

TEST_CASE("restriction") {
  const Function f = f01();
  const Function fa = restrict(f, letters("a"));
  CHECK(fa.source() == letters("a"));
  CHECK(fa.target() == nats({0, 1}));
  CHECK(fa(lv('a')) == nv(0));

  CHECK(restrict(f, FinSet()).source() == FinSet());
  // the restricting set may contain foreign elements
  CHECK(restrict(f, letters("az")) == fa);
}

TEST_CASE("insertion and characteristic functions") {
  const FinSet sub = letters("a"), whole = letters("ab");
  const Function ins = insertion(sub, whole);
  CHECK(ins.source() == sub);
  CHECK(ins.target() == whole);
  CHECK(ins(lv('a')) == lv('a'));
  CHECK_THROWS_AS(insertion(letters("az"), whole), TypeError);

  const Function chi = characteristic(sub, whole);
  CHECK(chi(lv('a')) == Value(Atom{kBitDomain, std::int64_t{1}}));
  CHECK(chi(lv('b')) == Value(Atom{kBitDomain, std::int64_t{0}}));

  // f∘i = f↓S' for every subset
  const Function f = f01();
  for (const FinSet& s : tk::all_subsets(whole))
    CHECK(compose(f, insertion(s, whole)) == restrict(f, s));
}

TEST_CASE("function sum") {
  const Function f0 = f01();
  const Function f1 = Function::from_table(letters("bc"), nats({0, 1}),
                                           {{lv('b'), nv(1)}, {lv('c'), nv(0)}});
  CHECK(summable(f0, f1));
  const Function s = sum(f0, f1);
  CHECK(s.source() == letters("abc"));
  CHECK(s(lv('a')) == nv(0));
  CHECK(s(lv('b')) == nv(1));
  CHECK(s(lv('c')) == nv(0));

  // disjoint sources are always summable
  const Function g = Function::from_table(letters("z"), nats({5}), {{lv('z'), nv(5)}});
  CHECK(summable(f0, g));

  const Function clash = Function::from_table(letters("bc"), nats({0, 1}),
                                              {{lv('b'), nv(0)}, {lv('c'), nv(0)}});
  CHECK_FALSE(summable(f0, clash));
  CHECK_THROWS_AS(sum(f0, clash), TypeError);
}

TEST_CASE("composition basics") {
  const Function f = Function::from_table(letters("a"), nats({1}), {{lv('a'), nv(1)}});
  const Function g = Function::from_table(nats({1}), letters("x"), {{nv(1), lv('x')}});
  CHECK(compose(g, f)(lv('a')) == lv('x'));
  CHECK_THROWS_AS(compose(f, g), TypeError);

  const Function h = f01();
  CHECK(compose(h, Function::identity(h.source())) == h);
  CHECK(compose(Function::identity(h.target()), h) == h);
}

TEST_CASE("classification") {
  const Function id = Function::identity(letters("abc"));
  const auto id_traits = classify(id);
  CHECK(id_traits.injective);
  CHECK(id_traits.surjective);
  CHECK(id_traits.bijective);

  const Function collapse = Function::from_table(
      letters("ab"), nats({0}), {{lv('a'), nv(0)}, {lv('b'), nv(0)}});
  CHECK(classify(collapse).surjective);
  CHECK_FALSE(classify(collapse).injective);

  const Function ins = insertion(letters("a"), letters("ab"));
  CHECK(classify(ins).injective);
  CHECK_FALSE(classify(ins).surjective);
}

TEST_CASE("inverse and one-sided inverses") {
  const Function f = f01();
  const Function fi = inverse(f);
  CHECK(fi(nv(0)) == lv('a'));
  CHECK(fi(nv(1)) == lv('b'));
  CHECK(inverse(fi) == f);
  CHECK(compose(fi, f) == Function::identity(f.source()));
  CHECK(compose(f, fi) == Function::identity(f.target()));

  const Function collapse = Function::from_table(
      letters("ab"), nats({0}), {{lv('a'), nv(0)}, {lv('b'), nv(0)}});
  CHECK_THROWS_AS(inverse(collapse), TypeError);

  // left inverse of a non-surjective injection: the off-image choice is
  // pinned to the smallest source element
  const Function narrow =
      Function::from_table(letters("a"), nats({0, 1}), {{lv('a'), nv(0)}});
  const Function g = left_inverse(narrow);
  CHECK(compose(g, narrow) == Function::identity(narrow.source()));
  CHECK(g(nv(0)) == lv('a'));
  CHECK(g(nv(1)) == lv('a'));  // not determined by the law; canonical choice
  CHECK_THROWS_AS(left_inverse(collapse), TypeError);

  const Function r = right_inverse(collapse);
  CHECK(compose(collapse, r) == Function::identity(collapse.target()));
  CHECK(r(nv(0)) == lv('a'));  // smallest preimage
  CHECK_THROWS_AS(right_inverse(narrow), TypeError);

  const Function empty = Function::from_table(FinSet(), FinSet(), {});
  CHECK_THROWS_AS(left_inverse(empty), TypeError);
  CHECK_THROWS_AS(right_inverse(empty), TypeError);
}

TEST_CASE("counting and enumerating functions") {
  CHECK(count_functions(FinSet(), nats({0, 1, 2})) == 1);
  CHECK(count_functions(FinSet(), FinSet()) == 1);
  CHECK(count_functions(letters("x"), nats({0, 1, 2})) == 3);
  CHECK(count_functions(letters("ab"), FinSet()) == 0);

  for (std::size_t ns = 0; ns <= 3; ++ns) {
    for (std::size_t nt = 0; nt <= 3; ++nt) {
      const FinSet s = letters(std::string("abc").substr(0, ns));
      const FinSet t = letters(std::string("xyz").substr(0, nt));
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < ns; ++i) expected *= nt;
      CHECK(count_functions(s, t) == expected);
      const auto all = enumerate_functions(s, t);
      CHECK(all.size() == expected);
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
          CHECK(all[i] != all[j]);
    }
  }

  Limits limits;
  limits.function_enumeration = 8;
  CHECK_THROWS_AS(count_functions(letters("ab"), nats({0, 1, 2}), limits),
                  LimitError);
  CHECK_THROWS_AS(enumerate_functions(letters("ab"), nats({0, 1, 2}), limits),
                  LimitError);
}

TEST_CASE("image and preimage") {
  const Function f = f01();
  CHECK(image(f, letters("ab")) == nats({0, 1}));
  CHECK(image(f, letters("a")) == nats({0}));
  CHECK(preimage(f, nats({0})) == letters("a"));
  CHECK(preimage(f, nats({7})) == FinSet());

  // the classic non-injective counterexample
  const Function collapse = Function::from_table(
      letters("ab"), nats({0}), {{lv('a'), nv(0)}, {lv('b'), nv(0)}});
  const FinSet meet =
      set_intersect(image(collapse, letters("a")), image(collapse, letters("b")));
  CHECK(meet == nats({0}));
  CHECK(image(collapse, set_intersect(letters("a"), letters("b"))) == FinSet());
}

TEST_CASE("rule-backed functions") {
  const FinSet s = nats({0, 1, 2});
  const Function succ = Function::from_rule(s, nats({1, 2, 3}), [](const Value& v) {
    return Value(Atom{"nat", std::get<std::int64_t>(v.atom().payload) + 1});
  });
  CHECK_FALSE(succ.is_table());
  CHECK(succ(nv(0)) == nv(1));
  CHECK(succ.materialized().is_table());
  CHECK(succ.materialized() == succ);  // extensional equality

  // law-checking operations demand the explicit table
  CHECK_THROWS_AS(classify(succ), TypeError);
  CHECK_NOTHROW(classify(succ.materialized()));

  // the construction spot-check catches escaping values
  CHECK_THROWS_AS(
      Function::from_rule(s, nats({0}), [](const Value& v) { return v; }),
      TypeError);
}

TEST_CASE("set extensions are bracketed by the canonical one and the "
          "constant-target one") {
  tk::Rng rng(17);
  const Function f = f01();
  const FinSet source_power = powerset(f.source());
  const FinSet target_power = powerset(f.target());

  // sample arbitrary set extensions g: g(S') = f(S') ∪ extra
  for (int trial = 0; trial < 20; ++trial) {
    Function::Table table;
    for (const Value& sub : source_power) {
      const FinSet extra = tk::random_subset(rng, f.target());
      table.emplace_back(sub, Value(set_union(image(f, sub.set()), extra)));
    }
    const Function g = Function::from_table(source_power, target_power, table);
    for (const Value& sub : source_power) {
      CHECK(image(f, sub.set()).subset_of(g(sub).set()));  // canonical ⪯ g
      CHECK(g(sub).set().subset_of(f.target()));           // g ⪯ constant-T
    }
  }
}

TEST_CASE("composition and extension law suites have zero violations") {
  CHECK(tk::composition_law_violations(3) == 0);
  CHECK(tk::exhaustive_extension_violations(3) == 0);
}

TEST_CASE("randomized law checks beyond the exhaustive sizes") {
  tk::Rng rng(23);
  const FinSet s = letters("abcde"), t = nats({0, 1, 2, 3}), u = letters("vwxyz");
  for (int i = 0; i < 25; ++i) {
    const Function f = tk::random_function(rng, s, t);
    const Function g = tk::random_function(rng, t, u);
    const Function h = tk::random_function(rng, u, u);
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    if (classify(compose(g, f)).injective) CHECK(classify(f).injective);
    if (classify(compose(g, f)).surjective) CHECK(classify(g).surjective);
    CHECK(tk::extension_law_violations(f) == 0);
  }
}
