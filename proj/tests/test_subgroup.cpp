#include <algorithm>
#include <set>

#include "doctest.h"
#include "naive_oracle.hpp"
#include "nsg/errors.hpp"
#include "nsg/subgroup.hpp"
#include "test_support.hpp"

using nsg::Elem;
using nsg::FiniteGroup;
using nsg::SubgroupEngine;
using nsg::SubgroupSet;

namespace {

bool closed(const FiniteGroup& g, const SubgroupSet& s) {
  for (Elem a : s.members) {
    if (!s.contains(g.inv(a))) return false;
    for (Elem b : s.members) {
      if (!s.contains(g.mul(a, b))) return false;
    }
  }
  return s.contains(g.identity());
}

}  // namespace

TEST_CASE("closure") {
  const FiniteGroup& a5 = test::group("A5");
  const Elem five = test::elem(a5, "(1 2 3 4 5)");
  const Elem flip = test::elem(a5, "(2 5)(3 4)");
  const Elem seed[] = {five, flip};
  const SubgroupSet d10 = nsg::closure(a5, seed);
  CHECK(d10.size() == 10);
  CHECK(d10.size() == oracle::generated(a5, {five, flip}).size());
  CHECK(closed(a5, d10));

  const Elem id[] = {a5.identity()};
  CHECK(nsg::closure(a5, id).size() == 1);
  CHECK(nsg::closure(a5, a5.generator_indices()).size() == 60);
  CHECK(nsg::closure(a5, {}).members == nsg::IndexSet{0});

  const Elem bad[] = {Elem{60}};
  CHECK_THROWS_AS(nsg::closure(a5, bad), nsg::PreconditionError);
}

TEST_CASE("two_generated") {
  const FiniteGroup& a5 = test::group("A5");
  SubgroupEngine engine(a5);
  const Elem five = test::elem(a5, "(1 2 3 4 5)");
  const Elem three = test::elem(a5, "(1 2 3)");
  CHECK(engine.two_generated(five, five).members == a5.cyclic_subgroup(five));
  CHECK(engine.two_generated(five, three).size() == 60);
  CHECK(engine.two_generated(0, three).members == a5.cyclic_subgroup(three));
  CHECK(engine.two_generated(three, five).members == engine.two_generated(five, three).members);
}

TEST_CASE("derived subgroup") {
  const FiniteGroup& a5 = test::group("A5");
  const SubgroupSet whole = nsg::closure(a5, a5.generator_indices());
  const SubgroupSet d = nsg::derived_subgroup(a5, whole);
  CHECK(d.size() == 60);
  CHECK(d.members == oracle::generated(a5, oracle::all_commutators(a5, whole.members)));

  // A Sym(3) on points 1..3 inside A5: (1 2 3) and (1 2)(4 5).
  const Elem s3_seed[] = {test::elem(a5, "(1 2 3)"), test::elem(a5, "(1 2)(4 5)")};
  const SubgroupSet s3 = nsg::closure(a5, s3_seed);
  REQUIRE(s3.size() == 6);
  const SubgroupSet s3_derived = nsg::derived_subgroup(a5, s3);
  CHECK(s3_derived.size() == 3);
  CHECK(s3_derived.members == a5.cyclic_subgroup(test::elem(a5, "(1 2 3)")));

  const FiniteGroup& c6 = test::group("C6");
  CHECK(nsg::derived_subgroup(c6, nsg::closure(c6, c6.generator_indices())).size() == 1);
}

TEST_CASE("derived subgroups agree with the all-commutator oracle") {
  for (const auto& name : {"S4", "S5", "SL25", "Q8", "A5xC2"}) {
    const FiniteGroup& g = test::group(name);
    CAPTURE(name);
    SubgroupSet term = nsg::closure(g, g.generator_indices());
    for (int step = 0; step < 4 && term.size() > 1; ++step) {
      const SubgroupSet next = nsg::derived_subgroup(g, term);
      CHECK(next.members == oracle::generated(g, oracle::all_commutators(g, term.members)));
      // S' is normal in S.
      for (Elem s : term.members) {
        for (Elem e : next.generators) CHECK(next.contains(g.conjugate(e, s)));
      }
      // Sizes shrink strictly until the series stabilizes.
      CHECK((next.size() < term.size() || next.members == term.members));
      if (next.size() == term.size()) break;
      term = next;
    }
  }
}

TEST_CASE("is_solvable") {
  const FiniteGroup& a5 = test::group("A5");
  SubgroupEngine engine(a5);
  const Elem d10_seed[] = {test::elem(a5, "(1 2 3 4 5)"), test::elem(a5, "(2 5)(3 4)")};
  SubgroupSet d10 = engine.closure(d10_seed);
  CHECK(engine.is_solvable(d10));
  REQUIRE(d10.derived_sizes.has_value());
  CHECK(*d10.derived_sizes == std::vector<std::size_t>{10, 5, 1});

  SubgroupSet whole = engine.closure(a5.generator_indices());
  CHECK_FALSE(engine.is_solvable(whole));
  CHECK(*whole.derived_sizes == std::vector<std::size_t>{60});

  SubgroupSet trivial = engine.closure({});
  CHECK(engine.is_solvable(trivial));

  // Second query is served from the cache.
  const auto before = engine.stats();
  CHECK_FALSE(engine.is_solvable(whole));
  CHECK(engine.stats().verdict_hits == before.verdict_hits + 1);
}

TEST_CASE("pair verdicts are symmetric and match the oracle") {
  const FiniteGroup& g = test::group("S5");
  SubgroupEngine engine(g);
  for (Elem x = 0; x < g.order(); x += 13) {
    for (Elem y = 0; y < g.order(); y += 7) {
      const bool v = engine.pair_solvable(x, y);
      CHECK(v == engine.pair_solvable(y, x));
      CHECK(v == oracle::pair_solvable(g, x, y));
    }
  }
  for (const auto& [members, solvable] : engine.registry()) {
    CHECK(solvable == oracle::solvable(g, members));
  }
}

TEST_CASE("is_normal") {
  const FiniteGroup& a5 = test::group("A5");
  SubgroupEngine engine(a5);
  CHECK(engine.is_normal(engine.solvable_radical()));
  const Elem d10_seed[] = {test::elem(a5, "(1 2 3 4 5)"), test::elem(a5, "(2 5)(3 4)")};
  CHECK_FALSE(engine.is_normal(engine.closure(d10_seed)));
  CHECK(engine.is_normal(engine.closure(a5.generator_indices())));

  const FiniteGroup& s4 = test::group("S4");
  const Elem v4_seed[] = {test::elem(s4, "(1 2)(3 4)"), test::elem(s4, "(1 3)(2 4)")};
  CHECK(nsg::is_normal(s4, nsg::closure(s4, v4_seed)));
}

TEST_CASE("solvable radical") {
  SUBCASE("A5 is trivial") {
    SubgroupEngine engine(test::group("A5"));
    CHECK(engine.solvable_radical().members == nsg::IndexSet{0});
  }
  SUBCASE("solvable groups are their own radical") {
    for (const auto& name : {"trivial", "C2", "C6", "S3", "Q8", "D10", "A4", "S4"}) {
      SubgroupEngine engine(test::group(name));
      CHECK(engine.solvable_radical().size() == test::group(name).order());
    }
  }
  SUBCASE("SL(2,5) has the centre of order 2") {
    const FiniteGroup& g = test::group("SL25");
    SubgroupEngine engine(g);
    const SubgroupSet& r = engine.solvable_radical();
    REQUIRE(r.size() == 2);
    const Elem z = r.members[1];
    CHECK(g.element_order(z) == 2);
    CHECK(nsg::centralizer(g, z).size() == g.order());
  }
  SUBCASE("radical matches the oracle definition") {
    for (const auto& name : {"A5xC2", "S5", "S4"}) {
      const FiniteGroup& g = test::group(name);
      SubgroupEngine engine(g);
      const auto sol = oracle::solvabilizers(g);
      nsg::IndexSet expected;
      for (Elem x = 0; x < g.order(); ++x) {
        if (sol[x].size() == g.order()) expected.push_back(x);
      }
      CHECK(engine.solvable_radical().members == expected);
    }
  }
}

TEST_CASE("as_subgroup validates closure") {
  const FiniteGroup& s3 = test::group("S3");
  CHECK(nsg::as_subgroup(s3, s3.cyclic_subgroup(test::elem(s3, "(1 2 3)"))).size() == 3);
  CHECK_THROWS_AS(nsg::as_subgroup(s3, {0, test::elem(s3, "(1 2)"), test::elem(s3, "(1 3)")}),
                  nsg::PreconditionError);
  CHECK_THROWS_AS(nsg::as_subgroup(s3, {test::elem(s3, "(1 2)")}), nsg::PreconditionError);
}

TEST_CASE("quotient groups") {
  SUBCASE("SL(2,5) mod its centre has order 60 and trivial radical") {
    const FiniteGroup& g = test::group("SL25");
    SubgroupEngine engine(g);
    const auto q = nsg::quotient_group(g, engine.solvable_radical());
    CHECK(q.group.order() == 60);
    SubgroupEngine qe(q.group);
    CHECK(qe.solvable_radical().size() == 1);

    // Cosets partition G into blocks of |N|.
    std::vector<std::size_t> block(q.group.order(), 0);
    for (Elem e = 0; e < g.order(); ++e) ++block[q.coset_of[e]];
    CHECK(std::all_of(block.begin(), block.end(), [](std::size_t b) { return b == 2; }));

    // Well-defined multiplication across representatives.
    for (Elem a = 0; a < g.order(); a += 3) {
      for (Elem b = 0; b < g.order(); b += 5) {
        CHECK(q.coset_of[g.mul(a, b)] == q.group.mul(q.coset_of[a], q.coset_of[b]));
      }
    }
    CHECK(q.coset_of[0] == 0);
  }
  SUBCASE("mod the trivial subgroup is an isomorphic copy") {
    const FiniteGroup& g = test::group("S4");
    const auto q = nsg::quotient_group(g, nsg::closure(g, {}));
    CHECK(q.group.order() == 24);
    std::multiset<std::size_t> a, b;
    for (const auto& c : nsg::conjugacy_classes(g).classes) a.insert(c.size());
    for (const auto& c : nsg::conjugacy_classes(q.group).classes) b.insert(c.size());
    CHECK(a == b);
  }
  SUBCASE("mod the whole group is trivial") {
    const FiniteGroup& g = test::group("A4");
    CHECK(nsg::quotient_group(g, nsg::closure(g, g.generator_indices())).group.order() == 1);
  }
  SUBCASE("non-normal subgroup is rejected") {
    const FiniteGroup& g = test::group("S3");
    const Elem t[] = {test::elem(g, "(1 2)")};
    CHECK_THROWS_AS(nsg::quotient_group(g, nsg::closure(g, t)), nsg::PreconditionError);
  }
}
