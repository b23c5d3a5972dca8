#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "naive_oracle.hpp"
#include "nsg/errors.hpp"
#include "nsg/solvabilizer.hpp"
#include "test_support.hpp"

using nsg::Elem;
using nsg::FiniteGroup;
using nsg::IndexSet;
using nsg::SubgroupEngine;

// Expected profiles were produced by an independent brute-force run (sympy
// solvability test on <x, y> for every pair) and frozen here.

TEST_CASE("sol_pair") {
  const FiniteGroup& a5 = test::group("A5");
  SubgroupEngine engine(a5);
  CHECK_FALSE(nsg::sol_pair(engine, test::elem(a5, "(1 2 3 4 5)"), test::elem(a5, "(1 2 3)")));
  for (Elem y = 0; y < a5.order(); ++y) CHECK(nsg::sol_pair(engine, 0, y));

  for (const auto& name : {"A5", "S5", "PSL27"}) {
    const FiniteGroup& g = test::group(name);
    SubgroupEngine e(g);
    for (Elem x = 0; x < g.order(); ++x) {
      if (g.element_order(x) != 2) continue;
      for (Elem y = 0; y < g.order(); ++y) {
        if (g.element_order(y) == 2) CHECK(nsg::sol_pair(e, x, y));
      }
    }
  }
}

TEST_CASE("solvabilizer of single elements") {
  const FiniteGroup& a5 = test::group("A5");
  SubgroupEngine engine(a5);
  const Elem five = test::elem(a5, "(1 2 3 4 5)");
  const auto r5 = nsg::solvabilizer(engine, five);
  CHECK(r5.members.size() == 10);
  CHECK(r5.degree == 50);
  CHECK(r5.members == nsg::normalizer_of_cyclic(a5, five));
  CHECK(r5.coset_reps.size() == 2);
  CHECK_FALSE(r5.transported);

  const auto r3 = nsg::solvabilizer(engine, test::elem(a5, "(1 2 3)"), true);
  CHECK(r3.members.size() == 24);
  CHECK(r3.degree == 36);
  REQUIRE(r3.witnesses.has_value());
  CHECK(r3.witnesses->size() == 36);
  for (const auto& [y, key] : *r3.witnesses) {
    CHECK_FALSE(std::binary_search(r3.members.begin(), r3.members.end(), y));
    CHECK(key == engine.two_generated(r3.element, y).key);
  }

  CHECK(nsg::solvabilizer(engine, test::elem(a5, "(1 2)(3 4)")).members.size() == 36);

  const FiniteGroup& s4 = test::group("S4");
  SubgroupEngine se(s4);
  for (Elem x = 0; x < s4.order(); ++x) {
    const auto r = nsg::solvabilizer(se, x);
    CHECK(r.members.size() == 24);
    CHECK(r.degree == 0);
  }
  CHECK_THROWS_AS(nsg::solvabilizer(engine, 60), nsg::PreconditionError);
}

TEST_CASE("coset decomposition") {
  const FiniteGroup& a5 = test::group("A5");
  SubgroupEngine engine(a5);
  for (Elem x = 0; x < a5.order(); ++x) {
    const auto r = nsg::solvabilizer(engine, x);
    IndexSet rebuilt;
    for (Elem rep : r.coset_reps) {
      for (Elem c : a5.cyclic_subgroup(x)) rebuilt.push_back(a5.mul(rep, c));
    }
    std::sort(rebuilt.begin(), rebuilt.end());
    CHECK(std::adjacent_find(rebuilt.begin(), rebuilt.end()) == rebuilt.end());
    CHECK(rebuilt == r.members);
  }
  // A set that is not a union of <x>-cosets is rejected.
  const Elem five = test::elem(a5, "(1 2 3 4 5)");
  CHECK_THROWS_AS(nsg::coset_decomposition(a5, five, IndexSet{0, five}), nsg::InvariantViolation);
}

TEST_CASE("check_solvabilizer catches corrupted results") {
  const FiniteGroup& a5 = test::group("A5");
  SubgroupEngine engine(a5);
  auto r = nsg::solvabilizer(engine, test::elem(a5, "(1 2 3)"));
  auto wrong_degree = r;
  wrong_degree.degree += 1;
  CHECK_THROWS_AS(nsg::check_solvabilizer(engine, wrong_degree), nsg::InvariantViolation);
  auto missing_self = r;
  std::erase(missing_self.members, r.element);
  CHECK_THROWS_AS(nsg::check_solvabilizer(engine, missing_self), nsg::InvariantViolation);
}

TEST_CASE("solvabilizer_of_set") {
  const FiniteGroup& a5 = test::group("A5");
  SubgroupEngine engine(a5);
  IndexSet all(a5.order());
  std::iota(all.begin(), all.end(), Elem{0});
  CHECK(nsg::solvabilizer_of_set(engine, all, all) == IndexSet{0});
  const Elem id[] = {Elem{0}};
  CHECK(nsg::solvabilizer_of_set(engine, all, id) == all);
  const Elem x = test::elem(a5, "(1 2 3 4 5)");
  const Elem xs[] = {x};
  CHECK(nsg::solvabilizer_of_set(engine, a5.cyclic_subgroup(x), xs) == a5.cyclic_subgroup(x));
  CHECK_THROWS_AS(nsg::solvabilizer_of_set(engine, {}, xs), nsg::PreconditionError);
  CHECK_THROWS_AS(nsg::solvabilizer_of_set(engine, all, {}), nsg::PreconditionError);

  // Sol_A({x}) = A n Sol_G(x), and monotone in A.
  std::mt19937 rng(3);
  const auto sol = nsg::solvabilizer(engine, x).members;
  for (int trial = 0; trial < 50; ++trial) {
    IndexSet b, a;
    for (Elem e = 0; e < a5.order(); ++e) {
      if (rng() % 2) b.push_back(e);
    }
    for (Elem e : b) {
      if (rng() % 2) a.push_back(e);
    }
    if (a.empty()) continue;
    const auto sa = nsg::solvabilizer_of_set(engine, a, xs);
    const auto sb = nsg::solvabilizer_of_set(engine, b, xs);
    CHECK(std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()));
    IndexSet expected;
    std::set_intersection(a.begin(), a.end(), sol.begin(), sol.end(), std::back_inserter(expected));
    CHECK(sa == expected);
  }
}

TEST_CASE("all_solvabilizers equals the naive oracle") {
  for (const auto& name : {"S3", "Q8", "S4", "A5", "S5"}) {
    const FiniteGroup& g = test::group(name);
    CAPTURE(name);
    SubgroupEngine engine(g);
    const auto table = nsg::all_solvabilizers(engine, nsg::conjugacy_classes(g));
    const auto expected = oracle::solvabilizers(g);
    for (Elem x = 0; x < g.order(); ++x) CHECK(table[x].members == expected[x]);
    CHECK(table.direct_scans + table.coprime_links == nsg::conjugacy_classes(g).classes.size());
  }
}

TEST_CASE("all_solvabilizers options") {
  const FiniteGroup& g = test::group("PSL27");
  const auto classes = nsg::conjugacy_classes(g);
  SubgroupEngine one(g);
  const auto base = nsg::all_solvabilizers(one, classes, {.audit_fraction = 0.0});
  CHECK(base.audited == 0);

  SubgroupEngine full(g);
  const auto audited = nsg::all_solvabilizers(full, classes, {.audit_fraction = 1.0});
  CHECK(audited.audited == audited.transported);

  SubgroupEngine threaded(g);
  const auto parallel = nsg::all_solvabilizers(threaded, classes, {.jobs = 4});
  for (Elem x = 0; x < g.order(); ++x) {
    CHECK(parallel[x].members == base[x].members);
    CHECK(audited[x].members == base[x].members);
  }
  // PSL(2,7) has two classes of 7-elements, swapped by x -> x^-1; one of
  // them is reached through a coprime power.
  CHECK(base.coprime_links >= 1);
}

TEST_CASE("conjugation and coprime-power transport agree with direct scans") {
  const FiniteGroup& g = test::group("S5");
  SubgroupEngine engine(g);
  const auto table = nsg::all_solvabilizers(engine, nsg::conjugacy_classes(g));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Elem x = static_cast<Elem>(rng() % g.order());
    const Elem h = static_cast<Elem>(rng() % g.order());
    const Elem y = g.conjugate(x, h);
    CHECK(nsg::solvabilizer(engine, y).members == nsg::conjugate_set(g, table[x].members, h));
    for (std::uint32_t i = 1; i < g.element_order(x); ++i) {
      if (std::gcd(i, g.element_order(x)) == 1) {
        CHECK(nsg::solvabilizer(engine, g.power(x, i)).members == table[x].members);
      }
    }
  }
}

TEST_CASE("ord_sol profiles") {
  auto profile = [](const std::string& name) {
    SubgroupEngine engine(test::group(name));
    return nsg::ord_sol(nsg::all_solvabilizers(engine, nsg::conjugacy_classes(test::group(name))));
  };
  CHECK(profile("S4") == nsg::OrdSolProfile{{24, 24}});
  CHECK(profile("C6") == nsg::OrdSolProfile{{6, 6}});
  CHECK(profile("A5") == nsg::OrdSolProfile{{10, 24}, {24, 20}, {36, 15}, {60, 1}});
  CHECK(profile("S5") == nsg::OrdSolProfile{{12, 20}, {20, 24}, {48, 20}, {56, 30}, {72, 25}, {120, 1}});
  CHECK(profile("PSL27") == nsg::OrdSolProfile{{21, 48}, {40, 42}, {78, 56}, {88, 21}, {168, 1}});
  const nsg::OrdSolProfile sl25{{20, 48}, {48, 40}, {72, 30}, {120, 2}};
  CHECK(profile("SL25") == sl25);
  // Non-isomorphic groups with the same profile.
  CHECK(profile("A5xC2") == sl25);
}
