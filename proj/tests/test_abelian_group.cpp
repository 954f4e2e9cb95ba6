#include <random>
#include <set>

#include "doctest.h"
#include "nccr/abelian_group.hpp"
#include "nccr/errors.hpp"
#include "support.hpp"

using namespace nccr;
using testing_support::random_element;

TEST_SUITE("abelian_group") {

TEST_CASE("arithmetic on small examples") {
  FGGroup z2(1, {2}), z3(1, {3}), z4(1, {4});
  CHECK(z2.add(z2.element(1, {1}), z2.element(1, {1})) == z2.element(2, {0}));
  CHECK(z3.neg(z3.element(1, {1})) == z3.element(-1, {2}));
  CHECK(z4.scale(z4.element(1, {1}), 3) == z4.element(3, {3}));
  CHECK(z4.element(0, {-3}) == GroupElement{0, {1}});
}

TEST_CASE("projection and order") {
  FGGroup g(1, {2, 4});
  CHECK(g.free_projection(g.element(3, {1, 2})) == 3);
  CHECK(g.free_projection(g.element(0, {1, 0})) == 0);
  CHECK(g.free_projection(g.element(-2, {0, 0})) == -2);
  FGGroup z4(1, {4});
  CHECK(z4.order(z4.element(0, {2})) == 2);
  CHECK_FALSE(z4.order(z4.element(1, {0})).has_value());
  FGGroup z6(0, {6});
  CHECK(z6.order(z6.element(0, {2})) == 3);
  CHECK_THROWS_AS(z6.free_projection(z6.zero()), UsageError);
}

TEST_CASE("invalid groups and mismatched operands") {
  CHECK_THROWS_AS(FGGroup(1, {4, 2}), UsageError);
  CHECK_THROWS_AS(FGGroup(1, {1}), UsageError);
  FGGroup a(1, {2}), b(1, {3});
  CHECK_THROWS(a.add(a.zero(), b.element(0, {1, 0})));
  CHECK(FGGroup::from_moduli(1, {2, 3}) == FGGroup(1, {6}));
  CHECK(FGGroup::from_moduli(0, {4, 6, 1}) == FGGroup(0, {2, 12}));
}

TEST_CASE("text form round trip") {
  FGGroup g(1, {2, 4});
  auto x = g.element(-3, {1, 3});
  CHECK(g.format(x) == "(-3; 1,3)");
  CHECK(g.parse(g.format(x)) == x);
  FGGroup z(1, {});
  CHECK(z.format(z.element(5, {})) == "(5)");
  FGGroup f(0, {3});
  CHECK(f.format(f.element(0, {2})) == "(2)");
  CHECK(f.parse("(5)") == f.element(0, {2}));
  CHECK(FGGroup(0, {}).format(FGGroup(0, {}).zero()) == "()");
  CHECK_THROWS_AS(g.parse("(1; 2"), UsageError);
  CHECK_THROWS_AS(g.parse("(1; 2,3,4)"), UsageError);
  CHECK(g.to_string() == "Z^1 x Z/2 x Z/4");
}

TEST_CASE("group axioms on random elements") {
  std::mt19937_64 rng(7);
  for (const FGGroup& g : {FGGroup(1, {}), FGGroup(1, {2}), FGGroup(1, {2, 6}), FGGroup(0, {3, 9})}) {
    for (int it = 0; it < 300; ++it) {
      auto a = random_element(rng, g, 50), b = random_element(rng, g, 50), c = random_element(rng, g, 50);
      CHECK(g.add(g.add(a, b), c) == g.add(a, g.add(b, c)));
      CHECK(g.add(a, b) == g.add(b, a));
      CHECK(g.add(a, g.neg(a)) == g.zero());
      CHECK(g.reduce(a) == a);
      CHECK(g.sub(a, b) == g.add(a, g.neg(b)));
      CHECK(g.torsion_from_index(g.torsion_index(a)) == a.tors);
    }
  }
}

TEST_CASE("quotients") {
  FGGroup z4(1, {4});
  auto q = quotient_by_subgroup(z4, {z4.element(0, {2})});
  CHECK(q.target() == FGGroup(1, {2}));
  CHECK(q(z4.element(1, {1})) == GroupElement{1, {1}});

  FGGroup z2(1, {2});
  auto id = quotient_by_subgroup(z2, {});
  CHECK(id.target() == z2);
  CHECK(id(z2.element(3, {1})) == z2.element(3, {1}));

  auto kill = quotient_by_subgroup(z2, {z2.element(0, {1})});
  CHECK(kill.target() == FGGroup(1, {}));
  CHECK(kill(z2.element(-4, {1})) == GroupElement{-4, {}});

  CHECK_THROWS_AS(quotient_by_subgroup(z2, {z2.element(1, {0})}), UsageError);
}

TEST_CASE("quotient kernel is exactly the generated subgroup") {
  std::mt19937_64 rng(11);
  FGGroup g(1, {2, 12});
  for (int it = 0; it < 40; ++it) {
    std::vector<GroupElement> gens;
    const int k = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i) {
      auto t = random_element(rng, g, 0);
      gens.push_back(t);
    }
    // closure by brute force
    std::set<GroupElement> sub{g.zero()};
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto x : std::vector<GroupElement>(sub.begin(), sub.end())) {
        for (const auto& s : gens) grew |= sub.insert(g.add(x, s)).second;
      }
    }
    CHECK(torsion_subgroup(g, gens) == std::vector<GroupElement>(sub.begin(), sub.end()));
    auto q = quotient_by_subgroup(g, gens);
    CHECK(q.target().torsion_order() * static_cast<Int>(sub.size()) == g.torsion_order());
    for (const auto& t : g.torsion_elements()) {
      for (Int f : {-2, 0, 3}) {
        auto x = g.element(f, t.tors);
        CHECK((q(x) == q.target().zero()) == (f == 0 && sub.count(x) > 0));
        CHECK(q.target().free_projection(q(x)) == f);
      }
    }
    auto h = random_element(rng, q.target(), 9);
    CHECK(q(q.lift(h)) == h);
  }
}

TEST_CASE("presentations orient the free coordinate") {
  // Z^2 / <(2, 4)>: free rank one, torsion Z/2
  auto pres = present(2, {{2, 4}});
  CHECK(pres.group == FGGroup(1, {2}));
  // first unit vector with nonzero free image is positive
  Int first = 0;
  for (const auto& row : pres.to_group) {
    if (row[0] != 0) {
      first = row[0];
      break;
    }
  }
  CHECK(first > 0);
  CHECK_THROWS_AS(present(3, {}), UsageError);
  CHECK(present(2, {{1, 0}, {0, 1}}).group == FGGroup(0, {}));
  CHECK(present(2, {{6, 0}, {0, 4}}).group == FGGroup(0, {2, 12}));
}

TEST_CASE("generation") {
  FGGroup z(1, {});
  CHECK(generates(z, {z.element(2, {}), z.element(3, {})}));
  CHECK_FALSE(generates(z, {z.element(2, {}), z.element(-2, {})}));
  FGGroup z2(1, {2});
  CHECK(generates(z2, {z2.element(1, {0}), z2.element(1, {1})}));
  CHECK_FALSE(generates(z2, {z2.element(1, {0}), z2.element(-1, {0})}));
}

}  // TEST_SUITE
