#include <vector>

#include "doctest.h"

#include "fixtures.hpp"
#include "hia/algebra.hpp"

using namespace hia;
using namespace hia::testing;

TEST_CASE("construction derives every table from order plus involution") {
  const HIAlgebra c3 = make_chain(3, "c3");
  CHECK(c3.size() == 3);
  CHECK(c3.name() == "c3");
  CHECK(c3.bottom() == 0);
  CHECK(c3.top() == 2);
  CHECK_FALSE(c3.trivial());

  CHECK(c3.meet(1, 2) == 1);
  CHECK(c3.join(1, 2) == 2);
  CHECK(c3.impl(2, 1) == 1);
  CHECK(c3.impl(1, 2) == 2);
  CHECK(c3.neg(1) == 0);  // 1 -> 0 on the chain
  CHECK(c3.neg(0) == 2);
  CHECK(c3.inv(1) == 1);
  CHECK(c3.regop(1) == c3.neg(c3.inv(1)));
  CHECK(c3.leq(1, 2));
  CHECK_FALSE(c3.leq(2, 1));

  CHECK(c3.diagonal_elements() == std::vector<Elem>{0, 1, 2});
  CHECK(max_chain_length(c3) == 3);

  const HIAlgebra renamed = c3.with_name("other");
  CHECK(renamed.name() == "other");
  CHECK(renamed.same_tables(c3));
  CHECK_FALSE(make_chain(3).same_tables(make_bool(2)));

  const HIAlgebra one = make_chain(1);
  CHECK(one.trivial());
  CHECK(one.bottom() == one.top());
}

TEST_CASE("involution validation: bijection plus both De Morgan laws") {
  SUBCASE("non-involutive map is rejected") {
    // 3-chain with inv = identity: breaks antitonicity via i1.
    try {
      HIAlgebra::from_order(chain_poset(3), {0, 1, 2});
      FAIL("expected InvalidAlgebraError");
    } catch (const InvalidAlgebraError&) {
    }
  }

  SUBCASE("non-bijective map is rejected") {
    CHECK_THROWS_AS(HIAlgebra::from_order(chain_poset(3), {2, 2, 0}),
                    InvalidAlgebraError);
  }

  SUBCASE("out-of-range map is rejected") {
    CHECK_THROWS_AS(HIAlgebra::from_order(chain_poset(3), {2, 1, 7}),
                    InvalidAlgebraError);
    CHECK_THROWS_AS(HIAlgebra::from_order(chain_poset(3), {2, 1}),
                    InvalidAlgebraError);
  }

  SUBCASE("report lists every witness of each law") {
    const HIAlgebra b = make_bool(2);
    std::vector<Elem> identity = {0, 1, 2, 3};
    std::vector<Elem> join_tab(16), meet_tab(16);
    for (Elem x = 0; x < 4; ++x)
      for (Elem y = 0; y < 4; ++y) {
        join_tab[x * 4 + y] = b.join(x, y);
        meet_tab[x * 4 + y] = b.meet(x, y);
      }
    const ValidationReport r = validate_involution(identity, join_tab, meet_tab);
    CHECK_FALSE(r.ok);
    CHECK(!r.violations.empty());
    for (const Violation& v : r.violations) CHECK(v.law == "i1");
    // Lex-least failure of id(a|b) = id(a) & id(b) on 2^2 is (0, 1).
    CHECK(r.violations.front().witness == std::vector<Elem>{0, 1});

    const ValidationReport good =
        validate_involution(b.inv_table(), join_tab, meet_tab);
    CHECK(good.ok);
    CHECK(good.violations.empty());
  }
}

TEST_CASE("derived involution identities hold on every fixture") {
  const std::vector<HIAlgebra> algebras = {
      make_chain(1), make_chain(2),      make_chain(3),     make_chain(5),
      make_bool(2),  make_bool(3),       make_diamond_fix(), make_diamond_swap(),
  };
  for (const HIAlgebra& a : algebras) {
    const ValidationReport r = check_derived_identities(a);
    CAPTURE(a.size());
    CHECK(r.ok);
    CHECK(r.violations.empty());
  }
}

TEST_CASE("derived-identity audit flags a foreign non-involution") {
  // Identity map on the 3-chain: a bijection and self-inverse, but it
  // preserves rather than reverses the order, so i1, i4 and i5 all fail.
  const HIAlgebra c3 = make_chain(3);
  const ValidationReport r = check_derived_identities(c3, {0, 1, 2});
  CHECK_FALSE(r.ok);
  bool saw_i4 = false;
  for (const Violation& v : r.violations)
    if (v.law.rfind("i4", 0) == 0) saw_i4 = true;
  CHECK(saw_i4);
}

TEST_CASE("full audit passes on constructed algebras") {
  for (const HIAlgebra& a :
       {make_chain(1), make_chain(4), make_bool(3), make_diamond_swap()}) {
    const ValidationReport r = audit_algebra(a);
    CAPTURE(a.size());
    CHECK(r.ok);
  }
}

TEST_CASE("audit checks residuation, not just lattice laws") {
  // The audit on a healthy algebra covers: order axioms, bounds, bound
  // soundness, distributivity, residuation, neg = impl(.,0), involution.
  // Spot-check the properties directly on a bigger Boolean algebra.
  const HIAlgebra b = make_bool(3);
  for (Elem x = 0; x < b.size(); ++x)
    for (Elem y = 0; y < b.size(); ++y) {
      CHECK(b.neg(x) == b.impl(x, 0));
      for (Elem z = 0; z < b.size(); ++z) {
        const bool lhs = b.leq(b.meet(x, z), y);
        const bool rhs = b.leq(z, b.impl(x, y));
        CHECK(lhs == rhs);
        CHECK(b.meet(x, b.join(y, z)) == b.join(b.meet(x, y), b.meet(x, z)));
      }
    }
}

TEST_CASE("i9 gives the killer groundwork: !~ twice descends") {
  for (const HIAlgebra& a :
       {make_chain(4), make_bool(2), make_diamond_fix(), make_diamond_swap()}) {
    for (Elem x = 0; x < a.size(); ++x) {
      CHECK(a.leq(a.regop(a.regop(x)), x));
      // i8: regop is monotone.
      for (Elem y = 0; y < a.size(); ++y)
        if (a.leq(x, y)) CHECK(a.leq(a.regop(x), a.regop(y)));
    }
    // i7: both constants are regop-fixed.
    CHECK(a.regop(a.bottom()) == a.bottom());
    CHECK(a.regop(a.top()) == a.top());
  }
}
