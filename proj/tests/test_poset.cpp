#include "doctest.h"

#include "fixtures.hpp"
#include "hia/poset.hpp"

using namespace hia;
using namespace hia::testing;

TEST_CASE("order axioms accept chains and reject each broken law") {
  CHECK_NOTHROW(check_partial_order(chain_poset(1)));
  CHECK_NOTHROW(check_partial_order(chain_poset(5)));
  CHECK_NOTHROW(check_partial_order(diamond_poset()));
  CHECK_NOTHROW(check_partial_order(bowtie_poset()));

  SUBCASE("reflexivity") {
    FinitePoset p = chain_poset(3);
    p.leq[1 * 3 + 1] = 0;
    CHECK_THROWS_WITH_AS(check_partial_order(p),
                         "order violation: reflexivity at (1)", PosetError);
    try {
      check_partial_order(p);
    } catch (const PosetError& e) {
      CHECK(e.law() == "reflexivity");
      CHECK(e.witness() == std::vector<Elem>{1});
    }
  }

  SUBCASE("antisymmetry") {
    FinitePoset p = chain_poset(3);
    p.leq[2 * 3 + 1] = 1;  // now 1 <= 2 and 2 <= 1
    try {
      check_partial_order(p);
      FAIL("expected PosetError");
    } catch (const PosetError& e) {
      CHECK(e.law() == "antisymmetry");
      CHECK(e.witness() == std::vector<Elem>{1, 2});
    }
  }

  SUBCASE("transitivity") {
    FinitePoset p = chain_poset(3);
    p.leq[0 * 3 + 2] = 0;  // 0 <= 1 <= 2 but not 0 <= 2
    try {
      check_partial_order(p);
      FAIL("expected PosetError");
    } catch (const PosetError& e) {
      CHECK(e.law() == "transitivity");
      CHECK(e.witness() == std::vector<Elem>{0, 1, 2});
    }
  }
}

TEST_CASE("bounds must sit at the first and last index") {
  CHECK_NOTHROW(check_bounds(chain_poset(1)));
  CHECK_NOTHROW(check_bounds(diamond_poset()));
  CHECK_NOTHROW(check_bounds(bowtie_poset()));

  try {
    check_bounds(two_maximal_poset());
    FAIL("expected PosetError");
  } catch (const PosetError& e) {
    CHECK(e.law() == "top at index n-1");
    CHECK(e.witness() == std::vector<Elem>{1});
  }

  // Two minimal elements: index 0 is not below index 1.  (Both bound
  // checks run per element, so element 0 passes both before element 1
  // trips the bottom check.)
  FinitePoset p(3, {1, 0, 1,  //
                    0, 1, 1,  //
                    0, 0, 1});
  try {
    check_bounds(p);
    FAIL("expected PosetError");
  } catch (const PosetError& e) {
    CHECK(e.law() == "bottom at index 0");
    CHECK(e.witness() == std::vector<Elem>{1});
  }
}

TEST_CASE("lattice tables: meet and join are real bounds") {
  const FinitePoset d = diamond_poset();
  const LatticeTables t = derive_lattice_ops(d);
  const std::size_t n = d.n;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem m = t.meet[a * n + b];
      const Elem j = t.join[a * n + b];
      CHECK(d.le(m, a));
      CHECK(d.le(m, b));
      CHECK(d.le(a, j));
      CHECK(d.le(b, j));
      for (Elem x = 0; x < n; ++x) {
        if (d.le(x, a) && d.le(x, b)) CHECK(d.le(x, m));
        if (d.le(a, x) && d.le(b, x)) CHECK(d.le(j, x));
      }
    }
  CHECK(t.meet[1 * n + 2] == 0);
  CHECK(t.join[1 * n + 2] == 3);
}

TEST_CASE("non-lattices are rejected with the lex-least bad pair") {
  try {
    derive_lattice_ops(bowtie_poset());
    FAIL("expected NotLatticeError");
  } catch (const NotLatticeError& e) {
    CHECK_FALSE(e.missing_glb());  // 1 and 2 have two minimal upper bounds
    CHECK(e.a() == 1);
    CHECK(e.b() == 2);
  }

  // Meets break first when the doubled layer sits *below* the pair that
  // is reached first: here 3 and 4 are two maximal lower bounds of
  // {1, 2}, and pair (1, 2) is visited before any join failure.
  const FinitePoset down(6, {1, 1, 1, 1, 1, 1,  //
                             0, 1, 0, 0, 0, 1,  //
                             0, 0, 1, 0, 0, 1,  //
                             0, 1, 1, 1, 0, 1,  //
                             0, 1, 1, 0, 1, 1,  //
                             0, 0, 0, 0, 0, 1});
  try {
    derive_lattice_ops(down);
    FAIL("expected NotLatticeError");
  } catch (const NotLatticeError& e) {
    CHECK(e.missing_glb());
    CHECK(e.a() == 1);
    CHECK(e.b() == 2);
  }
}

TEST_CASE("relative pseudo-complement: maximum of {x : a & x <= b}") {
  const FinitePoset d = diamond_poset();
  const LatticeTables t = derive_lattice_ops(d);
  const std::vector<Elem> impl = derive_impl(d, t.meet);
  const std::size_t n = d.n;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem r = impl[a * n + b];
      CHECK(d.le(t.meet[a * n + r], b));
      for (Elem x = 0; x < n; ++x)
        if (d.le(t.meet[a * n + x], b)) CHECK(d.le(x, r));
    }
  CHECK(impl[1 * n + 2] == 2);
  CHECK(impl[1 * n + 0] == 2);  // pseudo-complement of an atom is the other atom
}

TEST_CASE("the modular non-distributive lattice is not Heyting") {
  const FinitePoset m = m3_poset();
  const LatticeTables t = derive_lattice_ops(m);  // M3 is still a lattice
  try {
    derive_impl(m, t.meet);
    FAIL("expected NotHeytingError");
  } catch (const NotHeytingError& e) {
    // {x : 1 & x <= 0} = {0, 2, 3} has two maximal elements; earlier
    // pairs (0, b) always work because 0 & x = 0.
    CHECK(e.a() == 1);
    CHECK(e.b() == 0);
  }
}

TEST_CASE("cover relation matches the Hasse diagram") {
  const FinitePoset d = diamond_poset();
  const std::vector<std::uint8_t> cov = cover_relation(d);
  std::vector<std::uint8_t> expected = {0, 1, 1, 0,   //
                                        0, 0, 0, 1,   //
                                        0, 0, 0, 1,   //
                                        0, 0, 0, 0};  // 0 -< 1,2; 1,2 -< 3
  CHECK(cov == expected);

  const std::vector<std::uint8_t> chain_cov = cover_relation(chain_poset(4));
  int edges = 0;
  for (std::uint8_t c : chain_cov) edges += c;
  CHECK(edges == 3);
}

TEST_CASE("longest chains are counted in elements") {
  CHECK(max_chain_length(chain_poset(1)) == 1);
  CHECK(max_chain_length(chain_poset(3)) == 3);
  CHECK(max_chain_length(chain_poset(7)) == 7);
  CHECK(max_chain_length(diamond_poset()) == 3);
  CHECK(max_chain_length(m3_poset()) == 3);
}

TEST_CASE("downsets: counts saturate at the cap, masks are complete") {
  CHECK(downset_count(chain_poset(4), 100) == 5);     // chains: n+1 downsets
  CHECK(downset_count(diamond_poset(), 100) == 6);    // {}, 0, 01, 02, 012, all
  CHECK(downset_count(diamond_poset(), 4) == 4);      // saturated
  CHECK(downset_count(two_maximal_poset(), 100) == 5);

  const FinitePoset d = diamond_poset();
  const std::vector<std::uint32_t> ds = all_downsets(d);
  CHECK(ds == std::vector<std::uint32_t>{0b0000, 0b0001, 0b0011, 0b0101, 0b0111,
                                         0b1111});
  for (std::uint32_t mask : ds)
    for (Elem i = 0; i < 4; ++i)
      for (Elem j = 0; j < 4; ++j)
        if (d.le(j, i) && (mask >> i & 1)) CHECK((mask >> j & 1) == 1);
}
