#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "fixtures.hpp"
#include "hia/term.hpp"

using namespace hia;
using namespace hia::testing;

TEST_CASE("parsing pins precedence and associativity") {
  // -> binds loosest and associates right; | next; & next; ! ~ tightest.
  const Term t = parse_term("x -> y | z & !w -> ~v");
  CHECK(t.kind() == TermKind::Impl);
  CHECK(t.left() == Term::variable("x"));
  const Term rest = t.right();
  CHECK(rest.kind() == TermKind::Impl);
  CHECK(rest.left() ==
        Term::join(Term::variable("y"),
                   Term::meet(Term::variable("z"), Term::neg(Term::variable("w")))));
  CHECK(rest.right() == Term::inv(Term::variable("v")));

  CHECK(parse_term("x & y & z") ==
        Term::meet(Term::meet(Term::variable("x"), Term::variable("y")),
                   Term::variable("z")));
  CHECK(parse_term("!~x") == Term::neg(Term::inv(Term::variable("x"))));
  CHECK(parse_term("( x )") == Term::variable("x"));
  CHECK(parse_term("ab_1") == Term::variable("ab_1"));
  CHECK(parse_term("0 | 1") == Term::join(Term::zero(), Term::one()));
}

TEST_CASE("printing uses minimal parentheses") {
  CHECK(parse_term("x | y & z").to_string() == "x | y & z");
  CHECK(parse_term("(x | y) & z").to_string() == "(x | y) & z");
  CHECK(parse_term("x -> y -> z").to_string() == "x -> y -> z");
  CHECK(parse_term("(x -> y) -> z").to_string() == "(x -> y) -> z");
  CHECK(parse_term("x & (y & z)").to_string() == "x & (y & z)");
  CHECK(parse_term("!(x & y)").to_string() == "!(x & y)");
  CHECK(parse_term("~!x").to_string() == "~!x");
  CHECK(Term::zero().to_string() == "0");
  CHECK(Term::impl(Term::join(Term::variable("x"), Term::one()), Term::zero())
            .to_string() == "x | 1 -> 0");
}

namespace {

Term random_term(std::mt19937& rng, int depth) {
  const int hi = depth <= 0 ? 3 : 8;
  std::uniform_int_distribution<int> pick(0, hi);
  static const char* names[] = {"x", "y", "z", "w_0", "Longer_name2"};
  switch (pick(rng)) {
    case 0: return Term::zero();
    case 1: return Term::one();
    case 2:
    case 3: {
      std::uniform_int_distribution<int> v(0, 4);
      return Term::variable(names[v(rng)]);
    }
    case 4: return Term::inv(random_term(rng, depth - 1));
    case 5: return Term::neg(random_term(rng, depth - 1));
    case 6:
      return Term::meet(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 7:
      return Term::join(random_term(rng, depth - 1), random_term(rng, depth - 1));
    default:
      return Term::impl(random_term(rng, depth - 1), random_term(rng, depth - 1));
  }
}

// Naive recursion, no memoisation: an oracle for the shared-node evaluator.
Elem eval_naive(const AlgebraOps& a, const Term& t, const Environment& env) {
  switch (t.kind()) {
    case TermKind::Var: return env.at(t.var_name());
    case TermKind::Zero: return a.bottom();
    case TermKind::One: return a.top();
    case TermKind::Inv: return a.inv(eval_naive(a, t.child(), env));
    case TermKind::Neg: return a.neg(eval_naive(a, t.child(), env));
    case TermKind::Meet:
      return a.meet(eval_naive(a, t.left(), env), eval_naive(a, t.right(), env));
    case TermKind::Join:
      return a.join(eval_naive(a, t.left(), env), eval_naive(a, t.right(), env));
    case TermKind::Impl:
      return a.impl(eval_naive(a, t.left(), env), eval_naive(a, t.right(), env));
  }
  return 0;
}

}  // namespace

TEST_CASE("parse after print is the identity on 500 random terms") {
  std::mt19937 rng(20260814);
  const HIAlgebra c4 = make_chain(4);
  for (int i = 0; i < 500; ++i) {
    const Term t = random_term(rng, 5);
    const std::string s = t.to_string();
    const Term back = parse_term(s);
    REQUIRE(back == t);
    REQUIRE(back.to_string() == s);

    Environment env;
    Elem next = 1;
    for (const std::string& v : t.free_variables())
      env[v] = next++ % static_cast<Elem>(c4.size());
    REQUIRE(eval_term(c4, t, env) == eval_naive(c4, t, env));
  }
}

TEST_CASE("syntax errors carry the offset and the acceptable tokens") {
  auto expect_error = [](const char* src, std::size_t pos,
                         const std::vector<std::string>& expected) {
    try {
      parse_term(src);
      FAIL_CHECK("no error on: " << src);
    } catch (const SyntaxError& e) {
      CAPTURE(src);
      CHECK(e.position() == pos);
      CHECK(e.expected() == expected);
    }
  };

  const std::vector<std::string> start = {"'0'", "'1'", "identifier",
                                          "'('", "'!'", "'~'"};
  expect_error("x & | y", 4, start);
  expect_error("", 0, start);
  expect_error("!", 1, start);
  expect_error("x |", 3, start);
  expect_error("x y", 2, {"end of input", "'&'", "'|'", "'->'"});
  expect_error("(x", 2, {"')'", "'&'", "'|'", "'->'"});
  expect_error("x - y", 2, {"'->'"});

  try {
    parse_term("x @ y");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("evaluation, environments, and their failure modes") {
  const HIAlgebra c3 = make_chain(3);
  const Term t = parse_term("(x -> y) & ~x");
  CHECK(eval_term(c3, t, {{"x", 1}, {"y", 0}}) == 0);  // (1->0) & ~1 = 0 & 1
  CHECK(eval_term(c3, t, {{"x", 0}, {"y", 0}}) == 2);  // 2 & 2
  CHECK(eval_term(c3, t, {{"x", 1}, {"y", 2}, {"unused", 0}}) == 1);

  CHECK_THROWS_AS(eval_term(c3, t, {{"x", 1}}), UnboundVariableError);
  try {
    eval_term(c3, parse_term("q"), {});
  } catch (const UnboundVariableError& e) {
    CHECK(e.name() == "q");
  }
  CHECK_THROWS_AS(eval_term(c3, t, {{"x", 5}, {"y", 0}}), InputError);
}

TEST_CASE("identity checking reports the lex-least counterexample") {
  const HIAlgebra c3 = make_chain(3);

  SUBCASE("a real law holds everywhere") {
    for (const HIAlgebra& a : {make_chain(3), make_bool(2), make_diamond_fix()}) {
      const IdentityVerdict v =
          holds_identity(a, parse_term("~(x | y)"), parse_term("~x & ~y"));
      CHECK(v.holds);
      CHECK_FALSE(v.counterexample.has_value());
    }
  }

  SUBCASE("negation and involution differ on the chain at 1") {
    const IdentityVerdict v = holds_identity(c3, parse_term("!x"), parse_term("~x"));
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.counterexample.has_value());
    CHECK(v.counterexample->at("x") == 1);
    CHECK(v.lhs_value == 0);
    CHECK(v.rhs_value == 1);
  }

  SUBCASE("first variable is most significant in the assignment order") {
    const IdentityVerdict v =
        holds_identity(make_chain(2), parse_term("x & y"), parse_term("x"));
    REQUIRE_FALSE(v.holds);
    CHECK(v.counterexample->at("x") == 1);
    CHECK(v.counterexample->at("y") == 0);
    CHECK(v.lhs_value == 0);
    CHECK(v.rhs_value == 1);
  }

  SUBCASE("classical arrow law holds in Boolean algebras, not in chains") {
    const Term lhs = parse_term("x -> y");
    const Term rhs = parse_term("!(x & !y)");
    CHECK(holds_identity(make_bool(3), lhs, rhs).holds);
    const IdentityVerdict v = holds_identity(c3, lhs, rhs);
    CHECK_FALSE(v.holds);
  }

  SUBCASE("variables of both sides are pooled") {
    // lhs mentions only x, rhs only y: x = y is not a law on 2 elements.
    const IdentityVerdict v =
        holds_identity(make_chain(2), parse_term("x"), parse_term("y"));
    REQUIRE_FALSE(v.holds);
    CHECK(v.counterexample->at("x") == 0);
    CHECK(v.counterexample->at("y") == 1);
  }
}

TEST_CASE("substitution rewrites variable leaves only") {
  const Term t = parse_term("x & !y | x");
  const Term replaced = substitute(t, {{"x", parse_term("y | z")}});
  CHECK(replaced == parse_term("(y | z) & !y | (y | z)"));
  CHECK(substitute(t, {}) == t);
  CHECK(substitute(parse_term("0 -> 1"), {{"x", Term::zero()}}) ==
        parse_term("0 -> 1"));
}

TEST_CASE("structure helpers: variables, node sharing, cost estimate") {
  const Term t = parse_term("z | x & z");
  CHECK(t.free_variables() == std::vector<std::string>{"x", "z"});
  CHECK(Term::zero().free_variables().empty());

  // Shared construction: node_count sees the DAG, equality the tree.
  const Term x = Term::variable("x");
  const Term r1 = Term::neg(Term::inv(x));
  const Term r2 = Term::neg(Term::inv(r1));
  const Term k = Term::meet(Term::meet(x, r1), r2);
  CHECK(k.node_count() == 7);  // x, 2 invs, 2 negs, 2 meets
  CHECK(k.to_string() == "x & !~x & !~!~x");
  CHECK(parse_term(k.to_string()) == k);
  CHECK(parse_term(k.to_string()).node_count() == 11);  // parser builds a tree

  CHECK(assignment_count(3, 2) == doctest::Approx(9.0));
  CHECK(assignment_count(4, 0) == doctest::Approx(1.0));
  CHECK(assignment_count(10, 40) > 1e39);
}
