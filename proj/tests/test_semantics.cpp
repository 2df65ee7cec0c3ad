#include <doctest.h>

#include <random>

#include "luka/parser.hpp"
#include "luka/semantics.hpp"
#include "test_util.hpp"

using luka::eval;
using luka::Formula;
using luka::GridValuations;
using luka::parse;
using luka::Rat;
using luka::Valuation;

TEST_CASE("eval applies the four clauses") {
  Valuation v;
  v.set("p", Rat(3, 5));
  v.set("q", Rat(7, 10));
  // max{0, 3/5 + 7/10 - 1} = 3/10
  CHECK(eval(parse("p & q"), v) == Rat(3, 10));
  // min{1, 1 - 3/5 + 7/10} = 1
  CHECK(eval(parse("p -> q"), v) == Rat(1));

  Valuation one;
  one.set("p", Rat(1));
  CHECK(eval(parse("!p"), one) == Rat(0));
  CHECK(eval(parse("0"), Valuation()) == Rat(0));
  CHECK(eval(parse("!0"), Valuation()) == Rat(1));
}

TEST_CASE("unbound variables are an error, not a default") {
  CHECK_THROWS_AS(eval(parse("p & q"), Valuation()), luka::EvalError);
}

TEST_CASE("is_true_under demands exact value 1") {
  Valuation third;
  third.set("p", Rat(1, 3));
  CHECK(is_true_under(parse("p -> p"), third));

  Valuation half;
  half.set("p", Rat(1, 2));
  // hand evaluation: both weak disjuncts take value 1/2 at p = 1/2
  CHECK(eval(parse("p \\/ !p"), half) == Rat(1, 2));
  CHECK_FALSE(is_true_under(parse("p \\/ !p"), half));
  CHECK_FALSE(is_true_under(Formula::bottom(), Valuation()));
}

TEST_CASE("grid enumeration order and counts") {
  GridValuations g({"p"}, 1);
  Valuation v;
  REQUIRE(g.next(v));
  CHECK(v.at("p") == Rat(0));
  REQUIRE(g.next(v));
  CHECK(v.at("p") == Rat(1));
  CHECK_FALSE(g.next(v));

  GridValuations g2({"p"}, 2);
  int count = 0;
  while (g2.next(v)) ++count;
  CHECK(count == 3);

  GridValuations g3({"p", "q"}, 1);
  count = 0;
  while (g3.next(v)) ++count;
  CHECK(count == 4);

  GridValuations g0({}, 3);
  REQUIRE(g0.next(v));
  CHECK(v.empty());
  CHECK_FALSE(g0.next(v));
}

TEST_CASE("grid_min finds the exact minimum with first witness") {
  const auto [half, at_half] = grid_min(parse("p \\/ !p"), 2);
  CHECK(half == Rat(1, 2));
  CHECK(at_half.at("p") == Rat(1, 2));

  const auto [one, anywhere] = grid_min(parse("p -> p"), 4);
  CHECK(one == Rat(1));

  const auto [zero, empty] = grid_min(Formula::bottom(), 1);
  CHECK(zero == Rat(0));
  CHECK(empty.empty());
}

TEST_CASE("semantic properties on random formulas") {
  std::mt19937_64 rng(20250101);
  const std::vector<std::string> vars = {"p", "q", "r"};
  for (int i = 0; i < 300; ++i) {
    const Formula f = lukatest::random_formula(rng, vars, 5);
    const Valuation v = lukatest::random_valuation(rng, f.variables());

    const Rat value = eval(f, v);
    CHECK(value >= Rat(0));
    CHECK(value <= Rat(1));
    // double negation is semantically transparent
    CHECK(eval(Formula::neg(Formula::neg(f)), v) == value);
  }
}

TEST_CASE("De Morgan pair and residuation") {
  std::mt19937_64 rng(20250102);
  const std::vector<std::string> vars = {"p", "q"};
  for (int i = 0; i < 300; ++i) {
    const Formula a = lukatest::random_formula(rng, vars, 4);
    const Formula b = lukatest::random_formula(rng, vars, 4);
    auto all_vars = a.variables();
    for (const auto& n : b.variables()) all_vars.insert(n);
    const Valuation v = lukatest::random_valuation(rng, all_vars);

    const Formula lhs = Formula::neg(Formula::conj(a, b));
    const Formula rhs = Formula::strong_or(Formula::neg(a), Formula::neg(b));
    CHECK(eval(lhs, v) == eval(rhs, v));

    const bool implication_true = eval(Formula::implies(a, b), v) == Rat(1);
    CHECK(implication_true == (eval(a, v) <= eval(b, v)));
  }
}
