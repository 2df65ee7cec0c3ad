#include <doctest.h>

#include <random>

#include "luka/parser.hpp"
#include "luka/pattern.hpp"
#include "luka/schemes.hpp"
#include "test_util.hpp"

using luka::Binding;
using luka::Formula;
using luka::parse;
using luka::ParseError;
using luka::Pattern;

namespace {
const Formula p = Formula::prop("p");
const Formula q = Formula::prop("q");
}  // namespace

TEST_CASE("parse builds primitive trees") {
  CHECK(parse("p -> (q -> p)") == Formula::implies(p, Formula::implies(q, p)));
  CHECK(parse("0") == Formula::bottom());
  CHECK(parse("!p") == Formula::neg(p));
  CHECK(parse("p & q") == Formula::conj(p, q));
}

TEST_CASE("sugar expands at parse time") {
  // strong disjunction is notation for !a -> b
  CHECK(parse("p (+) q") == Formula::implies(Formula::neg(p), q));
  CHECK(parse("p /\\ q") == Formula::conj(p, Formula::implies(p, q)));
  const Formula x = Formula::implies(Formula::implies(p, q), q);
  const Formula y = Formula::implies(Formula::implies(q, p), p);
  CHECK(parse("p \\/ q") == Formula::conj(x, Formula::implies(x, y)));
  CHECK(parse("p <-> q") ==
        Formula::conj(Formula::implies(p, q), Formula::implies(q, p)));
}

TEST_CASE("precedence and associativity") {
  CHECK(parse("p & q -> p") == Formula::implies(Formula::conj(p, q), p));
  CHECK(parse("!p & q") == Formula::conj(Formula::neg(p), q));
  CHECK(parse("p -> q -> p") == Formula::implies(p, Formula::implies(q, p)));
  CHECK(parse("p & q & p") == Formula::conj(Formula::conj(p, q), p));
  CHECK(parse("p (+) q (+) p") ==
        Formula::strong_or(Formula::strong_or(p, q), p));
  CHECK(parse("!p (+) q") == Formula::strong_or(Formula::neg(p), q));
  CHECK(parse("p & q (+) p") == Formula::strong_or(Formula::conj(p, q), p));
  CHECK_THROWS_AS(parse("p <-> q <-> p"), ParseError);
}

TEST_CASE("syntax errors carry byte offsets") {
  try {
    parse("p ->");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  try {
    parse("(p & q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 6);
  }
  CHECK_THROWS_AS(parse("p @ q"), ParseError);
  CHECK_THROWS_AS(parse("00"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
}

TEST_CASE("printer round trips") {
  CHECK(Formula::implies(p, q).str() == "p -> q");
  CHECK(Formula::neg(Formula::bottom()).str() == "!0");
  CHECK(Formula::conj(p, p).str() == "p & p");
  CHECK(Formula::conj(p, Formula::conj(q, p)).str() == "p & (q & p)");
  CHECK(Formula::implies(Formula::implies(p, q), q).str() == "(p -> q) -> q");
  CHECK(Formula::neg(Formula::conj(p, q)).str() == "!(p & q)");
}

TEST_CASE("round trip on random trees") {
  std::mt19937_64 rng(20240811);
  const std::vector<std::string> vars = {"p", "q", "r", "s"};
  for (int i = 0; i < 400; ++i) {
    const Formula f = lukatest::random_formula(rng, vars, 8);
    CHECK(parse(f.str()) == f);
  }
}

TEST_CASE("weak disjunction text matches the hand-built expansion") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> vars = {"p", "q"};
  for (int i = 0; i < 50; ++i) {
    const Formula a = lukatest::random_formula(rng, vars, 3);
    const Formula b = lukatest::random_formula(rng, vars, 3);
    const std::string text = "(" + a.str() + ") \\/ (" + b.str() + ")";
    CHECK(parse(text) == Formula::weak_or(a, b));
  }
}

TEST_CASE("structural utilities") {
  const Formula f = parse("p -> (q -> p)");
  CHECK(f.variables() == std::set<std::string>{"p", "q"});
  CHECK(p.size() == 1);
  CHECK(f.size() == 5);
  CHECK(parse("p -> (q -> p)").depth() == 2);
  CHECK(p.depth() == 0);

  const auto subs = Formula::neg(p).subformulas();
  REQUIRE(subs.size() == 2);
  CHECK(subs[0] == Formula::neg(p));
  CHECK(subs[1] == p);
  CHECK(parse("0").variables().empty());
}

TEST_CASE("power builds left-associated conjunctions") {
  CHECK(power(p, 1) == p);
  CHECK(power(p, 2) == Formula::conj(p, p));
  CHECK(power(p, 3) == Formula::conj(Formula::conj(p, p), p));
  CHECK_THROWS_AS(power(p, 0), std::invalid_argument);
}

TEST_CASE("formula ordering is size then text") {
  CHECK(p < Formula::conj(p, p));
  CHECK(Formula::bottom() < p);  // "0" < "p"
  CHECK(parse("p & q") < parse("p -> q"));  // equal size, "&" < "->"
}

TEST_CASE("template matching recognizes scheme instances") {
  const Pattern a2 = luka::scheme_info(luka::SchemeId::A2).pattern;
  auto b = match(a2, parse("(p & q) -> p"));
  REQUIRE(b.has_value());
  CHECK(b->at("phi") == p);
  CHECK(b->at("psi") == q);
  CHECK_FALSE(match(a2, parse("(p & q) -> q")).has_value());

  const Pattern x = Pattern::metavar("X");
  auto any = match(x, parse("!(p & 0)"));
  REQUIRE(any.has_value());
  CHECK(any->at("X") == parse("!(p & 0)"));
}

TEST_CASE("instantiate replaces metavariables") {
  const Pattern a7 = luka::scheme_info(luka::SchemeId::A7).pattern;
  CHECK(instantiate(a7, {{"phi", q}}) == Formula::implies(Formula::bottom(), q));
  CHECK(instantiate(Pattern::metavar("X"), {{"X", Formula::bottom()}}) ==
        Formula::bottom());
  const Pattern l1 = luka::scheme_info(luka::SchemeId::L1).pattern;
  CHECK(instantiate(l1, {{"phi", p}, {"psi", p}}) == parse("p -> (p -> p)"));
  CHECK_THROWS_AS(instantiate(a7, Binding{}), std::invalid_argument);
}

TEST_CASE("match after instantiate recovers the binding") {
  // holds whenever distinct metavariables get structurally distinct formulas;
  // two metavariables bound to equal formulas are indistinguishable by design
  std::mt19937_64 rng(99);
  const std::vector<std::string> vars = {"p", "q", "r"};
  const Pattern t = Pattern::implies(
      Pattern::conj(Pattern::metavar("X"), Pattern::metavar("Y")),
      Pattern::metavar("Z"));
  for (int i = 0; i < 100; ++i) {
    Binding b;
    b["X"] = lukatest::random_formula(rng, vars, 3);
    b["Y"] = lukatest::random_formula(rng, vars, 3);
    b["Z"] = lukatest::random_formula(rng, vars, 3);
    if (b["X"] == b["Y"] || b["Y"] == b["Z"] || b["X"] == b["Z"]) continue;
    auto back = match(t, instantiate(t, b));
    REQUIRE(back.has_value());
    CHECK(*back == b);
  }
}
