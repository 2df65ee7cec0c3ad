#include <doctest.h>

#include <random>

#include "luka/decision.hpp"
#include "luka/parser.hpp"
#include "luka/piecewise.hpp"
#include "luka/semantics.hpp"
#include "test_util.hpp"

using luka::eval;
using luka::Formula;
using luka::is_tautology;
using luka::max_value;
using luka::min_value;
using luka::parse;
using luka::Rat;
using luka::Region;
using luka::Valuation;
using luka::Verdict;

TEST_CASE("linearize: atomic, negation, conjunction") {
  const auto atomic = luka::linearize(parse("p"));
  REQUIRE(atomic.size() == 1);
  CHECK(atomic[0].value == luka::LinExpr::var("p"));
  CHECK(atomic[0].constraints.size() == 2);  // the [0,1] box

  const auto negated = luka::linearize(parse("!p"));
  REQUIRE(negated.size() == 1);
  CHECK(negated[0].value == luka::LinExpr(Rat(1)) - luka::LinExpr::var("p"));

  const auto conj = luka::linearize(parse("p & q"));
  REQUIRE(conj.size() == 2);
  const luka::LinExpr sum =
      luka::LinExpr::var("p") + luka::LinExpr::var("q") - luka::LinExpr(Rat(1));
  CHECK(conj[0].value == sum);
  CHECK(conj[1].value == luka::LinExpr(Rat(0)));
}

TEST_CASE("region coverage: a random point lies in a region with the right value") {
  std::mt19937_64 rng(31337);
  const std::vector<std::string> vars = {"p", "q", "r"};
  for (int i = 0; i < 1000; ++i) {
    const Formula f = lukatest::random_formula(rng, vars, 4);
    const Valuation v = lukatest::random_valuation(rng, f.variables());
    std::map<std::string, Rat> point;
    for (const auto& [name, val] : v.entries()) point[name] = val;

    bool found = false;
    for (const Region& region : luka::linearize(f)) {
      bool inside = true;
      for (const auto& c : region.constraints)
        if (!c.holds_at(point)) {
          inside = false;
          break;
        }
      if (inside) {
        found = true;
        CHECK(region.value.value_at(v) == eval(f, v));
        break;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("min_value and max_value on landmark formulas") {
  const auto [one, anywhere] = min_value(parse("p -> p"));
  CHECK(one == Rat(1));

  const auto [half, at_half] = min_value(parse("p \\/ !p"));
  CHECK(half == Rat(1, 2));
  CHECK(at_half.at("p") == Rat(1, 2));

  const auto [zero, nothing] = max_value(Formula::bottom());
  CHECK(zero == Rat(0));
  CHECK(nothing.empty());
}

TEST_CASE("is_tautology on axioms and near-misses") {
  CHECK(is_tautology(parse("(p & q) -> p")).kind == Verdict::Kind::Tautology);
  CHECK(is_tautology(parse("((p -> q) -> q) -> ((q -> p) -> p)")).kind ==
        Verdict::Kind::Tautology);

  const Verdict cex = is_tautology(parse("p \\/ !p"));
  REQUIRE(cex.kind == Verdict::Kind::Counterexample);
  CHECK(cex.value == Rat(1, 2));
  CHECK(cex.witness.at("p") == Rat(1, 2));
  CHECK(eval(parse("p \\/ !p"), cex.witness) == cex.value);
}

TEST_CASE("sat_at_one and positive satisfiability") {
  const Verdict sat = luka::sat_at_one(parse("p"));
  REQUIRE(sat.kind == Verdict::Kind::Satisfiable);
  CHECK(sat.witness.at("p") == Rat(1));

  CHECK(luka::positively_satisfiable(Formula::bottom()).kind ==
        Verdict::Kind::Unsatisfiable);

  // hand evaluation at p=1: max{0, 1 + 1 - 1} = 1
  const Verdict pos = luka::positively_satisfiable(parse("(p & p) & !(!p & !p)"));
  REQUIRE(pos.kind == Verdict::Kind::Satisfiable);
  CHECK(pos.witness.at("p") == Rat(1));
  CHECK(pos.value == Rat(1));

  // p & !p is identically zero
  CHECK(luka::positively_satisfiable(parse("p & !p")).kind ==
        Verdict::Kind::Unsatisfiable);
  CHECK(luka::sat_at_one(parse("p & !p")).kind == Verdict::Kind::Unsatisfiable);
}

TEST_CASE("witnesses re-evaluate to the carried value") {
  std::mt19937_64 rng(5150);
  const std::vector<std::string> vars = {"p", "q"};
  for (int i = 0; i < 150; ++i) {
    const Formula f = lukatest::random_formula(rng, vars, 4);
    const auto [mn, wmin] = min_value(f);
    const auto [mx, wmax] = max_value(f);
    Valuation vmin = wmin, vmax = wmax;
    for (const auto& name : f.variables()) {
      if (!vmin.contains(name)) vmin.set(name, Rat(0));
      if (!vmax.contains(name)) vmax.set(name, Rat(0));
    }
    CHECK(eval(f, vmin) == mn);
    CHECK(eval(f, vmax) == mx);
    CHECK(mn <= mx);
  }
}

TEST_CASE("grid oracle agrees with the decision engine") {
  std::mt19937_64 rng(8128);
  const std::vector<std::string> vars = {"p", "q"};
  for (int i = 0; i < 120; ++i) {
    const Formula f = lukatest::random_formula(rng, vars, 3);
    const auto [mn, w] = min_value(f);
    for (int n = 1; n <= 5; ++n) {
      const auto [gm, gw] = grid_min(f, n);
      CHECK(gm >= mn);  // the grid can only overshoot the true minimum
      bool witness_on_grid = true;
      for (const auto& [name, value] : w.entries())
        if ((value * Rat(n)).den_str() != "1") witness_on_grid = false;
      if (witness_on_grid) CHECK(gm == mn);
    }
    if (is_tautology(f).kind == Verdict::Kind::Tautology)
      CHECK(grid_min(f, 6).first == Rat(1));
  }
}

TEST_CASE("single-variable fast path equals the region path") {
  std::mt19937_64 rng(271828);
  const std::vector<std::string> vars = {"p"};
  for (int i = 0; i < 200; ++i) {
    const Formula f = lukatest::random_formula(rng, vars, 5);
    const auto fast_min = min_value(f);
    const auto slow_min = luka::detail::min_value_regions(f);
    CHECK(fast_min.first == slow_min.first);
    const auto fast_max = max_value(f);
    const auto slow_max = luka::detail::max_value_regions(f);
    CHECK(fast_max.first == slow_max.first);
    if (!f.variables().empty()) {
      CHECK(eval(f, fast_min.second) == fast_min.first);
      CHECK(eval(f, fast_max.second) == fast_max.first);
    }
  }
}

TEST_CASE("modus ponens preserves value 1") {
  std::mt19937_64 rng(6174);
  const std::vector<std::string> vars = {"p", "q"};
  for (int i = 0; i < 25; ++i) {
    const Formula a = lukatest::random_formula(rng, vars, 3);
    const Formula b = lukatest::random_formula(rng, vars, 3);
    const auto r = luka::optimize(b, {{a, Rat(1)}, {Formula::implies(a, b), Rat(1)}},
                                  /*minimize=*/true);
    if (r) CHECK(r->first == Rat(1));  // infeasible pins are vacuously fine
  }
}

TEST_CASE("optimize respects pins") {
  // minimize q subject to p -> q being 1 and p being 3/5
  const auto r = luka::optimize(parse("q"),
                                {{parse("p"), Rat(3, 5)}, {parse("p -> q"), Rat(1)}},
                                /*minimize=*/true);
  REQUIRE(r.has_value());
  CHECK(r->first == Rat(3, 5));

  CHECK_FALSE(luka::optimize(parse("p"), {{parse("0"), Rat(1)}}, true).has_value());
  CHECK_FALSE(
      luka::optimize(parse("p"), {{parse("p & !p"), Rat(1, 2)}}, true).has_value());
}

TEST_CASE("piecewise functions match pointwise evaluation") {
  std::mt19937_64 rng(161803);
  for (int i = 0; i < 120; ++i) {
    const Formula f = lukatest::random_formula(rng, {"p"}, 5);
    if (f.variables().empty()) continue;
    const luka::PLFunc pl = luka::pl_eval(f, "p");
    for (int k = 0; k <= 6; ++k) {
      Valuation v;
      v.set("p", Rat(k, 6));
      CHECK(pl.at(Rat(k, 6)) == eval(f, v));
    }
  }
}
