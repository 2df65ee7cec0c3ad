#include <doctest.h>

#include <random>

#include "luka/fourier_motzkin.hpp"

using luka::Constraint;
using luka::LinExpr;
using luka::lp_extremum;
using luka::lp_feasible;
using luka::Rat;
using luka::Rel;

namespace {

LinExpr x() { return LinExpr::var("x"); }
LinExpr y() { return LinExpr::var("y"); }
LinExpr c(long n, long d = 1) { return LinExpr(Rat(n, d)); }

bool all_hold(const std::vector<Constraint>& cs, const luka::Point& p) {
  for (const auto& con : cs)
    if (!con.holds_at(p)) return false;
  return true;
}

}  // namespace

TEST_CASE("forced point through an equality") {
  const std::vector<Constraint> cs = {
      {x(), Rel::Ge}, {c(1) - x(), Rel::Ge}, {x() - c(1, 2), Rel::Eq}};
  auto w = lp_feasible(cs);
  REQUIRE(w.has_value());
  CHECK(w->at("x") == Rat(1, 2));
}

TEST_CASE("strict contradiction is infeasible") {
  CHECK_FALSE(lp_feasible({{x(), Rel::Gt}, {-x(), Rel::Gt}}).has_value());
  // boundary point survives when both sides are weak
  auto w = lp_feasible({{x(), Rel::Ge}, {-x(), Rel::Ge}});
  REQUIRE(w.has_value());
  CHECK(w->at("x") == Rat(0));
}

TEST_CASE("witness satisfies every constraint including strict ones") {
  const std::vector<Constraint> cs = {{x(), Rel::Ge},
                                      {y(), Rel::Ge},
                                      {x() + y() - c(1), Rel::Gt},
                                      {c(1) - x(), Rel::Ge},
                                      {c(1) - y(), Rel::Ge}};
  auto w = lp_feasible(cs);
  REQUIRE(w.has_value());
  CHECK(all_hold(cs, *w));
}

TEST_CASE("two variable chains") {
  // x <= y, y <= 1/3, x >= 1/4
  const std::vector<Constraint> cs = {
      {y() - x(), Rel::Ge}, {c(1, 3) - y(), Rel::Ge}, {x() - c(1, 4), Rel::Ge}};
  auto w = lp_feasible(cs);
  REQUIRE(w.has_value());
  CHECK(all_hold(cs, *w));
  CHECK(w->at("x") == Rat(1, 4));  // lower bound preferred

  // tighten to infeasible
  auto none = lp_feasible({{y() - x(), Rel::Ge},
                           {c(1, 3) - y(), Rel::Ge},
                           {x() - c(1, 2), Rel::Ge}});
  CHECK_FALSE(none.has_value());
}

TEST_CASE("equality chains substitute transitively") {
  // x = y, y = 1/3
  const std::vector<Constraint> cs = {{x() - y(), Rel::Eq}, {y() - c(1, 3), Rel::Eq}};
  auto w = lp_feasible(cs);
  REQUIRE(w.has_value());
  CHECK(w->at("x") == Rat(1, 3));
  CHECK(w->at("y") == Rat(1, 3));
  CHECK_FALSE(
      lp_feasible({{x() - y(), Rel::Eq}, {x() - c(1), Rel::Eq}, {y(), Rel::Eq}})
          .has_value());
}

TEST_CASE("constant constraints") {
  CHECK(lp_feasible({{c(0), Rel::Ge}}).has_value());
  CHECK_FALSE(lp_feasible({{c(0), Rel::Gt}}).has_value());
  CHECK_FALSE(lp_feasible({{c(-1), Rel::Ge}}).has_value());
  CHECK(lp_feasible({}).has_value());
}

TEST_CASE("extremum over a box") {
  const std::vector<Constraint> box = {
      {x(), Rel::Ge}, {c(1) - x(), Rel::Ge}, {y(), Rel::Ge}, {c(1) - y(), Rel::Ge}};
  auto mn = lp_extremum(x() + y(), box, true);
  REQUIRE(mn.has_value());
  CHECK(mn->first == Rat(0));
  auto mx = lp_extremum(x() + y(), box, false);
  REQUIRE(mx.has_value());
  CHECK(mx->first == Rat(2));
  CHECK(mx->second.at("x") == Rat(1));
  CHECK(mx->second.at("y") == Rat(1));

  auto constrained = lp_extremum(x(), [&] {
    auto cs = box;
    cs.push_back({x() - y(), Rel::Eq});
    cs.push_back({y() - c(1, 3), Rel::Ge});
    return cs;
  }(), true);
  REQUIRE(constrained.has_value());
  CHECK(constrained->first == Rat(1, 3));
}

TEST_CASE("extremum reports infeasibility as nullopt") {
  CHECK_FALSE(lp_extremum(x(), {{x(), Rel::Ge}, {-x() - c(1), Rel::Ge}}, true)
                  .has_value());
}

TEST_CASE("unbounded objective throws") {
  CHECK_THROWS_AS(lp_extremum(x(), {{x(), Rel::Ge}}, false), std::runtime_error);
}

TEST_CASE("random systems: witness iff feasible on a reference grid") {
  // compare against brute force over a coarse grid: if some grid point works,
  // lp_feasible must succeed; whenever it returns a witness, it must check out
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> rel(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Constraint> cs;
    const int n = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) {
      LinExpr e = LinExpr(Rat(coef(rng), 2));
      e += x() * Rat(coef(rng));
      e += y() * Rat(coef(rng));
      cs.push_back({e, rel(rng) == 0 ? Rel::Gt : Rel::Ge});
    }
    cs.push_back({x(), Rel::Ge});
    cs.push_back({c(1) - x(), Rel::Ge});
    cs.push_back({y(), Rel::Ge});
    cs.push_back({c(1) - y(), Rel::Ge});

    auto w = lp_feasible(cs);
    bool grid_hit = false;
    for (int i = 0; i <= 8 && !grid_hit; ++i)
      for (int j = 0; j <= 8 && !grid_hit; ++j) {
        luka::Point pt{{"x", Rat(i, 8)}, {"y", Rat(j, 8)}};
        grid_hit = all_hold(cs, pt);
      }
    if (w) {
      CHECK(all_hold(cs, *w));
    } else {
      CHECK_FALSE(grid_hit);
    }
    if (grid_hit) CHECK(w.has_value());
  }
}
