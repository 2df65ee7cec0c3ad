#include <doctest.h>

#include "luka/rational.hpp"

using luka::Rat;

TEST_CASE("construction normalizes to lowest terms") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, 4) == Rat(-1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(0, 5) == Rat(0));
  CHECK(Rat(7, 1).str() == "7");
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(3, 5) + Rat(7, 10) - Rat(1) == Rat(3, 10));
  CHECK(Rat(1, 3) * Rat(3, 7) == Rat(1, 7));
  CHECK(Rat(1, 3) / Rat(2, 3) == Rat(1, 2));
  CHECK(-Rat(1, 2) == Rat(-1, 2));
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);

  // denominators well beyond 64 bits survive
  Rat big(1);
  for (int i = 0; i < 50; ++i) big *= Rat(10);
  CHECK((Rat(1, 3) * (Rat(1) / big)) * (big * Rat(3)) == Rat(1));
}

TEST_CASE("comparisons are exact") {
  CHECK(Rat(1, 3) < Rat(34, 100));
  CHECK(Rat(2, 6) <= Rat(1, 3));
  CHECK(Rat(2, 6) >= Rat(1, 3));
  CHECK(Rat(-1, 2) < Rat(0));
  CHECK(luka::min(Rat(1, 3), Rat(1, 4)) == Rat(1, 4));
  CHECK(luka::max(Rat(1, 3), Rat(1, 4)) == Rat(1, 3));
  CHECK(Rat(1, 2).sign() == 1);
  CHECK(Rat(-1, 2).sign() == -1);
  CHECK(Rat(0).is_zero());
}

TEST_CASE("text round trip") {
  CHECK(Rat::parse("3/5") == Rat(3, 5));
  CHECK(Rat::parse("-3/5") == Rat(-3, 5));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK(Rat::parse("4/6").str() == "2/3");
  CHECK(Rat(1, 2).str() == "1/2");
  CHECK(Rat(-1, 2).str() == "-1/2");
  CHECK(Rat(0).str() == "0");
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
}
