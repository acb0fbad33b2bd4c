#include "doctest.h"
#include "rz/rational.hpp"

using rz::Rat;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, 4) == Rat(1, -2));
  CHECK(Rat(3, -6).num() == -1);
  CHECK(Rat(3, -6).den() == 2);
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
  CHECK(Rat(7, 2) - Rat(3, 2) == Rat(2));
  CHECK(Rat(1) / Rat(3) == Rat(1, 3));
  CHECK(Rat(1, 2) < Rat(2, 3));
  CHECK(Rat(-5, 2) < Rat(-2));
}

TEST_CASE("floor and ceil for either sign") {
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).ceil() == -3);
  CHECK(Rat(-3).floor() == -3);
  CHECK(Rat(0).floor() == 0);
  CHECK(Rat(5, 5).floor() == 1);
}

TEST_CASE("string forms round-trip") {
  CHECK(Rat(3, 2).str() == "3/2");
  CHECK(Rat(-3, 2).str() == "-3/2");
  CHECK(Rat(4).str() == "4");
  CHECK(Rat::parse("3/2") == Rat(3, 2));
  CHECK(Rat::parse("-6/4") == Rat(-3, 2));
  CHECK(Rat::parse("5") == Rat(5));
  CHECK_THROWS_AS(Rat::parse("1/0"), rz::ParseError);
  CHECK_THROWS_AS(Rat::parse("x"), rz::ParseError);
  CHECK_THROWS_AS(Rat::parse("1/2/3"), rz::ParseError);
  CHECK_THROWS_AS(Rat::parse(""), rz::ParseError);
}

TEST_CASE("overflow raises instead of wrapping") {
  Rat big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, rz::Overflow);
}
