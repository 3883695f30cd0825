#include "doctest.h"
#include "lamina/rational.hpp"

using lamina::Rat;

TEST_CASE("rational arithmetic and ordering") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(-4, 8) == Rat(-1, 2));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK(Rat(7, 3) * Rat(3, 7) == Rat(1));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-5, 2).abs() == Rat(5, 2));
  CHECK((Rat(2, 3) / Rat(4)) == Rat(1, 6));
}

TEST_CASE("floor, ceil, frac") {
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).ceil() == -3);
  CHECK(Rat(4).floor() == 4);
  CHECK(Rat(-9, 4).frac() == Rat(3, 4));
  CHECK(Rat(9, 4).frac() == Rat(1, 4));
  CHECK((-Rat(1, 3)).frac() == Rat(2, 3));
}

TEST_CASE("floor_div") {
  CHECK(lamina::floor_div(7, 2) == 3);
  CHECK(lamina::floor_div(-7, 2) == -4);
  CHECK(lamina::floor_div(-4, 2) == -2);
  CHECK(lamina::floor_div(0, 5) == 0);
}

TEST_CASE("string form") {
  CHECK(Rat(3).str() == "3");
  CHECK(Rat(-1, 3).str() == "-1/3");
}
