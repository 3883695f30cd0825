#include "doctest.h"
#include "lamina/surface.hpp"

using namespace lamina;

TEST_CASE("surface invariants") {
  SurfaceKind s11 = make_surface(1, 1);
  CHECK(s11.euler_characteristic() == -1);
  CHECK(s11.ml_dimension() == 2);
  CHECK(s11.pants_curve_count() == 1);

  SurfaceKind s12 = make_surface(1, 2);
  CHECK(s12.euler_characteristic() == -2);
  CHECK(s12.ml_dimension() == 4);
  CHECK(s12.pants_curve_count() == 2);

  CHECK_THROWS_AS(make_surface(0, 2), NonHyperbolicSurface);
  CHECK_THROWS_AS(make_surface(1, 0), NonHyperbolicSurface);
  CHECK_THROWS_AS(make_surface(0, 0), NonHyperbolicSurface);
}

TEST_CASE("ml dimension examples") {
  CHECK(ml_dimension(make_surface(0, 5)) == 4);
  CHECK(ml_dimension(make_surface(2, 0)) == 6);
  CHECK(ml_dimension(make_surface(0, 3)) == 0);
}

TEST_CASE("standard decomposition shapes") {
  auto pd11 = standard_pants_decomposition(make_surface(1, 1));
  CHECK(pd11.pants == 1);
  CHECK(pd11.curve_count() == 1);
  CHECK(pd11.curve_ends[0].first == SlotRef{0, 0});
  CHECK(pd11.curve_ends[0].second == SlotRef{0, 1});
  CHECK(!validate_decomposition(pd11).has_value());

  auto pd12 = standard_pants_decomposition(make_surface(1, 2));
  CHECK(pd12.pants == 2);
  CHECK(pd12.curve_count() == 2);
  CHECK(!validate_decomposition(pd12).has_value());

  auto pd05 = standard_pants_decomposition(make_surface(0, 5));
  CHECK(pd05.pants == 3);
  CHECK(pd05.curve_count() == 2);
  CHECK(pd05.outer.size() == 5);
  CHECK(!validate_decomposition(pd05).has_value());

  auto pd20 = standard_pants_decomposition(make_surface(2, 0));
  CHECK(pd20.pants == 2);
  CHECK(pd20.curve_count() == 3);
  CHECK(!validate_decomposition(pd20).has_value());

  CHECK_THROWS_AS(standard_pants_decomposition(make_surface(0, 3)), NoPantsCurve);
}

TEST_CASE("decomposition determinism and validity across a range") {
  for (int g = 0; g <= 3; ++g)
    for (int r = 0; r <= 4; ++r) {
      SurfaceKind s{g, r};
      if (s.euler_characteristic() >= 0 || s.pants_curve_count() < 1) continue;
      auto a = standard_pants_decomposition(s);
      auto b = standard_pants_decomposition(s);
      CHECK(!validate_decomposition(a).has_value());
      CHECK(a.curve_ends == b.curve_ends);
      CHECK(a.outer == b.outer);
      CHECK(s.ml_dimension() == 2 * s.pants_curve_count());
    }
}
