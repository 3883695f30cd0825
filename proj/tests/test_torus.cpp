#include <random>

#include "doctest.h"
#include "lamina/torus.hpp"

using namespace lamina;

TEST_CASE("primitive pairs and canonical form") {
  CHECK(make_primitive(3, 2) == PrimitivePair{3, 2});
  CHECK(make_primitive(-3, -2) == PrimitivePair{3, 2});
  CHECK(make_primitive(0, -1) == PrimitivePair{0, 1});
  CHECK(!is_primitive(2, 4));
  CHECK(!is_primitive(0, 0));
  CHECK(is_primitive(0, 1));
  CHECK_THROWS(make_primitive(2, 2));
}

TEST_CASE("intersection formula") {
  auto p = make_primitive(1, 0), q = make_primitive(0, 1);
  CHECK(intersect_pair(p, q, TorusModel::OneHoledTorus) == 1);
  CHECK(intersect_pair(p, q, TorusModel::FourHoledSphere) == 2);
  CHECK(intersect_pair(make_primitive(2, 1), make_primitive(2, 1),
                       TorusModel::OneHoledTorus) == 0);
}

TEST_CASE("gl2 action") {
  Mat2 id;
  CHECK(gl2_act(id, make_primitive(3, 2)) == PrimitivePair{3, 2});
  Mat2 shear{1, 1, 0, 1};
  CHECK(gl2_act(shear, make_primitive(0, 1)) == PrimitivePair{1, 1});
  Mat2 bad{1, 0, 0, 2};
  CHECK_THROWS_AS(gl2_act(bad, make_primitive(1, 0)), NotUnimodular);

  // equivariance on random triples
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> coef(-4, 4);
  int done = 0;
  while (done < 100) {
    Mat2 m{coef(rng), coef(rng), coef(rng), coef(rng)};
    if (m.det() != 1 && m.det() != -1) continue;
    long long a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
    if (!is_primitive(a, b) || !is_primitive(c, d)) continue;
    auto p = make_primitive(a, b), q = make_primitive(c, d);
    CHECK(intersect_pair(gl2_act(m, p), gl2_act(m, q), TorusModel::OneHoledTorus) ==
          intersect_pair(p, q, TorusModel::OneHoledTorus));
    ++done;
  }
}

TEST_CASE("pl map classification") {
  CHECK(classify_pl_map(IntegerPLMap{1, 0, 0, 1}) == PLClass::Induced);
  CHECK(classify_pl_map(IntegerPLMap{1, 0, 0, 2}) == PLClass::NotInduced);
  CHECK(classify_pl_map(IntegerPLMap{2, 1, 1, 1}) == PLClass::Induced);
  CHECK_THROWS_AS(classify_pl_map(IntegerPLMap{1, 2, 2, 4}), Degenerate);
}

TEST_CASE("witness search finds certified divisors") {
  // frozen expectations from the documented search order
  auto w1 = find_noninduced_witness(IntegerPLMap{1, 0, 0, 2}, 2);
  CHECK(w1.pair == PrimitivePair{0, 1});
  CHECK(w1.c == 0);
  CHECK(w1.d == -2);
  CHECK(w1.divisor == 2);

  auto w3 = find_noninduced_witness(IntegerPLMap{3, 0, 0, 1}, 2);
  CHECK(w3.pair == PrimitivePair{1, 0});
  CHECK(w3.c == 3);
  CHECK(w3.d == 0);
  CHECK(w3.divisor == 3);

  // contract over a sweep of small matrices: Induced iff |det| = 1, and
  // NotInduced maps always admit a witness within |det| + 1
  for (long long a1 = -3; a1 <= 3; ++a1)
    for (long long b1 = -3; b1 <= 3; ++b1)
      for (long long a2 = -3; a2 <= 3; ++a2)
        for (long long b2 = -3; b2 <= 3; ++b2) {
          IntegerPLMap f{a1, b1, a2, b2};
          long long det = f.det();
          if (det == 0) continue;
          if (det == 1 || det == -1) {
            CHECK(classify_pl_map(f) == PLClass::Induced);
            continue;
          }
          CHECK(classify_pl_map(f) == PLClass::NotInduced);
          long long bound = (det < 0 ? -det : det) + 1;
          auto w = find_noninduced_witness(f, bound);
          CHECK(w.divisor > 1);
          CHECK(w.c == w.pair.a * f.a1 - w.pair.b * f.a2);
          CHECK(w.d == w.pair.a * f.b1 - w.pair.b * f.b2);
          CHECK(w.c % w.divisor == 0);
          CHECK(w.d % w.divisor == 0);
        }
}

TEST_CASE("calibration against the geometric oracle") {
  IntersectionOracle o11(make_surface(1, 1));
  auto rep = dt_pair_calibration(o11, 4);
  CHECK(rep.pairs_checked > 100);

  IntersectionOracle o04(make_surface(0, 4));
  auto rep04 = dt_pair_calibration(o04, 4);
  CHECK(rep04.pairs_checked > 9);
}
