#include "doctest.h"
#include "lamina/isect.hpp"

using namespace lamina;

namespace {
DTVector vec(const SurfaceKind& s, std::vector<long long> ws, std::vector<long long> ts) {
  std::vector<Rat> w(ws.begin(), ws.end()), t(ts.begin(), ts.end());
  return make_vector(s, w, t);
}
}  // namespace

TEST_CASE("one-holed torus basics") {
  SurfaceKind s11 = make_surface(1, 1);
  IntersectionOracle oracle(s11);
  CHECK(oracle.intersection(vec(s11, {1}, {0}), vec(s11, {0}, {1})) == 1);
  CHECK(oracle.intersection(vec(s11, {1}, {0}), vec(s11, {1}, {1})) == 1);
  CHECK(oracle.intersection(vec(s11, {1}, {1}), vec(s11, {1}, {-1})) == 2);
  CHECK(oracle.intersection(vec(s11, {1}, {0}), vec(s11, {1}, {0})) == 0);
  CHECK(oracle.intersection(vec(s11, {2}, {1}), vec(s11, {2}, {1})) == 0);
}

TEST_CASE("torus formula on all pairs up to bound 4") {
  SurfaceKind s11 = make_surface(1, 1);
  IntersectionOracle oracle(s11);
  auto pool = enumerate_curves(oracle.decomposition(), 4);
  for (const auto& a : pool)
    for (const auto& b : pool) {
      long long det = a.weights[0].num() * b.twists[0].num() -
                      b.weights[0].num() * a.twists[0].num();
      CHECK(oracle.intersection(a, b) == (det < 0 ? -det : det));
    }
}

TEST_CASE("weights are intersections with pants curves") {
  for (auto [g, r] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {0, 5}, {0, 4}, {2, 0}}) {
    SurfaceKind s = make_surface(g, r);
    IntersectionOracle oracle(s);
    auto pool = enumerate_curves(oracle.decomposition(), 3);
    for (const auto& a : pool)
      for (int i = 0; i < s.pants_curve_count(); ++i)
        CHECK(oracle.intersection(a, unit_curve(s, i)) == a.weights[i].num());
  }
}

TEST_CASE("symmetry and self-intersection zero on a mixed pool") {
  SurfaceKind s12 = make_surface(1, 2);
  IntersectionOracle oracle(s12);
  auto pool = enumerate_curves(oracle.decomposition(), 3);
  REQUIRE(pool.size() >= 4);
  for (const auto& a : pool) {
    CHECK(oracle.intersection(a, a) == 0);
    for (const auto& b : pool) CHECK(oracle.intersection(a, b) == oracle.intersection(b, a));
  }
}

TEST_CASE("four-holed sphere doubles the torus formula") {
  SurfaceKind s04 = make_surface(0, 4);
  IntersectionOracle oracle(s04);
  CHECK(oracle.intersection(vec(s04, {2}, {0}), vec(s04, {0}, {1})) == 2);
  CHECK(oracle.intersection(vec(s04, {2}, {0}), vec(s04, {2}, {1})) == 2);
  CHECK(oracle.intersection(vec(s04, {2}, {1}), vec(s04, {2}, {-1})) == 4);
}

TEST_CASE("is_disjoint") {
  SurfaceKind s12 = make_surface(1, 2);
  IntersectionOracle oracle(s12);
  CHECK(is_disjoint(oracle, unit_curve(s12, 0), unit_curve(s12, 1)));
  CHECK(!is_disjoint(oracle, unit_curve(s12, 0), unit_curve(s12, 0)));
  SurfaceKind s11 = make_surface(1, 1);
  IntersectionOracle o11(s11);
  CHECK(!is_disjoint(o11, vec(s11, {1}, {0}), vec(s11, {0}, {1})));
}

TEST_CASE("filling_check") {
  SurfaceKind s11 = make_surface(1, 1);
  IntersectionOracle o11(s11);
  auto pool = enumerate_curves(o11.decomposition(), 4);
  auto res = filling_check(o11, vec(s11, {1}, {0}), vec(s11, {0}, {1}), pool);
  CHECK(res.filling);

  SurfaceKind s12 = make_surface(1, 2);
  IntersectionOracle o12(s12);
  auto pool12 = enumerate_curves(o12.decomposition(), 3);
  auto res12 = filling_check(o12, unit_curve(s12, 0), unit_curve(s12, 1), pool12);
  CHECK(!res12.filling);
  REQUIRE(res12.witness.has_value());
  CHECK(o12.intersection(*res12.witness, unit_curve(s12, 0)) == 0);
  CHECK(o12.intersection(*res12.witness, unit_curve(s12, 1)) == 0);

  auto only = std::vector<DTVector>{vec(s11, {1}, {0})};
  CHECK(filling_check(o11, vec(s11, {1}, {0}), vec(s11, {0}, {1}), only).filling);
}

TEST_CASE("twist invariance of intersection numbers") {
  SurfaceKind s12 = make_surface(1, 2);
  IntersectionOracle oracle(s12);
  auto pool = enumerate_curves(oracle.decomposition(), 2);
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (int i = 0; i < 2; ++i)
        for (long long k = -2; k <= 2; ++k)
          CHECK(oracle.intersection(twist(a, i, k), twist(b, i, k)) ==
                oracle.intersection(a, b));
}

TEST_CASE("bilinearity over scaling") {
  SurfaceKind s11 = make_surface(1, 1);
  IntersectionOracle oracle(s11);
  DTVector a = vec(s11, {1}, {2}), b = vec(s11, {2}, {-1});
  long long base = oracle.intersection(a, b);
  for (long long k = 1; k <= 3; ++k)
    for (long long l = 1; l <= 3; ++l)
      CHECK(oracle.intersection(scale(a, k), scale(b, l)) == k * l * base);
}
