#include <set>

#include "doctest.h"
#include "lamina/chart.hpp"
#include "lamina/dtcoord.hpp"

using namespace lamina;

namespace {
DTVector vec(const SurfaceKind& s, std::vector<long long> ws, std::vector<long long> ts) {
  std::vector<Rat> w(ws.begin(), ws.end()), t(ts.begin(), ts.end());
  return make_vector(s, w, t);
}
}  // namespace

TEST_CASE("validate_integral named cases") {
  SurfaceKind s04 = make_surface(0, 4);
  auto viol = validate_integral(vec(s04, {1}, {0}));
  REQUIRE(viol.has_value());
  CHECK(viol->kind == Violation::ParityViolation);

  SurfaceKind s11 = make_surface(1, 1);
  CHECK(!validate_integral(vec(s11, {1}, {0})).has_value());

  auto fold = validate_integral(vec(s11, {0}, {-2}));
  REQUIRE(fold.has_value());
  CHECK(fold->kind == Violation::FoldingViolation);
}

TEST_CASE("canonicalize folds zero-weight twists") {
  SurfaceKind s11 = make_surface(1, 1);
  CHECK(canonicalize(vec(s11, {0}, {-3})) == vec(s11, {0}, {3}));
  CHECK(canonicalize(vec(s11, {2}, {-1})) == vec(s11, {2}, {-1}));
  CHECK(canonicalize(zero_vector(s11)) == zero_vector(s11));
  CHECK(canonicalize(canonicalize(vec(s11, {0}, {-3}))) == vec(s11, {0}, {3}));
}

TEST_CASE("twist action") {
  SurfaceKind s11 = make_surface(1, 1);
  CHECK(twist(vec(s11, {1}, {0}), 0, 1) == vec(s11, {1}, {1}));
  CHECK(twist(vec(s11, {0}, {5}), 0, 7) == vec(s11, {0}, {5}));
  CHECK(twist(vec(s11, {2}, {1}), 0, -1) == vec(s11, {2}, {-1}));
  CHECK_THROWS_AS(twist(vec(s11, {1}, {0}), 3, 1), IndexOutOfRange);
  // group action on m > 0 vectors
  DTVector v = vec(s11, {3}, {-2});
  CHECK(twist(twist(v, 0, 4), 0, -4) == v);
  CHECK(twist(twist(v, 0, 2), 0, 3) == twist(v, 0, 5));
}

TEST_CASE("decompose: torus examples") {
  SurfaceKind s11 = make_surface(1, 1);
  auto mc = decompose_multicurve(vec(s11, {2}, {0}));
  REQUIRE(mc.components.size() == 1);
  CHECK(mc.components[0].first == vec(s11, {1}, {0}));
  CHECK(mc.components[0].second == 2);

  mc = decompose_multicurve(vec(s11, {0}, {3}));
  REQUIRE(mc.components.size() == 1);
  CHECK(mc.components[0].first == unit_curve(s11, 0));
  CHECK(mc.components[0].second == 3);

  mc = decompose_multicurve(vec(s11, {2}, {1}));
  REQUIRE(mc.components.size() == 1);
  CHECK(mc.components[0].first == vec(s11, {2}, {1}));
  CHECK(mc.components[0].second == 1);
}

TEST_CASE("decompose matches gcd structure on the one-holed torus") {
  SurfaceKind s11 = make_surface(1, 1);
  for (long long m = 1; m <= 6; ++m)
    for (long long t = -6; t <= 6; ++t) {
      auto mc = decompose_multicurve(vec(s11, {m}, {t}));
      long long g = std::gcd(m, t < 0 ? -t : t);
      REQUIRE(mc.components.size() == 1);
      CHECK(mc.components[0].second == g);
      CHECK(mc.components[0].first == vec(s11, {m / g}, {t / g}));
    }
}

TEST_CASE("enumerate_curves: frozen small sets") {
  SurfaceKind s11 = make_surface(1, 1);
  auto pd = standard_pants_decomposition(s11);
  auto curves = enumerate_curves(pd, 2);
  std::set<DTVector> got(curves.begin(), curves.end());
  std::set<DTVector> want = {vec(s11, {0}, {1}), vec(s11, {1}, {0}), vec(s11, {1}, {1}),
                             vec(s11, {1}, {-1})};
  CHECK(got == want);

  SurfaceKind s04 = make_surface(0, 4);
  auto pd04 = standard_pants_decomposition(s04);
  auto curves04 = enumerate_curves(pd04, 2);
  std::set<DTVector> got04(curves04.begin(), curves04.end());
  std::set<DTVector> want04 = {vec(s04, {0}, {1}), vec(s04, {2}, {0})};
  CHECK(got04 == want04);
}

TEST_CASE("enumeration at bound 1: pants curves, plus weight-1 handle curves") {
  // On planar surfaces parity forces every weight even, so only the pants
  // curves fit at bound 1. A handle admits a weight-1 dual curve of norm 1.
  for (auto [g, r] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {0, 5}, {0, 4}, {2, 0}}) {
    SurfaceKind s = make_surface(g, r);
    auto pd = standard_pants_decomposition(s);
    auto curves = enumerate_curves(pd, 1);
    std::set<DTVector> got(curves.begin(), curves.end());
    for (int i = 0; i < s.pants_curve_count(); ++i) CHECK(got.count(unit_curve(s, i)) == 1);
    for (const auto& c : curves) {
      if (got.count(c) && c.norm() == 1) continue;
      CHECK(c.norm() <= 1);
    }
    if (g == 0) CHECK(static_cast<int>(curves.size()) == s.pants_curve_count());
  }
}

TEST_CASE("reassembly and homogeneity over a sampled family") {
  for (auto [g, r] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {0, 5}}) {
    SurfaceKind s = make_surface(g, r);
    auto pd = standard_pants_decomposition(s);
    auto vecs = enumerate_multicurves(pd, 3);
    for (const auto& v : vecs) {
      if (v.is_zero()) continue;
      auto mc = decompose_multicurve(v);  // throws if reassembly fails
      // homogeneity: components of 2v are those of v with doubled multiplicity
      auto mc2 = decompose_multicurve(scale(v, 2));
      REQUIRE(mc2.components.size() == mc.components.size());
      for (size_t i = 0; i < mc.components.size(); ++i) {
        CHECK(mc2.components[i].first == mc.components[i].first);
        CHECK(mc2.components[i].second == 2 * mc.components[i].second);
      }
    }
  }
}

TEST_CASE("enumeration completeness: no new class of small norm at a larger scan") {
  SurfaceKind s = make_surface(1, 2);
  auto pd = standard_pants_decomposition(s);
  auto at3 = enumerate_curves(pd, 3);
  auto at4 = enumerate_curves(pd, 4);
  std::set<DTVector> got3(at3.begin(), at3.end());
  for (const auto& c : at4)
    if (c.norm() <= 3) CHECK(got3.count(c) == 1);
}

TEST_CASE("coordinate_intersection is the weight") {
  SurfaceKind s12 = make_surface(1, 2);
  DTVector v = vec(s12, {1, 2}, {3, -1});
  CHECK(coordinate_intersection(v, 0) == Rat(1));
  CHECK(coordinate_intersection(v, 1) == Rat(2));
  CHECK_THROWS_AS(coordinate_intersection(v, 2), IndexOutOfRange);
  // twists never change weights
  for (int i = 0; i < 2; ++i)
    for (long long k = -3; k <= 3; ++k)
      CHECK(coordinate_intersection(twist(v, i, k), 0) == coordinate_intersection(v, 0));
}

TEST_CASE("mod2 classes") {
  SurfaceKind s05 = make_surface(0, 5);
  // chain curve 0 encloses the first two boundary components
  auto cls = mod2_class(unit_curve(s05, 0));
  CHECK(cls == std::vector<int>{1, 1, 0, 0});
  auto cls1 = mod2_class(unit_curve(s05, 1));
  CHECK(cls1 == std::vector<int>{1, 1, 1, 0});

  // doubling kills the class
  SurfaceKind s12 = make_surface(1, 2);
  auto pd12 = standard_pants_decomposition(s12);
  for (const auto& c : enumerate_curves(pd12, 3)) {
    auto z = mod2_class(scale(c, 2));
    for (int x : z) CHECK(x == 0);
  }

  // the separating chain curve of Sigma_{1,2} is null-homologous
  auto sep = mod2_class(unit_curve(s12, 1));
  for (int x : sep) CHECK(x == 0);
  // the handle curve is not
  auto handle = mod2_class(unit_curve(s12, 0));
  bool nonzero = false;
  for (int x : handle) nonzero |= (x != 0);
  CHECK(nonzero);
}
