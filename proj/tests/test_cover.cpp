#include <set>

#include "doctest.h"
#include "lamina/cover.hpp"

using namespace lamina;

namespace {
DTVector v05(std::vector<long long> ws, std::vector<long long> ts) {
  SurfaceKind s = make_surface(0, 5);
  std::vector<Rat> w(ws.begin(), ws.end()), t(ts.begin(), ts.end());
  return make_vector(s, w, t);
}
}  // namespace

TEST_CASE("classification by enclosed parity") {
  CoverSystem cover;
  // first chain curve encloses branch points 0 and 1
  auto c0 = cover.classify_lift(unit_curve(make_surface(0, 5), 0));
  CHECK(c0.enclosed_parity == 0);
  CHECK(c0.lift_type == LiftType::NonseparatingDoubled);
  // the second chain curve encloses three branch points
  auto c1 = cover.classify_lift(unit_curve(make_surface(0, 5), 1));
  CHECK(c1.enclosed_parity == 1);
  CHECK(c1.lift_type == LiftType::Separating);
}

TEST_CASE("lift table: decomposition curves") {
  CoverSystem cover;
  cover.build_table(2);
  SurfaceKind s05 = make_surface(0, 5);
  SurfaceKind s12 = make_surface(1, 2);

  const LiftEntry& e0 = cover.lookup(unit_curve(s05, 0));
  CHECK(e0.weight == 2);
  CHECK(e0.lift_class == unit_curve(s12, 0));
  CHECK(e0.total == make_vector(s12, {Rat(0), Rat(0)}, {Rat(2), Rat(0)}));

  const LiftEntry& e1 = cover.lookup(unit_curve(s05, 1));
  CHECK(e1.weight == 1);
  CHECK(e1.lift_class == unit_curve(s12, 1));
}

TEST_CASE("weight dichotomy across the pool") {
  CoverSystem cover;
  cover.build_table(4);
  for (const LiftEntry& e : cover.table()) {
    if (e.parity == 1) {
      CHECK(e.type == LiftType::Separating);
      CHECK(e.weight == 1);
    } else {
      CHECK(e.type == LiftType::NonseparatingDoubled);
      CHECK(e.weight == 2);
    }
    CHECK(e.total == canonicalize(scale(e.lift_class, e.weight)));
  }
  CHECK(cover.table().size() >= 10);
}

TEST_CASE("transfer is additive and linear") {
  CoverSystem cover;
  cover.build_table(4);
  SurfaceKind s05 = make_surface(0, 5);

  CHECK(cover.transfer(zero_vector(s05)).is_zero());

  DTVector g0 = unit_curve(s05, 0);
  DTVector c = v05({2, 0}, {0, 0});
  CHECK(cover.transfer(scale(c, 3)) == canonicalize(scale(cover.transfer(c), 3)));
  CHECK(cover.transfer(add(g0, c)) == canonicalize(add(cover.transfer(g0), cover.transfer(c))));

  CHECK_THROWS_AS(cover.lookup(v05({6, 0}, {6, 0})), LiftTableMiss);
}

TEST_CASE("lambda factors") {
  CHECK(lambda_factor(LiftType::Separating, LiftType::Separating) == Rat(1));
  CHECK(lambda_factor(LiftType::NonseparatingDoubled, LiftType::NonseparatingDoubled) == Rat(1));
  CHECK(lambda_factor(LiftType::Separating, LiftType::NonseparatingDoubled) == Rat(2));
  CHECK(lambda_factor(LiftType::NonseparatingDoubled, LiftType::Separating) == Rat(1, 2));
}

TEST_CASE("cover scaling on a small pool") {
  CoverSystem cover;
  cover.build_table(3);
  auto pool = enumerate_curves(cover.base().decomposition(), 3);
  auto report = verify_cover_scaling(cover, pool);
  CHECK(report.violations == 0);
  CHECK(report.pairs == static_cast<long long>(pool.size() * (pool.size() + 1) / 2));
}

TEST_CASE("table serialization carries a schema version") {
  CoverSystem cover;
  cover.build_table(2);
  auto json = cover.table_to_json();
  CHECK(json.find("\"schema_version\":1") != std::string::npos);
  CHECK(json.find("nonseparating_doubled") != std::string::npos);
}
