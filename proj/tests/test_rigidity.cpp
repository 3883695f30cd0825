#include "doctest.h"
#include "lamina/rigidity.hpp"

using namespace lamina;

namespace {
DTVector vec(const SurfaceKind& s, std::vector<long long> ws, std::vector<long long> ts) {
  std::vector<Rat> w(ws.begin(), ws.end()), t(ts.begin(), ts.end());
  return make_vector(s, w, t);
}
}  // namespace

TEST_CASE("exact span rank") {
  SurfaceKind s12 = make_surface(1, 2);
  std::vector<DTVector> pts = {vec(s12, {1, 0}, {0, 0}), vec(s12, {2, 0}, {0, 0}),
                               vec(s12, {0, 0}, {1, 0}), vec(s12, {1, 0}, {1, 0})};
  CHECK(exact_span_rank(pts) == 2);
  CHECK(exact_span_rank({zero_vector(s12)}) == 0);
  CHECK(exact_span_rank({}) == 0);
}

TEST_CASE("zero set ranks on the one-holed torus") {
  SurfaceKind s11 = make_surface(1, 1);
  IntersectionOracle o(s11);
  auto sample = zero_set_rank(o, {vec(s11, {1}, {0})}, 4);
  CHECK(sample.rank == 1);
  for (const auto& p : sample.points)
    CHECK(o.intersection(p, vec(s11, {1}, {0})) == 0);
}

TEST_CASE("zero set rank D-1 for a single pants curve") {
  SurfaceKind s12 = make_surface(1, 2);
  IntersectionOracle o(s12);
  CHECK(zero_set_rank(o, {unit_curve(s12, 0)}, 4).rank == 3);
  CHECK(zero_set_rank(o, {unit_curve(s12, 0), unit_curve(s12, 1)}, 4).rank == 2);
}

TEST_CASE("rank dichotomy on the two-holed torus") {
  SurfaceKind s12 = make_surface(1, 2);
  IntersectionOracle o(s12);
  auto res = verify_lemma2(o, unit_curve(s12, 0), unit_curve(s12, 1), 4);
  CHECK(res.verdict == Lemma2Result::Disjoint);
  CHECK(res.rank == 2);

  // an intersecting pair from the pool
  DTVector a = vec(s12, {1, 0}, {0, 0});
  DTVector b = vec(s12, {1, 0}, {1, 0});
  REQUIRE(o.intersection(a, b) > 0);
  auto res2 = verify_lemma2(o, a, b, 4);
  CHECK(res2.verdict == Lemma2Result::Intersecting);
  CHECK(res2.rank <= 1);
}

TEST_CASE("rank dichotomy on the five-holed sphere") {
  SurfaceKind s05 = make_surface(0, 5);
  IntersectionOracle o(s05);
  auto res = verify_lemma2(o, unit_curve(s05, 0), unit_curve(s05, 1), 4);
  CHECK(res.verdict == Lemma2Result::Disjoint);
  CHECK(res.rank == 2);
}

TEST_CASE("cutting systems isolate the ray") {
  SurfaceKind s11 = make_surface(1, 1);
  IntersectionOracle o11(s11);
  auto pool11 = enumerate_curves(o11.decomposition(), 4);
  auto sys = cutting_system(o11, vec(s11, {1}, {0}), pool11, 4);
  CHECK(sys.rank == 1);
  CHECK(sys.constraints.size() == 1);  // nothing else is disjoint from it

  SurfaceKind s12 = make_surface(1, 2);
  IntersectionOracle o12(s12);
  auto pool12 = enumerate_curves(o12.decomposition(), 4);
  for (int i = 0; i < 2; ++i) {
    auto system = cutting_system(o12, unit_curve(s12, i), pool12, 4);
    CHECK(system.rank == 1);
    // independent re-verification
    auto sample = zero_set_rank(o12, system.constraints, 4);
    CHECK(sample.rank == 1);
    for (const auto& p : sample.points) {
      // every point is a multiple of the pants curve's ray
      for (int j = 0; j < 2; ++j)
        if (j != i) {
          CHECK(p.weights[j].is_zero());
          CHECK(p.twists[j].is_zero());
        }
      CHECK(p.weights[i].is_zero());
    }
  }
}

TEST_CASE("projectivization is scale invariant") {
  SurfaceKind s12 = make_surface(1, 2);
  DTVector v = vec(s12, {1, 2}, {-3, 1});
  auto p1 = projectivize(v);
  auto p2 = projectivize(scale(v, 5));
  CHECK(p1 == p2);
  DTVector w = v;
  for (auto& x : w.weights) x *= Rat(7, 3);
  for (auto& x : w.twists) x *= Rat(7, 3);
  CHECK(projectivize(w) == p1);
  CHECK_THROWS_AS(projectivize(zero_vector(s12)), InvalidVector);
}

TEST_CASE("p_alpha membership") {
  SurfaceKind s12 = make_surface(1, 2);
  IntersectionOracle o(s12);
  CHECK(p_alpha_member(o, projectivize(unit_curve(s12, 1)), unit_curve(s12, 0)));
  CHECK(p_alpha_member(o, projectivize(unit_curve(s12, 0)), unit_curve(s12, 0)));
  DTVector crossing = vec(s12, {1, 0}, {0, 0});
  CHECK(!p_alpha_member(o, projectivize(crossing), unit_curve(s12, 0)));
  // pullback consistency over the pool
  auto pool = enumerate_curves(o.decomposition(), 3);
  for (const auto& m : pool)
    for (int i = 0; i < 2; ++i)
      CHECK(p_alpha_member(o, projectivize(m), unit_curve(s12, i)) ==
            (o.intersection(m, unit_curve(s12, i)) == 0));
}

TEST_CASE("disjointness graphs") {
  SurfaceKind s12 = make_surface(1, 2);
  IntersectionOracle o12(s12);
  auto pool = enumerate_curves(o12.decomposition(), 3);
  auto g = disjointness_graph(o12, pool);
  // the two pants curves are disjoint
  int i0 = -1, i1 = -1;
  for (size_t i = 0; i < pool.size(); ++i) {
    if (pool[i] == unit_curve(s12, 0)) i0 = static_cast<int>(i);
    if (pool[i] == unit_curve(s12, 1)) i1 = static_cast<int>(i);
  }
  REQUIRE(i0 >= 0);
  REQUIRE(i1 >= 0);
  bool found = false;
  for (auto& [a, b] : g.edges) {
    CHECK(a != b);
    if ((a == i0 && b == i1) || (a == i1 && b == i0)) found = true;
  }
  CHECK(found);
  CHECK(graph_to_dot(g).find("graph disjointness") == 0);

  // the one-holed torus graph is edgeless at every tested bound
  SurfaceKind s11 = make_surface(1, 1);
  IntersectionOracle o11(s11);
  for (long long bound = 2; bound <= 5; ++bound) {
    auto g11 = disjointness_graph(o11, enumerate_curves(o11.decomposition(), bound));
    CHECK(g11.edges.empty());
  }
}

TEST_CASE("twist invariance audit") {
  SurfaceKind s12 = make_surface(1, 2);
  IntersectionOracle o(s12);
  auto pool = enumerate_curves(o.decomposition(), 2);
  for (int i = 0; i < 2; ++i) {
    auto rep = twist_invariance_audit(o, pool, i, -2, 2);
    CHECK(rep.violations == 0);
    CHECK(rep.checks > 0);
  }
}

TEST_CASE("intersection vectors") {
  SurfaceKind s12 = make_surface(1, 2);
  IntersectionOracle o(s12);
  auto pool = enumerate_curves(o.decomposition(), 3);
  CHECK(intersection_vector(o, zero_vector(s12), pool) ==
        std::vector<long long>(pool.size(), 0));
  DTVector m = vec(s12, {1, 0}, {1, 0});
  auto base = intersection_vector(o, m, pool);
  auto doubled = intersection_vector(o, scale(m, 2), pool);
  for (size_t k = 0; k < pool.size(); ++k) CHECK(doubled[k] == 2 * base[k]);
}
