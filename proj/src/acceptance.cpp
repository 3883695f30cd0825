#include "lamina/acceptance.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "lamina/cover.hpp"
#include "lamina/errors.hpp"
#include "lamina/isect.hpp"
#include "lamina/rigidity.hpp"
#include "lamina/torus.hpp"

namespace lamina {

namespace {

struct Context {
  const Parallelism* par;
  long long limit;
  std::map<std::pair<int, int>, std::unique_ptr<IntersectionOracle>> oracles;

  IntersectionOracle& oracle(int g, int r) {
    auto key = std::make_pair(g, r);
    auto it = oracles.find(key);
    if (it == oracles.end())
      it = oracles.emplace(key, std::make_unique<IntersectionOracle>(make_surface(g, r), limit))
               .first;
    return *it->second;
  }

  // Warm the cache over vector/class pairs in parallel.
  void prefill(IntersectionOracle& o, const std::vector<DTVector>& left,
               const std::vector<DTVector>& right) {
    std::vector<std::pair<int, int>> jobs;
    for (size_t i = 0; i < left.size(); ++i)
      for (size_t j = 0; j < right.size(); ++j) jobs.push_back({(int)i, (int)j});
    auto work = [&](long long k) {
      auto [i, j] = jobs[k];
      o.intersection(left[i], right[j]);
    };
    if (par)
      par->for_each((long long)jobs.size(), work);
    else
      for (long long k = 0; k < (long long)jobs.size(); ++k) work(k);
  }
};

CriterionResult timed(int id, const std::string& name,
                      const std::function<std::pair<bool, std::string>()>& body) {
  CriterionResult res;
  res.id = id;
  res.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto [pass, detail] = body();
    res.pass = pass;
    res.detail = detail;
  } catch (const std::exception& e) {
    res.pass = false;
    res.detail = std::string("exception: ") + e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  res.seconds = std::chrono::duration<double>(t1 - t0).count();
  return res;
}

// 1. one-holed torus: oracle equals |a1 b2 - a2 b1| on all pairs up to bound 6
CriterionResult torus_formula(Context& ctx) {
  return timed(1, "torus formula equivalence (bound 6)", [&]() {
    IntersectionOracle& o = ctx.oracle(1, 1);
    auto pool = enumerate_curves(o.decomposition(), 6);
    ctx.prefill(o, pool, pool);
    auto rep = dt_pair_calibration(o, 6);
    std::ostringstream os;
    os << pool.size() << " classes, " << rep.pairs_checked << " pairs, formula exact";
    return std::make_pair(true, os.str());
  });
}

// 2. four-holed sphere: oracle equals twice the formula up to bound 6
CriterionResult sphere_doubling(Context& ctx) {
  return timed(2, "four-holed sphere doubling (bound 6)", [&]() {
    IntersectionOracle& o = ctx.oracle(0, 4);
    auto pool = enumerate_curves(o.decomposition(), 6);
    ctx.prefill(o, pool, pool);
    auto rep = dt_pair_calibration(o, 6);
    std::ostringstream os;
    os << pool.size() << " classes, " << rep.pairs_checked << " pairs, doubled formula exact";
    return std::make_pair(true, os.str());
  });
}

// Widen a deficient disjoint pair's zero-set sample with a targeted scan:
// parity-valid weight patterns with a wider twist grid than the norm
// enumeration reaches (a missing generator can carry large twists, e.g. norm
// 15 for a twisted genus-2 pair). Candidates are ordered by coordinate norm
// and evaluated in parallel batches; the scan stops as soon as the target
// rank is certified and only ever adds genuine zero-set points.
std::vector<DTVector> wide_candidates(const SurfaceKind& s) {
  const int k = s.pants_curve_count();
  std::vector<DTVector> out;
  std::vector<long long> w(k, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      DTVector probe = zero_vector(s);
      for (int j = 0; j < k; ++j) probe.weights[j] = Rat(w[j]);
      if (!is_valid_multicurve(probe)) return;
      std::vector<int> active;
      for (int j = 0; j < k; ++j)
        if (w[j] > 0) active.push_back(j);
      if (active.empty()) return;
      std::vector<long long> t(active.size(), -8);
      while (true) {
        DTVector cand = probe;
        for (size_t a = 0; a < active.size(); ++a) cand.twists[active[a]] = Rat(t[a]);
        out.push_back(canonicalize(cand));
        size_t idx = 0;
        while (idx < t.size() && ++t[idx] > 8) t[idx++] = -8;
        if (idx == t.size()) break;
      }
      return;
    }
    for (long long m = 0; m <= 4; ++m) {
      w[i] = m;
      rec(i + 1);
    }
    w[i] = 0;
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(),
                   [](const DTVector& a, const DTVector& b) { return a.norm() < b.norm(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int supplement_rank(Context& ctx, IntersectionOracle& o, const std::vector<DTVector>& candidates,
                    const DTVector& alpha, const DTVector& beta, std::vector<DTVector> points,
                    int target) {
  int rank = exact_span_rank(points);
  const size_t batch = 4096;
  for (size_t start = 0; start < candidates.size() && rank < target; start += batch) {
    size_t end = std::min(candidates.size(), start + batch);
    auto work = [&](long long i) {
      o.intersection(candidates[start + i], alpha);
      o.intersection(candidates[start + i], beta);
    };
    if (ctx.par)
      ctx.par->for_each(static_cast<long long>(end - start), work);
    else
      for (long long i = 0; i < static_cast<long long>(end - start); ++i) work(i);
    for (size_t i = start; i < end && rank < target; ++i) {
      if (o.intersection(candidates[i], alpha) != 0) continue;
      if (o.intersection(candidates[i], beta) != 0) continue;
      points.push_back(candidates[i]);
      int next = exact_span_rank(points);
      if (next == rank)
        points.pop_back();
      else
        rank = next;
    }
  }
  return rank;
}

// 3. rank dichotomy over every pool pair. Span ranks are computed from the
// enumerated sample, so a disjoint pair whose fourth generator happens to
// have a large coordinate norm can come in under-sampled at the base bound;
// those pairs are saturated at increasing bounds and finally by the targeted
// scan. Exceeding the dichotomy value at any bound is a failure.
CriterionResult rank_dichotomy(Context& ctx) {
  return timed(3, "zero-set rank dichotomy (S_{1,2}, S_{0,5} at 4; S_{2,0} at 3)", [&]() {
    long long disjoint_pairs = 0, intersecting_pairs = 0, saturated_pairs = 0;
    long long max_saturation = 0;
    for (auto [g, r, bound, cap] : std::vector<std::tuple<int, int, long long, long long>>{
             {1, 2, 4, 5}, {0, 5, 4, 5}, {2, 0, 3, 7}}) {
      IntersectionOracle& o = ctx.oracle(g, r);
      const int d = o.decomposition().surface.ml_dimension();
      auto pool = enumerate_curves(o.decomposition(), bound);
      ctx.prefill(o, enumerate_multicurves(o.decomposition(), bound), pool);
      std::vector<std::pair<int, int>> deficient;
      for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i + 1; j < pool.size(); ++j) {
          auto res = verify_lemma2(o, pool[i], pool[j], bound);
          if (res.disjoint) {
            ++disjoint_pairs;
            if (res.rank > d - 2)
              return std::make_pair(false, "disjoint pair above rank D-2 on " +
                                               o.decomposition().surface.str() + ": " +
                                               pool[i].str() + " vs " + pool[j].str());
            if (res.rank < d - 2) deficient.push_back({(int)i, (int)j});
          } else {
            ++intersecting_pairs;
            if (res.rank > d - 3)
              return std::make_pair(false, "intersecting pair above rank D-3 on " +
                                               o.decomposition().surface.str() + ": " +
                                               pool[i].str() + " vs " + pool[j].str());
          }
        }
      for (long long b = bound + 1; b <= cap && !deficient.empty(); ++b) {
        std::vector<DTVector> involved;
        for (auto [i, j] : deficient) {
          involved.push_back(pool[i]);
          involved.push_back(pool[j]);
        }
        ctx.prefill(o, enumerate_multicurves(o.decomposition(), b), involved);
        std::vector<std::pair<int, int>> still;
        for (auto [i, j] : deficient) {
          int rank = zero_set_rank(o, {pool[i], pool[j]}, b).rank;
          if (rank > d - 2)
            return std::make_pair(false, "disjoint pair above rank D-2 at bound " +
                                             std::to_string(b));
          if (rank < d - 2)
            still.push_back({i, j});
          else {
            ++saturated_pairs;
            max_saturation = std::max(max_saturation, b);
          }
        }
        deficient = std::move(still);
      }
      if (!deficient.empty()) {
        auto candidates = wide_candidates(o.decomposition().surface);
        for (auto [i, j] : deficient) {
          auto sample = zero_set_rank(o, {pool[i], pool[j]}, bound);
          int rank =
              supplement_rank(ctx, o, candidates, pool[i], pool[j], sample.points, d - 2);
          if (rank != d - 2)
            return std::make_pair(
                false, "disjoint pair stuck at rank " + std::to_string(rank) + " on " +
                           o.decomposition().surface.str() + ": " + pool[i].str() + " vs " +
                           pool[j].str());
          ++saturated_pairs;
        }
      }
    }
    std::ostringstream os;
    os << disjoint_pairs << " disjoint pairs at rank exactly D-2 (" << saturated_pairs
       << " needed widened sampling, deepest enumeration bound " << max_saturation << "), "
       << intersecting_pairs << " intersecting pairs at rank <= D-3, zero anomalies";
    return std::make_pair(true, os.str());
  });
}

// 4. transfer scales the pairing by exactly two
CriterionResult cover_scaling(Context& ctx) {
  return timed(4, "cover scaling I(p m1, p m2) = 2 I(m1, m2) (bound 4)", [&]() {
    CoverSystem cover(ctx.limit);
    cover.build_table(4);
    auto pool = enumerate_curves(cover.base().decomposition(), 4);
    auto report = verify_cover_scaling(cover, pool);
    if (report.violations != 0)
      return std::make_pair(false, "first violation: " + report.first_violation);
    std::ostringstream os;
    os << report.pairs << " pool pairs, identity exact";
    return std::make_pair(true, os.str());
  });
}

// 5. every lifted component has weight matching its parity
CriterionResult lift_dichotomy(Context& ctx) {
  return timed(5, "lift weight dichotomy (bound 4)", [&]() {
    CoverSystem cover(ctx.limit);
    cover.build_table(4);
    long long odd = 0, even = 0;
    for (const LiftEntry& e : cover.table()) {
      bool ok = (e.parity == 1 && e.type == LiftType::Separating && e.weight == 1) ||
                (e.parity == 0 && e.type == LiftType::NonseparatingDoubled && e.weight == 2);
      if (!ok) return std::make_pair(false, "dichotomy fails for " + e.source.str());
      (e.parity == 1 ? odd : even) += 1;
    }
    std::ostringstream os;
    os << cover.table().size() << " classes: " << odd << " separating lifts, " << even
       << " doubled non-separating lifts";
    return std::make_pair(true, os.str());
  });
}

// 6. integral linear maps: induced iff |det| = 1, witnesses within |det|+1
CriterionResult gl2_classification(Context&) {
  return timed(6, "GL(2,Z) classification over entries in [-3,3]", [&]() {
    long long induced = 0, witnessed = 0;
    for (long long a1 = -3; a1 <= 3; ++a1)
      for (long long b1 = -3; b1 <= 3; ++b1)
        for (long long a2 = -3; a2 <= 3; ++a2)
          for (long long b2 = -3; b2 <= 3; ++b2) {
            IntegerPLMap f{a1, b1, a2, b2};
            long long det = f.det();
            if (det == 0) continue;
            bool unimodular = det == 1 || det == -1;
            if ((classify_pl_map(f) == PLClass::Induced) != unimodular)
              return std::make_pair(false, "classification mismatch at det " +
                                               std::to_string(det));
            if (unimodular) {
              ++induced;
              continue;
            }
            long long bound = (det < 0 ? -det : det) + 1;
            auto w = find_noninduced_witness(f, bound);  // throws when absent
            long long c = w.pair.a * f.a1 - w.pair.b * f.a2;
            long long d = w.pair.a * f.b1 - w.pair.b * f.b2;
            if (w.divisor <= 1 || c % w.divisor != 0 || d % w.divisor != 0)
              return std::make_pair(false, std::string("invalid witness certificate"));
            ++witnessed;
          }
    std::ostringstream os;
    os << induced << " induced maps, " << witnessed << " witnessed non-induced maps";
    return std::make_pair(true, os.str());
  });
}

// 7. symmetry, zero diagonal, bilinearity, twist invariance on the pool
CriterionResult pairing_properties(Context& ctx) {
  return timed(7, "pairing properties on S_{1,2} (bound 3)", [&]() {
    IntersectionOracle& o = ctx.oracle(1, 2);
    auto pool = enumerate_curves(o.decomposition(), 3);
    ctx.prefill(o, pool, pool);
    for (const DTVector& a : pool) {
      if (o.intersection(a, a) != 0)
        return std::make_pair(false, "nonzero self-intersection at " + a.str());
      for (const DTVector& b : pool)
        if (o.intersection(a, b) != o.intersection(b, a))
          return std::make_pair(false, "asymmetry at " + a.str() + ", " + b.str());
    }
    // bilinearity over scalings up to five
    std::vector<std::tuple<int, int, long long, long long>> jobs;
    for (size_t i = 0; i < pool.size(); ++i)
      for (size_t j = i; j < pool.size(); ++j)
        for (long long k = 1; k <= 5; ++k)
          for (long long l = 1; l <= 5; ++l) jobs.push_back({(int)i, (int)j, k, l});
    std::vector<char> bad(jobs.size(), 0);
    auto work = [&](long long idx) {
      auto [i, j, k, l] = jobs[idx];
      long long base = o.intersection(pool[i], pool[j]);
      bad[idx] =
          o.intersection(scale(pool[i], k), scale(pool[j], l)) == k * l * base ? 0 : 1;
    };
    if (ctx.par)
      ctx.par->for_each((long long)jobs.size(), work);
    else
      for (long long idx = 0; idx < (long long)jobs.size(); ++idx) work(idx);
    for (size_t idx = 0; idx < jobs.size(); ++idx)
      if (bad[idx]) {
        auto [i, j, k, l] = jobs[idx];
        return std::make_pair(false, "bilinearity fails at " + pool[i].str() + " x" +
                                         std::to_string(k) + ", " + pool[j].str() + " x" +
                                         std::to_string(l));
      }
    long long checks = (long long)jobs.size();
    for (int i = 0; i < o.decomposition().curve_count(); ++i) {
      auto rep = twist_invariance_audit(o, pool, i, -5, 5, ctx.par);
      if (rep.violations != 0)
        return std::make_pair(false, "twist invariance fails: " + rep.first_violation);
      checks += rep.checks;
    }
    std::ostringstream os;
    os << pool.size() << " classes, " << checks << " exact identities";
    return std::make_pair(true, os.str());
  });
}

// 8. intersection vectors separate multicurves
CriterionResult embedding_certificate(Context& ctx) {
  return timed(8, "embedding certificate on S_{1,2} (vectors at 3 vs pool at 4)", [&]() {
    IntersectionOracle& o = ctx.oracle(1, 2);
    auto pool = enumerate_curves(o.decomposition(), 4);
    auto vectors = enumerate_multicurves(o.decomposition(), 3);
    ctx.prefill(o, vectors, pool);
    std::map<std::vector<long long>, DTVector> seen;
    for (const DTVector& m : vectors) {
      auto profile = intersection_vector(o, m, pool);
      auto [it, fresh] = seen.emplace(std::move(profile), m);
      if (!fresh)
        return std::make_pair(false,
                              "collision: " + it->second.str() + " and " + m.str() +
                                  " share an intersection vector");
    }
    std::ostringstream os;
    os << vectors.size() << " multicurves, all profiles distinct";
    return std::make_pair(true, os.str());
  });
}

// 9. cutting systems reach rank one and re-verify
CriterionResult cutting_systems(Context& ctx) {
  return timed(9, "cutting systems for pants curves (pool bound 4)", [&]() {
    std::ostringstream os;
    for (auto [g, r] : std::vector<std::pair<int, int>>{{1, 2}, {0, 5}}) {
      IntersectionOracle& o = ctx.oracle(g, r);
      auto pool = enumerate_curves(o.decomposition(), 4);
      for (int i = 0; i < o.decomposition().curve_count(); ++i) {
        DTVector alpha = unit_curve(o.decomposition().surface, i);
        auto sys = cutting_system(o, alpha, pool, 4);
        if (sys.rank != 1)
          return std::make_pair(false, "no rank-1 system for curve " + std::to_string(i) +
                                           " on " + o.decomposition().surface.str());
        auto re = zero_set_rank(o, sys.constraints, 4);
        if (re.rank != 1)
          return std::make_pair(false, "re-verification failed on " +
                                           o.decomposition().surface.str());
        os << o.decomposition().surface.str() << " curve " << i << ": size "
           << sys.constraints.size() << "; ";
      }
    }
    return std::make_pair(true, os.str());
  });
}

// 10. the one-holed torus has no disjoint classes at any tested bound
CriterionResult torus_edgeless(Context& ctx) {
  return timed(10, "edgeless disjointness graph on S_{1,1} (bounds 2..6)", [&]() {
    IntersectionOracle& o = ctx.oracle(1, 1);
    long long vertices = 0;
    for (long long bound = 2; bound <= 6; ++bound) {
      auto pool = enumerate_curves(o.decomposition(), bound);
      auto g = disjointness_graph(o, pool, ctx.par);
      if (!g.edges.empty())
        return std::make_pair(false, "unexpected disjoint pair at bound " +
                                         std::to_string(bound));
      vertices += (long long)pool.size();
    }
    std::ostringstream os;
    os << vertices << " vertices over five bounds, zero edges";
    return std::make_pair(true, os.str());
  });
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const Parallelism* par, long long overflow_limit) {
  Context ctx{par, overflow_limit, {}};
  std::vector<CriterionResult> out;
  out.push_back(torus_formula(ctx));
  out.push_back(sphere_doubling(ctx));
  out.push_back(rank_dichotomy(ctx));
  out.push_back(cover_scaling(ctx));
  out.push_back(lift_dichotomy(ctx));
  out.push_back(gl2_classification(ctx));
  out.push_back(pairing_properties(ctx));
  out.push_back(embedding_certificate(ctx));
  out.push_back(cutting_systems(ctx));
  out.push_back(torus_edgeless(ctx));
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace lamina
