#include "lamina/rigidity.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lamina/errors.hpp"

namespace lamina {

int exact_span_rank(const std::vector<DTVector>& points) {
  if (points.empty()) return 0;
  const int cols = 2 * points[0].curve_count();
  std::vector<std::vector<long long>> rows;
  for (const DTVector& p : points) {
    std::vector<long long> row;
    for (const Rat& w : p.weights) row.push_back(w.num());
    for (const Rat& t : p.twists) row.push_back(t.num());
    rows.push_back(std::move(row));
  }
  // fraction-free elimination; desk-scale entries keep products tiny
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][c] == 0) continue;
      long long a = rows[rank][c], b = rows[r][c];
      long long g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
      long long fa = b / g, fb = a / g;
      for (int j = 0; j < cols; ++j) {
        __int128 v = __int128(rows[r][j]) * fb - __int128(rows[rank][j]) * fa;
        if (v > INT64_MAX || v < INT64_MIN) throw RationalOverflow();
        rows[r][j] = static_cast<long long>(v);
      }
      // keep growth in check
      long long rg = 0;
      for (long long x : rows[r]) rg = std::gcd(rg, x < 0 ? -x : x);
      if (rg > 1)
        for (long long& x : rows[r]) x /= rg;
    }
    ++rank;
  }
  return rank;
}

ZeroSetSample zero_set_rank(const IntersectionOracle& oracle,
                            const std::vector<DTVector>& constraints, long long bound) {
  if (constraints.empty()) throw std::invalid_argument("zero_set_rank: no constraints");
  ZeroSetSample sample;
  sample.constraints = constraints;
  sample.bound = bound;
  for (const DTVector& m : enumerate_multicurves(oracle.decomposition(), bound)) {
    bool in = true;
    for (const DTVector& alpha : constraints) {
      if (m.is_zero()) break;  // the zero lamination satisfies everything
      if (oracle.intersection(m, alpha) != 0) {
        in = false;
        break;
      }
    }
    if (in) sample.points.push_back(m);
  }
  sample.rank = exact_span_rank(sample.points);
  return sample;
}

Lemma2Result verify_lemma2(const IntersectionOracle& oracle, const DTVector& alpha,
                           const DTVector& beta, long long bound) {
  const SurfaceKind& s = oracle.decomposition().surface;
  if (s.ml_dimension() < 4)
    throw std::invalid_argument("the rank dichotomy needs ml dimension >= 4");
  if (canonicalize(alpha) == canonicalize(beta))
    throw std::invalid_argument("the dichotomy compares distinct classes");
  Lemma2Result res;
  res.disjoint = is_disjoint(oracle, alpha, beta);
  res.rank = zero_set_rank(oracle, {alpha, beta}, bound).rank;
  const int d = s.ml_dimension();
  if (res.disjoint) {
    res.expected = d - 2;
    res.verdict = res.rank == d - 2 ? Lemma2Result::Disjoint : Lemma2Result::Anomaly;
    if (res.verdict == Lemma2Result::Anomaly)
      res.note = "disjoint pair with rank " + std::to_string(res.rank) + " instead of " +
                 std::to_string(d - 2);
  } else {
    res.expected = d - 3;
    res.verdict = res.rank <= d - 3 ? Lemma2Result::Intersecting : Lemma2Result::Anomaly;
    if (res.verdict == Lemma2Result::Anomaly)
      res.note = "intersecting pair with rank " + std::to_string(res.rank) + " above " +
                 std::to_string(d - 3);
  }
  return res;
}

CuttingSystem cutting_system(const IntersectionOracle& oracle, const DTVector& alpha,
                             const std::vector<DTVector>& pool, long long bound) {
  CuttingSystem sys;
  sys.constraints.push_back(canonicalize(alpha));
  sys.rank = zero_set_rank(oracle, sys.constraints, bound).rank;
  while (sys.rank > 1) {
    bool progressed = false;
    for (const DTVector& c : pool) {
      if (oracle.intersection(c, alpha) != 0) continue;
      if (std::find(sys.constraints.begin(), sys.constraints.end(), canonicalize(c)) !=
          sys.constraints.end())
        continue;
      std::vector<DTVector> trial = sys.constraints;
      trial.push_back(canonicalize(c));
      int rank = zero_set_rank(oracle, trial, bound).rank;
      if (rank < sys.rank) {
        sys.constraints = std::move(trial);
        sys.rank = rank;
        progressed = true;
        break;
      }
    }
    if (!progressed)
      throw PoolTooSmall("no pool constraint reduces the zero-set rank below " +
                         std::to_string(sys.rank));
  }
  return sys;
}

ProjectivePoint projectivize(const DTVector& v) {
  Rat norm(0);
  for (const Rat& w : v.weights) norm += w;
  for (const Rat& t : v.twists) norm += t.abs();
  if (norm.is_zero()) throw InvalidVector("cannot projectivize the zero lamination");
  DTVector rep = canonicalize(v);
  for (Rat& w : rep.weights) w /= norm;
  for (Rat& t : rep.twists) t /= norm;
  return ProjectivePoint{rep};
}

namespace {

// Smallest positive multiple of a rational point that is a valid multicurve.
DTVector integral_representative(const DTVector& v) {
  long long lcm = 1;
  for (const Rat& w : v.weights) lcm = std::lcm(lcm, w.den());
  for (const Rat& t : v.twists) lcm = std::lcm(lcm, t.den());
  DTVector scaled = v;
  for (Rat& w : scaled.weights) w *= Rat(lcm);
  for (Rat& t : scaled.twists) t *= Rat(lcm);
  scaled = canonicalize(scaled);
  if (!is_valid_multicurve(scaled)) scaled = canonicalize(scale(scaled, 2));
  if (!is_valid_multicurve(scaled))
    throw InvalidVector("no small integral representative on this ray");
  return scaled;
}

}  // namespace

bool p_alpha_member(const IntersectionOracle& oracle, const ProjectivePoint& pm,
                    const DTVector& alpha) {
  return oracle.intersection(integral_representative(pm.rep), alpha) == 0;
}

DisjointnessGraph disjointness_graph(const IntersectionOracle& oracle,
                                     const std::vector<DTVector>& pool, const Parallelism* par) {
  DisjointnessGraph g;
  g.vertices = pool;
  const int n = static_cast<int>(pool.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::vector<char> connected(pairs.size(), 0);
  auto work = [&](long long k) {
    auto [i, j] = pairs[k];
    connected[k] = is_disjoint(oracle, pool[i], pool[j]) ? 1 : 0;
  };
  if (par)
    par->for_each(static_cast<long long>(pairs.size()), work);
  else
    for (long long k = 0; k < static_cast<long long>(pairs.size()); ++k) work(k);
  for (size_t k = 0; k < pairs.size(); ++k)
    if (connected[k]) g.edges.push_back(pairs[k]);
  return g;
}

std::string graph_to_dot(const DisjointnessGraph& g) {
  std::ostringstream out;
  out << "graph disjointness {\n";
  for (size_t i = 0; i < g.vertices.size(); ++i)
    out << "  v" << i << " [label=\"" << g.vertices[i].str() << "\"];\n";
  for (const auto& [i, j] : g.edges) out << "  v" << i << " -- v" << j << ";\n";
  out << "}\n";
  return out.str();
}

AuditReport twist_invariance_audit(const IntersectionOracle& oracle,
                                   const std::vector<DTVector>& pool, int curve, long long k_min,
                                   long long k_max, const Parallelism* par) {
  AuditReport report;
  std::vector<std::tuple<int, int, long long>> jobs;
  const int n = static_cast<int>(pool.size());
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (long long k = k_min; k <= k_max; ++k) jobs.push_back({i, j, k});
  std::vector<char> bad(jobs.size(), 0);
  auto work = [&](long long idx) {
    auto [i, j, k] = jobs[idx];
    const DTVector& a = pool[i];
    const DTVector& b = pool[j];
    DTVector ta = twist(a, curve, k);
    DTVector tb = twist(b, curve, k);
    bool ok = oracle.intersection(ta, tb) == oracle.intersection(a, b) &&
              is_disjoint(oracle, ta, tb) == is_disjoint(oracle, a, b);
    bad[idx] = ok ? 0 : 1;
  };
  if (par)
    par->for_each(static_cast<long long>(jobs.size()), work);
  else
    for (long long idx = 0; idx < static_cast<long long>(jobs.size()); ++idx) work(idx);
  report.checks = static_cast<long long>(jobs.size());
  for (size_t idx = 0; idx < jobs.size(); ++idx)
    if (bad[idx]) {
      ++report.violations;
      if (report.first_violation.empty()) {
        auto [i, j, k] = jobs[idx];
        report.first_violation = pool[i].str() + " vs " + pool[j].str() + " under twist " +
                                 std::to_string(k) + " along curve " + std::to_string(curve);
      }
    }
  return report;
}

std::vector<long long> intersection_vector(const IntersectionOracle& oracle, const DTVector& m,
                                           const std::vector<DTVector>& pool) {
  if (pool.empty()) throw std::invalid_argument("intersection_vector: empty pool");
  std::vector<long long> out;
  out.reserve(pool.size());
  for (const DTVector& alpha : pool) out.push_back(oracle.intersection(m, alpha));
  return out;
}

}  // namespace lamina
