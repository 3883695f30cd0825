#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamina/isect.hpp"
#include "lamina/parallel.hpp"

namespace lamina {

// Verification harness for the geometric certificates used by the rigidity
// argument: exact ranks of zero-set samples, the disjoint/intersecting rank
// dichotomy, cutting systems isolating a single ray, disjointness graphs,
// projectivized points and intersection vectors.

struct ZeroSetSample {
  std::vector<DTVector> constraints;
  long long bound = 0;
  std::vector<DTVector> points;  // every enumerated multicurve annihilating all constraints
  int rank = 0;                  // exact rank of the rational span of the points
};

ZeroSetSample zero_set_rank(const IntersectionOracle& oracle,
                            const std::vector<DTVector>& constraints, long long bound);

// Exact rank of integral coordinate vectors (weights and twists stacked).
int exact_span_rank(const std::vector<DTVector>& points);

struct Lemma2Result {
  enum Verdict { Disjoint, Intersecting, Anomaly } verdict = Anomaly;
  bool disjoint = false;
  int rank = 0;
  int expected = 0;  // D-2 for disjoint pairs; D-3 is the ceiling otherwise
  std::string note;
};

Lemma2Result verify_lemma2(const IntersectionOracle& oracle, const DTVector& alpha,
                           const DTVector& beta, long long bound);

struct CuttingSystem {
  std::vector<DTVector> constraints;
  int rank = 0;  // joint zero-set span rank, 1 on success
};

CuttingSystem cutting_system(const IntersectionOracle& oracle, const DTVector& alpha,
                             const std::vector<DTVector>& pool, long long bound);

// Nonzero lamination normalized so the coordinate norm sums to one.
struct ProjectivePoint {
  DTVector rep;
  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.rep == b.rep;
  }
};

ProjectivePoint projectivize(const DTVector& v);
bool p_alpha_member(const IntersectionOracle& oracle, const ProjectivePoint& pm,
                    const DTVector& alpha);

struct DisjointnessGraph {
  std::vector<DTVector> vertices;
  std::vector<std::pair<int, int>> edges;
};

DisjointnessGraph disjointness_graph(const IntersectionOracle& oracle,
                                     const std::vector<DTVector>& pool,
                                     const Parallelism* par = nullptr);
std::string graph_to_dot(const DisjointnessGraph& g);

struct AuditReport {
  long long checks = 0;
  long long violations = 0;
  std::string first_violation;
};

AuditReport twist_invariance_audit(const IntersectionOracle& oracle,
                                   const std::vector<DTVector>& pool, int curve, long long k_min,
                                   long long k_max, const Parallelism* par = nullptr);

std::vector<long long> intersection_vector(const IntersectionOracle& oracle, const DTVector& m,
                                           const std::vector<DTVector>& pool);

}  // namespace lamina
