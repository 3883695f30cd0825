#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "lamina/diagram.hpp"
#include "lamina/dtcoord.hpp"
#include "lamina/surface.hpp"

namespace lamina {

// Exact geometric intersection numbers between integral multicurves on one
// standard decomposition: realize both in canonical position, superimpose,
// remove bigons, count. Results are cached symmetrically.
class IntersectionOracle {
 public:
  explicit IntersectionOracle(const SurfaceKind& s, long long overflow_limit = 1000000);

  long long intersection(const DTVector& a, const DTVector& b) const;
  const PantsDecomposition& decomposition() const { return pd_; }
  long long overflow_limit() const { return limit_; }

 private:
  PantsDecomposition pd_;
  long long limit_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::vector<long long>, std::vector<long long>>, long long> cache_;
};

long long geometric_intersection(const IntersectionOracle& oracle, const DTVector& a,
                                 const DTVector& b);

// Distinct classes with zero geometric intersection.
bool is_disjoint(const IntersectionOracle& oracle, const DTVector& a, const DTVector& b);

struct FillingResult {
  bool filling = false;
  std::optional<DTVector> witness;  // pool member missing both when not filling
};

// Pool-relative filling certificate: I(a,m) + I(b,m) > 0 for every pool m.
FillingResult filling_check(const IntersectionOracle& oracle, const DTVector& a,
                            const DTVector& b, const std::vector<DTVector>& pool);

struct IntersectionTable {
  std::vector<DTVector> classes;
  std::vector<std::vector<long long>> values;
};

class Parallelism;
IntersectionTable intersection_table(const IntersectionOracle& oracle,
                                     const std::vector<DTVector>& classes,
                                     const Parallelism* par = nullptr);

}  // namespace lamina
