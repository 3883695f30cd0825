#include "lamina/isect.hpp"

#include <algorithm>

#include "lamina/errors.hpp"
#include "lamina/parallel.hpp"

namespace lamina {

namespace {

std::vector<long long> flat(const DTVector& v) {
  std::vector<long long> out;
  out.reserve(2 * v.curve_count());
  for (const Rat& w : v.weights) out.push_back(w.num());
  for (const Rat& t : v.twists) out.push_back(t.num());
  return out;
}

}  // namespace

IntersectionOracle::IntersectionOracle(const SurfaceKind& s, long long overflow_limit)
    : pd_(standard_pants_decomposition(s)), limit_(overflow_limit) {}

long long IntersectionOracle::intersection(const DTVector& a, const DTVector& b) const {
  if (!(a.surface == pd_.surface) || !(b.surface == pd_.surface))
    throw InvalidVector("oracle: vector on a different surface");
  if (auto viol = validate_integral(a)) throw InvalidVector("oracle lhs: " + viol->message);
  if (auto viol = validate_integral(b)) throw InvalidVector("oracle rhs: " + viol->message);
  DTVector ca = canonicalize(a);
  DTVector cb = canonicalize(b);
  if (ca.is_zero() || cb.is_zero()) return 0;

  auto key = std::make_pair(flat(ca), flat(cb));
  if (key.second < key.first) std::swap(key.first, key.second);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto [da, db] = realize_pair(pd_, ca, cb);
  long long value = reduced_intersection(da, db, limit_).final_count;
  {
    std::lock_guard<std::mutex> lock(mu_);
    cache_[key] = value;
  }
  return value;
}

long long geometric_intersection(const IntersectionOracle& oracle, const DTVector& a,
                                 const DTVector& b) {
  return oracle.intersection(a, b);
}

bool is_disjoint(const IntersectionOracle& oracle, const DTVector& a, const DTVector& b) {
  DTVector ca = canonicalize(a), cb = canonicalize(b);
  if (ca == cb) return false;
  return oracle.intersection(ca, cb) == 0;
}

FillingResult filling_check(const IntersectionOracle& oracle, const DTVector& a,
                            const DTVector& b, const std::vector<DTVector>& pool) {
  if (pool.empty()) throw std::invalid_argument("filling_check: empty pool");
  for (const DTVector& m : pool) {
    if (oracle.intersection(a, m) + oracle.intersection(b, m) == 0)
      return FillingResult{false, m};
  }
  return FillingResult{true, std::nullopt};
}

IntersectionTable intersection_table(const IntersectionOracle& oracle,
                                     const std::vector<DTVector>& classes,
                                     const Parallelism* par) {
  IntersectionTable table;
  table.classes = classes;
  const long long n = static_cast<long long>(classes.size());
  table.values.assign(n, std::vector<long long>(n, 0));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  auto work = [&](long long k) {
    auto [i, j] = pairs[k];
    long long v = oracle.intersection(classes[i], classes[j]);
    table.values[i][j] = v;
    table.values[j][i] = v;
  };
  if (par)
    par->for_each(static_cast<long long>(pairs.size()), work);
  else
    for (long long k = 0; k < static_cast<long long>(pairs.size()); ++k) work(k);
  return table;
}

}  // namespace lamina
