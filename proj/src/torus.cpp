#include "lamina/torus.hpp"

#include <numeric>

#include "lamina/errors.hpp"

namespace lamina {

bool is_primitive(long long a, long long b) {
  if (a == 0 && b == 0) return false;
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b) == 1;
}

PrimitivePair make_primitive(long long a, long long b) {
  if (!is_primitive(a, b))
    throw std::invalid_argument("(" + std::to_string(a) + "," + std::to_string(b) +
                                ") is not a primitive pair");
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
  }
  return PrimitivePair{a, b};
}

long long intersect_pair(const PrimitivePair& p, const PrimitivePair& q, TorusModel model) {
  long long det = p.a * q.b - q.a * p.b;
  if (det < 0) det = -det;
  return model == TorusModel::OneHoledTorus ? det : 2 * det;
}

PrimitivePair gl2_act(const Mat2& m, const PrimitivePair& p) {
  long long d = m.det();
  if (d != 1 && d != -1)
    throw NotUnimodular("matrix determinant " + std::to_string(d) + " is not +-1");
  return make_primitive(m.m00 * p.a + m.m01 * p.b, m.m10 * p.a + m.m11 * p.b);
}

PLClass classify_pl_map(const IntegerPLMap& f) {
  long long d = f.det();
  if (d == 0) throw Degenerate("a1 b2 - a2 b1 = 0 does not define a homeomorphism candidate");
  return (d == 1 || d == -1) ? PLClass::Induced : PLClass::NotInduced;
}

NonInducedWitness find_noninduced_witness(const IntegerPLMap& f, long long search_bound) {
  if (classify_pl_map(f) != PLClass::NotInduced)
    throw std::invalid_argument("witness search requires a NotInduced map");
  for (long long n = 1; n <= search_bound; ++n) {
    // all primitive pairs with max(|a|,|b|) == n, canonical form, lex order
    std::vector<PrimitivePair> ring;
    for (long long a = 0; a <= n; ++a)
      for (long long b = -n; b <= n; ++b) {
        if (std::max(a, b < 0 ? -b : b) != n) continue;
        if (!is_primitive(a, b)) continue;
        if (a == 0 && b < 0) continue;  // canonical representative
        ring.push_back(PrimitivePair{a, b});
      }
    std::sort(ring.begin(), ring.end());
    for (const PrimitivePair& p : ring) {
      long long c = p.a * f.a1 - p.b * f.a2;
      long long d = p.a * f.b1 - p.b * f.b2;
      long long g = std::gcd(c < 0 ? -c : c, d < 0 ? -d : d);
      if (g > 1) return NonInducedWitness{p, c, d, g};
    }
  }
  throw WitnessNotFound("no witness with max(|a|,|b|) <= " + std::to_string(search_bound));
}

PrimitivePair dt_to_pair(const DTVector& v) {
  if (v.curve_count() != 1) throw InvalidVector("pair model needs a one-curve decomposition");
  long long m = v.weights[0].num();
  long long t = v.twists[0].num();
  if (v.surface.genus == 0) {
    if (m % 2 != 0) throw InvalidVector("four-holed sphere weights are even");
    m /= 2;
  }
  return make_primitive(m, m == 0 ? 1 : t);
}

CalibrationReport dt_pair_calibration(const IntersectionOracle& oracle, long long bound) {
  const SurfaceKind& s = oracle.decomposition().surface;
  if (!(s == SurfaceKind{1, 1}) && !(s == SurfaceKind{0, 4}))
    throw std::invalid_argument("calibration runs on the one-holed torus or four-holed sphere");
  TorusModel model = s.genus == 1 ? TorusModel::OneHoledTorus : TorusModel::FourHoledSphere;
  auto pool = enumerate_curves(oracle.decomposition(), bound);
  CalibrationReport report;
  report.bound = bound;
  for (const DTVector& x : pool)
    for (const DTVector& y : pool) {
      long long want = intersect_pair(dt_to_pair(x), dt_to_pair(y), model);
      long long got = oracle.intersection(x, y);
      ++report.pairs_checked;
      if (got != want)
        throw CalibrationFailure("oracle gives " + std::to_string(got) + " for " + x.str() +
                                 " vs " + y.str() + ", formula expects " + std::to_string(want) +
                                 "; the documented twist handedness must be flipped");
    }
  return report;
}

}  // namespace lamina
