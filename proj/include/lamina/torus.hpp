#pragma once

#include <optional>
#include <vector>

#include "lamina/isect.hpp"

namespace lamina {

// Exact model of simple closed curves on the one-holed torus and the
// four-holed sphere: primitive integer pairs up to global sign, the
// determinant intersection formula, the GL(2,Z) action, and the
// classification of integral piecewise-linear self-maps.

struct PrimitivePair {
  long long a = 0, b = 0;  // canonical: a > 0, or a == 0 and b == 1

  friend bool operator==(const PrimitivePair& x, const PrimitivePair& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const PrimitivePair& x, const PrimitivePair& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

PrimitivePair make_primitive(long long a, long long b);
bool is_primitive(long long a, long long b);

enum class TorusModel { OneHoledTorus, FourHoledSphere };

// |a1 b2 - a2 b1|, doubled on the four-holed sphere.
long long intersect_pair(const PrimitivePair& p, const PrimitivePair& q, TorusModel model);

struct Mat2 {
  long long m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  long long det() const { return m00 * m11 - m01 * m10; }
};

PrimitivePair gl2_act(const Mat2& m, const PrimitivePair& p);

// The map +-(x,y) -> +-(a1 x + b1 y, a2 x + b2 y).
struct IntegerPLMap {
  long long a1 = 1, b1 = 0, a2 = 0, b2 = 1;
  long long det() const { return a1 * b2 - a2 * b1; }
};

enum class PLClass { Induced, NotInduced };
PLClass classify_pl_map(const IntegerPLMap& f);

struct NonInducedWitness {
  PrimitivePair pair;     // (a,b)
  long long c = 0, d = 0; // a*f1 - b*f2 = |c x + d y|
  long long divisor = 1;  // common divisor > 1
};

// Exhaustive search in increasing max(|a|,|b|), then lexicographic order.
NonInducedWitness find_noninduced_witness(const IntegerPLMap& f, long long search_bound);

// Correspondence between Dehn-Thurston coordinates on the one-holed torus and
// primitive pairs: the pants curve is +-(0,1), its dual +-(1,0), and a class
// (m,t) maps to +-(m,t). Verified against the geometric oracle on all class
// pairs up to the bound; throws CalibrationFailure on the first mismatch.
struct CalibrationReport {
  long long bound = 0;
  long long pairs_checked = 0;
};

CalibrationReport dt_pair_calibration(const IntersectionOracle& oracle, long long bound = 6);

PrimitivePair dt_to_pair(const DTVector& v);

}  // namespace lamina
