#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamina/rational.hpp"
#include "lamina/surface.hpp"

namespace lamina {

// A point of ML(Sigma) in the coordinates of the standard pants decomposition:
// per pants curve an intersection weight m_i >= 0 and a twist t_i, stored as
// exact rationals. Integral vectors with the per-pants parity condition encode
// multicurves. Canonical form folds (0, t) onto (0, |t|).
struct DTVector {
  SurfaceKind surface;
  std::vector<Rat> weights;
  std::vector<Rat> twists;

  int curve_count() const { return static_cast<int>(weights.size()); }
  bool is_integral() const;
  bool is_zero() const;
  long long norm() const;  // sum of m_i + |t_i| for integral vectors

  friend bool operator==(const DTVector& a, const DTVector& b) {
    return a.surface == b.surface && a.weights == b.weights && a.twists == b.twists;
  }
  friend bool operator!=(const DTVector& a, const DTVector& b) { return !(a == b); }
  friend bool operator<(const DTVector& a, const DTVector& b);

  std::string str() const;
};

DTVector make_vector(const SurfaceKind& s, std::vector<Rat> weights, std::vector<Rat> twists);
DTVector zero_vector(const SurfaceKind& s);
DTVector unit_curve(const SurfaceKind& s, int curve);  // the pants curve itself
DTVector scale(const DTVector& v, long long k);
DTVector add(const DTVector& a, const DTVector& b);

// Validation outcome for integral multicurve candidates.
struct Violation {
  enum Kind {
    NonIntegralWeight,
    NonIntegralTwist,
    NegativeWeight,
    FoldingViolation,
    ParityViolation
  } kind;
  int index;  // offending curve index, or pants index for parity
  std::string message;
};

std::optional<Violation> validate_integral(const DTVector& v);
bool is_valid_multicurve(const DTVector& v);

DTVector canonicalize(const DTVector& v);

// Dehn twist along pants curve i: t_i -> t_i + k * m_i, then canonicalize.
DTVector twist(const DTVector& v, int curve, long long k);

// The weight coordinate m_i; equals the geometric intersection number with
// pants curve i for integral vectors.
Rat coordinate_intersection(const DTVector& v, int curve);

// Connected components with multiplicities. Reassembling multiplicity-scaled
// component coordinates reproduces the input exactly.
struct MulticurveClass {
  std::vector<std::pair<DTVector, long long>> components;  // class -> multiplicity
  bool empty() const { return components.empty(); }
  long long component_kinds() const { return static_cast<long long>(components.size()); }
  long long total_components() const;
};

MulticurveClass decompose_multicurve(const DTVector& v);

// All connected single-multiplicity classes with norm <= bound, in canonical
// order (norm, then weights, then twists).
std::vector<DTVector> enumerate_curves(const PantsDecomposition& pd, long long bound);

// Scan of every valid integral multicurve vector with norm <= bound (includes
// the zero vector and disconnected multicurves).
std::vector<DTVector> enumerate_multicurves(const PantsDecomposition& pd, long long bound);

// First homology class mod 2 of an integral multicurve, expressed against the
// standard model's probe family: one coefficient per boundary component
// b_0..b_{r-2} (pairing with an arc from b_i to the reference boundary
// b_{r-1}), then per handle the pair (pairing with the handle's dual curve,
// pairing with the handle curve itself).
std::vector<int> mod2_class(const DTVector& v);

}  // namespace lamina
