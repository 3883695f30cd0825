#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamina/isect.hpp"
#include "lamina/rational.hpp"

namespace lamina {

// The branched double cover of the disc with four branch points, presented as
// a transfer from curves on the five-holed sphere (four branch boundaries
// b0..b3 plus the outer boundary b4) to measured laminations on the two-holed
// torus. A curve enclosing an odd number of branch points has a connected
// preimage, a single separating curve of weight one; an even curve lifts to
// two parallel copies of a non-separating curve.
//
// Model: two sheets of the chain model of the five-holed sphere, cut along a
// branch arc from b0 to b1 and one from b2 to b3, glued crosswise. The lifted
// decomposition is the standard one upstairs: the preimage of the first chain
// curve is the pair of handle-curve copies, the preimage of the second double
// covers the separating curve. The lift table is computed as the solution of
// the covering constraints these facts impose (see cover.cpp); the transfer
// is canonical only up to composing with a homeomorphism upstairs, and every
// verified identity is invariant under that choice.

enum class LiftType { Separating, NonseparatingDoubled };

struct CoverClassification {
  DTVector source;
  int enclosed_parity = 0;  // branch points enclosed, mod 2
  LiftType lift_type = LiftType::NonseparatingDoubled;
};

struct LiftEntry {
  DTVector source;      // connected class downstairs
  int parity = 0;
  LiftType type = LiftType::NonseparatingDoubled;
  DTVector lift_class;  // connected class upstairs
  int weight = 2;       // 1 for separating lifts, 2 for doubled ones
  DTVector total;       // weight * lift_class
};

class CoverSystem {
 public:
  CoverSystem(long long overflow_limit = 1000000);

  const IntersectionOracle& base() const { return base_; }     // five-holed sphere
  const IntersectionOracle& total() const { return total_; }   // two-holed torus

  CoverClassification classify_lift(const DTVector& connected_class) const;

  // Build (or extend) the lift table for every connected class up to bound.
  void build_table(long long bound);
  long long table_bound() const { return table_bound_; }
  const std::vector<LiftEntry>& table() const { return entries_; }
  const LiftEntry& lookup(const DTVector& connected_class) const;

  // Componentwise transfer of a multicurve, additive over multiplicities.
  DTVector transfer(const DTVector& multicurve) const;

  std::string table_to_json() const;

 private:
  std::vector<DTVector> lift_candidates(const DTVector& c, int parity,
                                        long long twist_bound) const;
  bool consistent(const DTVector& c, const DTVector& total, const std::vector<DTVector>& pool,
                  const std::vector<DTVector>& assigned_totals, size_t upto,
                  long long twist_bound) const;

  IntersectionOracle base_;
  IntersectionOracle total_;
  long long table_bound_ = 0;
  std::vector<LiftEntry> entries_;
};

struct ScalingReport {
  long long pairs = 0;
  long long violations = 0;
  std::string first_violation;
};

// I(p(m1), p(m2)) = 2 I(m1, m2) over all unordered pool pairs.
ScalingReport verify_cover_scaling(const CoverSystem& cover, const std::vector<DTVector>& pool);

Rat lambda_factor(LiftType in, LiftType out);

}  // namespace lamina
