#include "lamina/cover.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "lamina/chart.hpp"
#include "lamina/errors.hpp"

namespace lamina {

CoverSystem::CoverSystem(long long overflow_limit)
    : base_(make_surface(0, 5), overflow_limit), total_(make_surface(1, 2), overflow_limit) {}

CoverClassification CoverSystem::classify_lift(const DTVector& connected_class) const {
  DTVector c = canonicalize(connected_class);
  MulticurveClass mc = decompose_multicurve(c);
  if (mc.components.size() != 1 || mc.components[0].second != 1)
    throw InvalidVector("classify_lift expects a connected class");

  // Enclosed branch set from the homology probes: one coefficient per branch
  // boundary b0..b3 against the outer reference boundary.
  std::vector<int> cls = mod2_class(c);
  int parity = (cls[0] + cls[1] + cls[2] + cls[3]) % 2;

  // Independent route: sheet flips along the branch cuts b0-b1 and b2-b3.
  {
    PantsDecomposition pd = base_.decomposition();
    StrandDiagram dc = realize(pd, c, Rat(1, 2));
    StrandDiagram beta1 = realize_boundary_arc(pd, 0, 1, dc);
    StrandDiagram beta2 = realize_boundary_arc(pd, 2, 3, dc);
    long long flips = raw_crossing_count(dc, beta1) + raw_crossing_count(dc, beta2);
    if (flips % 2 != parity)
      throw std::logic_error("branch-cut parity disagrees with the homology probes for " +
                             c.str());
  }

  CoverClassification out;
  out.source = c;
  out.enclosed_parity = parity;
  out.lift_type = parity == 1 ? LiftType::Separating : LiftType::NonseparatingDoubled;
  return out;
}

// The lift table is the solution of the covering constraints:
//   - cores lift to cores: the first chain curve (even) lifts to two copies
//     of the handle curve, the second (odd) to the separating curve; these
//     anchors carry no twist freedom.
//   - for classes c, d with lifts of weights w_c, w_d and lifted classes
//     L(c), L(d):  w_c * w_d * I(L(c), L(d)) = 2 I(c, d). This follows from
//     deck invariance of the pairing together with the involution fixing
//     every class, which makes the two sheets' copies isotopic.
//   - a twist along an even curve lifts to the square of the twist along the
//     lifted curve; the square of a twist along the odd curve lifts to a
//     single twist. Classes related by decomposition-curve twists downstairs
//     must therefore have lifts related by the corresponding twists upstairs.
// Each candidate lift is also required to be connected with the traced strand
// counts through the lifted decomposition and the homology type of its
// parity class. A depth-first search over the pool in canonical order picks
// the lexicographically least solution; distinct solutions differ by
// composing the transfer with a homeomorphism upstairs, under which every
// verified identity is invariant.
namespace {

bool is_connected_class(const DTVector& v) {
  if (!is_valid_multicurve(v)) return false;
  if (v.is_zero()) return false;
  MulticurveClass mc = decompose_multicurve(v);
  return mc.components.size() == 1 && mc.components[0].second == 1;
}

bool is_null_mod2(const DTVector& v) {
  for (int x : mod2_class(v))
    if (x != 0) return false;
  return true;
}

}  // namespace

std::vector<DTVector> CoverSystem::lift_candidates(const DTVector& c, int parity,
                                                   long long twist_bound) const {
  long long m0 = c.weights[0].num(), m1 = c.weights[1].num();
  SurfaceKind s12 = total_.decomposition().surface;
  std::vector<DTVector> totals;
  for (long long s0 = -twist_bound; s0 <= twist_bound; ++s0)
    for (long long s1 = -twist_bound; s1 <= twist_bound; ++s1) {
      if (parity == 0) {
        DTVector half = canonicalize(
            make_vector(s12, {Rat(m0 / 2), Rat(m1)}, {Rat(s0), Rat(s1)}));
        if (!is_connected_class(half)) continue;
        if (is_null_mod2(half)) continue;  // doubled lifts are non-separating
        DTVector total = canonicalize(scale(half, 2));
        if (std::find(totals.begin(), totals.end(), total) == totals.end())
          totals.push_back(total);
      } else {
        DTVector total = canonicalize(
            make_vector(s12, {Rat(m0), Rat(2 * m1)}, {Rat(s0), Rat(s1)}));
        if (!is_connected_class(total)) continue;
        if (!is_null_mod2(total)) continue;  // connected lifts are separating
        if (std::find(totals.begin(), totals.end(), total) == totals.end())
          totals.push_back(total);
      }
    }
  std::sort(totals.begin(), totals.end());
  return totals;
}

bool CoverSystem::consistent(const DTVector& c, const DTVector& total,
                             const std::vector<DTVector>& pool,
                             const std::vector<DTVector>& assigned_totals, size_t upto,
                             long long twist_bound) const {
  for (size_t j = 0; j < upto; ++j) {
    long long down = base_.intersection(c, pool[j]);
    if (total_.intersection(total, assigned_totals[j]) != 2 * down) return false;
  }
  // twist equivariance against already assigned classes
  for (long long k = -twist_bound; k <= twist_bound; ++k) {
    if (k == 0) continue;
    DTVector twisted0 = canonicalize(twist(c, 0, k));
    DTVector twisted1 = canonicalize(twist(c, 1, 2 * k));
    for (size_t j = 0; j < upto; ++j) {
      if (pool[j] == twisted0 &&
          assigned_totals[j] != canonicalize(twist(total, 0, 2 * k)))
        return false;
      if (pool[j] == twisted1 && assigned_totals[j] != canonicalize(twist(total, 1, k)))
        return false;
    }
  }
  return true;
}

void CoverSystem::build_table(long long bound) {
  if (bound <= table_bound_) return;
  SurfaceKind s05 = base_.decomposition().surface;
  SurfaceKind s12 = total_.decomposition().surface;
  std::vector<DTVector> pool = enumerate_curves(base_.decomposition(), bound);

  // anchors
  DTVector gamma0 = unit_curve(s05, 0);
  DTVector gamma1 = unit_curve(s05, 1);
  DTVector gamma0_total = canonicalize(scale(unit_curve(s12, 0), 2));
  DTVector gamma1_total = unit_curve(s12, 1);

  std::vector<int> parities(pool.size());
  for (size_t i = 0; i < pool.size(); ++i)
    parities[i] = classify_lift(pool[i]).enclosed_parity;

  const long long twist_bound = bound + 2;
  std::vector<std::vector<DTVector>> candidates(pool.size());
  for (size_t i = 0; i < pool.size(); ++i) {
    if (pool[i] == gamma0)
      candidates[i] = {gamma0_total};
    else if (pool[i] == gamma1)
      candidates[i] = {gamma1_total};
    else
      candidates[i] = lift_candidates(pool[i], parities[i], twist_bound);
    if (candidates[i].empty())
      throw std::logic_error("no lift candidate for " + pool[i].str());
  }

  std::vector<DTVector> assigned(pool.size(), zero_vector(s12));
  std::function<bool(size_t)> dfs = [&](size_t i) -> bool {
    if (i == pool.size()) return true;
    for (const DTVector& total : candidates[i]) {
      if (!consistent(pool[i], total, pool, assigned, i, twist_bound)) continue;
      assigned[i] = total;
      if (dfs(i + 1)) return true;
    }
    return false;
  };
  if (!dfs(0))
    throw std::logic_error("covering constraints admit no lift table at bound " +
                           std::to_string(bound));

  entries_.clear();
  for (size_t i = 0; i < pool.size(); ++i) {
    LiftEntry e;
    e.source = pool[i];
    e.parity = parities[i];
    e.type = parities[i] == 1 ? LiftType::Separating : LiftType::NonseparatingDoubled;
    e.total = assigned[i];
    if (e.type == LiftType::Separating) {
      e.weight = 1;
      e.lift_class = e.total;
    } else {
      e.weight = 2;
      MulticurveClass up = decompose_multicurve(e.total);
      if (up.components.size() != 1 || up.components[0].second != 2)
        throw std::logic_error("even lift is not two parallel copies: " + e.total.str());
      e.lift_class = up.components[0].first;
    }
    // strand counts through the lifted decomposition
    long long m0 = pool[i].weights[0].num(), m1 = pool[i].weights[1].num();
    if (total_.intersection(e.total, unit_curve(s12, 0)) != m0 ||
        total_.intersection(e.total, unit_curve(s12, 1)) != 2 * m1)
      throw std::logic_error("lift of " + pool[i].str() + " has wrong weights upstairs");
    entries_.push_back(std::move(e));
  }
  table_bound_ = bound;
}

const LiftEntry& CoverSystem::lookup(const DTVector& connected_class) const {
  DTVector c = canonicalize(connected_class);
  for (const LiftEntry& e : entries_)
    if (e.source == c) return e;
  throw LiftTableMiss("class " + c.str() + " is outside the lift table bound " +
                      std::to_string(table_bound_) + "; rebuild the table with a larger bound");
}

DTVector CoverSystem::transfer(const DTVector& multicurve) const {
  DTVector m = canonicalize(multicurve);
  if (auto viol = validate_integral(m)) throw InvalidVector("transfer: " + viol->message);
  SurfaceKind s12 = total_.decomposition().surface;
  DTVector out = zero_vector(s12);
  if (m.is_zero()) return out;
  for (const auto& [cls, mult] : decompose_multicurve(m).components)
    out = add(out, scale(lookup(cls).total, mult));
  return canonicalize(out);
}

std::string CoverSystem::table_to_json() const {
  std::ostringstream os;
  os << "{\"schema_version\":1,\"base\":\"0,5\",\"total\":\"1,2\",\"bound\":" << table_bound_
     << ",\"entries\":[";
  for (size_t i = 0; i < entries_.size(); ++i) {
    const LiftEntry& e = entries_[i];
    if (i) os << ",";
    auto vec = [](const DTVector& v) {
      std::string s = "{\"weights\":[";
      for (int j = 0; j < v.curve_count(); ++j)
        s += (j ? "," : "") + v.weights[j].str();
      s += "],\"twists\":[";
      for (int j = 0; j < v.curve_count(); ++j)
        s += (j ? "," : "") + v.twists[j].str();
      return s + "]}";
    };
    os << "{\"source\":" << vec(e.source) << ",\"parity\":" << e.parity << ",\"type\":\""
       << (e.type == LiftType::Separating ? "separating" : "nonseparating_doubled")
       << "\",\"weight\":" << e.weight << ",\"lift\":" << vec(e.lift_class) << "}";
  }
  os << "]}";
  return os.str();
}

ScalingReport verify_cover_scaling(const CoverSystem& cover, const std::vector<DTVector>& pool) {
  ScalingReport report;
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i; j < pool.size(); ++j) {
      long long down = cover.base().intersection(pool[i], pool[j]);
      long long up =
          cover.total().intersection(cover.transfer(pool[i]), cover.transfer(pool[j]));
      ++report.pairs;
      if (up != 2 * down) {
        ++report.violations;
        if (report.first_violation.empty())
          report.first_violation = pool[i].str() + " vs " + pool[j].str() + ": downstairs " +
                                   std::to_string(down) + ", upstairs " + std::to_string(up);
      }
    }
  return report;
}

Rat lambda_factor(LiftType in, LiftType out) {
  if (in == out) return Rat(1);
  if (in == LiftType::Separating && out == LiftType::NonseparatingDoubled) return Rat(2);
  return Rat(1, 2);
}

}  // namespace lamina
