#include "lamina/dtcoord.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "lamina/chart.hpp"
#include "lamina/errors.hpp"

namespace lamina {

bool DTVector::is_integral() const {
  for (const Rat& r : weights)
    if (!r.is_integer()) return false;
  for (const Rat& r : twists)
    if (!r.is_integer()) return false;
  return true;
}

bool DTVector::is_zero() const {
  for (const Rat& r : weights)
    if (!r.is_zero()) return false;
  for (const Rat& r : twists)
    if (!r.is_zero()) return false;
  return true;
}

long long DTVector::norm() const {
  long long n = 0;
  for (const Rat& r : weights) n += r.num();
  for (const Rat& r : twists) n += r.abs().num();
  return n;
}

bool operator<(const DTVector& a, const DTVector& b) {
  if (!(a.surface == b.surface)) return a.surface < b.surface;
  long long na = a.is_integral() ? a.norm() : 0;
  long long nb = b.is_integral() ? b.norm() : 0;
  if (a.is_integral() && b.is_integral() && na != nb) return na < nb;
  if (a.weights != b.weights)
    return std::lexicographical_compare(a.weights.begin(), a.weights.end(), b.weights.begin(),
                                        b.weights.end());
  return std::lexicographical_compare(a.twists.begin(), a.twists.end(), b.twists.begin(),
                                      b.twists.end());
}

std::string DTVector::str() const {
  std::string s = "(";
  for (int i = 0; i < curve_count(); ++i) {
    if (i) s += "; ";
    s += weights[i].str() + "," + twists[i].str();
  }
  return s + ")";
}

DTVector make_vector(const SurfaceKind& s, std::vector<Rat> weights, std::vector<Rat> twists) {
  int k = s.pants_curve_count();
  if (static_cast<int>(weights.size()) != k || static_cast<int>(twists.size()) != k)
    throw InvalidVector("expected " + std::to_string(k) + " coordinate pairs for " + s.str());
  DTVector v;
  v.surface = s;
  v.weights = std::move(weights);
  v.twists = std::move(twists);
  return v;
}

DTVector zero_vector(const SurfaceKind& s) {
  DTVector v;
  v.surface = s;
  v.weights.assign(s.pants_curve_count(), Rat(0));
  v.twists.assign(s.pants_curve_count(), Rat(0));
  return v;
}

DTVector unit_curve(const SurfaceKind& s, int curve) {
  DTVector v = zero_vector(s);
  if (curve < 0 || curve >= s.pants_curve_count())
    throw IndexOutOfRange("pants curve index " + std::to_string(curve));
  v.twists[curve] = Rat(1);
  return v;
}

DTVector scale(const DTVector& v, long long k) {
  if (k < 0) throw std::invalid_argument("scaling by a negative integer");
  DTVector r = v;
  for (Rat& w : r.weights) w *= Rat(k);
  for (Rat& t : r.twists) t *= Rat(k);
  return canonicalize(r);
}

DTVector add(const DTVector& a, const DTVector& b) {
  if (!(a.surface == b.surface)) throw InvalidVector("adding vectors on different surfaces");
  DTVector r = a;
  for (int i = 0; i < r.curve_count(); ++i) {
    r.weights[i] += b.weights[i];
    r.twists[i] += b.twists[i];
  }
  return r;
}

std::optional<Violation> validate_integral(const DTVector& v) {
  for (int i = 0; i < v.curve_count(); ++i) {
    if (!v.weights[i].is_integer())
      return Violation{Violation::NonIntegralWeight, i,
                       "weight m_" + std::to_string(i) + " = " + v.weights[i].str() +
                           " is not an integer"};
    if (!v.twists[i].is_integer())
      return Violation{Violation::NonIntegralTwist, i,
                       "twist t_" + std::to_string(i) + " = " + v.twists[i].str() +
                           " is not an integer"};
  }
  for (int i = 0; i < v.curve_count(); ++i)
    if (v.weights[i].sign() < 0)
      return Violation{Violation::NegativeWeight, i,
                       "weight m_" + std::to_string(i) + " is negative"};
  for (int i = 0; i < v.curve_count(); ++i)
    if (v.weights[i].is_zero() && v.twists[i].sign() < 0)
      return Violation{Violation::FoldingViolation, i,
                       "m_" + std::to_string(i) + " = 0 requires t_" + std::to_string(i) +
                           " >= 0 in canonical form"};
  PantsDecomposition pd = standard_pants_decomposition(v.surface);
  for (int p = 0; p < pd.pants; ++p) {
    long long sum = 0;
    for (int s = 0; s < 3; ++s) {
      int c = pd.curve_at(SlotRef{p, s});
      if (c >= 0) sum += v.weights[c].num();
    }
    if (sum % 2 != 0)
      return Violation{Violation::ParityViolation, p,
                       "pants " + std::to_string(p) + " sees odd slot weight sum " +
                           std::to_string(sum)};
  }
  return std::nullopt;
}

bool is_valid_multicurve(const DTVector& v) { return !validate_integral(v).has_value(); }

DTVector canonicalize(const DTVector& v) {
  DTVector r = v;
  for (int i = 0; i < r.curve_count(); ++i)
    if (r.weights[i].is_zero()) r.twists[i] = r.twists[i].abs();
  return r;
}

DTVector twist(const DTVector& v, int curve, long long k) {
  if (curve < 0 || curve >= v.curve_count())
    throw IndexOutOfRange("twist: pants curve index " + std::to_string(curve));
  DTVector r = v;
  r.twists[curve] += Rat(k) * r.weights[curve];
  return canonicalize(r);
}

Rat coordinate_intersection(const DTVector& v, int curve) {
  if (curve < 0 || curve >= v.curve_count())
    throw IndexOutOfRange("coordinate_intersection: index " + std::to_string(curve));
  return v.weights[curve];
}

long long MulticurveClass::total_components() const {
  long long n = 0;
  for (const auto& [c, mult] : components) n += mult;
  return n;
}

MulticurveClass decompose_multicurve(const DTVector& v) {
  if (auto viol = validate_integral(v)) throw InvalidVector("decompose: " + viol->message);
  PantsDecomposition pd = standard_pants_decomposition(v.surface);
  DTVector cv = canonicalize(v);
  std::map<DTVector, long long> classes;

  if (!cv.is_zero()) {
    StrandDiagram d = realize(pd, cv, Rat(1, 2));
    for (const auto& cycle : d.cycles) {
      if (cycle.size() == 1 && cycle[0].kind == PieceRef::CorePiece) {
        classes[unit_curve(cv.surface, d.cores[cycle[0].index].curve)] += 1;
        continue;
      }
      DTVector comp = zero_vector(cv.surface);
      for (const PieceRef& pr : cycle) {
        if (pr.kind != PieceRef::SpiralPiece) continue;
        const Spiral& sp = d.spirals[pr.index];
        long long m = cv.weights[sp.curve].num();
        long long t = cv.twists[sp.curve].num();
        comp.weights[sp.curve] += Rat(1);
        comp.twists[sp.curve] += Rat(floor_div(sp.strand + t, m));
      }
      classes[canonicalize(comp)] += 1;
    }
  }

  MulticurveClass mc;
  for (const auto& [c, mult] : classes) mc.components.push_back({c, mult});
  std::sort(mc.components.begin(), mc.components.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  // Reassembly invariant.
  DTVector sum = zero_vector(cv.surface);
  for (const auto& [c, mult] : mc.components) sum = add(sum, scale(c, mult));
  if (canonicalize(sum) != cv)
    throw std::logic_error("decomposition failed to reassemble " + cv.str());
  return mc;
}

std::vector<DTVector> enumerate_multicurves(const PantsDecomposition& pd, long long bound) {
  std::vector<DTVector> out;
  const int k = pd.curve_count();
  DTVector v = zero_vector(pd.surface);
  std::function<void(int, long long)> rec = [&](int i, long long budget) {
    if (i == k) {
      if (is_valid_multicurve(v)) out.push_back(v);
      return;
    }
    for (long long m = 0; m <= budget; ++m) {
      v.weights[i] = Rat(m);
      long long tmin = m == 0 ? 0 : -(budget - m);
      for (long long t = tmin; t <= budget - m; ++t) {
        v.twists[i] = Rat(t);
        rec(i + 1, budget - m - (t < 0 ? -t : t));
      }
    }
    v.weights[i] = Rat(0);
    v.twists[i] = Rat(0);
  };
  rec(0, bound);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DTVector> enumerate_curves(const PantsDecomposition& pd, long long bound) {
  if (bound < 1) throw std::invalid_argument("enumeration bound must be >= 1");
  std::vector<DTVector> out;
  for (const DTVector& v : enumerate_multicurves(pd, bound)) {
    if (v.is_zero()) continue;
    MulticurveClass mc = decompose_multicurve(v);
    if (mc.components.size() == 1 && mc.components[0].second == 1) {
      if (mc.components[0].first != v)
        throw std::logic_error("connected class decomposed to a different vector");
      out.push_back(v);
    }
  }
  return out;  // already in canonical order
}

namespace {

bool is_chain_curve(const PantsDecomposition& pd, int i) {
  const auto& [a, b] = pd.curve_ends[i];
  return a.slot == 2 && b.slot == 0 && b.pants == a.pants + 1;
}

int chain_curve_between(const PantsDecomposition& pd, int p) {
  for (int i = 0; i < pd.curve_count(); ++i)
    if (pd.curve_ends[i].first == SlotRef{p, 2} && pd.curve_ends[i].second == SlotRef{p + 1, 0})
      return i;
  throw std::logic_error("missing chain curve after pants " + std::to_string(p));
}

// A curve meeting handle curve h exactly once, closing up through the chain.
DTVector handle_dual(const PantsDecomposition& pd, int h) {
  DTVector v = zero_vector(pd.surface);
  v.weights[h] = Rat(1);
  const auto& [a, b] = pd.curve_ends[h];
  for (int p = a.pants; p < b.pants; ++p) v.weights[chain_curve_between(pd, p)] = Rat(1);
  if (auto viol = validate_integral(v))
    throw std::logic_error("handle dual invalid: " + viol->message);
  return v;
}

}  // namespace

std::vector<int> mod2_class(const DTVector& v) {
  if (auto viol = validate_integral(v)) throw InvalidVector("mod2_class: " + viol->message);
  PantsDecomposition pd = standard_pants_decomposition(v.surface);
  DTVector cv = canonicalize(v);
  const int r = v.surface.boundary_count;
  std::vector<int> out;

  StrandDiagram dv = realize(pd, cv, Rat(1, 2));
  for (int b = 0; b + 1 < r; ++b) {
    StrandDiagram arc = realize_boundary_arc(pd, b, r - 1, dv);
    out.push_back(static_cast<int>(raw_crossing_count(dv, arc) % 2));
  }
  for (int i = 0; i < pd.curve_count(); ++i) {
    if (is_chain_curve(pd, i)) continue;
    DTVector dual = handle_dual(pd, i);
    auto [da, db] = realize_pair(pd, cv, dual);
    out.push_back(static_cast<int>(raw_crossing_count(da, db) % 2));
    out.push_back(static_cast<int>(cv.weights[i].num() % 2));
  }
  return out;
}

}  // namespace lamina
