#include "lamina/surface.hpp"

#include <algorithm>
#include <numeric>

namespace lamina {

std::string SurfaceKind::str() const {
  return "Sigma_{" + std::to_string(genus) + "," + std::to_string(boundary_count) + "}";
}

SurfaceKind make_surface(int genus, int boundary_count) {
  if (genus < 0 || boundary_count < 0)
    throw std::invalid_argument("genus and boundary count must be non-negative");
  SurfaceKind s{genus, boundary_count};
  if (s.euler_characteristic() >= 0)
    throw NonHyperbolicSurface("surface " + s.str() + " has non-negative Euler characteristic " +
                               std::to_string(s.euler_characteristic()));
  return s;
}

int ml_dimension(const SurfaceKind& s) { return s.ml_dimension(); }

SlotUse PantsDecomposition::slot_use(const SlotRef& s) const {
  for (int i = 0; i < curve_count(); ++i) {
    if (curve_ends[i].first == s) return SlotUse{SlotUse::Glued, i, true, -1};
    if (curve_ends[i].second == s) return SlotUse{SlotUse::Glued, i, false, -1};
  }
  for (int b = 0; b < static_cast<int>(outer.size()); ++b)
    if (outer[b] == s) return SlotUse{SlotUse::Outer, -1, false, b};
  throw std::logic_error("slot not accounted for in decomposition");
}

int PantsDecomposition::curve_at(const SlotRef& s) const {
  for (int i = 0; i < curve_count(); ++i)
    if (curve_ends[i].first == s || curve_ends[i].second == s) return i;
  return -1;
}

PantsDecomposition standard_pants_decomposition(const SurfaceKind& s) {
  if (s.euler_characteristic() >= 0)
    throw NonHyperbolicSurface("no decomposition: " + s.str() + " is not hyperbolic");
  if (s.pants_curve_count() == 0)
    throw NoPantsCurve(s.str() + " has no pants curve (three-holed sphere)");

  PantsDecomposition pd;
  pd.surface = s;
  pd.pants = s.pants_count();
  const int n = pd.pants;

  std::vector<std::pair<SlotRef, SlotRef>> gluings;
  for (int i = 0; i + 1 < n; ++i) gluings.push_back({SlotRef{i, 2}, SlotRef{i + 1, 0}});

  // Free slots in lexicographic order.
  std::vector<SlotRef> free_slots;
  free_slots.push_back(SlotRef{0, 0});
  free_slots.push_back(SlotRef{0, 1});
  for (int i = 1; i + 1 < n; ++i) free_slots.push_back(SlotRef{i, 1});
  if (n > 1) {
    free_slots.push_back(SlotRef{n - 1, 1});
    free_slots.push_back(SlotRef{n - 1, 2});
  } else {
    free_slots.push_back(SlotRef{0, 2});
  }
  std::sort(free_slots.begin(), free_slots.end());

  for (int h = 0; h < s.genus; ++h)
    gluings.push_back({free_slots[2 * h], free_slots[2 * h + 1]});
  for (int b = 0; b < s.boundary_count; ++b)
    pd.outer.push_back(free_slots[2 * s.genus + b]);

  // Canonical curve order: by the smaller end of each gluing.
  for (auto& g : gluings)
    if (g.second < g.first) std::swap(g.first, g.second);
  std::sort(gluings.begin(), gluings.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  pd.curve_ends = std::move(gluings);
  return pd;
}

std::optional<std::string> validate_decomposition(const PantsDecomposition& pd) {
  const SurfaceKind& s = pd.surface;
  if (pd.pants != s.pants_count()) return "pants count mismatch";
  const int k = s.pants_curve_count();
  if (pd.curve_count() != k) return "pants curve count mismatch";
  if (static_cast<int>(pd.outer.size()) != s.boundary_count) return "outer slot count mismatch";
  if (s.ml_dimension() != 2 * k) return "dimension bookkeeping mismatch";

  // Every slot used exactly once; gluing fixed-point-free.
  std::vector<int> seen(pd.pants * 3, 0);
  auto mark = [&](const SlotRef& r) -> std::optional<std::string> {
    if (r.pants < 0 || r.pants >= pd.pants || r.slot < 0 || r.slot > 2)
      return "slot reference out of range";
    if (seen[r.pants * 3 + r.slot]++) return "slot used twice";
    return std::nullopt;
  };
  for (const auto& e : pd.curve_ends) {
    if (e.first == e.second) return "gluing fixes a slot";
    if (auto err = mark(e.first)) return err;
    if (auto err = mark(e.second)) return err;
  }
  for (const auto& o : pd.outer)
    if (auto err = mark(o)) return err;
  for (int v : seen)
    if (v != 1) return "uncovered slot";

  // Connectivity of the pants adjacency multigraph.
  std::vector<int> parent(pd.pants);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : pd.curve_ends) parent[find(e.first.pants)] = find(e.second.pants);
  for (int p = 0; p < pd.pants; ++p)
    if (find(p) != find(0)) return "pants adjacency graph is disconnected";

  // Euler characteristic and boundary reconstruction: gluing circles are
  // interior, each pants contributes chi = -1, each outer slot one boundary
  // circle.
  int chi = -pd.pants;
  if (chi != s.euler_characteristic()) return "Euler characteristic mismatch on regluing";
  int boundary = static_cast<int>(pd.outer.size());
  if (boundary != s.boundary_count) return "boundary tracing mismatch";
  int genus2 = 2 - boundary - chi;  // 2g = 2 - r - chi
  if (genus2 % 2 != 0 || genus2 / 2 != s.genus) return "genus reconstruction mismatch";
  return std::nullopt;
}

}  // namespace lamina
