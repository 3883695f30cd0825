#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lamina/errors.hpp"

namespace lamina {

// Compact orientable surface of genus g with r boundary components,
// restricted to negative Euler characteristic.
struct SurfaceKind {
  int genus = 0;
  int boundary_count = 0;

  int euler_characteristic() const { return 2 - 2 * genus - boundary_count; }
  int ml_dimension() const { return 6 * genus - 6 + 2 * boundary_count; }
  int pants_curve_count() const { return 3 * genus - 3 + boundary_count; }
  int pants_count() const { return 2 * genus - 2 + boundary_count; }

  friend bool operator==(const SurfaceKind& a, const SurfaceKind& b) {
    return a.genus == b.genus && a.boundary_count == b.boundary_count;
  }
  friend bool operator<(const SurfaceKind& a, const SurfaceKind& b) {
    if (a.genus != b.genus) return a.genus < b.genus;
    return a.boundary_count < b.boundary_count;
  }
  std::string str() const;
};

SurfaceKind make_surface(int genus, int boundary_count);
int ml_dimension(const SurfaceKind& s);

// A boundary slot of a pants piece: pants index and slot in {0,1,2}.
struct SlotRef {
  int pants = 0;
  int slot = 0;
  friend bool operator==(const SlotRef& a, const SlotRef& b) {
    return a.pants == b.pants && a.slot == b.slot;
  }
  friend bool operator<(const SlotRef& a, const SlotRef& b) {
    if (a.pants != b.pants) return a.pants < b.pants;
    return a.slot < b.slot;
  }
};

// What a slot is attached to.
struct SlotUse {
  enum Kind { Glued, Outer } kind = Outer;
  int curve = -1;     // pants-curve index when Glued
  bool left = false;  // true when this slot is the lexicographically smaller end
  int boundary = -1;  // surface boundary index when Outer
};

// A pants decomposition: 2g-2+r pants pieces, a fixed-point-free pairing on
// 2K slots labelled by pants-curve indices, and the remaining r slots assigned
// to surface boundary components.
//
// The standard decomposition is a linear chain of pants p0..p_{N-1} with
// consecutive gluings p_i.slot2 <-> p_{i+1}.slot0.  The remaining free slots,
// ordered lexicographically, are paired up front-to-back to create the g
// handles; the last r free slots become the surface boundary components in
// order.  Pants curves are numbered by the lexicographic position of their
// smaller slot.
struct PantsDecomposition {
  SurfaceKind surface;
  int pants = 0;
  // curve i glues ends[i].first (left side) to ends[i].second (right side).
  std::vector<std::pair<SlotRef, SlotRef>> curve_ends;
  // boundary b lives at outer[b].
  std::vector<SlotRef> outer;

  int curve_count() const { return static_cast<int>(curve_ends.size()); }
  SlotUse slot_use(const SlotRef& s) const;
  // Pants-curve index whose side sits at slot s, or -1 for outer slots.
  int curve_at(const SlotRef& s) const;
};

PantsDecomposition standard_pants_decomposition(const SurfaceKind& s);

// Structural validation: slot counts, fixed-point-freeness, connectivity of
// the pants adjacency multigraph, and Euler/boundary reconstruction of the
// declared surface. Returns an explanation for the first failed check.
std::optional<std::string> validate_decomposition(const PantsDecomposition& pd);

}  // namespace lamina
