#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lamina/dtcoord.hpp"
#include "lamina/rational.hpp"
#include "lamina/surface.hpp"

// Combinatorial realization of multicurves on the standard pants
// decomposition. Every pants piece is modelled as a disk with two holes, cut
// open along one seam per hole so that the piece becomes a disk whose boundary
// is a cyclic word of segments. Curves are unions of chords in these disks
// plus twisting strands in annulus charts around the pants curves.
//
// The cut-pants disk. Slot 0 is the outer boundary, slots 1 and 2 the two
// holes. Each slot has a window, the sub-arc of its boundary circle carrying
// all strand endpoints. Seam 1 joins hole 1 to the outer boundary, seam 2
// joins hole 2; cutting along both yields a disk whose boundary reads, in the
// positive (counterclockwise) direction:
//
//     W0  R2R  W2  R2L  R1R  W1  R1L
//
// where R*L/R*R are the two copies of the seam. A point at seam parameter
// sigma on the left copy is the same surface point as sigma on the right
// copy; chords through a seam come in linked pairs. Window parameters run
// along the walk direction, so cyclic position on the disk boundary is simply
// (segment, key) with key = u for windows, sigma on left copies and 1 - sigma
// on right copies.
//
// Arc families in a pants with window weights (x0,x1,x2) of even sum:
// pairwise families nij between distinct windows and at most one same-window
// family nii (arcs returning to window i). Same-window arcs separate the
// other two boundries and are routed around hole 1 when returning to windows
// 0 or 2 (crossing seam 1) and around hole 2 when returning to window 1
// (crossing seam 2). Block layout of endpoints along each window, in walk
// order:
//
//     W0:  00B | 01 | 00A | 02
//     W1:  11B | 12 | 11A | 01
//     W2:  02 | 22A | 12 | 22B
//
// with rainbow matchings inside each family. These layouts make every
// coexisting family system chord-disjoint, which realize() verifies on every
// call.
//
// The annulus chart of pants curve i. Angular coordinate theta in R/Z, radial
// coordinate rho in [-1,1] with the left side (the lexicographically smaller
// slot) at rho = -1. A strand of a curve with weight m and twist t enters at
// theta = (j + phi)/m and leaves at theta = (j + t + phi)/m; all strands of
// one curve share the angular displacement t/m and are pairwise disjoint.
// Window parameters relate to theta by u = theta mod 1 on the left side and
// u = -theta mod 1 on the right side, which keeps the glued surface oriented.
// A curve with m = 0 and t > 0 contributes t core circles at distinct radii.
//
// The fractional offset phi keeps marks of distinct curves apart; realize_pair
// searches a deterministic candidate list until no two marks collide.

namespace lamina {

enum Seg : int { SegW0 = 0, SegR2R = 1, SegW2 = 2, SegR2L = 3, SegR1R = 4, SegW1 = 5, SegR1L = 6 };

// Cyclic position on a cut-pants disk boundary.
struct BoundaryPos {
  int seg = 0;
  Rat key;
  friend bool operator==(const BoundaryPos& a, const BoundaryPos& b) {
    return a.seg == b.seg && a.key == b.key;
  }
  friend bool operator<(const BoundaryPos& a, const BoundaryPos& b) {
    if (a.seg != b.seg) return a.seg < b.seg;
    return a.key < b.key;
  }
};

inline int window_segment(int slot) {
  return slot == 0 ? SegW0 : (slot == 1 ? SegW1 : SegW2);
}

// true iff p lies strictly inside the cyclic arc from a to b (walk direction).
bool cyclic_between(const BoundaryPos& p, const BoundaryPos& a, const BoundaryPos& b);
// true iff chords (a1,b1) and (a2,b2) cross (endpoints interleave).
bool chords_cross(const BoundaryPos& a1, const BoundaryPos& b1, const BoundaryPos& a2,
                  const BoundaryPos& b2);

// A strand endpoint on a window.
struct Mark {
  int pants = 0;
  int slot = 0;
  Rat param;  // window parameter in (0,1)
};

struct ChordEnd {
  bool on_window = true;
  int mark = -1;       // mark id when on_window
  int seam = 0;        // 1 or 2 otherwise
  bool right_copy = false;
  Rat sigma;
  int portal_link = -1;  // chord id sharing this seam point
};

struct Chord {
  int pants = 0;
  std::array<ChordEnd, 2> end;
};

struct Spiral {
  int curve = 0;
  long long strand = 0;
  Rat theta_in, theta_out;  // unreduced lifts; displacement = theta_out - theta_in
  int mark_l = -1, mark_r = -1;
};

struct CoreCircle {
  int curve = 0;
  Rat rho;
};

struct PieceRef {
  enum Kind { ChordPiece = 0, SpiralPiece = 1, CorePiece = 2 };
  int kind = 0;
  int index = 0;
  bool forward = true;  // chord end0->end1, spiral L->R
};

// A realized multicurve, or a realized properly embedded arc when open_path
// is set (used for homology probes).
struct StrandDiagram {
  const PantsDecomposition* pd = nullptr;
  DTVector source;
  Rat phi;
  bool open_path = false;

  std::vector<Mark> marks;
  std::vector<Chord> chords;
  std::vector<Spiral> spirals;
  std::vector<CoreCircle> cores;
  std::vector<std::vector<PieceRef>> cycles;  // open_path: single non-cyclic run

  BoundaryPos chord_end_pos(const ChordEnd& e) const;
};

// Canonical realization of a valid integral multicurve vector.
StrandDiagram realize(const PantsDecomposition& pd, const DTVector& v, const Rat& phi);

// Realize a and b with non-colliding marks (phi_a = 1/4, phi_b searched).
std::pair<StrandDiagram, StrandDiagram> realize_pair(const PantsDecomposition& pd,
                                                     const DTVector& a, const DTVector& b);

// Probe arc from boundary `from` to boundary `to` routed through consecutive
// chain pants, with marks offset away from those of `against`.
StrandDiagram realize_boundary_arc(const PantsDecomposition& pd, int from, int to,
                                   const StrandDiagram& against);

// All pairwise crossings between pieces of a and b, unreduced. Exact; the
// count is isotopy-invariant only mod 2.
long long raw_crossing_count(const StrandDiagram& a, const StrandDiagram& b);

// Crossings between two transversal annulus strands of the same pants curve.
long long spiral_crossing_count(const Spiral& sa, const Spiral& sb);

}  // namespace lamina
