#include "lamina/diagram.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "lamina/errors.hpp"

// Bigon removal with honest disk certificates. The superimposed diagram is a
// four-valent graph on the surface; a two-sided face circuit is removable only
// when it bounds an embedded disk. On a surface with boundary a two-circuit
// can just as well bound an annulus around a boundary component, so the code
// refines the chart decomposition into disks, computes every complementary
// region's exact Euler characteristic, and certifies chi = 1 with no boundary
// arc before smoothing a bigon away. Region data survives removals: smoothing
// a bigon merges the bigon's region with the two quadrant regions at its
// corners, and the Euler characteristic of the merge is additive minus one
// per gate.

namespace lamina {

namespace {

struct RotEntry {
  int side = 0;           // 0 = first curve, 1 = second
  bool toward_end1 = false;  // direction along the underlying piece
};

struct Vec2 {
  Rat x, y;
  Vec2 neg() const { return Vec2{-x, -y}; }
};

int half_plane(const Vec2& v) {
  if (v.y > Rat(0) || (v.y == Rat(0) && v.x > Rat(0))) return 0;
  return 1;
}

Rat cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

bool angle_less(const Vec2& a, const Vec2& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross2(a, b) > Rat(0);
}

struct Crossing {
  bool alive = true;
  std::array<RotEntry, 4> rot;                  // counterclockwise
  std::array<int, 2> piece_kind{0, 0};          // PieceRef kind per side
  std::array<int, 2> piece_index{0, 0};
  std::array<Rat, 2> along;                     // s on spirals, theta on cores
  std::array<std::array<BoundaryPos, 2>, 2> chord_ends;  // chord crossings only
  Rat theta;                                    // annulus crossings only
  // filled while flattening cycles:
  std::array<int, 2> cycle{-1, -1};
  std::array<int, 2> pos{-1, -1};
  std::array<bool, 2> piece_forward{true, true};
};

struct PieceKey {
  int side, kind, index;
  bool operator<(const PieceKey& o) const {
    return std::tie(side, kind, index) < std::tie(o.side, o.kind, o.index);
  }
};

// ---------------------------------------------------------------------------
// Crossing collection
// ---------------------------------------------------------------------------

struct Diagram {
  const StrandDiagram* d[2];
  std::vector<Crossing> crossings;
  std::map<PieceKey, std::vector<int>> piece_crossings;

  void add_chord_chord(int ia, int ib) {
    const Chord& ca = d[0]->chords[ia];
    const Chord& cb = d[1]->chords[ib];
    BoundaryPos p = d[0]->chord_end_pos(ca.end[0]);
    BoundaryPos q = d[0]->chord_end_pos(ca.end[1]);
    BoundaryPos r = d[1]->chord_end_pos(cb.end[0]);
    BoundaryPos s = d[1]->chord_end_pos(cb.end[1]);
    if (!chords_cross(p, q, r, s)) return;
    Crossing c;
    std::array<std::pair<BoundaryPos, RotEntry>, 4> ends = {
        std::make_pair(p, RotEntry{0, false}), std::make_pair(q, RotEntry{0, true}),
        std::make_pair(r, RotEntry{1, false}), std::make_pair(s, RotEntry{1, true})};
    std::sort(ends.begin(), ends.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (int i = 0; i < 4; ++i) c.rot[i] = ends[i].second;
    c.piece_kind = {PieceRef::ChordPiece, PieceRef::ChordPiece};
    c.piece_index = {ia, ib};
    c.chord_ends[0] = {p, q};
    c.chord_ends[1] = {r, s};
    push(c, ia, ib);
  }

  void add_annulus(const Vec2& va, const Vec2& vb, int kind_a, int idx_a, int kind_b, int idx_b,
                   const Rat& along_a, const Rat& along_b, const Rat& theta) {
    Crossing c;
    std::array<std::pair<Vec2, RotEntry>, 4> dirs = {
        std::make_pair(va, RotEntry{0, true}), std::make_pair(va.neg(), RotEntry{0, false}),
        std::make_pair(vb, RotEntry{1, true}), std::make_pair(vb.neg(), RotEntry{1, false})};
    std::sort(dirs.begin(), dirs.end(),
              [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
    for (int i = 0; i < 4; ++i) c.rot[i] = dirs[i].second;
    c.piece_kind = {kind_a, kind_b};
    c.piece_index = {idx_a, idx_b};
    c.along = {along_a, along_b};
    c.theta = theta;
    push(c, idx_a, idx_b);
  }

  void push(const Crossing& c, int ia, int ib) {
    int id = static_cast<int>(crossings.size());
    crossings.push_back(c);
    piece_crossings[PieceKey{0, c.piece_kind[0], ia}].push_back(id);
    piece_crossings[PieceKey{1, c.piece_kind[1], ib}].push_back(id);
  }

  void collect() {
    for (size_t ia = 0; ia < d[0]->chords.size(); ++ia)
      for (size_t ib = 0; ib < d[1]->chords.size(); ++ib)
        if (d[0]->chords[ia].pants == d[1]->chords[ib].pants)
          add_chord_chord(static_cast<int>(ia), static_cast<int>(ib));
    for (size_t ia = 0; ia < d[0]->spirals.size(); ++ia) {
      const Spiral& sa = d[0]->spirals[ia];
      Rat da = sa.theta_out - sa.theta_in;
      for (size_t ib = 0; ib < d[1]->spirals.size(); ++ib) {
        const Spiral& sb = d[1]->spirals[ib];
        if (sa.curve != sb.curve) continue;
        Rat db = sb.theta_out - sb.theta_in;
        Rat delta = db - da;
        if (delta.is_zero()) continue;
        Rat c0 = sb.theta_in - sa.theta_in;
        Rat x = -c0, y = -c0 - delta;
        if (y < x) std::swap(x, y);
        for (long long kk = x.floor() + 1; kk <= y.ceil() - 1; ++kk) {
          if (!(x < Rat(kk) && Rat(kk) < y)) continue;
          Rat s = (c0 + Rat(kk)) / (-delta);
          Rat theta = sa.theta_in + da * s;
          add_annulus(Vec2{da, Rat(2)}, Vec2{db, Rat(2)}, PieceRef::SpiralPiece,
                      static_cast<int>(ia), PieceRef::SpiralPiece, static_cast<int>(ib), s, s,
                      theta);
        }
      }
      for (size_t ic = 0; ic < d[1]->cores.size(); ++ic) {
        const CoreCircle& co = d[1]->cores[ic];
        if (sa.curve != co.curve) continue;
        Rat s = (co.rho + Rat(1)) / Rat(2);
        Rat theta = sa.theta_in + da * s;
        add_annulus(Vec2{da, Rat(2)}, Vec2{Rat(1), Rat(0)}, PieceRef::SpiralPiece,
                    static_cast<int>(ia), PieceRef::CorePiece, static_cast<int>(ic), s,
                    theta.frac(), theta);
      }
    }
    for (size_t ic = 0; ic < d[0]->cores.size(); ++ic) {
      const CoreCircle& co = d[0]->cores[ic];
      for (size_t ib = 0; ib < d[1]->spirals.size(); ++ib) {
        const Spiral& sb = d[1]->spirals[ib];
        if (co.curve != sb.curve) continue;
        Rat db = sb.theta_out - sb.theta_in;
        Rat s = (co.rho + Rat(1)) / Rat(2);
        Rat theta = sb.theta_in + db * s;
        add_annulus(Vec2{Rat(1), Rat(0)}, Vec2{db, Rat(2)}, PieceRef::CorePiece,
                    static_cast<int>(ic), PieceRef::SpiralPiece, static_cast<int>(ib),
                    theta.frac(), s, theta);
      }
    }
  }

  // Nesting order of the crossings along each piece, then flattened cycles.
  std::array<std::vector<std::vector<int>>, 2> sequences;

  void sort_piece(int side, const PieceKey& key, std::vector<int>& ids) {
    if (key.kind == PieceRef::ChordPiece) {
      const Chord& ch = d[side]->chords[key.index];
      BoundaryPos from = d[side]->chord_end_pos(ch.end[0]);
      auto arc_containing = [&](int id) -> std::array<BoundaryPos, 2> {
        const auto& other = crossings[id].chord_ends[1 - side];
        if (cyclic_between(from, other[0], other[1])) return {other[0], other[1]};
        return {other[1], other[0]};
      };
      std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        auto aa = arc_containing(a);
        auto ab = arc_containing(b);
        return cyclic_between(aa[0], ab[0], ab[1]) && cyclic_between(aa[1], ab[0], ab[1]);
      });
    } else {
      std::sort(ids.begin(), ids.end(),
                [&](int a, int b) { return crossings[a].along[side] < crossings[b].along[side]; });
    }
  }

  void build_sequences() {
    for (auto& [key, ids] : piece_crossings) sort_piece(key.side, key, ids);
    for (int side = 0; side < 2; ++side) {
      for (const auto& cyc : d[side]->cycles) {
        std::vector<int> seq;
        for (const PieceRef& pr : cyc) {
          auto it = piece_crossings.find(PieceKey{side, pr.kind, pr.index});
          if (it == piece_crossings.end()) continue;
          std::vector<int> ids = it->second;
          if (!pr.forward) std::reverse(ids.begin(), ids.end());
          for (int id : ids) {
            crossings[id].piece_forward[side] = pr.forward;
            seq.push_back(id);
          }
        }
        if (seq.empty()) continue;
        int cyc_id = static_cast<int>(sequences[side].size());
        for (size_t i = 0; i < seq.size(); ++i) {
          crossings[seq[i]].cycle[side] = cyc_id;
          crossings[seq[i]].pos[side] = static_cast<int>(i);
        }
        sequences[side].push_back(std::move(seq));
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Refined arrangement: every chart cut into a disk, curve pieces subdivided,
// local planar faces traced, then glued into the complementary regions of the
// curve diagram with exact Euler characteristics.
// ---------------------------------------------------------------------------

// Global cell keys. Rationals enter as (num, den).
using Key = std::tuple<int, long long, long long, long long, long long, long long, long long>;

enum KeyKind {
  KV_CROSS = 1,
  KV_MARK,
  KV_SEAM,
  KV_CUT,
  KV_FOOT,  // (pants, which: 0 outer, 1 hole1, 2 hole2)
  KE_CSEG,
  KE_WIN,
  KE_SEAMARC,
  KE_CUTARC,
  KE_BDRY
};

Key kv_cross(int id) { return {KV_CROSS, id, 0, 0, 0, 0, 0}; }
Key kv_mark(int side, int id) { return {KV_MARK, side, id, 0, 0, 0, 0}; }
Key kv_seam(int pants, int seam, const Rat& sg) {
  return {KV_SEAM, pants, seam, sg.num(), sg.den(), 0, 0};
}
Key kv_cut(int curve, const Rat& rho) { return {KV_CUT, curve, rho.num(), rho.den(), 0, 0, 0}; }
Key kv_foot(int pants, int which) { return {KV_FOOT, pants, which, 0, 0, 0, 0}; }
Key ke_cseg(int side, int kind, int index, int seg) {
  return {KE_CSEG, side, kind, index, seg, 0, 0};
}
Key ke_win(int curve, int side_r, const Rat& lo, const Rat& hi) {
  return {KE_WIN, curve, side_r, lo.num(), lo.den(), hi.num(), hi.den()};
}
Key ke_seamarc(int pants, int seam, const Rat& lo, const Rat& hi) {
  return {KE_SEAMARC, pants * 4 + seam, lo.num(), lo.den(), hi.num(), hi.den(), 0};
}
Key ke_cutarc(int curve, const Rat& lo, const Rat& hi) {
  return {KE_CUTARC, curve, lo.num(), lo.den(), hi.num(), hi.den(), 0};
}
Key ke_bdry(int pants, int slot, int idx) { return {KE_BDRY, pants, slot, idx, 0, 0, 0}; }

// Local half-edge complex of one disk chart.
struct LocalComplex {
  struct Node {          // local vertex
    Key global;
    std::vector<int> rot;  // counterclockwise dart ids
  };
  struct EdgeRec {
    Key global;
    bool is_curve = false;
    bool is_surface_boundary = false;
    int n0 = 0, n1 = 0;  // local node ids
    // crossing-corner bookkeeping for curve edges at crossing endpoints:
    // dart 2e = n0->n1, dart 2e+1 = n1->n0.
  };
  std::vector<Node> nodes;
  std::vector<EdgeRec> edges;

  int add_node(const Key& k) {
    nodes.push_back(Node{k, {}});
    return static_cast<int>(nodes.size()) - 1;
  }
  int add_edge(const Key& k, bool curve, bool sb, int a, int b) {
    edges.push_back(EdgeRec{k, curve, sb, a, b});
    return static_cast<int>(edges.size()) - 1;
  }
  int dart(int e, bool from_n0) const { return 2 * e + (from_n0 ? 0 : 1); }
  int edge_of(int d) const { return d / 2; }
  int tail(int d) const { return d % 2 == 0 ? edges[d / 2].n0 : edges[d / 2].n1; }
  int head(int d) const { return d % 2 == 0 ? edges[d / 2].n1 : edges[d / 2].n0; }
  int twin(int d) const { return d ^ 1; }
};

struct FaceInfo {
  std::set<Key> verts, edges;
  std::vector<Key> glue_arcs;     // scaffold arcs with partners
  bool touches_surface_boundary = false;
  std::vector<std::pair<int, int>> corners;  // (crossing id, rot slot)
};

// Trace the interior faces of one disk chart. boundary_darts lists the
// counterclockwise boundary darts; the orbit through their twins is the
// outside of the disk and is dropped.
void trace_local_faces(const LocalComplex& lc, const std::vector<int>& ccw_boundary_darts,
                       const std::map<int, std::pair<int, int>>& node_corner_base,
                       std::vector<FaceInfo>& out) {
  // Faces are traced counterclockwise: next(d) = rot_prev(twin(d)). The
  // corner passed at a crossing sits between rotation slots j and j+1 where
  // j+1 is the slot of the dart pointing back along the incoming edge.
  int nd = static_cast<int>(lc.edges.size()) * 2;
  std::vector<int> rot_prev(nd, -1);
  for (const auto& node : lc.nodes) {
    int k = static_cast<int>(node.rot.size());
    for (int i = 0; i < k; ++i) rot_prev[node.rot[i]] = node.rot[(i + k - 1) % k];
  }
  std::set<int> outside;
  for (int d : ccw_boundary_darts) outside.insert(lc.twin(d));
  std::vector<bool> seen(nd, false);
  for (int d0 = 0; d0 < nd; ++d0) {
    if (seen[d0]) continue;
    std::vector<int> orbit;
    int d = d0;
    do {
      seen[d] = true;
      orbit.push_back(d);
      d = rot_prev[lc.twin(d)];
      if (d < 0) throw std::logic_error("dangling dart in local complex");
    } while (d != d0);
    bool is_outside = false;
    for (int x : orbit)
      if (outside.count(x)) is_outside = true;
    if (is_outside) continue;
    FaceInfo f;
    for (int x : orbit) {
      const auto& e = lc.edges[lc.edge_of(x)];
      f.edges.insert(e.global);
      f.verts.insert(lc.nodes[e.n0].global);
      f.verts.insert(lc.nodes[e.n1].global);
      if (!e.is_curve) {
        if (e.is_surface_boundary)
          f.touches_surface_boundary = true;
        else
          f.glue_arcs.push_back(e.global);
      }
      int h = lc.head(x);
      auto it = node_corner_base.find(h);
      if (it != node_corner_base.end()) {
        int back = lc.twin(x);
        const auto& rot = lc.nodes[h].rot;
        for (int i = 0; i < 4; ++i)
          if (rot[i] == back) f.corners.push_back({it->second.first, (i + 3) % 4});
      }
    }
    out.push_back(std::move(f));
  }
}

struct RegionData {
  std::vector<int> parent;
  std::vector<long long> chi;
  std::vector<char> bad;  // touches the surface boundary

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent[b] = a;
    chi[a] += chi[b];
    bad[a] = bad[a] || bad[b];
  }
};

struct Arrangement {
  // corner (4 per crossing) -> initial region id
  std::vector<int> corner_region;
  RegionData regions;

  int region_of_corner(int crossing, int slot) { return regions.find(corner_region[4 * crossing + slot]); }
};

// The crossing rotation slots at an annulus crossing correspond to geometric
// directions; at a chord crossing to the four chord ends. The local complexes
// need to attach subsegment darts to those slots, which is resolved through
// (side, toward_end1) matching.
int rot_slot_of(const Crossing& c, int side, bool toward_end1) {
  for (int i = 0; i < 4; ++i)
    if (c.rot[i].side == side && c.rot[i].toward_end1 == toward_end1) return i;
  throw std::logic_error("missing rotation slot");
}

struct ArrangementBuilder {
  const Diagram& dg;
  const PantsDecomposition& pd;
  std::vector<FaceInfo> faces;

  explicit ArrangementBuilder(const Diagram& d) : dg(d), pd(*d.d[0]->pd) {}

  const StrandDiagram& real(int side) const { return *dg.d[side]; }

  // ---- pants charts ----

  struct BNode {  // boundary node of the cut-pants disk
    BoundaryPos pos;
    Key global;
    int chord = -1;  // chord id (encoded side*big + idx) with an end here
    int chord_side = -1;
    int chord_end = -1;
  };

  void build_pants_chart(int p) {
    LocalComplex lc;
    std::map<int, std::pair<int, int>> corner_base;  // local node -> (crossing, base)

    // Boundary nodes in cyclic walk order.
    std::vector<BNode> bnodes;
    auto foot_key = [&](int seg) {
      switch (seg) {
        case SegW0:
        case SegR2R:
        case SegR1R:
          return kv_foot(p, 0);
        case SegW2:
        case SegR2L:
          return kv_foot(p, 2);
        default:
          return kv_foot(p, 1);  // SegW1, SegR1L
      }
    };
    for (int seg = 0; seg < 7; ++seg) {
      BNode junction;
      junction.pos = BoundaryPos{seg, Rat(0)};
      junction.global = foot_key(seg);
      bnodes.push_back(junction);
      for (int side = 0; side < 2; ++side) {
        const StrandDiagram& sd = real(side);
        if (seg == SegW0 || seg == SegW1 || seg == SegW2) {
          int slot = seg == SegW0 ? 0 : (seg == SegW1 ? 1 : 2);
          for (size_t m = 0; m < sd.marks.size(); ++m) {
            if (sd.marks[m].pants != p || sd.marks[m].slot != slot) continue;
            BNode n;
            n.pos = BoundaryPos{seg, sd.marks[m].param};
            n.global = kv_mark(side, static_cast<int>(m));
            bnodes.push_back(n);
          }
        } else {
          int seam = (seg == SegR1R || seg == SegR1L) ? 1 : 2;
          bool right = (seg == SegR1R || seg == SegR2R);
          for (size_t c = 0; c < sd.chords.size(); ++c) {
            if (sd.chords[c].pants != p) continue;
            for (int e = 0; e < 2; ++e) {
              const ChordEnd& ce = sd.chords[c].end[e];
              if (ce.on_window || ce.seam != seam || ce.right_copy != right) continue;
              BNode n;
              n.pos = sd.chord_end_pos(ce);
              n.global = kv_seam(p, seam, ce.sigma);
              bnodes.push_back(n);
            }
          }
        }
      }
    }
    std::sort(bnodes.begin(), bnodes.end(),
              [](const BNode& a, const BNode& b) { return a.pos < b.pos; });

    std::vector<int> node_ids;
    std::map<std::pair<int, std::pair<long long, long long>>, int> node_at_pos;
    for (const auto& bn : bnodes) {
      int id = lc.add_node(bn.global);
      node_ids.push_back(id);
      node_at_pos[{bn.pos.seg, {bn.pos.key.num(), bn.pos.key.den()}}] = id;
    }

    // Interior crossing nodes.
    std::map<int, int> cross_node;  // crossing id -> local node
    for (const auto& [pk, ids] : dg.piece_crossings) {
      if (pk.kind != PieceRef::ChordPiece) continue;
      if (real(pk.side).chords[pk.index].pants != p) continue;
      for (int id : ids)
        if (!cross_node.count(id)) {
          int n = lc.add_node(kv_cross(id));
          cross_node[id] = n;
          corner_base[n] = {id, 0};
        }
    }

    // Boundary arcs between consecutive nodes, with gluing keys.
    int nb = static_cast<int>(bnodes.size());
    std::vector<int> ccw_darts;
    auto window_arc_key = [&](int slot, const Rat& u_lo, const Rat& u_hi) -> std::pair<Key, bool> {
      SlotUse use = pd.slot_use(SlotRef{p, slot});
      if (use.kind == SlotUse::Outer) return {Key{}, false};
      // left side: theta = -u mod 1; right side: theta = u.
      Rat lo, hi;
      if (use.left) {
        lo = u_hi == Rat(1) ? Rat(0) : (Rat(1) - u_hi);
        hi = u_lo.is_zero() ? Rat(1) : (Rat(1) - u_lo);
      } else {
        lo = u_lo;
        hi = u_hi;
      }
      return {ke_win(use.curve, use.left ? 0 : 1, lo, hi), true};
    };
    int bdry_idx = 0;
    for (int i = 0; i < nb; ++i) {
      const BNode& a = bnodes[i];
      const BNode& b = bnodes[(i + 1) % nb];
      int na = node_ids[i], nbid = node_ids[(i + 1) % nb];
      int seg = a.pos.seg;
      Key k;
      bool sb = false;
      if (seg == SegW0 || seg == SegW1 || seg == SegW2) {
        int slot = seg == SegW0 ? 0 : (seg == SegW1 ? 1 : 2);
        Rat u_lo = a.pos.key;
        Rat u_hi = (b.pos.seg == seg) ? b.pos.key : Rat(1);
        auto [kk, glued] = window_arc_key(slot, u_lo, u_hi);
        if (glued) {
          k = kk;
        } else {
          k = ke_bdry(p, slot, bdry_idx++);
          sb = true;
        }
      } else {
        int seam = (seg == SegR1R || seg == SegR1L) ? 1 : 2;
        // walk key: right copies descend sigma, left copies ascend.
        auto sigma_of = [&](const BoundaryPos& pos, int s) {
          if (pos.seg != s) return (s == SegR1R || s == SegR2R) ? Rat(0) : Rat(1);
          return (s == SegR1R || s == SegR2R) ? Rat(1) - pos.key : pos.key;
        };
        Rat s_a = sigma_of(a.pos, seg);
        Rat s_b = b.pos.seg == seg ? sigma_of(b.pos, seg)
                                   : ((seg == SegR1R || seg == SegR2R) ? Rat(0) : Rat(1));
        Rat lo = s_a < s_b ? s_a : s_b;
        Rat hi = s_a < s_b ? s_b : s_a;
        k = ke_seamarc(p, seam, lo, hi);
      }
      int e = lc.add_edge(k, false, sb, na, nbid);
      ccw_darts.push_back(lc.dart(e, true));
    }

    // Chord segments, subdivided at crossings in nesting order.
    for (int side = 0; side < 2; ++side) {
      const StrandDiagram& sd = real(side);
      for (size_t ci = 0; ci < sd.chords.size(); ++ci) {
        if (sd.chords[ci].pants != p) continue;
        BoundaryPos p0 = sd.chord_end_pos(sd.chords[ci].end[0]);
        BoundaryPos p1 = sd.chord_end_pos(sd.chords[ci].end[1]);
        int n_start = node_at_pos.at({p0.seg, {p0.key.num(), p0.key.den()}});
        int n_end = node_at_pos.at({p1.seg, {p1.key.num(), p1.key.den()}});
        std::vector<int> ids;
        auto it = dg.piece_crossings.find(PieceKey{side, PieceRef::ChordPiece, (int)ci});
        if (it != dg.piece_crossings.end()) ids = it->second;  // already sorted from end0
        std::vector<int> chain;
        chain.push_back(n_start);
        for (int id : ids) chain.push_back(cross_node.at(id));
        chain.push_back(n_end);
        int nseg = static_cast<int>(chain.size()) - 1;
        std::vector<int> edge_ids;
        for (int si = 0; si < nseg; ++si)
          edge_ids.push_back(lc.add_edge(ke_cseg(side, PieceRef::ChordPiece, (int)ci, si), true,
                                         false, chain[si], chain[si + 1]));
        // attach rotation slots
        for (size_t xi = 0; xi < ids.size(); ++xi) {
          int id = ids[xi];
          int n = cross_node.at(id);
          auto& rot = lc.nodes[n].rot;
          if (rot.empty()) rot.assign(4, -1);
          int toward0 = lc.dart(edge_ids[xi], false);        // back along segment xi
          int toward1 = lc.dart(edge_ids[xi + 1], true);     // onward
          rot[rot_slot_of(dg.crossings[id], side, false)] = toward0;
          rot[rot_slot_of(dg.crossings[id], side, true)] = toward1;
        }
        // boundary-node rotations get the chord darts later via pending list
        pending_node_dart.push_back({n_start, lc.dart(edge_ids.front(), true)});
        pending_node_dart.push_back({n_end, lc.dart(edge_ids.back(), false)});
      }
    }

    finish_chart(lc, ccw_darts, corner_base);
  }

  // ---- annulus charts ----

  void build_annulus_chart(int curve) {
    LocalComplex lc;
    std::map<int, std::pair<int, int>> corner_base;

    SlotRef ls = pd.curve_ends[curve].first;
    SlotRef rs = pd.curve_ends[curve].second;
    auto foot_of_slot = [&](const SlotRef& s) { return kv_foot(s.pants, s.slot); };

    // Events along each strand: crossings and cut points (theta through an
    // integer). Cores cross the cut exactly once.
    struct StrandEvents {
      int side;
      int kind;
      int index;
      std::vector<std::pair<Rat, int>> events;  // (s, crossing id) or (s, -1-k) for cut k
      std::vector<Rat> cut_rho;                 // radial positions of cut points, in s order
    };

    std::vector<StrandEvents> strands;
    for (int side = 0; side < 2; ++side) {
      const StrandDiagram& sd = real(side);
      for (size_t si = 0; si < sd.spirals.size(); ++si) {
        if (sd.spirals[si].curve != curve) continue;
        StrandEvents ev;
        ev.side = side;
        ev.kind = PieceRef::SpiralPiece;
        ev.index = static_cast<int>(si);
        auto it = dg.piece_crossings.find(PieceKey{side, PieceRef::SpiralPiece, (int)si});
        if (it != dg.piece_crossings.end())
          for (int id : it->second) ev.events.push_back({dg.crossings[id].along[side], id});
        const Spiral& sp = sd.spirals[si];
        Rat delta = sp.theta_out - sp.theta_in;
        if (!delta.is_zero()) {
          long long klo = delta.sign() > 0 ? sp.theta_in.floor() + 1 : sp.theta_out.floor() + 1;
          long long khi = delta.sign() > 0 ? sp.theta_out.ceil() - 1 : sp.theta_in.ceil() - 1;
          for (long long kk = klo; kk <= khi; ++kk) {
            Rat s = (Rat(kk) - sp.theta_in) / delta;
            if (!(Rat(0) < s && s < Rat(1))) continue;
            ev.events.push_back({s, -1});
          }
        }
        std::sort(ev.events.begin(), ev.events.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [s, id] : ev.events)
          if (id == -1) ev.cut_rho.push_back(Rat(2) * s - Rat(1));
        strands.push_back(std::move(ev));
      }
      for (size_t ci = 0; ci < sd.cores.size(); ++ci) {
        if (sd.cores[ci].curve != curve) continue;
        StrandEvents ev;
        ev.side = side;
        ev.kind = PieceRef::CorePiece;
        ev.index = static_cast<int>(ci);
        auto it = dg.piece_crossings.find(PieceKey{side, PieceRef::CorePiece, (int)ci});
        if (it != dg.piece_crossings.end())
          for (int id : it->second) ev.events.push_back({dg.crossings[id].along[side], id});
        std::sort(ev.events.begin(), ev.events.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        strands.push_back(std::move(ev));
      }
    }

    // Boundary of the cut-annulus rectangle, counterclockwise:
    // bottom = left-side circle theta 0->1, right = cut rho -1->1,
    // top = right-side circle theta 1->0, left = cut rho 1->-1.
    struct RNode {
      int order_seg;  // 0 bottom, 1 right, 2 top, 3 left
      Rat key;        // position along the walk within the segment
      Key global;
      int local = -1;
    };
    std::vector<RNode> rnodes;
    auto push_rnode = [&](int seg, const Rat& key, const Key& g) {
      rnodes.push_back(RNode{seg, key, g, -1});
    };
    push_rnode(0, Rat(0), foot_of_slot(ls));   // corner (0,-1)
    push_rnode(1, Rat(-1), foot_of_slot(ls));  // corner (1,-1): same surface point
    push_rnode(2, Rat(0), foot_of_slot(rs));   // corner (1,1); top walk key = 1 - theta
    push_rnode(3, Rat(-1), foot_of_slot(rs));  // corner (0,1); left walk key = -rho

    // marks: bottom keyed by theta; top keyed by 1 - theta (walk direction).
    for (int side = 0; side < 2; ++side) {
      const StrandDiagram& sd = real(side);
      for (size_t si = 0; si < sd.spirals.size(); ++si) {
        if (sd.spirals[si].curve != curve) continue;
        push_rnode(0, sd.spirals[si].theta_in.frac(), kv_mark(side, sd.spirals[si].mark_l));
        push_rnode(2, Rat(1) - sd.spirals[si].theta_out.frac(),
                   kv_mark(side, sd.spirals[si].mark_r));
      }
    }
    // cut points on right (rho ascending) and left (rho descending; key -rho)
    std::set<std::pair<long long, long long>> cut_rhos;
    for (const auto& st : strands) {
      if (st.kind == PieceRef::SpiralPiece)
        for (const Rat& rho : st.cut_rho) cut_rhos.insert({rho.num(), rho.den()});
      else
        cut_rhos.insert({real(st.side).cores[st.index].rho.num(),
                         real(st.side).cores[st.index].rho.den()});
    }
    for (const auto& [n, dn] : cut_rhos) {
      Rat rho(n, dn);
      push_rnode(1, rho, kv_cut(curve, rho));
      push_rnode(3, -rho, kv_cut(curve, rho));
    }

    std::sort(rnodes.begin(), rnodes.end(), [](const RNode& a, const RNode& b) {
      if (a.order_seg != b.order_seg) return a.order_seg < b.order_seg;
      return a.key < b.key;
    });
    std::map<Key, std::vector<int>> node_by_key;
    for (auto& rn : rnodes) {
      rn.local = lc.add_node(rn.global);
      node_by_key[rn.global].push_back(rn.local);
    }

    // crossing nodes
    std::map<int, int> cross_node;
    for (const auto& st : strands) {
      for (const auto& [s, id] : st.events) {
        if (id < 0) continue;
        if (!cross_node.count(id)) {
          int n = lc.add_node(kv_cross(id));
          cross_node[id] = n;
          corner_base[n] = {id, 0};
        }
      }
    }

    // boundary arcs
    int nb = static_cast<int>(rnodes.size());
    std::vector<int> ccw_darts;
    for (int i = 0; i < nb; ++i) {
      const RNode& a = rnodes[i];
      const RNode& b = rnodes[(i + 1) % nb];
      Key k;
      if (a.order_seg == 0 && b.order_seg == 0)
        k = ke_win(curve, 0, a.key, b.key);
      else if (a.order_seg == 0)
        k = ke_win(curve, 0, a.key, Rat(1));
      else if (a.order_seg == 2 && b.order_seg == 2)
        k = ke_win(curve, 1, Rat(1) - b.key, Rat(1) - a.key);
      else if (a.order_seg == 2)
        k = ke_win(curve, 1, Rat(0), Rat(1) - a.key);
      else if (a.order_seg == 1) {
        Rat lo = a.key;
        Rat hi = (b.order_seg == 1) ? b.key : Rat(1);
        k = ke_cutarc(curve, lo, hi);
      } else {  // order_seg 3: left cut edge, key = -rho
        Rat hi = -a.key;
        Rat lo = (b.order_seg == 3) ? -b.key : Rat(-1);
        k = ke_cutarc(curve, lo, hi);
      }
      // segment transitions at corners: arcs from the corner node itself
      if (a.order_seg == 1 && b.order_seg == 2) k = ke_cutarc(curve, a.key, Rat(1));
      if (a.order_seg == 3 && b.order_seg == 0) k = ke_cutarc(curve, Rat(-1), -a.key);
      int e = lc.add_edge(k, false, false, a.local, b.local);
      ccw_darts.push_back(lc.dart(e, true));
    }

    // Strand segments. A strand leaving through one copy of the cut re-enters
    // through the other; the two copies are distinct local nodes with one
    // global key. node_by_key lists the right-edge copy first.
    for (const auto& st : strands) {
      const StrandDiagram& sd = real(st.side);
      std::vector<int> chain;               // node sequence
      std::vector<bool> joined;             // joined[i]: segment between i and i+1
      std::vector<int> event_ids;           // crossing id per interior chain node, -1 for cuts
      auto cut_nodes = [&](const Rat& rho) { return node_by_key.at(kv_cut(curve, rho)); };
      if (st.kind == PieceRef::SpiralPiece) {
        const Spiral& sp = sd.spirals[st.index];
        bool increasing = (sp.theta_out - sp.theta_in).sign() > 0;
        chain.push_back(node_by_key.at(kv_mark(st.side, sp.mark_l)).front());
        int cut_seen = 0;
        for (const auto& [s, id] : st.events) {
          if (id >= 0) {
            joined.push_back(true);
            chain.push_back(cross_node.at(id));
            event_ids.push_back(id);
          } else {
            const auto& copies = cut_nodes(st.cut_rho[cut_seen++]);
            int exit_copy = increasing ? copies[0] : copies[1];
            int enter_copy = increasing ? copies[1] : copies[0];
            joined.push_back(true);
            chain.push_back(exit_copy);
            event_ids.push_back(-1);
            joined.push_back(false);  // identification, not a segment
            chain.push_back(enter_copy);
            event_ids.push_back(-1);
          }
        }
        joined.push_back(true);
        chain.push_back(node_by_key.at(kv_mark(st.side, sp.mark_r)).front());
      } else {
        const CoreCircle& co = sd.cores[st.index];
        const auto& copies = cut_nodes(co.rho);
        chain.push_back(copies[1]);  // left copy, start of the theta run
        for (const auto& [s, id] : st.events) {
          joined.push_back(true);
          chain.push_back(cross_node.at(id));
          event_ids.push_back(id);
        }
        joined.push_back(true);
        chain.push_back(copies[0]);
      }
      // create segments
      int n = static_cast<int>(chain.size());
      std::vector<int> seg_before(n, -1), seg_after(n, -1);
      int seg_counter = 0;
      for (int i = 0; i + 1 < n; ++i) {
        if (!joined[i]) continue;
        int e = lc.add_edge(ke_cseg(st.side, st.kind, st.index, seg_counter++), true, false,
                            chain[i], chain[i + 1]);
        seg_after[i] = e;
        seg_before[i + 1] = e;
      }
      // rotations at crossings, pending darts at boundary nodes
      for (int i = 0; i < n; ++i) {
        bool endpoint = (i == 0 || i == n - 1);
        int id = endpoint ? -1 : event_ids[i - 1];
        if (id >= 0) {
          int node = cross_node.at(id);
          auto& rot = lc.nodes[node].rot;
          if (rot.empty()) rot.assign(4, -1);
          rot[rot_slot_of(dg.crossings[id], st.side, false)] = lc.dart(seg_before[i], false);
          rot[rot_slot_of(dg.crossings[id], st.side, true)] = lc.dart(seg_after[i], true);
        } else {
          if (seg_before[i] >= 0)
            pending_node_dart.push_back({chain[i], lc.dart(seg_before[i], false)});
          if (seg_after[i] >= 0)
            pending_node_dart.push_back({chain[i], lc.dart(seg_after[i], true)});
        }
      }
    }

    finish_chart(lc, ccw_darts, corner_base);
  }

  // ---- shared finishing: boundary-node rotations, face trace ----

  std::vector<std::pair<int, int>> pending_node_dart;  // (local node, interior dart)

  void finish_chart(LocalComplex& lc, const std::vector<int>& ccw_darts,
                    const std::map<int, std::pair<int, int>>& corner_base) {
    // boundary rotations: (forward arc, interior darts..., backward arc)
    std::vector<int> fwd(lc.nodes.size(), -1), bwd(lc.nodes.size(), -1);
    for (int d : ccw_darts) {
      fwd[lc.tail(d)] = d;
      bwd[lc.head(d)] = lc.twin(d);
    }
    std::vector<std::vector<int>> interior(lc.nodes.size());
    for (auto& [n, d] : pending_node_dart) interior[n].push_back(d);
    pending_node_dart.clear();

    for (size_t n = 0; n < lc.nodes.size(); ++n) {
      if (!lc.nodes[n].rot.empty()) continue;  // crossings already set
      if (fwd[n] < 0) throw std::logic_error("interior node without rotation");
      auto& rot = lc.nodes[n].rot;
      rot.push_back(fwd[n]);
      // at most two interior darts per boundary node (a cut point has two
      // strand segments; marks and seam points have one).
      if (interior[n].size() > 2) throw std::logic_error("boundary node of unexpected degree");
      // order interior darts so the face trace stays planar: at a cut point
      // the two strand subsegments continue each other; either order of the
      // two darts between the boundary arcs is consistent because the strand
      // passes straight through (it separates the two arcs). For a single
      // dart there is nothing to order.
      for (int d : interior[n]) rot.push_back(d);
      rot.push_back(bwd[n]);
    }
    for (size_t n = 0; n < lc.nodes.size(); ++n)
      for (int d : lc.nodes[n].rot)
        if (d < 0) throw std::logic_error("unfilled rotation slot");
    trace_local_faces(lc, ccw_darts, corner_base, faces);
  }

  Arrangement assemble(int expected_chi) {
    for (int p = 0; p < pd.pants; ++p) build_pants_chart(p);
    for (int c = 0; c < pd.curve_count(); ++c) build_annulus_chart(c);

    // glue faces into regions across scaffold arcs
    Arrangement arr;
    int nf = static_cast<int>(faces.size());
    arr.regions.parent.resize(nf);
    arr.regions.chi.assign(nf, 0);
    arr.regions.bad.assign(nf, 0);
    for (int i = 0; i < nf; ++i) arr.regions.parent[i] = i;

    std::map<Key, std::vector<int>> by_arc;
    for (int i = 0; i < nf; ++i)
      for (const Key& k : faces[i].glue_arcs) by_arc[k].push_back(i);
    for (const auto& [k, fs] : by_arc) {
      if (fs.size() != 2)
        throw std::logic_error(
            "scaffold arc not glued exactly twice: kind " +
            std::to_string(std::get<0>(k)) + " [" + std::to_string(std::get<1>(k)) + "," +
            std::to_string(std::get<2>(k)) + "," + std::to_string(std::get<3>(k)) + "," +
            std::to_string(std::get<4>(k)) + "," + std::to_string(std::get<5>(k)) +
            "] count " + std::to_string(fs.size()));
      arr.regions.unite(fs[0], fs[1]);
    }

    // region Euler characteristics via global cell sets
    std::map<int, std::set<Key>> rv, re;
    std::map<int, long long> rf;
    for (int i = 0; i < nf; ++i) {
      int r = arr.regions.find(i);
      rv[r].insert(faces[i].verts.begin(), faces[i].verts.end());
      re[r].insert(faces[i].edges.begin(), faces[i].edges.end());
      rf[r] += 1;
      if (faces[i].touches_surface_boundary) arr.regions.bad[r] = 1;
    }
    for (auto& [r, verts] : rv)
      arr.regions.chi[r] = static_cast<long long>(verts.size()) -
                           static_cast<long long>(re[r].size()) + rf[r];

    // global sanity: V - E + F over the whole complex equals chi(surface)
    std::set<Key> all_v, all_e;
    for (int i = 0; i < nf; ++i) {
      all_v.insert(faces[i].verts.begin(), faces[i].verts.end());
      all_e.insert(faces[i].edges.begin(), faces[i].edges.end());
    }
    long long total = static_cast<long long>(all_v.size()) -
                      static_cast<long long>(all_e.size()) + nf;
    if (total != expected_chi)
      throw std::logic_error("arrangement Euler characteristic mismatch: got " +
                             std::to_string(total) + " expected " + std::to_string(expected_chi));

#ifdef LAMINA_DIAGRAM_DEBUG
    for (int i = 0; i < nf; ++i) {
      printf("face %d (region %d, chi-root %lld, bad %d): corners", i, arr.regions.find(i),
             arr.regions.chi[arr.regions.find(i)], (int)arr.regions.bad[arr.regions.find(i)]);
      for (auto& [x, s] : faces[i].corners) printf(" (X%d,%d)", x, s);
      printf(" | arcs");
      for (auto& k : faces[i].glue_arcs)
        printf(" [%lld %lld %lld %lld/%lld %lld/%lld]", (long long)std::get<0>(k), std::get<1>(k),
               std::get<2>(k), std::get<3>(k), std::get<4>(k), std::get<5>(k), std::get<6>(k));
      printf("%s\n", faces[i].touches_surface_boundary ? " BDRY" : "");
    }
#endif
    // corner -> region
    arr.corner_region.assign(4 * dg.crossings.size(), -1);
    for (int i = 0; i < nf; ++i)
      for (const auto& [x, slot] : faces[i].corners) {
        int& cell = arr.corner_region[4 * x + slot];
        if (cell != -1 && arr.regions.find(cell) != arr.regions.find(i))
          throw std::logic_error("corner assigned to two regions");
        cell = i;
      }
    for (size_t i = 0; i < arr.corner_region.size(); ++i)
      if (arr.corner_region[i] < 0) throw std::logic_error("corner without region");
    return arr;
  }
};

// ---------------------------------------------------------------------------
// Reduction
// ---------------------------------------------------------------------------

struct Reducer {
  Diagram& dg;
  Arrangement arr;
  std::array<std::vector<std::vector<int>>, 2> seqs;

  Reducer(Diagram& d, Arrangement a) : dg(d), arr(std::move(a)) {}

  void rebuild() {
    for (int side = 0; side < 2; ++side) {
      seqs[side].clear();
      for (const auto& m : dg.sequences[side]) {
        std::vector<int> s;
        for (int id : m)
          if (dg.crossings[id].alive) s.push_back(id);
        if (s.empty()) continue;
        int cyc = static_cast<int>(seqs[side].size());
        for (size_t i = 0; i < s.size(); ++i) {
          dg.crossings[s[i]].cycle[side] = cyc;
          dg.crossings[s[i]].pos[side] = static_cast<int>(i);
        }
        seqs[side].push_back(std::move(s));
      }
    }
  }

  struct Dart {
    int x = -1, slot = -1;
    bool operator==(const Dart& o) const { return x == o.x && slot == o.slot; }
  };

  int neighbor(int x, int side, bool forward) const {
    const auto& s = seqs[side][dg.crossings[x].cycle[side]];
    int n = static_cast<int>(s.size());
    int p = dg.crossings[x].pos[side];
    return s[(p + (forward ? 1 : n - 1)) % n];
  }

  Dart twin(const Dart& dart) const {
    const Crossing& c = dg.crossings[dart.x];
    RotEntry re = c.rot[dart.slot];
    bool toward_next = re.toward_end1 == c.piece_forward[re.side];
    int y = neighbor(dart.x, re.side, toward_next);
    const Crossing& cy = dg.crossings[y];
    for (int s = 0; s < 4; ++s) {
      const RotEntry& ry = cy.rot[s];
      if (ry.side != re.side) continue;
      bool tn = ry.toward_end1 == cy.piece_forward[ry.side];
      if (tn != toward_next) return Dart{y, s};
    }
    throw std::logic_error("twin dart not found");
  }

  // returns true when a certified bigon was removed
  bool remove_one_bigon() {
    bool any_alive = false;
    for (const Crossing& c : dg.crossings)
      if (c.alive) any_alive = true;
    if (!any_alive) return false;

    // trace all circuits; group by region
    std::vector<std::array<bool, 4>> seen(dg.crossings.size(), {false, false, false, false});
    std::vector<std::vector<Dart>> circuits;
    std::vector<int> circuit_region;
    std::map<int, int> circuits_per_region;
    for (size_t x = 0; x < dg.crossings.size(); ++x) {
      if (!dg.crossings[x].alive) continue;
      for (int s0 = 0; s0 < 4; ++s0) {
        if (seen[x][s0]) continue;
        std::vector<Dart> orbit;
        Dart d{static_cast<int>(x), s0};
        int region = -1;
        do {
          seen[d.x][d.slot] = true;
          orbit.push_back(d);
          Dart t = twin(d);
          // counterclockwise trace: turn through corner (t.x, t.slot - 1)
          int corner = (t.slot + 3) % 4;
          int r = arr.region_of_corner(t.x, corner);
          if (region == -1) region = r;
          if (r != region)
            throw std::logic_error("circuit visits two regions: crossing " +
                                   std::to_string(t.x) + " corner " + std::to_string(corner) +
                                   " region " + std::to_string(r) + " vs " +
                                   std::to_string(region) + " (orbit len " +
                                   std::to_string(orbit.size()) + ")");
          d = Dart{t.x, corner};
        } while (!(d == orbit.front()));
        circuits.push_back(orbit);
        circuit_region.push_back(region);
        circuits_per_region[region] += 1;
      }
    }

    for (size_t ci = 0; ci < circuits.size(); ++ci) {
      const auto& orbit = circuits[ci];
      if (orbit.size() != 2) continue;
      if (orbit[0].x == orbit[1].x) continue;
      int region = circuit_region[ci];
      if (arr.regions.chi[region] != 1) continue;
      if (arr.regions.bad[region]) continue;
      if (circuits_per_region[region] != 1) continue;

      // certified bigon: corners at the two crossings
      int u = orbit[0].x, v = orbit[1].x;
      Dart t0 = twin(orbit[0]);  // corner at v side
      Dart t1 = twin(orbit[1]);  // corner at u side
      int corner_v = (t0.slot + 3) % 4, corner_u = (t1.slot + 3) % 4;
      if (t0.x != v || t1.x != u) throw std::logic_error("bigon corners misidentified");
      int w = arr.region_of_corner(u, (corner_u + 2) % 4);
      int e = arr.region_of_corner(v, (corner_v + 2) % 4);
      long long chi_w = arr.regions.chi[arr.regions.find(w)];
      long long chi_e = arr.regions.chi[arr.regions.find(e)];
      bool same = arr.regions.find(w) == arr.regions.find(e);
      long long merged_chi = same ? chi_w - 1 : chi_w + chi_e - 1;
      arr.regions.unite(region, w);
      arr.regions.unite(region, e);
      int root = arr.regions.find(region);
      arr.regions.chi[root] = merged_chi;
      dg.crossings[u].alive = false;
      dg.crossings[v].alive = false;
      return true;
    }
    return false;
  }
};

}  // namespace

namespace {
#ifdef LAMINA_DIAGRAM_DEBUG
void debug_dump(const Diagram& dg, const Arrangement& arr) {
  auto kindname = [](int k) {
    return k == PieceRef::ChordPiece ? "chord" : (k == PieceRef::SpiralPiece ? "spiral" : "core");
  };
  for (size_t i = 0; i < dg.crossings.size(); ++i) {
    const auto& c = dg.crossings[i];
    printf("X%zu: a=%s%d b=%s%d rot=[", i, kindname(c.piece_kind[0]), c.piece_index[0],
           kindname(c.piece_kind[1]), c.piece_index[1]);
    for (int s = 0; s < 4; ++s)
      printf("(%d,%c)", c.rot[s].side, c.rot[s].toward_end1 ? '+' : '-');
    printf("] corners=[");
    Arrangement& a2 = const_cast<Arrangement&>(arr);
    for (int s = 0; s < 4; ++s) printf("%d ", a2.region_of_corner((int)i, s));
    printf("]\n");
  }
  for (int side = 0; side < 2; ++side) {
    printf("side %d cycles:", side);
    for (const auto& s : dg.sequences[side]) {
      printf(" [");
      for (int id : s) printf("X%d ", id);
      printf("]");
    }
    printf("\n");
  }
}
#endif
}  // namespace

ReductionStats reduced_intersection(const StrandDiagram& a, const StrandDiagram& b,
                                    long long overflow_limit) {
  if (a.open_path || b.open_path)
    throw std::invalid_argument("reduced intersection requires closed multicurves");
  Diagram dg;
  dg.d[0] = &a;
  dg.d[1] = &b;
  dg.collect();

  ReductionStats stats;
  stats.initial = static_cast<long long>(dg.crossings.size());
  if (stats.initial > overflow_limit)
    throw ModelOverflow("crossing count " + std::to_string(stats.initial) +
                        " exceeds the configured limit " + std::to_string(overflow_limit));
  if (stats.initial == 0) {
    stats.final_count = 0;
    return stats;
  }
  dg.build_sequences();

  ArrangementBuilder builder(dg);
  Arrangement arr = builder.assemble(a.pd->surface.euler_characteristic());
#ifdef LAMINA_DIAGRAM_DEBUG
  debug_dump(dg, arr);
#endif

  Reducer red(dg, std::move(arr));
  while (true) {
    red.rebuild();
    if (!red.remove_one_bigon()) break;
    stats.bigons_removed += 1;
  }
  long long alive = 0;
  for (const Crossing& c : dg.crossings)
    if (c.alive) ++alive;
  stats.final_count = alive;
  return stats;
}

}  // namespace lamina
