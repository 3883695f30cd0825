#include "lamina/chart.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "lamina/errors.hpp"

namespace lamina {

bool cyclic_between(const BoundaryPos& p, const BoundaryPos& a, const BoundaryPos& b) {
  if (a < b) return a < p && p < b;
  return a < p || p < b;
}

bool chords_cross(const BoundaryPos& a1, const BoundaryPos& b1, const BoundaryPos& a2,
                  const BoundaryPos& b2) {
  bool in_a = cyclic_between(a2, a1, b1);
  bool in_b = cyclic_between(b2, a1, b1);
  return in_a != in_b;
}

BoundaryPos StrandDiagram::chord_end_pos(const ChordEnd& e) const {
  if (e.on_window) {
    const Mark& m = marks[e.mark];
    return BoundaryPos{window_segment(m.slot), m.param};
  }
  if (e.seam == 1)
    return e.right_copy ? BoundaryPos{SegR1R, Rat(1) - e.sigma} : BoundaryPos{SegR1L, e.sigma};
  return e.right_copy ? BoundaryPos{SegR2R, Rat(1) - e.sigma} : BoundaryPos{SegR2L, e.sigma};
}

namespace {

struct FamilyCounts {
  long long n01 = 0, n02 = 0, n12 = 0, n00 = 0, n11 = 0, n22 = 0;
};

FamilyCounts pants_families(long long x0, long long x1, long long x2) {
  FamilyCounts f;
  if (x0 > x1 + x2) {
    f.n00 = (x0 - x1 - x2) / 2;
    f.n01 = x1;
    f.n02 = x2;
  } else if (x1 > x0 + x2) {
    f.n11 = (x1 - x0 - x2) / 2;
    f.n01 = x0;
    f.n12 = x2;
  } else if (x2 > x0 + x1) {
    f.n22 = (x2 - x0 - x1) / 2;
    f.n02 = x0;
    f.n12 = x1;
  } else {
    f.n01 = (x0 + x1 - x2) / 2;
    f.n02 = (x0 + x2 - x1) / 2;
    f.n12 = (x1 + x2 - x0) / 2;
  }
  return f;
}

std::vector<std::vector<int>> cut_blocks(const std::vector<int>& marks,
                                         std::initializer_list<long long> sizes) {
  std::vector<std::vector<int>> blocks;
  size_t at = 0;
  for (long long n : sizes) {
    blocks.emplace_back(marks.begin() + at, marks.begin() + at + n);
    at += n;
  }
  if (at != marks.size()) throw std::logic_error("window block sizes do not cover the marks");
  return blocks;
}

void validate_embedding(const StrandDiagram& d) {
  for (size_t i = 0; i < d.chords.size(); ++i)
    for (size_t j = i + 1; j < d.chords.size(); ++j) {
      const Chord& x = d.chords[i];
      const Chord& y = d.chords[j];
      if (x.pants != y.pants) continue;
      if (chords_cross(d.chord_end_pos(x.end[0]), d.chord_end_pos(x.end[1]),
                       d.chord_end_pos(y.end[0]), d.chord_end_pos(y.end[1])))
        throw std::logic_error("realization is not embedded: crossing chords in pants " +
                               std::to_string(x.pants));
    }
}

}  // namespace

StrandDiagram realize(const PantsDecomposition& pd, const DTVector& v, const Rat& phi) {
  if (auto viol = validate_integral(v)) throw InvalidVector("realize: " + viol->message);
  StrandDiagram d;
  d.pd = &pd;
  d.source = v;
  d.phi = phi;
  const int k = pd.curve_count();

  std::map<std::pair<int, int>, std::vector<int>> window_marks;
  auto add_mark = [&](int pants, int slot, const Rat& param) {
    d.marks.push_back(Mark{pants, slot, param});
    int id = static_cast<int>(d.marks.size()) - 1;
    window_marks[{pants, slot}].push_back(id);
    return id;
  };

  for (int i = 0; i < k; ++i) {
    long long m = v.weights[i].num();
    long long t = v.twists[i].num();
    if (m == 0) {
      for (long long c = 0; c < t; ++c)
        d.cores.push_back(CoreCircle{i, (Rat(c) + phi) / Rat(t + 1) - Rat(1, 2)});
      continue;
    }
    SlotRef ls = pd.curve_ends[i].first;
    SlotRef rs = pd.curve_ends[i].second;
    // Window parameters run along the pants walk, which traverses the shared
    // circle opposite to the annulus: u = -theta on the left side, u = theta
    // on the right side.
    for (long long j = 0; j < m; ++j) {
      Rat th_in = (Rat(j) + phi) / Rat(m);
      Rat th_out = (Rat(j + t) + phi) / Rat(m);
      int ml = add_mark(ls.pants, ls.slot, (-th_in).frac());
      int mr = add_mark(rs.pants, rs.slot, th_out.frac());
      d.spirals.push_back(Spiral{i, j, th_in, th_out, ml, mr});
    }
  }

  // Canonical arc families per pants.
  auto add_chord = [&](int pants, ChordEnd e0, ChordEnd e1) {
    d.chords.push_back(Chord{pants, {e0, e1}});
    return static_cast<int>(d.chords.size()) - 1;
  };
  auto mark_end = [](int mark) {
    ChordEnd e;
    e.on_window = true;
    e.mark = mark;
    return e;
  };
  auto seam_end = [](int seam, bool right, const Rat& sigma) {
    ChordEnd e;
    e.on_window = false;
    e.seam = seam;
    e.right_copy = right;
    e.sigma = sigma;
    return e;
  };
  auto link_portal = [&](int ca, int ea, int cb, int eb) {
    d.chords[ca].end[ea].portal_link = cb;
    d.chords[cb].end[eb].portal_link = ca;
  };

  for (int p = 0; p < pd.pants; ++p) {
    std::array<std::vector<int>, 3> w;
    for (int s = 0; s < 3; ++s) {
      auto it = window_marks.find({p, s});
      if (it != window_marks.end()) {
        w[s] = it->second;
        std::sort(w[s].begin(), w[s].end(),
                  [&](int a, int b) { return d.marks[a].param < d.marks[b].param; });
      }
    }
    long long x0 = w[0].size(), x1 = w[1].size(), x2 = w[2].size();
    if (x0 + x1 + x2 == 0) continue;
    FamilyCounts f = pants_families(x0, x1, x2);

    auto b0 = cut_blocks(w[0], {f.n00, f.n01, f.n00, f.n02});
    auto b1 = cut_blocks(w[1], {f.n11, f.n12, f.n11, f.n01});
    auto b2 = cut_blocks(w[2], {f.n02, f.n22, f.n12, f.n22});

    for (long long j = 0; j < f.n01; ++j)
      add_chord(p, mark_end(b0[1][j]), mark_end(b1[3][f.n01 - 1 - j]));
    for (long long j = 0; j < f.n02; ++j)
      add_chord(p, mark_end(b0[3][j]), mark_end(b2[0][f.n02 - 1 - j]));
    for (long long j = 0; j < f.n12; ++j)
      add_chord(p, mark_end(b1[1][j]), mark_end(b2[2][f.n12 - 1 - j]));
    for (long long j = 0; j < f.n00; ++j) {
      Rat sg = (Rat(j) + phi) / Rat(f.n00 + 1);
      int ca = add_chord(p, mark_end(b0[2][j]), seam_end(1, true, sg));
      int cb = add_chord(p, seam_end(1, false, sg), mark_end(b0[0][f.n00 - 1 - j]));
      link_portal(ca, 1, cb, 0);
    }
    for (long long j = 0; j < f.n11; ++j) {
      Rat sg = (Rat(j) + phi) / Rat(f.n11 + 1);
      int ca = add_chord(p, mark_end(b1[2][j]), seam_end(2, true, sg));
      int cb = add_chord(p, seam_end(2, false, sg), mark_end(b1[0][f.n11 - 1 - j]));
      link_portal(ca, 1, cb, 0);
    }
    for (long long j = 0; j < f.n22; ++j) {
      Rat sg = (Rat(f.n22 - 1 - j) + phi) / Rat(f.n22 + 1);
      int ca = add_chord(p, mark_end(b2[1][j]), seam_end(1, false, sg));
      int cb = add_chord(p, seam_end(1, true, sg), mark_end(b2[3][f.n22 - 1 - j]));
      link_portal(ca, 1, cb, 0);
    }
  }

  // Connectivity maps and cycle tracing.
  std::vector<std::pair<int, int>> mark_chord(d.marks.size(), {-1, -1});
  for (size_t ci = 0; ci < d.chords.size(); ++ci)
    for (int e = 0; e < 2; ++e)
      if (d.chords[ci].end[e].on_window) {
        int m = d.chords[ci].end[e].mark;
        if (mark_chord[m].first != -1) throw std::logic_error("mark used by two chords");
        mark_chord[m] = {static_cast<int>(ci), e};
      }
  std::vector<std::pair<int, int>> mark_spiral(d.marks.size(), {-1, 0});
  for (size_t si = 0; si < d.spirals.size(); ++si) {
    mark_spiral[d.spirals[si].mark_l] = {static_cast<int>(si), 0};
    mark_spiral[d.spirals[si].mark_r] = {static_cast<int>(si), 1};
  }
  for (size_t m = 0; m < d.marks.size(); ++m)
    if (mark_chord[m].first == -1 || mark_spiral[m].first == -1)
      throw std::logic_error("unconsumed strand endpoint");

  std::vector<bool> spiral_done(d.spirals.size(), false);
  for (size_t start = 0; start < d.spirals.size(); ++start) {
    if (spiral_done[start]) continue;
    std::vector<PieceRef> cycle;
    int si = static_cast<int>(start);
    int enter_side = 0;  // 0 = entering at mark_l
    while (true) {
      spiral_done[si] = true;
      cycle.push_back(PieceRef{PieceRef::SpiralPiece, si, enter_side == 0});
      int exit_mark = enter_side == 0 ? d.spirals[si].mark_r : d.spirals[si].mark_l;
      auto [ci, ei] = mark_chord[exit_mark];
      while (true) {
        cycle.push_back(PieceRef{PieceRef::ChordPiece, ci, ei == 0});
        const ChordEnd& other = d.chords[ci].end[1 - ei];
        if (other.on_window) {
          exit_mark = other.mark;
          break;
        }
        int cj = other.portal_link;
        // The partner enters at its unique seam end.
        ci = cj;
        ei = d.chords[cj].end[0].on_window ? 1 : 0;
      }
      auto [sj, side] = mark_spiral[exit_mark];
      if (static_cast<size_t>(sj) == start) {
        if (side != 0) throw std::logic_error("strand tracing closed inconsistently");
        break;
      }
      if (spiral_done[sj]) throw std::logic_error("strand tracing collision");
      si = sj;
      enter_side = side;
    }
    d.cycles.push_back(std::move(cycle));
  }
  for (size_t c = 0; c < d.cores.size(); ++c)
    d.cycles.push_back({PieceRef{PieceRef::CorePiece, static_cast<int>(c), true}});

  validate_embedding(d);
  return d;
}

namespace {

// Every interface position of a realization, for collision checks.
struct InterfaceKeys {
  std::set<std::tuple<int, int, Rat>> window;     // pants, slot, param
  std::set<std::tuple<int, int, Rat>> seam;       // pants, seam, sigma
  std::set<std::pair<int, Rat>> core;             // curve, rho
};

InterfaceKeys interface_keys(const StrandDiagram& d) {
  InterfaceKeys k;
  for (const Mark& m : d.marks) k.window.insert({m.pants, m.slot, m.param});
  for (const Chord& c : d.chords)
    for (int e = 0; e < 2; ++e)
      if (!c.end[e].on_window) k.seam.insert({c.pants, c.end[e].seam, c.end[e].sigma});
  for (const CoreCircle& c : d.cores) k.core.insert({c.curve, c.rho});
  return k;
}

bool collides(const InterfaceKeys& a, const InterfaceKeys& b) {
  for (const auto& x : b.window)
    if (a.window.count(x)) return true;
  for (const auto& x : b.seam)
    if (a.seam.count(x)) return true;
  for (const auto& x : b.core)
    if (a.core.count(x)) return true;
  return false;
}

// Crossings landing exactly on the angular cut line theta = 0 of an annulus
// would degenerate the refined arrangement; reject such offset choices.
bool crossing_on_cut(const StrandDiagram& a, const StrandDiagram& b) {
  for (const Spiral& sa : a.spirals) {
    Rat da = sa.theta_out - sa.theta_in;
    for (const Spiral& sb : b.spirals) {
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
        if ((sa.theta_in + da * s).frac().is_zero()) return true;
      }
    }
    for (const CoreCircle& cb : b.cores) {
      if (sa.curve != cb.curve) continue;
      Rat s = (cb.rho + Rat(1)) / Rat(2);
      if ((sa.theta_in + da * s).frac().is_zero()) return true;
    }
  }
  for (const CoreCircle& ca : a.cores)
    for (const Spiral& sb : b.spirals) {
      if (ca.curve != sb.curve) continue;
      Rat db = sb.theta_out - sb.theta_in;
      Rat s = (ca.rho + Rat(1)) / Rat(2);
      if ((sb.theta_in + db * s).frac().is_zero()) return true;
    }
  return false;
}

Rat phi_candidate(int k) {
  if (k == 0) return Rat(3, 4);
  return Rat(k + 2, 2 * k + 5);
}

}  // namespace

std::pair<StrandDiagram, StrandDiagram> realize_pair(const PantsDecomposition& pd,
                                                     const DTVector& a, const DTVector& b) {
  StrandDiagram da = realize(pd, a, Rat(1, 4));
  InterfaceKeys ka = interface_keys(da);
  for (int k = 0;; ++k) {
    if (k > 4096) throw std::logic_error("offset search failed to separate marks");
    StrandDiagram db = realize(pd, b, phi_candidate(k));
    if (collides(ka, interface_keys(db))) continue;
    if (crossing_on_cut(da, db)) continue;
    return {std::move(da), std::move(db)};
  }
}

StrandDiagram realize_boundary_arc(const PantsDecomposition& pd, int from, int to,
                                   const StrandDiagram& against) {
  if (from == to) throw std::invalid_argument("arc endpoints on the same boundary");
  SlotRef sf = pd.outer[from];
  SlotRef st = pd.outer[to];
  if (st < sf) std::swap(sf, st);
  InterfaceKeys ka = interface_keys(against);

  for (int k = 0;; ++k) {
    if (k > 4096) throw std::logic_error("offset search failed to separate arc marks");
    Rat phi = k == 0 ? Rat(1, 3) : Rat(k + 1, 3 * k + 4);
    StrandDiagram d;
    d.pd = &pd;
    d.source = zero_vector(pd.surface);
    d.phi = phi;
    d.open_path = true;

    auto add_mark = [&](int pants, int slot, const Rat& param) {
      d.marks.push_back(Mark{pants, slot, param});
      return static_cast<int>(d.marks.size()) - 1;
    };
    std::vector<PieceRef> run;
    // Chain-curve index glued between pants p and p+1.
    auto chain_curve = [&](int p) {
      for (int i = 0; i < pd.curve_count(); ++i)
        if (pd.curve_ends[i].first == SlotRef{p, 2} && pd.curve_ends[i].second == SlotRef{p + 1, 0})
          return i;
      throw std::logic_error("missing chain curve");
    };

    int entry_mark = add_mark(sf.pants, sf.slot, phi);
    for (int p = sf.pants; p <= st.pants; ++p) {
      int exit_slot = (p == st.pants) ? st.slot : 2;
      int exit_mark = add_mark(p, exit_slot, phi);
      ChordEnd e0, e1;
      e0.on_window = e1.on_window = true;
      e0.mark = entry_mark;
      e1.mark = exit_mark;
      d.chords.push_back(Chord{p, {e0, e1}});
      run.push_back(PieceRef{PieceRef::ChordPiece, static_cast<int>(d.chords.size()) - 1, true});
      if (p == st.pants) break;
      int cv = chain_curve(p);
      Rat theta = -phi;  // left-side mark at parameter phi
      int mr = add_mark(p + 1, 0, theta.frac());
      d.spirals.push_back(Spiral{cv, 0, theta, theta, exit_mark, mr});
      run.push_back(PieceRef{PieceRef::SpiralPiece, static_cast<int>(d.spirals.size()) - 1, true});
      entry_mark = mr;
    }
    d.cycles.push_back(std::move(run));
    if (!collides(ka, interface_keys(d))) return d;
  }
}

namespace {

long long integers_strictly_between(const Rat& x, const Rat& y) {
  if (!(x < y)) return 0;
  return y.ceil() - x.floor() - 1;
}

}  // namespace

long long spiral_crossing_count(const Spiral& sa, const Spiral& sb) {
  Rat c = sb.theta_in - sa.theta_in;
  Rat delta = (sb.theta_out - sb.theta_in) - (sa.theta_out - sa.theta_in);
  if (delta.is_zero()) return 0;  // parallel strands
  Rat x = -c;
  Rat y = -c - delta;
  if (y < x) std::swap(x, y);
  return integers_strictly_between(x, y);
}

long long raw_crossing_count(const StrandDiagram& a, const StrandDiagram& b) {
  long long total = 0;
  for (const Chord& ca : a.chords)
    for (const Chord& cb : b.chords) {
      if (ca.pants != cb.pants) continue;
      if (chords_cross(a.chord_end_pos(ca.end[0]), a.chord_end_pos(ca.end[1]),
                       b.chord_end_pos(cb.end[0]), b.chord_end_pos(cb.end[1])))
        ++total;
    }
  for (const Spiral& sa : a.spirals)
    for (const Spiral& sb : b.spirals)
      if (sa.curve == sb.curve) total += spiral_crossing_count(sa, sb);
  for (const Spiral& sa : a.spirals)
    for (const CoreCircle& cb : b.cores)
      if (sa.curve == cb.curve) ++total;
  for (const CoreCircle& ca : a.cores)
    for (const Spiral& sb : b.spirals)
      if (ca.curve == sb.curve) ++total;
  return total;
}

}  // namespace lamina
