#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "legtangle/boxdot.hpp"

namespace legtangle {

enum class Connectivity { Zero, One, Inf };

inline std::string connectivity_name(Connectivity c) {
  switch (c) {
    case Connectivity::Zero: return "0";
    case Connectivity::One: return "1";
    default: return "inf";
  }
}

/// Parity rule: type 0 when P is even, infinity when Q is even, 1 when both
/// are odd.
inline Connectivity connectivity_type(const Fraction& q) {
  if (q.p % 2 == 0) return Connectivity::Zero;
  if (q.q % 2 == 0) return Connectivity::Inf;
  return Connectivity::One;
}

/// Connectivity of the subtangle preceding stage j: the tangle of the
/// vector (q_n, ..., q_{j+1}, 0).
inline Connectivity subtangle_connectivity(const TwistVector& v, Int j) {
  if (j < 1 || j >= v.n()) throw std::invalid_argument("stage index out of range");
  TwistVector sub;
  sub.c.assign(v.c.begin(), v.c.begin() + static_cast<std::size_t>(v.n() - j));
  sub.c.push_back(0);
  return connectivity_type(cf_value(sub));
}

enum class EventKind { Min, Max, CuspLeft, CuspRight };

/// Piecewise front of a two-strand tangle. Arcs are the inscribed square
/// diagonals; slopes are symbolic (negative arcs lie in (-1,0), positive in
/// (0,1)), so every slope already respects the ambient bound. The negative
/// diagonal is the over-arc of its square's crossing.
struct TangleFront {
  struct Arc {
    Pt a, b;        // a is the left endpoint
    bool negative;  // slope sign
    int square;     // index into sub.squares
    int strand = 0; // 1 or 2 after tracing
    int dir = 0;    // +1 traversed a->b, -1 traversed b->a
  };
  struct Crossing {
    int square;
    int over;   // arc index (negative diagonal)
    int under;  // arc index (positive diagonal)
    Pt at;      // square center
  };
  /// Junction between two consecutive arcs of a strand.
  struct Event {
    Pt at;
    EventKind kind;
    Pt mark;       // associated template mark (dot for extrema, box for cusps)
    bool mark_is_dot;
    bool downward; // for cusps: strand z-motion through the cusp
  };
  struct Strand {
    int id = 0;
    std::string from, to;  // "p1".."p4"
    std::vector<int> arcs;
    std::vector<Event> events;  // events[i] joins arcs[i] and arcs[i+1]
  };

  Subdivision sub;
  std::vector<Arc> arcs;
  std::vector<Crossing> crossings;
  Strand strand1, strand2;
  Connectivity traced;

  const Strand& strand(int id) const { return id == 1 ? strand1 : strand2; }
};

namespace detail {

struct ArcEnd {
  int arc;
  bool at_a;
};

inline Pt arc_other(const TangleFront::Arc& a, bool at_a) { return at_a ? a.b : a.a; }

/// Unit direction from the point into the arc.
inline Pt arc_dir(const TangleFront::Arc& a, bool at_a) {
  Pt from = at_a ? a.a : a.b;
  Pt to = arc_other(a, at_a);
  return {to.x > from.x ? 1 : -1, to.z > from.z ? 1 : -1};
}

inline EventKind classify_junction(Pt d1, Pt d2) {
  if (d1.z == d2.z && d1.x != d2.x) return d1.z > 0 ? EventKind::Min : EventKind::Max;
  if (d1.x == d2.x && d1.z != d2.z) return d1.x > 0 ? EventKind::CuspRight : EventKind::CuspLeft;
  throw std::logic_error("square corners meet without extremum or cusp");
}

}  // namespace detail

/// Labels, orients, and orders the strands of a built front: the first
/// strand starts at the top-left corner, the second is oriented so both
/// strands cross the final-stage remainder in the same direction.
inline void trace_strands(TangleFront& fp) {
  const Int P2 = 2 * fp.sub.frac.p, Q2 = 2 * fp.sub.frac.q;

  std::map<Pt, std::vector<detail::ArcEnd>> ends;
  for (std::size_t ai = 0; ai < fp.arcs.size(); ++ai) {
    ends[fp.arcs[ai].a].push_back({static_cast<int>(ai), true});
    ends[fp.arcs[ai].b].push_back({static_cast<int>(ai), false});
  }

  const Pt p1{0, Q2}, p2{P2, Q2}, p3{0, 0}, p4{P2, 0};
  auto corner_name = [&](Pt c) -> std::string {
    if (c == p1) return "p1";
    if (c == p2) return "p2";
    if (c == p3) return "p3";
    if (c == p4) return "p4";
    return "";
  };
  for (const auto& [pt, v] : ends) {
    bool corner = !corner_name(pt).empty();
    if (v.size() != (corner ? 1u : 2u))
      throw std::logic_error("malformed front: bad junction valence");
  }

  auto trace = [&](Pt start, int id) {
    TangleFront::Strand s;
    s.id = id;
    s.from = corner_name(start);
    detail::ArcEnd cur = ends.at(start)[0];
    for (;;) {
      s.arcs.push_back(cur.arc);
      fp.arcs[static_cast<std::size_t>(cur.arc)].strand = id;
      fp.arcs[static_cast<std::size_t>(cur.arc)].dir = cur.at_a ? +1 : -1;
      Pt landing = detail::arc_other(fp.arcs[static_cast<std::size_t>(cur.arc)], cur.at_a);
      if (!corner_name(landing).empty()) {
        s.to = corner_name(landing);
        return s;
      }
      const auto& both = ends.at(landing);
      detail::ArcEnd next = (both[0].arc == cur.arc && both[0].at_a != cur.at_a) ? both[1] : both[0];
      // event between the two arcs
      Pt d1 = detail::arc_dir(fp.arcs[static_cast<std::size_t>(next.arc)], next.at_a);
      Pt dprev = detail::arc_dir(fp.arcs[static_cast<std::size_t>(cur.arc)], !cur.at_a);
      EventKind k = detail::classify_junction(dprev, d1);
      TangleFront::Event ev;
      ev.at = landing;
      ev.kind = k;
      switch (k) {
        case EventKind::Min: ev.mark = {landing.x, landing.z + 1}; ev.mark_is_dot = true; break;
        case EventKind::Max: ev.mark = {landing.x, landing.z - 1}; ev.mark_is_dot = true; break;
        case EventKind::CuspRight: ev.mark = {landing.x + 1, landing.z}; ev.mark_is_dot = false; break;
        case EventKind::CuspLeft: ev.mark = {landing.x - 1, landing.z}; ev.mark_is_dot = false; break;
      }
      ev.downward = d1.z < 0;
      s.events.push_back(ev);
      cur = next;
    }
  };

  fp.strand1 = trace(p1, 1);
  if (fp.strand1.to == "p2") fp.traced = Connectivity::Zero;
  else if (fp.strand1.to == "p3") fp.traced = Connectivity::Inf;
  else fp.traced = Connectivity::One;

  // final-stage crossing direction of a strand: sign of progress over its
  // arcs inscribed in final-stage squares (x for odd stage count, z for even)
  Int n = fp.sub.stage_count();
  auto final_dir = [&](const TangleFront::Strand& s) {
    Int first = 0, last = 0;
    bool seen = false;
    for (int ai : s.arcs) {
      const auto& arc = fp.arcs[static_cast<std::size_t>(ai)];
      if (fp.sub.squares[static_cast<std::size_t>(arc.square)].stage != n) continue;
      Pt entry = arc.dir > 0 ? arc.a : arc.b;
      Pt exit = arc.dir > 0 ? arc.b : arc.a;
      Int e0 = (n % 2 == 1) ? entry.x : entry.z;
      Int e1 = (n % 2 == 1) ? exit.x : exit.z;
      if (!seen) {
        first = e0;
        seen = true;
      }
      last = e1;
    }
    if (!seen) throw std::logic_error("strand does not cross the final remainder");
    return last > first ? +1 : -1;
  };
  int dir1 = final_dir(fp.strand1);

  Pt start2 = (fp.traced == Connectivity::Zero) ? p3 : p2;
  Pt alt2 = [&] {
    switch (fp.traced) {
      case Connectivity::Zero: return p4;  // strand 2 joins p3-p4
      case Connectivity::One: return p3;   // joins p2-p3
      default: return p4;                  // joins p2-p4
    }
  }();
  fp.strand2 = trace(start2, 2);
  if (final_dir(fp.strand2) != dir1) fp.strand2 = trace(alt2, 2);
  if (final_dir(fp.strand2) != dir1)
    throw std::logic_error("cannot orient second strand consistently");
}

/// Builds the front of the tangle carried by a box-dot diagram: one
/// crossing per subdivision square with the negative diagonal on top,
/// corners smoothed into extrema along vertical edges and into cusps along
/// horizontal edges, strands traced from the four rectangle corners.
inline TangleFront build_front(const BoxDotDiagram& d) {
  TangleFront fp;
  fp.sub = d.sub;
  for (std::size_t si = 0; si < d.sub.squares.size(); ++si) {
    const Square& s = d.sub.squares[si];
    Int e = 2 * s.size;
    TangleFront::Arc neg{{s.x, s.z + e}, {s.x + e, s.z}, true, static_cast<int>(si)};
    TangleFront::Arc pos{{s.x, s.z}, {s.x + e, s.z + e}, false, static_cast<int>(si)};
    fp.arcs.push_back(neg);
    fp.arcs.push_back(pos);
    fp.crossings.push_back({static_cast<int>(si), static_cast<int>(fp.arcs.size() - 2),
                            static_cast<int>(fp.arcs.size() - 1), Pt{s.x + s.size, s.z + s.size}});
  }
  trace_strands(fp);
  return fp;
}

inline TangleFront build_front(const Fraction& q, const FlypeVector& f) {
  return build_front(make_diagram(q, f));
}

/// Closed piecewise-linear boundary unknot of the template: slope +-1
/// segments through the boundary marks, smooth turns at boundary boxes,
/// cusps at boundary dots, crossings at every interior template mark with
/// the negative-slope strand on top. Oriented from the top-left boundary
/// dot along its negative-slope segment.
struct UnknotFront {
  struct CuspInfo {
    Pt dot;
    bool downward;
  };
  struct CrossInfo {
    Pt mark;
    Pt over_dir, under_dir;  // unit diagonal directions
    int sign;
  };
  BoxDotTemplate tmpl;
  std::vector<CuspInfo> cusps;
  std::vector<CrossInfo> crossings;
  /// Maximal segments in traversal order, as (start, dir, length).
  struct Seg {
    Pt start;
    Pt dir;
    Int len;  // doubled
  };
  std::vector<Seg> segments;
  bool closed_single_component = false;
};

inline UnknotFront build_unknot(const BoxDotTemplate& t) {
  UnknotFront k;
  k.tmpl = t;
  const Int P2 = 2 * t.p, Q2 = 2 * t.q;
  std::map<Pt, std::array<std::optional<Pt>, 2>> passes;  // mark -> dir by slope (0 neg, 1 pos)

  Pt pos{0, Q2 - 1};
  Pt dir{1, -1};
  const Pt start = pos;
  const Pt start_dir = dir;
  Int guard = 8 * (t.p + t.q) + 16;
  for (;;) {
    Int tx = dir.x > 0 ? P2 - pos.x : pos.x;
    Int tz = dir.z > 0 ? Q2 - pos.z : pos.z;
    Int tmin = std::min(tx, tz);
    for (Int s = 1; s < tmin; ++s) {
      Pt m{pos.x + s * dir.x, pos.z + s * dir.z};
      int slope = (dir.x * dir.z < 0) ? 0 : 1;
      passes[m][static_cast<std::size_t>(slope)] = dir;
    }
    Pt nxt{pos.x + tmin * dir.x, pos.z + tmin * dir.z};
    k.segments.push_back({pos, dir, tmin});
    bool horiz_wall = (nxt.z == 0 || nxt.z == Q2);
    bool vert_wall = (nxt.x == 0 || nxt.x == P2);
    if (horiz_wall && vert_wall) throw std::logic_error("boundary curve hit a corner");
    if (vert_wall) {
      k.cusps.push_back({nxt, dir.z < 0});
      dir.x = -dir.x;
    } else {
      dir.z = -dir.z;
    }
    pos = nxt;
    if (pos == start && dir == start_dir) break;
    if (--guard <= 0) throw std::logic_error("boundary curve failed to close");
  }
  k.closed_single_component = static_cast<Int>(k.segments.size()) == 2 * (t.p + t.q);

  for (const auto& [m, dirs] : passes) {
    if (!dirs[0] || !dirs[1]) throw std::logic_error("interior mark crossed only once");
    Pt o = *dirs[0], u = *dirs[1];
    int sign = (o.x * u.z - o.z * u.x) > 0 ? +1 : -1;
    k.crossings.push_back({m, o, u, sign});
  }
  return k;
}

}  // namespace legtangle
