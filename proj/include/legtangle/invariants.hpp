#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "legtangle/front.hpp"

namespace legtangle {

/// How inter-strand crossings count toward a strand's writhe.
enum class StrandWrithe {
  SelfOnly,   // self-crossings only
  HalfMixed,  // self-crossings plus half the signed inter-strand crossings
};

inline std::string strand_writhe_name(StrandWrithe c) {
  return c == StrandWrithe::SelfOnly ? "self" : "half-mixed";
}

inline StrandWrithe parse_strand_writhe(const std::string& s) {
  if (s == "self") return StrandWrithe::SelfOnly;
  if (s == "half-mixed") return StrandWrithe::HalfMixed;
  throw std::invalid_argument("unknown strand writhe convention: '" + s + "'");
}

/// tb and r stored doubled so strand values stay integral.
struct ClassicalInvariants {
  Int writhe2 = 0;  // doubled writhe contribution
  Int down = 0, up = 0;
  Int tb2 = 0, r2 = 0;

  friend bool operator==(const ClassicalInvariants&, const ClassicalInvariants&) = default;
};

struct UnknotInvariants {
  Int writhe = 0;
  Int down = 0, up = 0;
  Int positive_crossings = 0, negative_crossings = 0;
  Int tb = 0, r = 0;
};

inline UnknotInvariants unknot_invariants(const UnknotFront& k) {
  if (!k.closed_single_component)
    throw std::invalid_argument("boundary curve is not a single closed component");
  UnknotInvariants inv;
  for (const auto& c : k.crossings) (c.sign > 0 ? inv.positive_crossings : inv.negative_crossings)++;
  inv.writhe = inv.positive_crossings - inv.negative_crossings;
  for (const auto& c : k.cusps) (c.downward ? inv.down : inv.up)++;
  inv.tb = inv.writhe - (inv.down + inv.up) / 2;
  inv.r = (inv.down - inv.up) / 2;
  return inv;
}

inline Int unknot_writhe(const UnknotFront& k) { return unknot_invariants(k).writhe; }

inline std::pair<Int, Int> unknot_cusp_counts(const UnknotFront& k) {
  auto inv = unknot_invariants(k);
  return {inv.down, inv.up};
}

namespace detail {

inline Pt traversal_dir(const TangleFront& fp, int arc_index) {
  const auto& a = fp.arcs[static_cast<std::size_t>(arc_index)];
  Pt d{a.b.x > a.a.x ? 1 : -1, a.b.z > a.a.z ? 1 : -1};
  if (a.dir < 0) return {-d.x, -d.z};
  return d;
}

}  // namespace detail

/// Per-strand tb and r. Cusp counts come from the strand's own cusp events;
/// the writhe term follows the chosen convention.
inline std::array<ClassicalInvariants, 2> strandwise_invariants(
    const TangleFront& fp, StrandWrithe convention = StrandWrithe::SelfOnly) {
  std::array<ClassicalInvariants, 2> out{};
  Int self2[3] = {0, 0, 0};  // doubled, indexed by strand id
  Int inter2 = 0;
  for (const auto& c : fp.crossings) {
    const auto& over = fp.arcs[static_cast<std::size_t>(c.over)];
    const auto& under = fp.arcs[static_cast<std::size_t>(c.under)];
    Pt o = detail::traversal_dir(fp, c.over);
    Pt u = detail::traversal_dir(fp, c.under);
    int sign = (o.x * u.z - o.z * u.x) > 0 ? +1 : -1;
    if (over.strand == under.strand)
      self2[over.strand] += 2 * sign;
    else
      inter2 += 2 * sign;
  }
  for (int sid = 1; sid <= 2; ++sid) {
    const auto& s = fp.strand(sid);
    ClassicalInvariants ci;
    for (const auto& ev : s.events) {
      if (ev.kind == EventKind::CuspLeft || ev.kind == EventKind::CuspRight)
        (ev.downward ? ci.down : ci.up)++;
    }
    ci.writhe2 = self2[sid];
    if (convention == StrandWrithe::HalfMixed) ci.writhe2 += inter2 / 2;
    ci.tb2 = ci.writhe2 - (ci.down + ci.up);
    ci.r2 = ci.down - ci.up;
    out[static_cast<std::size_t>(sid - 1)] = ci;
  }
  return out;
}

/// One unit-width loop of the decomposition of the boundary unknot inside a
/// subdivision square: four diagonal segments indexed from the bottom of
/// the square's left edge (level 1) to the top (level m).
struct SquareLoop {
  int square = -1;  // index into the subdivision, -1 for standalone squares
  Int level = 1;
  Pt corner;  // square lower-left, doubled
  Int size = 1;
  std::array<std::pair<Pt, Pt>, 2> neg;  // negative-slope segments
  std::array<std::pair<Pt, Pt>, 2> pos;
};

inline SquareLoop make_square_loop(int square_index, Pt corner, Int size, Int level) {
  SquareLoop L;
  L.square = square_index;
  L.level = level;
  L.corner = corner;
  L.size = size;
  Int m2 = 2 * size;
  Pt A{corner.x, corner.z + 2 * level - 1};
  Pt B{corner.x + 2 * level - 1, corner.z};
  Pt C{corner.x + m2, corner.z + m2 - 2 * level + 1};
  Pt D{corner.x + m2 - 2 * level + 1, corner.z + m2};
  L.neg = {{{A, B}, {C, D}}};
  L.pos = {{{B, C}, {D, A}}};
  return L;
}

namespace detail {

/// Interior intersection of a negative-slope and a positive-slope segment.
inline std::optional<Pt> diag_cross(const std::pair<Pt, Pt>& neg, const std::pair<Pt, Pt>& pos) {
  Int c = neg.first.x + neg.first.z;   // x + z
  Int d = pos.first.x - pos.first.z;   // x - z
  if ((c + d) % 2 != 0) return std::nullopt;
  Pt p{(c + d) / 2, (c - d) / 2};
  auto strictly_within = [](Pt q, const std::pair<Pt, Pt>& s) {
    Int lo = std::min(s.first.x, s.second.x), hi = std::max(s.first.x, s.second.x);
    return q.x > lo && q.x < hi;
  };
  if (strictly_within(p, neg) && strictly_within(p, pos)) return p;
  return std::nullopt;
}

}  // namespace detail

/// Crossings where loop a passes over loop b.
inline std::vector<Pt> loop_over_crossings(const SquareLoop& a, const SquareLoop& b) {
  std::vector<Pt> out;
  for (const auto& n : a.neg)
    for (const auto& p : b.pos)
      if (auto q = detail::diag_cross(n, p)) out.push_back(*q);
  return out;
}

struct UnknotCertificate {
  struct Removal {
    Square square;
    Int level;  // loop index within the square, top is size
  };
  bool single_component = false;
  bool decomposition_consistent = false;
  Int loop_count = 0;
  std::vector<Removal> steps;
  Int square_stages() const {
    Int k = 0;
    Square const* prev = nullptr;
    for (const auto& r : steps) {
      if (!prev || !(*prev == r.square)) ++k;
      prev = &r.square;
    }
    return k;
  }
};

namespace detail {

/// Removes loops in the given order, requiring each to be on top of the
/// remainder. Throws when a loop is blocked.
inline void check_removal_order(const std::vector<SquareLoop>& loops,
                                const std::vector<std::size_t>& order) {
  std::vector<bool> removed(loops.size(), false);
  for (std::size_t idx : order) {
    for (std::size_t other = 0; other < loops.size(); ++other) {
      if (other == idx || removed[other]) continue;
      if (!loop_over_crossings(loops[other], loops[idx]).empty())
        throw std::logic_error("loop removal blocked: candidate is not on top");
    }
    removed[idx] = true;
  }
}

}  // namespace detail

/// Loop decomposition of the standalone m x m square pattern, with the
/// top-down removal order verified.
inline std::vector<SquareLoop> square_unlink(Int m) {
  std::vector<SquareLoop> loops;
  for (Int level = 1; level <= m; ++level) loops.push_back(make_square_loop(-1, {0, 0}, m, level));
  std::vector<std::size_t> order;
  for (Int level = m; level >= 1; --level) order.push_back(static_cast<std::size_t>(level - 1));
  detail::check_removal_order(loops, order);
  return loops;
}

/// Unravels the boundary unknot through the subdivision: cuts it at the
/// diagram marks into one loop per unit of square size, then removes loops
/// square by square (odd stages right to left, even stages bottom to top)
/// and top-down within each square, verifying each loop is unobstructed.
inline UnknotCertificate verify_unknot(const UnknotFront& k, const Subdivision& sub) {
  if (k.tmpl.p != sub.frac.p || k.tmpl.q != sub.frac.q)
    throw std::invalid_argument("unknot and subdivision built from different fractions");
  UnknotCertificate cert;
  cert.single_component = k.closed_single_component;
  if (!cert.single_component)
    throw std::logic_error("boundary curve is not a single closed component");

  std::vector<SquareLoop> loops;
  std::vector<std::size_t> square_of_loop;
  for (std::size_t si = 0; si < sub.squares.size(); ++si) {
    const Square& s = sub.squares[si];
    for (Int level = 1; level <= s.size; ++level) {
      loops.push_back(make_square_loop(static_cast<int>(si), {s.x, s.z}, s.size, level));
      square_of_loop.push_back(si);
    }
  }
  cert.loop_count = static_cast<Int>(loops.size());

  // the loop segments must be exactly the curve's segments cut at the
  // diagram marks
  {
    std::set<Pt> cut_marks;
    for (const Segment& seg : sub.segments) {
      if (seg.vertical)
        for (Int z = seg.a + 1; z < seg.b; z += 2) cut_marks.insert({seg.c, z});
      else
        for (Int x = seg.a + 1; x < seg.b; x += 2) cut_marks.insert({x, seg.c});
    }
    auto norm = [](Pt a, Pt b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
    std::set<std::pair<Pt, Pt>> from_curve, from_loops;
    for (const auto& seg : k.segments) {
      Pt cur = seg.start;
      for (Int s = 1; s <= seg.len; ++s) {
        Pt nxt{seg.start.x + s * seg.dir.x, seg.start.z + s * seg.dir.z};
        if (s == seg.len || cut_marks.count(nxt)) {
          from_curve.insert(norm(cur, nxt));
          cur = nxt;
        }
      }
    }
    for (const auto& L : loops) {
      for (const auto& sgm : L.neg) from_loops.insert(norm(sgm.first, sgm.second));
      for (const auto& sgm : L.pos) from_loops.insert(norm(sgm.first, sgm.second));
    }
    cert.decomposition_consistent = (from_curve == from_loops);
    if (!cert.decomposition_consistent)
      throw std::logic_error("loop decomposition does not match the boundary curve");
  }

  if (cert.loop_count <= 1) return cert;  // already a plain loop

  std::vector<std::size_t> square_order(sub.squares.size());
  for (std::size_t i = 0; i < square_order.size(); ++i) square_order[i] = i;
  std::sort(square_order.begin(), square_order.end(), [&](std::size_t a, std::size_t b) {
    const Square& sa = sub.squares[a];
    const Square& sb = sub.squares[b];
    if (sa.stage != sb.stage) return sa.stage < sb.stage;
    if (sa.stage % 2 == 1) return sa.x > sb.x;  // right to left
    return sa.z < sb.z;                         // bottom to top
  });
  std::vector<std::size_t> order;
  for (std::size_t si : square_order) {
    const Square& s = sub.squares[si];
    for (Int level = s.size; level >= 1; --level) {
      for (std::size_t li = 0; li < loops.size(); ++li)
        if (square_of_loop[li] == si && loops[li].level == level) order.push_back(li);
    }
  }
  detail::check_removal_order(loops, order);
  for (std::size_t li : order)
    cert.steps.push_back({sub.squares[square_of_loop[li]], loops[li].level});
  return cert;
}

}  // namespace legtangle
