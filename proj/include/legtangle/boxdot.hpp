#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "legtangle/subdivision.hpp"

namespace legtangle {

/// Marked points of the P x Q grid: boxes at (i-1/2, j) and dots at
/// (i, j-1/2), with the checkerboard signing. Boundary boxes carry no sign.
struct BoxDotTemplate {
  Int p = 1, q = 1;

  Int box_count() const { return p * (q + 1); }
  Int dot_count() const { return q * (p + 1); }
  Int boundary_box_count() const { return 2 * p; }
  Int boundary_dot_count() const { return 2 * q; }
  Int interior_box_count() const { return p * (q - 1); }
  Int interior_dot_count() const { return q * (p - 1); }

  bool is_dot(Pt m) const { return m.x % 2 == 0 && m.z % 2 != 0; }
  bool is_box(Pt m) const { return m.x % 2 != 0 && m.z % 2 == 0; }
  bool contains(Pt m) const {
    return m.x >= 0 && m.x <= 2 * p && m.z >= 0 && m.z <= 2 * q && (is_dot(m) || is_box(m));
  }
  bool interior(Pt m) const {
    if (!contains(m)) return false;
    return is_dot(m) ? (m.x > 0 && m.x < 2 * p) : (m.z > 0 && m.z < 2 * q);
  }

  /// Checkerboard phase: a dot (i, j-1/2) or interior box (i-1/2, j) is
  /// positive exactly when i + j has the parity of Q. Marks joined by a
  /// slope -1 arc of the boundary unknot share their sign.
  int sign(Pt m) const {
    Int i, j;
    if (is_dot(m)) {
      i = m.x / 2;
      j = (m.z + 1) / 2;
    } else {
      i = (m.x + 1) / 2;
      j = m.z / 2;
    }
    return ((i + j) % 2 == (q % 2)) ? +1 : -1;
  }

  std::vector<Pt> all_dots() const {
    std::vector<Pt> out;
    for (Int j = 1; j <= q; ++j)
      for (Int i = 0; i <= p; ++i) out.push_back({2 * i, 2 * j - 1});
    return out;
  }
  std::vector<Pt> all_boxes() const {
    std::vector<Pt> out;
    for (Int j = 0; j <= q; ++j)
      for (Int i = 1; i <= p; ++i) out.push_back({2 * i - 1, 2 * j});
    return out;
  }

  /// Top-most and bottom-most boundary dots on each vertical side.
  std::vector<Pt> endpoint_dots() const {
    return {{0, 1}, {2 * p, 1}, {0, 2 * q - 1}, {2 * p, 2 * q - 1}};
  }
};

inline BoxDotTemplate make_template(const Fraction& q) { return {q.p, q.q}; }

struct Mark {
  Pt pos;
  Int stage = 1;
  int sign = +1;
  friend bool operator==(const Mark&, const Mark&) = default;
  friend auto operator<=>(const Mark&, const Mark&) = default;
};

struct MarkClasses {
  std::set<Pt> shared;    // marks on the final-stage unit edges
  std::set<Pt> tagged;    // extreme marks of every stage segment, plus shared
  std::set<Pt> endpoint;  // 4 boundary dots
  std::set<Pt> plain;     // remaining interior marks
};

/// Interior template points on the edges of a free subdivision, with their
/// stage tags and checkerboard signs. Exactly P-1 dots and Q-1 boxes.
struct BoxDotDiagram {
  Subdivision sub;
  BoxDotTemplate tmpl;
  std::vector<Mark> dots;   // row-major
  std::vector<Mark> boxes;  // row-major
  MarkClasses classes;

  const TwistVector& twist() const { return sub.twist; }
  const FlypeVector& flype() const { return sub.flype; }
};

inline BoxDotDiagram make_diagram(const Subdivision& s, const BoxDotTemplate& t) {
  if (s.frac.p != t.p || s.frac.q != t.q)
    throw std::invalid_argument("subdivision and template built from different fractions");
  BoxDotDiagram d;
  d.sub = s;
  d.tmpl = t;
  Int n = s.stage_count();
  for (const Segment& seg : s.segments) {
    bool final_stage = (seg.stage == n);
    if (seg.vertical) {
      for (Int z = seg.a + 1; z < seg.b; z += 2) {
        Pt m{seg.c, z};
        d.dots.push_back({m, seg.stage, t.sign(m)});
        bool extreme = (z == seg.a + 1 || z == seg.b - 1);
        if (final_stage) d.classes.shared.insert(m);
        if (extreme || final_stage) d.classes.tagged.insert(m);
      }
    } else {
      for (Int x = seg.a + 1; x < seg.b; x += 2) {
        Pt m{x, seg.c};
        d.boxes.push_back({m, seg.stage, t.sign(m)});
        bool extreme = (x == seg.a + 1 || x == seg.b - 1);
        if (final_stage) d.classes.shared.insert(m);
        if (extreme || final_stage) d.classes.tagged.insert(m);
      }
    }
  }
  auto row_major = [](const Mark& a, const Mark& b) { return a.pos < b.pos; };
  std::sort(d.dots.begin(), d.dots.end(), row_major);
  std::sort(d.boxes.begin(), d.boxes.end(), row_major);
  for (Pt e : t.endpoint_dots()) d.classes.endpoint.insert(e);
  for (const auto& m : d.dots)
    if (!d.classes.tagged.count(m.pos)) d.classes.plain.insert(m.pos);
  for (const auto& m : d.boxes)
    if (!d.classes.tagged.count(m.pos)) d.classes.plain.insert(m.pos);

  if (static_cast<Int>(d.dots.size()) != t.p - 1 || static_cast<Int>(d.boxes.size()) != t.q - 1)
    throw std::logic_error("diagram mark counts do not match P-1 / Q-1");
  return d;
}

inline BoxDotDiagram make_diagram(const Fraction& q, const FlypeVector& f) {
  return make_diagram(subdivide(q, f), make_template(q));
}

inline BoxDotDiagram standard_diagram(const Fraction& q) {
  return make_diagram(subdivide(q), make_template(q));
}

/// Exponent-move image of the standard diagram: rebuilds through the free
/// subdivision selected by f.
inline BoxDotDiagram apply_f_move(const TwistVector& v, const FlypeVector& f) {
  if (!is_regular(v)) throw std::invalid_argument("twist vector is not regular");
  validate_flype(v, f);
  return make_diagram(cf_value(v), f);
}

inline MarkClasses mark_classes(const BoxDotDiagram& d) { return d.classes; }

}  // namespace legtangle
