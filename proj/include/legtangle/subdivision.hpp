#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "legtangle/cf.hpp"

namespace legtangle {

/// Axis-aligned square, doubled coordinates for the lower-left corner,
/// undoubled side length.
struct Square {
  Int x = 0, z = 0;
  Int size = 1;
  Int stage = 1;
  friend bool operator==(const Square&, const Square&) = default;
  friend auto operator<=>(const Square&, const Square&) = default;
};

struct Rect {
  Int x0 = 0, z0 = 0, x1 = 0, z1 = 0;  // doubled
  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Maximal edge added to the subdivision at a given stage. Vertical
/// segments sit at x = c spanning z in [a, b]; horizontal at z = c.
struct Segment {
  bool vertical = true;
  Int c = 0;
  Int a = 0, b = 0;  // doubled range along the segment
  Int stage = 1;
};

/// Square subdivision of [0,P]x[0,Q] selected by a flype-exponent vector.
/// The zero vector gives the standard position: stage-j squares at the
/// right (j odd) or bottom (j even) of the remainder rectangle.
struct Subdivision {
  Fraction frac;
  TwistVector twist;
  FlypeVector flype;        // as applied: final-stage exponent zeroed
  bool final_stage_exponent_dropped = false;
  std::vector<Int> sizes;   // sizes[j-1] = square side at stage j; last is 1
  std::vector<Square> squares;
  std::vector<Rect> remainder_rects;  // remainder_rects[j-1] = final R_j box
  std::vector<Segment> segments;

  Int stage_count() const { return twist.n(); }
};

namespace detail {

inline bool rect_contains(const Rect& r, const Square& s) {
  return s.x >= r.x0 && s.x + 2 * s.size <= r.x1 && s.z >= r.z0 && s.z + 2 * s.size <= r.z1;
}

}  // namespace detail

inline Subdivision subdivide(const Fraction& q, const FlypeVector& f_in) {
  StageData st = cf_stages(q);
  Int n = st.n();
  TwistVector twist;
  twist.c.assign(st.counts.rbegin(), st.counts.rend());
  validate_flype(twist, f_in);

  Subdivision out;
  out.frac = q;
  out.twist = twist;
  out.flype = f_in;
  out.sizes = st.sizes;
  if (out.flype.stage(n) != 0) {
    out.flype.stage_ref(n) = 0;
    out.final_stage_exponent_dropped = true;
  }

  // standard position
  std::vector<Rect> rects(static_cast<std::size_t>(n) + 1);
  rects[0] = {0, 0, 2 * q.p, 2 * q.q};
  std::vector<Square>& squares = out.squares;
  for (Int j = 1; j <= n; ++j) {
    Rect r = rects[static_cast<std::size_t>(j - 1)];
    Int side = st.sizes[static_cast<std::size_t>(j - 1)];
    Int count = st.counts[static_cast<std::size_t>(j - 1)];
    if (j % 2 == 1) {
      for (Int t = 0; t < count; ++t)
        squares.push_back({r.x1 - (t + 1) * 2 * side, r.z0, side, j});
      if (j < n) {
        Int next = st.sizes[static_cast<std::size_t>(j)];
        rects[static_cast<std::size_t>(j)] = {r.x0, r.z0, r.x0 + 2 * next, r.z1};
      }
    } else {
      for (Int t = 0; t < count; ++t)
        squares.push_back({r.x0, r.z0 + t * 2 * side, side, j});
      if (j < n) {
        Int next = st.sizes[static_cast<std::size_t>(j)];
        rects[static_cast<std::size_t>(j)] = {r.x0, r.z1 - 2 * next, r.x1, r.z1};
      }
    }
  }

  // exponent moves, innermost stage first: reflect the remainder box
  // contents, then transpose the box with the adjacent stage square
  for (Int j = n - 1; j >= 1; --j) {
    Int moves = out.flype.stage(j);
    Int step = 2 * st.sizes[static_cast<std::size_t>(j - 1)];
    for (Int t = 0; t < moves; ++t) {
      Rect bb = rects[static_cast<std::size_t>(j)];  // current R_{j+1}
      auto reflect_span = [&](Int lo, Int hi, Int& a, Int& b) {
        Int na = lo + hi - b;
        Int nb = lo + hi - a;
        a = na;
        b = nb;
      };
      for (auto& s : squares) {
        if (!detail::rect_contains(bb, s)) continue;
        if (j % 2 == 1)
          s.z = bb.z0 + bb.z1 - s.z - 2 * s.size;
        else
          s.x = bb.x0 + bb.x1 - s.x - 2 * s.size;
      }
      for (Int k = j + 1; k < n; ++k) {
        Rect& rk = rects[static_cast<std::size_t>(k)];
        if (j % 2 == 1)
          reflect_span(bb.z0, bb.z1, rk.z0, rk.z1);
        else
          reflect_span(bb.x0, bb.x1, rk.x0, rk.x1);
      }
      // transpose with the adjacent stage-j square
      Square* adj = nullptr;
      for (auto& s : squares) {
        if (s.stage != j) continue;
        if (j % 2 == 1 && s.x == bb.x1 && s.z == bb.z0) adj = &s;
        if (j % 2 == 0 && s.z + 2 * s.size == bb.z0 && s.x == bb.x0) adj = &s;
      }
      if (!adj) throw std::logic_error("missing adjacent square during exponent move");
      if (j % 2 == 1) {
        adj->x = bb.x0;
        for (auto& s : squares)
          if (&s != adj && detail::rect_contains(bb, s)) s.x += step;
        for (Int k = j; k < n; ++k) {
          rects[static_cast<std::size_t>(k)].x0 += step;
          rects[static_cast<std::size_t>(k)].x1 += step;
        }
      } else {
        adj->z = bb.z1 - step;
        for (auto& s : squares)
          if (&s != adj && detail::rect_contains(bb, s)) s.z -= step;
        for (Int k = j; k < n; ++k) {
          rects[static_cast<std::size_t>(k)].z0 -= step;
          rects[static_cast<std::size_t>(k)].z1 -= step;
        }
      }
    }
  }

  out.remainder_rects.assign(rects.begin(), rects.end() - 1);

  // stage segments: internal block boundaries of each remainder row/column
  for (Int j = 1; j <= n; ++j) {
    Int count = st.counts[static_cast<std::size_t>(j - 1)];
    if (count == 0) continue;
    Rect r = out.remainder_rects[static_cast<std::size_t>(j - 1)];
    bool vertical = (j % 2 == 1);
    std::set<Int> inner;
    if (vertical) {
      for (const auto& s : squares)
        if (s.stage == j) {
          inner.insert(s.x);
          inner.insert(s.x + 2 * s.size);
        }
      if (j < n) {
        const Rect& nb = rects[static_cast<std::size_t>(j)];
        inner.insert(nb.x0);
        inner.insert(nb.x1);
      }
      inner.erase(r.x0);
      inner.erase(r.x1);
      for (Int c : inner) out.segments.push_back({true, c, r.z0, r.z1, j});
    } else {
      for (const auto& s : squares)
        if (s.stage == j) {
          inner.insert(s.z);
          inner.insert(s.z + 2 * s.size);
        }
      if (j < n) {
        const Rect& nb = rects[static_cast<std::size_t>(j)];
        inner.insert(nb.z0);
        inner.insert(nb.z1);
      }
      inner.erase(r.z0);
      inner.erase(r.z1);
      for (Int c : inner) out.segments.push_back({false, c, r.x0, r.x1, j});
    }
    Int expected = (j < n) ? count : count - 1;
    if (static_cast<Int>(inner.size()) != expected)
      throw std::logic_error("stage segment count mismatch at stage " + std::to_string(j));
  }

  return out;
}

inline Subdivision subdivide(const Fraction& q) {
  return subdivide(q, FlypeVector::zeros(regular_cf(q).n()));
}

}  // namespace legtangle
