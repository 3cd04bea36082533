#pragma once

#include <optional>
#include <set>
#include <vector>

#include "legtangle/front.hpp"

namespace legtangle {

/// Ordered tagged-elliptic data per strand. Entries are the tagged dots met
/// as local extrema along each oriented strand; a dot on a final-stage unit
/// edge is an extremum of both strands and appears in both lists.
struct EllipticProfile {
  Int p = 1, q = 1;
  std::vector<Pt> e1, e2;
  std::set<Pt> shared;

  std::vector<bool> flags(int which) const {
    const auto& e = which == 1 ? e1 : e2;
    std::vector<bool> out;
    out.reserve(e.size());
    for (Pt m : e) out.push_back(shared.count(m) > 0);
    return out;
  }

  /// (index in e1, index in e2) for each shared id, sorted.
  std::vector<std::pair<Int, Int>> shared_index_pairs() const {
    std::vector<std::pair<Int, Int>> out;
    for (Pt m : shared) {
      Int i1 = -1, i2 = -1;
      for (std::size_t i = 0; i < e1.size(); ++i)
        if (e1[i] == m) i1 = static_cast<Int>(i);
      for (std::size_t i = 0; i < e2.size(); ++i)
        if (e2[i] == m) i2 = static_cast<Int>(i);
      if (i1 < 0 || i2 < 0) throw std::logic_error("shared elliptic missing from a strand");
      out.push_back({i1, i2});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<Int> shared_block_start(int which) const {
    const auto& e = which == 1 ? e1 : e2;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (shared.count(e[i])) return static_cast<Int>(i);
    return std::nullopt;
  }
};

/// Reads the profile off a traced front: every extremum event names a dot
/// that must be tagged, by construction at the end of a stage segment.
inline EllipticProfile elliptic_profile(const BoxDotDiagram& d, const TangleFront& fp) {
  EllipticProfile pr;
  pr.p = d.tmpl.p;
  pr.q = d.tmpl.q;
  // even-length vectors share boxes, which are not elliptics
  for (Pt m : d.classes.shared)
    if (d.tmpl.is_dot(m)) pr.shared.insert(m);
  auto walk = [&](const TangleFront::Strand& s, std::vector<Pt>& out) {
    for (const auto& ev : s.events) {
      if (ev.kind != EventKind::Min && ev.kind != EventKind::Max) continue;
      if (!d.classes.tagged.count(ev.mark))
        throw std::logic_error("strand extremum at an untagged dot");
      out.push_back(ev.mark);
    }
  };
  walk(fp.strand1, pr.e1);
  walk(fp.strand2, pr.e2);
  return pr;
}

inline EllipticProfile elliptic_profile(const BoxDotDiagram& d) {
  return elliptic_profile(d, build_front(d));
}

}  // namespace legtangle
