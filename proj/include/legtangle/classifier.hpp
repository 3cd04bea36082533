#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "legtangle/invariants.hpp"
#include "legtangle/profile.hpp"

namespace legtangle {

/// Sum of odd-stage exponents below the final stage.
inline Int sigma(const TwistVector& v, const FlypeVector& f) {
  validate_flype(v, f);
  Int s = 0;
  for (Int j = 1; j < v.n(); j += 2) s += f.stage(j);
  return s;
}

/// Restriction of sigma to stages whose preceding subtangle has
/// connectivity type infinity.
inline Int sigma_inf(const TwistVector& v, const FlypeVector& f) {
  validate_flype(v, f);
  Int s = 0;
  for (Int j = 1; j < v.n(); j += 2)
    if (subtangle_connectivity(v, j) == Connectivity::Inf) s += f.stage(j);
  return s;
}

/// Zeroes the final-stage exponent and every even-stage exponent; tangles
/// with equal canonical exponents differ only by moves that preserve the
/// Legendrian isotopy class.
inline FlypeVector canonicalize(const TwistVector& v, const FlypeVector& f) {
  validate_flype(v, f);
  FlypeVector out = f;
  out.stage_ref(v.n()) = 0;
  for (Int j = 2; j < v.n(); j += 2) out.stage_ref(j) = 0;
  return out;
}

struct CardinalityResult {
  bool pass = true;
  int failing_strand = 0;  // 1 or 2 when !pass
};

inline CardinalityResult cardinality_check(const EllipticProfile& a, const EllipticProfile& b) {
  if (a.p != b.p || a.q != b.q)
    throw std::invalid_argument("profiles come from different fractions");
  if (a.e1.size() != b.e1.size()) return {false, 1};
  if (a.e2.size() != b.e2.size()) return {false, 2};
  return {true, 0};
}

struct BijectionResult {
  bool consistent = true;
  std::pair<Int, Int> witness{-1, -1};  // offending shared index pair
};

/// The order-preserving strandwise bijections respect shared ids exactly
/// when both profiles carry the same set of shared index pairs.
inline BijectionResult bijection_obstruction(const EllipticProfile& a, const EllipticProfile& b) {
  auto pa = a.shared_index_pairs();
  auto pb = b.shared_index_pairs();
  if (pa == pb) return {};
  for (const auto& pr : pa)
    if (std::find(pb.begin(), pb.end(), pr) == pb.end()) return {false, pr};
  return {false, pb.empty() ? std::pair<Int, Int>{-1, -1} : pb.front()};
}

enum class Outcome { Isotopic, NotIsotopic, Unknown };

inline std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Isotopic: return "Isotopic";
    case Outcome::NotIsotopic: return "NotIsotopic";
    default: return "Unknown";
  }
}

/// Precomputed per-exponent-vector data feeding the decision rules.
struct TangleData {
  Fraction q;
  TwistVector v;
  FlypeVector f;
  FlypeVector canonical;
  Int sig = 0, sig_inf = 0;
  EllipticProfile profile;
  std::array<ClassicalInvariants, 2> strands{};
};

inline TangleData tangle_data(const Fraction& q, const FlypeVector& f,
                              StrandWrithe convention = StrandWrithe::SelfOnly) {
  TangleData td;
  td.q = q;
  td.v = regular_cf(q);
  td.f = f;
  td.canonical = canonicalize(td.v, f);
  td.sig = sigma(td.v, f);
  td.sig_inf = sigma_inf(td.v, f);
  BoxDotDiagram d = make_diagram(q, f);
  TangleFront fp = build_front(d);
  td.profile = elliptic_profile(d, fp);
  td.strands = strandwise_invariants(fp, convention);
  return td;
}

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::string rule;  // decision rule identifier, empty for Unknown
  std::string witness;
  // evidence shared by every verdict
  std::array<Int, 2> sig{}, sig_inf{};
  std::array<std::array<Int, 2>, 2> cardinalities{};  // [tangle][strand]
  std::array<std::vector<std::pair<Int, Int>>, 2> shared_pairs{};
  std::array<std::array<ClassicalInvariants, 2>, 2> strands{};
  std::array<std::string, 2> canonical{};
};

/// Decision rules, in order: equal canonical exponents prove isotopy;
/// differing infinity-stage flype counts, differing odd-length flype
/// totals, cardinality mismatch, shared-position mismatch, or unequal
/// strandwise invariants each refute it; otherwise unknown.
inline Verdict classify(const TangleData& a, const TangleData& b) {
  if (a.q != b.q) throw std::invalid_argument("tangles come from different fractions");
  Verdict v;
  v.sig = {a.sig, b.sig};
  v.sig_inf = {a.sig_inf, b.sig_inf};
  v.cardinalities = {{{static_cast<Int>(a.profile.e1.size()), static_cast<Int>(a.profile.e2.size())},
                      {static_cast<Int>(b.profile.e1.size()), static_cast<Int>(b.profile.e2.size())}}};
  v.shared_pairs = {a.profile.shared_index_pairs(), b.profile.shared_index_pairs()};
  v.strands = {a.strands, b.strands};
  v.canonical = {vector_notation(a.v, a.canonical), vector_notation(b.v, b.canonical)};

  if (a.canonical == b.canonical) {
    v.outcome = Outcome::Isotopic;
    v.rule = "vertical_flype_equivalence";
    v.witness = v.canonical[0];
    return v;
  }
  if (a.sig_inf != b.sig_inf) {
    v.outcome = Outcome::NotIsotopic;
    v.rule = "infinity_subtangle_count";
    v.witness = std::to_string(a.sig_inf) + " != " + std::to_string(b.sig_inf);
    return v;
  }
  if (a.v.n() % 2 == 1 && a.sig != b.sig) {
    v.outcome = Outcome::NotIsotopic;
    v.rule = "horizontal_flype_total";
    v.witness = std::to_string(a.sig) + " != " + std::to_string(b.sig);
    return v;
  }
  auto card = cardinality_check(a.profile, b.profile);
  if (!card.pass) {
    v.outcome = Outcome::NotIsotopic;
    v.rule = "elliptic_cardinality";
    v.witness = "strand " + std::to_string(card.failing_strand);
    return v;
  }
  auto bij = bijection_obstruction(a.profile, b.profile);
  if (!bij.consistent) {
    v.outcome = Outcome::NotIsotopic;
    v.rule = "shared_position_obstruction";
    v.witness = "(" + std::to_string(bij.witness.first) + "," +
                std::to_string(bij.witness.second) + ")";
    return v;
  }
  // only tb and r are invariants; raw writhe and cusp counts are not
  auto tb_r = [](const std::array<ClassicalInvariants, 2>& s) {
    return std::array<std::pair<Int, Int>, 2>{
        {{s[0].tb2, s[0].r2}, {s[1].tb2, s[1].r2}}};
  };
  if (tb_r(a.strands) != tb_r(b.strands)) {
    v.outcome = Outcome::NotIsotopic;
    v.rule = "strandwise_invariants";
    int which = tb_r(a.strands)[0] == tb_r(b.strands)[0] ? 2 : 1;
    v.witness = "strand " + std::to_string(which);
    return v;
  }
  v.outcome = Outcome::Unknown;
  return v;
}

inline Verdict classify_pair(const Fraction& q, const FlypeVector& f, const FlypeVector& g,
                             StrandWrithe convention = StrandWrithe::SelfOnly) {
  return classify(tangle_data(q, f, convention), tangle_data(q, g, convention));
}

}  // namespace legtangle
