#pragma once

#include <json.hpp>

#include "legtangle/classifier.hpp"
#include "legtangle/version.hpp"

namespace legtangle {

using json = nlohmann::json;

inline json pt_json(Pt m) { return json::array({m.x, m.z}); }

inline json pts_json(const std::set<Pt>& pts) {
  json out = json::array();
  for (Pt m : pts) out.push_back(pt_json(m));
  return out;
}

inline json diagram_json(const BoxDotDiagram& d) {
  json j;
  j["schema"] = kSchema;
  j["p"] = d.tmpl.p;
  j["q"] = d.tmpl.q;
  j["twist"] = d.twist().c;
  j["f"] = d.flype().e;
  if (d.sub.final_stage_exponent_dropped) j["f_final_stage_dropped"] = true;
  json dots = json::array(), boxes = json::array();
  json dot_signs = json::array(), box_signs = json::array();
  json dot_stages = json::array(), box_stages = json::array();
  for (const auto& m : d.dots) {
    dots.push_back(pt_json(m.pos));
    dot_signs.push_back(m.sign);
    dot_stages.push_back(m.stage);
  }
  for (const auto& m : d.boxes) {
    boxes.push_back(pt_json(m.pos));
    box_signs.push_back(m.sign);
    box_stages.push_back(m.stage);
  }
  j["dots"] = dots;
  j["boxes"] = boxes;
  j["signs"] = {{"dots", dot_signs}, {"boxes", box_signs}};
  j["stages"] = {{"dots", dot_stages}, {"boxes", box_stages}};
  j["classes"] = {{"shared", pts_json(d.classes.shared)},
                  {"tagged", pts_json(d.classes.tagged)},
                  {"endpoint", pts_json(d.classes.endpoint)}};
  json squares = json::array();
  for (const auto& s : d.sub.squares)
    squares.push_back({{"x", s.x}, {"z", s.z}, {"size", s.size}, {"stage", s.stage}});
  j["squares"] = squares;
  return j;
}

inline json front_json(const TangleFront& fp) {
  json j;
  j["schema"] = kSchema;
  j["p"] = fp.sub.frac.p;
  j["q"] = fp.sub.frac.q;
  j["twist"] = fp.sub.twist.c;
  j["f"] = fp.sub.flype.e;
  json arcs = json::array();
  for (const auto& a : fp.arcs)
    arcs.push_back({{"a", pt_json(a.a)},
                    {"b", pt_json(a.b)},
                    {"slope", a.negative ? "neg" : "pos"},
                    {"square", a.square},
                    {"strand", a.strand},
                    {"dir", a.dir}});
  j["arcs"] = arcs;
  json crossings = json::array();
  for (const auto& c : fp.crossings)
    crossings.push_back(
        {{"at", pt_json(c.at)}, {"over", c.over}, {"under", c.under}, {"square", c.square}});
  j["crossings"] = crossings;
  json cusps = json::array();
  json strands = json::array();
  for (int sid = 1; sid <= 2; ++sid) {
    const auto& s = fp.strand(sid);
    json ev = json::array();
    for (const auto& e : s.events) {
      const char* kind = e.kind == EventKind::Min       ? "min"
                         : e.kind == EventKind::Max     ? "max"
                         : e.kind == EventKind::CuspLeft ? "cusp-left"
                                                         : "cusp-right";
      json item = {{"at", pt_json(e.at)}, {"kind", kind}, {"mark", pt_json(e.mark)}};
      if (e.kind == EventKind::CuspLeft || e.kind == EventKind::CuspRight) {
        item["direction"] = e.downward ? "down" : "up";
        cusps.push_back(item);
      }
      ev.push_back(item);
    }
    strands.push_back(
        {{"id", s.id}, {"from", s.from}, {"to", s.to}, {"arcs", s.arcs}, {"events", ev}});
  }
  j["cusps"] = cusps;
  j["strands"] = strands;
  j["connectivity"] = connectivity_name(fp.traced);
  return j;
}

inline json strand_invariants_json(const ClassicalInvariants& ci) {
  return {{"tb2", ci.tb2}, {"r2", ci.r2}, {"writhe2", ci.writhe2},
          {"down", ci.down}, {"up", ci.up}};
}

inline json invariants_report(const BoxDotDiagram& d, StrandWrithe convention) {
  TangleFront fp = build_front(d);
  UnknotFront k = build_unknot(d.tmpl);
  UnknotInvariants ki = unknot_invariants(k);
  EllipticProfile pr = elliptic_profile(d, fp);
  auto sw = strandwise_invariants(fp, convention);
  json j;
  j["schema"] = kSchema;
  j["version"] = kVersion;
  j["convention"] = strand_writhe_name(convention);
  j["input"] = {{"q", d.sub.frac.str()}, {"vector", vector_notation(d.twist(), d.flype())}};
  j["connectivity"] = connectivity_name(fp.traced);
  j["unknot"] = {{"tb2", 2 * ki.tb},
                 {"r2", 2 * ki.r},
                 {"writhe", ki.writhe},
                 {"down", ki.down},
                 {"up", ki.up},
                 {"positive_crossings", ki.positive_crossings},
                 {"negative_crossings", ki.negative_crossings}};
  j["strands"] = json::array({strand_invariants_json(sw[0]), strand_invariants_json(sw[1])});
  json e1 = json::array(), e2 = json::array();
  for (Pt m : pr.e1) e1.push_back({{"dot", pt_json(m)}, {"shared", pr.shared.count(m) > 0}});
  for (Pt m : pr.e2) e2.push_back({{"dot", pt_json(m)}, {"shared", pr.shared.count(m) > 0}});
  j["profile"] = {{"e1", e1}, {"e2", e2}};
  return j;
}

inline json verdict_json(const Fraction& q, const std::string& f_notation,
                         const std::string& g_notation, const Verdict& v,
                         StrandWrithe convention) {
  json j;
  j["schema"] = kSchema;
  j["version"] = kVersion;
  j["convention"] = strand_writhe_name(convention);
  j["input"] = {{"q", q.str()}, {"f", f_notation}, {"g", g_notation}};
  j["outcome"] = outcome_name(v.outcome);
  j["rule"] = v.rule;
  j["witness"] = v.witness;
  json pairs_a = json::array(), pairs_b = json::array();
  for (auto [i1, i2] : v.shared_pairs[0]) pairs_a.push_back({i1, i2});
  for (auto [i1, i2] : v.shared_pairs[1]) pairs_b.push_back({i1, i2});
  j["evidence"] = {
      {"sigma", {v.sig[0], v.sig[1]}},
      {"sigma_inf", {v.sig_inf[0], v.sig_inf[1]}},
      {"cardinalities",
       {{v.cardinalities[0][0], v.cardinalities[0][1]},
        {v.cardinalities[1][0], v.cardinalities[1][1]}}},
      {"shared_index_pairs", {pairs_a, pairs_b}},
      {"strandwise",
       {{strand_invariants_json(v.strands[0][0]), strand_invariants_json(v.strands[0][1])},
        {strand_invariants_json(v.strands[1][0]), strand_invariants_json(v.strands[1][1])}}},
      {"canonical", {v.canonical[0], v.canonical[1]}}};
  return j;
}

}  // namespace legtangle
