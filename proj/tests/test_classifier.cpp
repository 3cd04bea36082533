#include <catch2/catch_amalgamated.hpp>

#include "legtangle/classifier.hpp"
#include "test_utils.hpp"

using namespace legtangle;

namespace {

FlypeVector parse_f(const std::string& s, const TwistVector& expect) {
  TwistVector v;
  FlypeVector f;
  parse_vector_notation(s, v, f);
  REQUIRE(v == expect);
  return f;
}

Verdict classify_str(const std::string& fs, const std::string& gs,
                     StrandWrithe convention = StrandWrithe::SelfOnly) {
  TwistVector v, v2;
  FlypeVector f, g;
  parse_vector_notation(fs, v, f);
  parse_vector_notation(gs, v2, g);
  REQUIRE(v == v2);
  Fraction q = cf_value(v);
  return classify_pair(q, f, g, convention);
}

}  // namespace

TEST_CASE("sigma and sigma_inf") {
  TwistVector v{{2, 1, 1, 2, 1}};
  CHECK(sigma(v, parse_f("(2,1,1^1,2,1)", v)) == 1);
  CHECK(sigma(v, FlypeVector::zeros(5)) == 0);
  CHECK(sigma_inf(v, FlypeVector::zeros(5)) == 0);
  // stage-3 subtangle of (2,1,2,1,1) is (2,1,0) ~ 2/3, type 0; only the
  // full-length stage-1 subtangle matters for sigma_inf here
  TwistVector w{{2, 1, 2, 1, 1}};
  CHECK(sigma(w, parse_f("(2,1,2^1,1,1)", w)) == 1);
  CHECK(sigma_inf(w, parse_f("(2,1,2^1,1,1)", w)) == 0);
  // (3,1,1): both below-final odd stages are infinity subtangles
  TwistVector u{{3, 1, 1}};
  CHECK(sigma_inf(u, parse_f("(3,1,1^1)", u)) == 1);
  TwistVector t{{3, 1, 1, 2, 1}};
  CHECK(sigma_inf(t, parse_f("(3,1,1^1,2,1)", t)) == 1);
  CHECK(sigma_inf(t, parse_f("(3,1,1,2,1^1)", t)) == 1);
}

TEST_CASE("canonical exponents") {
  TwistVector v{{2, 1, 1}};
  CHECK(canonicalize(v, parse_f("(2^2,1^1,1)", v)) == FlypeVector{{0, 0, 0}});
  CHECK(canonicalize(v, parse_f("(2,1,1^1)", v)) == FlypeVector{{0, 0, 1}});
  // both superscripts sit at even stages, so both zero out
  TwistVector w{{2, 1, 2, 1, 1}};
  CHECK(canonicalize(w, parse_f("(2,1^1,2,1^1,1)", w)) == FlypeVector{{0, 0, 0, 0, 0}});
  CHECK(canonicalize(w, parse_f("(2,1,2,1^1,1^1)", w)) == FlypeVector{{0, 0, 0, 0, 1}});
}

TEST_CASE("profile of the standard 5/3 diagram") {
  EllipticProfile pr = elliptic_profile(standard_diagram(Fraction(5, 3)));
  REQUIRE(pr.e1 == std::vector<Pt>{{2, 5}, {4, 5}});
  REQUIRE(pr.e2 == std::vector<Pt>{{4, 1}, {2, 5}});
  CHECK(pr.shared == std::set<Pt>{{2, 5}});
  CHECK(pr.flags(1) == std::vector<bool>{true, false});
  CHECK(pr.flags(2) == std::vector<bool>{false, true});
  CHECK(pr.shared_index_pairs() == std::vector<std::pair<Int, Int>>{{0, 1}});
}

TEST_CASE("profile of the standard 7/4 diagram") {
  EllipticProfile pr = elliptic_profile(standard_diagram(Fraction(7, 4)));
  REQUIRE(pr.e1 == std::vector<Pt>{{2, 7}, {4, 7}});
  REQUIRE(pr.e2 == std::vector<Pt>{{6, 1}, {2, 7}, {4, 7}, {6, 7}});
  CHECK(pr.shared_index_pairs() == std::vector<std::pair<Int, Int>>{{0, 1}, {1, 2}});
  CHECK(pr.shared_block_start(1) == Int{0});
}

TEST_CASE("profile of the flyped 7/4 diagram") {
  TwistVector v{{3, 1, 1}};
  EllipticProfile pr = elliptic_profile(make_diagram(Fraction(7, 4), parse_f("(3,1,1^1)", v)));
  REQUIRE(pr.e1 == std::vector<Pt>{{8, 1}, {10, 1}, {12, 1}, {8, 7}});
  REQUIRE(pr.e2 == std::vector<Pt>{{10, 1}, {12, 1}});
  CHECK(pr.shared_block_start(1) == Int{1});
}

TEST_CASE("infinity-stage single flypes move two elliptics between strands") {
  for (const TwistVector& v : testutil::regular_vectors_up_to(8)) {
    Fraction q = cf_value(v);
    for (const FlypeVector& fl : enumerate_flype_vectors(v)) {
      EllipticProfile base = elliptic_profile(make_diagram(q, fl));
      for (Int j = 1; j < v.n(); j += 2) {
        if (fl.stage(j) >= v.stage(j)) continue;
        FlypeVector next = fl;
        next.stage_ref(j) += 1;
        EllipticProfile moved = elliptic_profile(make_diagram(q, next));
        bool inf_stage = subtangle_connectivity(v, j) == Connectivity::Inf;
        Int d1 = static_cast<Int>(moved.e1.size()) - static_cast<Int>(base.e1.size());
        Int d2 = static_cast<Int>(moved.e2.size()) - static_cast<Int>(base.e2.size());
        if (inf_stage) {
          REQUIRE(d1 == 2);
          REQUIRE(d2 == -2);
        } else {
          REQUIRE(d1 == 0);
          REQUIRE(d2 == 0);
        }
      }
    }
  }
}

TEST_CASE("each single horizontal flype advances the shared block by one") {
  for (const TwistVector& v : testutil::regular_vectors_up_to(8)) {
    if (v.n() % 2 == 0 || v.n() == 1) continue;
    if (v.stage(v.n()) < 2) continue;  // no shared ids without unit edges
    Fraction q = cf_value(v);
    for (const FlypeVector& fl : enumerate_flype_vectors(v)) {
      EllipticProfile base = elliptic_profile(make_diagram(q, fl));
      auto start = base.shared_block_start(1);
      REQUIRE(start.has_value());
      REQUIRE(*start == sigma(v, fl));
      for (Int j = 1; j < v.n(); j += 2) {
        if (fl.stage(j) >= v.stage(j)) continue;
        FlypeVector next = fl;
        next.stage_ref(j) += 1;
        EllipticProfile moved = elliptic_profile(make_diagram(q, next));
        REQUIRE(*moved.shared_block_start(1) == *start + 1);
      }
    }
  }
}

TEST_CASE("vertical flypes change no profile data") {
  for (const TwistVector& v : testutil::regular_vectors_up_to(8)) {
    Fraction q = cf_value(v);
    for (const FlypeVector& fl : enumerate_flype_vectors(v)) {
      for (Int j = 2; j < v.n(); j += 2) {
        if (fl.stage(j) >= v.stage(j)) continue;
        FlypeVector next = fl;
        next.stage_ref(j) += 1;
        EllipticProfile a = elliptic_profile(make_diagram(q, fl));
        EllipticProfile b = elliptic_profile(make_diagram(q, next));
        REQUIRE(a.flags(1) == b.flags(1));
        REQUIRE(a.flags(2) == b.flags(2));
        REQUIRE(a.shared_index_pairs() == b.shared_index_pairs());
      }
    }
  }
}

TEST_CASE("cardinality check") {
  Fraction q(7, 4);
  TwistVector v = regular_cf(q);
  EllipticProfile a = elliptic_profile(standard_diagram(q));
  CHECK(cardinality_check(a, a).pass);
  EllipticProfile b = elliptic_profile(make_diagram(q, parse_f("(3,1,1^1)", v)));
  auto res = cardinality_check(a, b);
  CHECK_FALSE(res.pass);
  CHECK(res.failing_strand == 1);
  EllipticProfile other = elliptic_profile(standard_diagram(Fraction(5, 3)));
  CHECK_THROWS_AS(cardinality_check(a, other), std::invalid_argument);
}

TEST_CASE("bijection obstruction distinguishes the middle-flype pair") {
  TwistVector v{{2, 1, 2, 1, 1}};
  Fraction q = cf_value(v);
  EllipticProfile a = elliptic_profile(make_diagram(q, parse_f("(2,1,2^1,1,1)", v)));
  EllipticProfile b = elliptic_profile(make_diagram(q, parse_f("(2,1,2,1,1^1)", v)));
  auto card = cardinality_check(a, b);
  REQUIRE(card.pass);
  // the shared elliptic sits at the same place along strand one but not two
  CHECK(a.shared_block_start(1) == b.shared_block_start(1));
  auto res = bijection_obstruction(a, b);
  CHECK_FALSE(res.consistent);
  CHECK(bijection_obstruction(a, a).consistent);
}

TEST_CASE("bijection obstruction passes for the edge-flype pair") {
  TwistVector v{{2, 1, 1, 2, 1}};
  Fraction q = cf_value(v);
  EllipticProfile a = elliptic_profile(make_diagram(q, parse_f("(2,1,1^1,2,1)", v)));
  EllipticProfile b = elliptic_profile(make_diagram(q, parse_f("(2,1,1,2,1^1)", v)));
  CHECK(cardinality_check(a, b).pass);
  CHECK(bijection_obstruction(a, b).consistent);
}

TEST_CASE("classification fixture matrix") {
  SECTION("vertical flype pairs are isotopic") {
    Verdict v = classify_str("(2,1^1,1)", "(2,1,1)");
    CHECK(v.outcome == Outcome::Isotopic);
    CHECK(v.rule == "vertical_flype_equivalence");
  }
  SECTION("edge-flype pair falls to strandwise invariants") {
    Verdict v = classify_str("(2,1,1^1,2,1)", "(2,1,1,2,1^1)");
    CHECK(v.outcome == Outcome::NotIsotopic);
    CHECK(v.rule == "strandwise_invariants");
  }
  SECTION("infinity edge-flype pair falls to strandwise invariants") {
    Verdict v = classify_str("(3,1,1^1,2,1)", "(3,1,1,2,1^1)");
    CHECK(v.outcome == Outcome::NotIsotopic);
    CHECK(v.rule == "strandwise_invariants");
  }
  SECTION("middle-flype pair falls to the shared position obstruction") {
    Verdict v = classify_str("(2,1,2^1,1,1)", "(2,1,2,1,1^1)");
    CHECK(v.outcome == Outcome::NotIsotopic);
    CHECK(v.rule == "shared_position_obstruction");
    // its strandwise invariants all vanish
    TwistVector w{{2, 1, 2, 1, 1}};
    Fraction q = cf_value(w);
    for (const std::string& s : {"(2,1,2^1,1,1)", "(2,1,2,1,1^1)"}) {
      auto sw = strandwise_invariants(build_front(make_diagram(q, parse_f(s, w))));
      for (const auto& ci : sw) {
        CHECK(ci.tb2 == 0);
        CHECK(ci.r2 == 0);
      }
    }
  }
  SECTION("double-flype pair stays unknown") {
    Verdict v = classify_str("(2,1,2^2,2,2)", "(2,1,2,2,2^2)");
    CHECK(v.outcome == Outcome::Unknown);
    CHECK(v.rule.empty());
  }
  SECTION("distinct infinity-stage counts") {
    Verdict v = classify_str("(3,1,1^1)", "(3,1,1)");
    CHECK(v.outcome == Outcome::NotIsotopic);
    CHECK(v.rule == "infinity_subtangle_count");
  }
}

TEST_CASE("classification is symmetric and sound on a small sweep") {
  for (const TwistVector& v : testutil::regular_vectors_up_to(6)) {
    Fraction q = cf_value(v);
    auto all = enumerate_flype_vectors(v);
    std::vector<TangleData> data;
    for (const auto& fl : all) data.push_back(tangle_data(q, fl));
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i; j < all.size(); ++j) {
        Verdict ab = classify(data[i], data[j]);
        Verdict ba = classify(data[j], data[i]);
        REQUIRE(ab.outcome == ba.outcome);
        REQUIRE(ab.rule == ba.rule);
        if (ab.outcome == Outcome::Isotopic) {
          REQUIRE(data[i].sig_inf == data[j].sig_inf);
          if (v.n() % 2 == 1) REQUIRE(data[i].sig == data[j].sig);
          REQUIRE(cardinality_check(data[i].profile, data[j].profile).pass);
          REQUIRE(bijection_obstruction(data[i].profile, data[j].profile).consistent);
          for (int k = 0; k < 2; ++k) {
            REQUIRE(data[i].strands[k].tb2 == data[j].strands[k].tb2);
            REQUIRE(data[i].strands[k].r2 == data[j].strands[k].r2);
          }
        }
        if (i == j) REQUIRE(ab.outcome == Outcome::Isotopic);
      }
  }
}

TEST_CASE("strand writhe convention calibrates to self-crossings") {
  // the reference zero values pick out the self-only convention
  TwistVector w{{2, 1, 2, 1, 1}};
  Fraction q = cf_value(w);
  bool self_all_zero = true, mixed_all_zero = true;
  for (const std::string& s : {"(2,1,2^1,1,1)", "(2,1,2,1,1^1)"}) {
    for (auto conv : {StrandWrithe::SelfOnly, StrandWrithe::HalfMixed}) {
      auto sw = strandwise_invariants(build_front(make_diagram(q, parse_f(s, w))), conv);
      bool zero = true;
      for (const auto& ci : sw) zero = zero && ci.tb2 == 0 && ci.r2 == 0;
      (conv == StrandWrithe::SelfOnly ? self_all_zero : mixed_all_zero) &= zero;
    }
  }
  CHECK(self_all_zero);
  CHECK_FALSE(mixed_all_zero);
}
