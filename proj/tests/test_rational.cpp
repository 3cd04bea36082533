#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "legtangle/subdivision.hpp"
#include "test_utils.hpp"

using namespace legtangle;

TEST_CASE("regular continued fraction fixtures") {
  CHECK(regular_cf(Fraction(5, 3)) == TwistVector{{2, 1, 1}});
  CHECK(regular_cf(Fraction(37, 26)) == TwistVector{{3, 1, 2, 2, 1}});
  CHECK(regular_cf(Fraction(1, 1)) == TwistVector{{1}});
  CHECK(regular_cf(Fraction(7, 4)) == TwistVector{{3, 1, 1}});
  CHECK(regular_cf(Fraction(2, 3)) == TwistVector{{2, 1, 0}});
}

TEST_CASE("fraction validation") {
  CHECK_THROWS_AS(Fraction(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(Fraction(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(Fraction(-2, 5), std::invalid_argument);
  CHECK(Fraction(10, 6) == Fraction(5, 3));
  CHECK(Fraction::was_reduced(10, 6));
  CHECK_FALSE(Fraction::was_reduced(5, 3));
}

TEST_CASE("fraction parsing") {
  CHECK(parse_fraction("5/3") == Fraction(5, 3));
  CHECK(parse_fraction("7") == Fraction(7, 1));
  bool reduced = false;
  CHECK(parse_fraction("10/6", &reduced) == Fraction(5, 3));
  CHECK(reduced);
  CHECK_THROWS_AS(parse_fraction("0/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("a/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("5/"), std::invalid_argument);
}

TEST_CASE("continued fraction value") {
  CHECK(cf_value(TwistVector{{2, 1, 1}}) == Fraction(5, 3));
  // trailing zero evaluates below one: 0 + 1/(1 + 1/2)
  CHECK(cf_value(TwistVector{{2, 1, 0}}) == Fraction(2, 3));
  CHECK(cf_value(TwistVector{{1}}) == Fraction(1, 1));
  CHECK(cf_value(TwistVector{{3, 1, 2, 2, 1}}) == Fraction(37, 26));
  CHECK_THROWS(cf_value(TwistVector{{}}));
}

TEST_CASE("round trip and regularity over all reduced fractions up to 200") {
  for (const Fraction& f : testutil::reduced_fractions(200, 200)) {
    TwistVector v = regular_cf(f);
    REQUIRE(is_regular(v));
    REQUIRE(cf_value(v) == f);
    // regularity conditions, spelled out
    Int n = v.n();
    if (n > 1) REQUIRE(v.stage(n) >= 2);
    if (n == 1 && f.p > 1) REQUIRE(v.stage(1) >= 2);
    for (Int j = 2; j < n; ++j) REQUIRE(v.stage(j) >= 1);
    REQUIRE(v.stage(1) >= 0);
    REQUIRE((v.stage(1) == 0) == (f.p < f.q));
  }
}

TEST_CASE("vector notation parsing") {
  TwistVector v;
  FlypeVector f;
  parse_vector_notation("(2,1^1,1)", v, f);
  CHECK(v == TwistVector{{2, 1, 1}});
  CHECK(f == FlypeVector{{0, 1, 0}});
  parse_vector_notation(" 2 , 1 ^ 1 , 1 ", v, f);
  CHECK(v == TwistVector{{2, 1, 1}});
  CHECK(f == FlypeVector{{0, 1, 0}});
  parse_vector_notation("(3)", v, f);
  CHECK(v == TwistVector{{3}});
  CHECK_THROWS_AS(parse_vector_notation("(2,,1)", v, f), std::invalid_argument);
  CHECK_THROWS_AS(parse_vector_notation("", v, f), std::invalid_argument);
  CHECK(vector_notation(TwistVector{{2, 1, 1}}, FlypeVector{{0, 1, 0}}) == "(2,1^1,1)");
}

TEST_CASE("flype vector enumeration counts") {
  CHECK(enumerate_flype_vectors(TwistVector{{2, 1, 1}}).size() == 4);
  CHECK(enumerate_flype_vectors(TwistVector{{3}}).size() == 1);
  auto all = enumerate_flype_vectors(TwistVector{{2, 1, 2, 1, 1}});
  // brute product over the non-final stages: (1+1)(2+1)(1+1)(1+1)
  CHECK(all.size() == 24);
  std::set<FlypeVector> uniq(all.begin(), all.end());
  CHECK(uniq.size() == all.size());
  for (const auto& f : all) CHECK(f.stage(5) == 0);
  // lexicographic in notation order
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].e < all[i].e);
}

TEST_CASE("subdivision of 5/3 in standard position") {
  Subdivision s = subdivide(Fraction(5, 3));
  REQUIRE(s.squares.size() == 4);
  std::set<Square> sq(s.squares.begin(), s.squares.end());
  CHECK(sq.count(Square{4, 0, 3, 1}));
  CHECK(sq.count(Square{0, 0, 2, 2}));
  CHECK(sq.count(Square{0, 4, 1, 3}));
  CHECK(sq.count(Square{2, 4, 1, 3}));
  CHECK(s.sizes == std::vector<Int>{3, 2, 1});
}

TEST_CASE("subdivision squares count 37/26") {
  Subdivision s = subdivide(Fraction(37, 26));
  CHECK(s.squares.size() == 9);  // 3+1+2+2+1
}

TEST_CASE("exponent move geometry for 5/3") {
  // one move at stage 1: remainder content reflects vertically and lands right
  FlypeVector f{{0, 0, 1}};
  Subdivision s = subdivide(Fraction(5, 3), f);
  std::set<Square> sq(s.squares.begin(), s.squares.end());
  CHECK(sq.count(Square{0, 0, 3, 1}));
  CHECK(sq.count(Square{6, 2, 2, 2}));
  CHECK(sq.count(Square{6, 0, 1, 3}));
  CHECK(sq.count(Square{8, 0, 1, 3}));

  // one move at stage 2: unit row lands at the bottom of the remainder
  Subdivision s2 = subdivide(Fraction(5, 3), FlypeVector{{0, 1, 0}});
  std::set<Square> sq2(s2.squares.begin(), s2.squares.end());
  CHECK(sq2.count(Square{4, 0, 3, 1}));
  CHECK(sq2.count(Square{0, 2, 2, 2}));
  CHECK(sq2.count(Square{0, 0, 1, 3}));
  CHECK(sq2.count(Square{2, 0, 1, 3}));

  // both moves compose through the stage-1 reflection
  Subdivision s3 = subdivide(Fraction(5, 3), FlypeVector{{0, 1, 1}});
  std::set<Square> sq3(s3.squares.begin(), s3.squares.end());
  CHECK(sq3.count(Square{0, 0, 3, 1}));
  CHECK(sq3.count(Square{6, 0, 2, 2}));
  CHECK(sq3.count(Square{6, 4, 1, 3}));
  CHECK(sq3.count(Square{8, 4, 1, 3}));
}

TEST_CASE("subdivision validation") {
  CHECK_THROWS_AS(subdivide(Fraction(5, 3), FlypeVector{{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(subdivide(Fraction(5, 3), FlypeVector{{0, 2, 0}}), std::invalid_argument);
  // final-stage exponent is dropped, not rejected
  Subdivision s = subdivide(Fraction(5, 3), FlypeVector{{2, 0, 0}});
  CHECK(s.final_stage_exponent_dropped);
  CHECK(s.flype == FlypeVector{{0, 0, 0}});
}

TEST_CASE("subdivision tiling properties") {
  for (const Fraction& f : testutil::reduced_fractions(24, 24)) {
    TwistVector v = regular_cf(f);
    for (const FlypeVector& fl : enumerate_flype_vectors(v)) {
      Subdivision s = subdivide(f, fl);
      Int total = 0, area = 0;
      for (const auto& sq : s.squares) {
        total += 1;
        area += sq.size * sq.size;
        REQUIRE(sq.x >= 0);
        REQUIRE(sq.z >= 0);
        REQUIRE(sq.x + 2 * sq.size <= 2 * f.p);
        REQUIRE(sq.z + 2 * sq.size <= 2 * f.q);
      }
      Int expect_count = 0;
      for (Int c : v.c) expect_count += c;
      REQUIRE(total == expect_count);
      REQUIRE(area == f.p * f.q);
      REQUIRE(s.sizes.back() == 1);
      // pairwise interior-disjoint via area + containment is enough here,
      // but also check no two squares overlap
      for (std::size_t i = 0; i < s.squares.size(); ++i)
        for (std::size_t j = i + 1; j < s.squares.size(); ++j) {
          const auto &a = s.squares[i], &b = s.squares[j];
          bool sep = a.x + 2 * a.size <= b.x || b.x + 2 * b.size <= a.x ||
                     a.z + 2 * a.size <= b.z || b.z + 2 * b.size <= a.z;
          REQUIRE(sep);
        }
    }
  }
}

TEST_CASE("distinct exponent vectors give distinct subdivisions") {
  for (const Fraction& f : testutil::reduced_fractions(16, 16)) {
    TwistVector v = regular_cf(f);
    auto all = enumerate_flype_vectors(v);
    std::set<std::set<Square>> seen;
    for (const FlypeVector& fl : all) {
      Subdivision s = subdivide(f, fl);
      seen.insert(std::set<Square>(s.squares.begin(), s.squares.end()));
    }
    Int product = 1;
    for (Int j = 1; j < v.n(); ++j) product *= v.stage(j) + 1;
    REQUIRE(static_cast<Int>(seen.size()) == product);
    REQUIRE(static_cast<Int>(all.size()) == product);
  }
}
