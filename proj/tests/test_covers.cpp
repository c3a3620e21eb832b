#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "mnm/covers.hpp"

using namespace mnm;

TEST_CASE("validate_gomic sorts and accepts a proper cover") {
  GomicCover c = validate_gomic({Interval::open(1.4, 3.5), Interval::open(-0.5, 1.6)});
  REQUIRE(c.size() == 2);
  CHECK(c.intervals[0].lo == -0.5);
  CHECK(c.lo() == -0.5);
  CHECK(c.hi() == 3.5);
  CHECK(c.granularity() == doctest::Approx(2.1));
  CHECK(c.covers(1.5));
  CHECK(c.covers(1.6));  // endpoint of one interval, interior of the other
  CHECK_FALSE(c.covers(-0.5));
  CHECK_FALSE(c.covers(3.6));
}

TEST_CASE("validate_gomic rejects bad covers") {
  CHECK_THROWS_AS(validate_gomic({}), error);
  // nested interval: not minimal
  CHECK_THROWS_AS(validate_gomic({Interval::open(0, 4), Interval::open(1, 2)}), error);
  // gap between consecutive intervals
  CHECK_THROWS_AS(validate_gomic({Interval::open(0, 1), Interval::open(2, 3)}), error);
  // triple overlap
  CHECK_THROWS_AS(validate_gomic({Interval::open(0, 3), Interval::open(1, 4),
                                  Interval::open(2, 5)}),
                  error);
  // closed endpoints are not allowed
  CHECK_THROWS_AS(validate_gomic({Interval::closed(0, 1)}), error);
  // degenerate or reversed
  CHECK_THROWS_AS(validate_gomic({Interval::open(1, 1)}), error);
  CHECK_THROWS_AS(validate_gomic({Interval::open(2, 1)}), error);
}

TEST_CASE("cover_error collects every violation at once") {
  try {
    validate_gomic({Interval::open(0, 3), Interval::open(1, 4), Interval::open(2, 5)});
    FAIL("expected a throw");
  } catch (const cover_error& e) {
    CHECK(e.violations.size() >= 1);
  }
}

TEST_CASE("decompose_interval splits into overlaps and proper part") {
  GomicCover c = validate_gomic(
      {Interval::open(0, 2), Interval::open(1, 4), Interval::open(3, 6)});
  auto middle = decompose_interval(c, 1);
  REQUIRE(middle.lower_overlap.has_value());
  CHECK(middle.lower_overlap->lo == 1);
  CHECK(middle.lower_overlap->hi == 2);
  CHECK(middle.proper.lo == 2);
  CHECK(middle.proper.hi == 3);
  REQUIRE(middle.upper_overlap.has_value());
  CHECK(middle.upper_overlap->lo == 3);
  CHECK(middle.upper_overlap->hi == 4);

  auto first = decompose_interval(c, 0);
  CHECK_FALSE(first.lower_overlap.has_value());
  CHECK(first.proper.lo == 0);
  CHECK(first.proper.hi == 1);
}

TEST_CASE("uniform_cover produces n overlapping intervals") {
  GomicCover c = uniform_cover(0, 10, 5, 0.3);
  REQUIRE(c.size() == 5);
  CHECK(c.lo() == 0);
  CHECK(c.hi() == 10);
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    CHECK(c.intervals[i + 1].lo < c.intervals[i].hi);   // consecutive overlap
    CHECK(c.intervals[i].hi < c.intervals[i + 1].hi);
  }
  // and it is a valid gomic
  CHECK_NOTHROW(validate_gomic(c.intervals));
  CHECK_THROWS_AS(uniform_cover(0, 10, 0, 0.3), error);
  CHECK_THROWS_AS(uniform_cover(0, 10, 3, 1.5), error);
}

TEST_CASE("staircase shapes for a two-interval cover") {
  GomicCover c = validate_gomic({Interval::open(-0.5, 1.6), Interval::open(1.4, 3.5)});

  auto ord = build_staircase(c, StairKind::OrdStair);
  REQUIRE(ord.squares.size() == 2);
  CHECK(ord.squares[0].side == Side::above);
  CHECK(ord.squares[0].iv.lo == -0.5);
  CHECK(ord.squares[0].iv.hi == 1.6);
  CHECK_FALSE(ord.squares[0].iv.lo_closed);
  CHECK(ord.squares[1].iv.lo == 1.6);
  CHECK(ord.squares[1].iv.lo_closed);
  CHECK_FALSE(ord.squares[1].iv.hi_closed);

  auto rel = build_staircase(c, StairKind::RelStair);
  REQUIRE(rel.squares.size() == 2);
  CHECK(rel.squares[0].side == Side::below);
  CHECK(rel.squares[0].iv.hi == 1.4);
  CHECK(rel.squares[0].iv.hi_closed);
  CHECK(rel.squares[1].iv.lo == 1.4);
  CHECK_FALSE(rel.squares[1].iv.hi_closed);

  auto em = build_staircase(c, StairKind::ExtMinusStair);
  REQUIRE(em.squares.size() == 2);
  CHECK(em.squares[0].iv.lo == -0.5);
  CHECK(em.squares[0].iv.hi == 1.6);
  CHECK(em.squares[1].iv.lo == 1.4);
  CHECK(em.squares[1].iv.hi == 3.5);

  // the Mapper staircase keeps only maximal squares: here the single union
  auto ex = build_staircase(c, StairKind::ExtStair);
  REQUIRE(ex.squares.size() == 1);
  CHECK(ex.squares[0].iv.lo == -0.5);
  CHECK(ex.squares[0].iv.hi == 3.5);
}

TEST_CASE("classify_point distances") {
  GomicCover c = validate_gomic({Interval::open(-0.5, 1.6), Interval::open(1.4, 3.5)});
  auto em = build_staircase(c, StairKind::ExtMinusStair);

  auto in = classify_point(em, 1.0, 0.0);
  CHECK(in.inside);
  CHECK(in.dist == 0);

  // the torus loop point: outside, 0.4 from both squares
  auto out = classify_point(em, 2.0, 1.0);
  CHECK_FALSE(out.inside);
  CHECK(out.dist == doctest::Approx(0.4));

  // above the diagonal: distance includes the half-gap term
  auto up = classify_point(em, 0.0, 1.0);
  CHECK_FALSE(up.inside);
  CHECK(up.dist == doctest::Approx(0.5));

  auto ex = build_staircase(c, StairKind::ExtStair);
  CHECK(classify_point(ex, 2.0, 1.0).inside);

  auto ord = build_staircase(c, StairKind::OrdStair);
  CHECK(classify_point(ord, 1.6, 3.0).inside);       // closed lower edge of square 1
  CHECK_FALSE(classify_point(ord, 1.6, 3.6).inside); // above the support
  CHECK(classify_point(ord, 1.6, 3.6).dist == doctest::Approx(0.1));
}

TEST_CASE("staircase membership is monotone under cover refinement of kind Ext") {
  // every ExtMinus square is inside the Ext staircase
  testutil::Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto cover = testutil::random_gomic(rng, 0, 10);
    auto em = build_staircase(cover, StairKind::ExtMinusStair);
    auto ex = build_staircase(cover, StairKind::ExtStair);
    for (int s = 0; s < 40; ++s) {
      double x = testutil::uni(rng, -1, 11), y = testutil::uni(rng, -1, 11);
      if (classify_point(em, x, y).inside) CHECK(classify_point(ex, x, y).inside);
      CHECK(classify_point(ex, x, y).dist <= classify_point(em, x, y).dist + 1e-12);
    }
  }
}

TEST_CASE("ord and rel staircases tile the support") {
  testutil::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto cover = testutil::random_gomic(rng, -2, 6);
    auto ord = build_staircase(cover, StairKind::OrdStair);
    auto rel = build_staircase(cover, StairKind::RelStair);
    for (int s = 0; s < 40; ++s) {
      double x = testutil::uni(rng, cover.lo(), cover.hi());
      double y = testutil::uni(rng, cover.lo(), cover.hi());
      if (x == y) continue;
      double a = std::min(x, y), b = std::max(x, y);
      // above-diagonal points in (lo, hi)^2 fall in exactly one ord square
      int hits = 0;
      for (const auto& sq : ord.squares) hits += sq.contains(a, b);
      CHECK(hits <= 1);
      bool in_ord = classify_point(ord, a, b).inside;
      bool in_rel = classify_point(rel, b, a).inside;
      // ord square [l, h) above matches rel square (l, h] below, shifted
      // across the diagonal: both staircases cover the same band widths
      if (in_ord) CHECK(classify_point(ord, a, b).dist == 0);
      if (in_rel) CHECK(classify_point(rel, b, a).dist == 0);
    }
  }
}
