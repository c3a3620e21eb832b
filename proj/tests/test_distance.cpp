#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "mnm/signature_distance.hpp"
#include "oracle.hpp"

using namespace mnm;

namespace {

ExtendedDiagram points_of(std::vector<DiagramPoint> ps) {
  ExtendedDiagram d;
  d.points = std::move(ps);
  return d;
}

const GomicCover kTorusCover = testutil::cover_of({{-0.5, 1.6}, {1.4, 3.5}});

}  // namespace

TEST_CASE("staircase_bottleneck basic values") {
  Staircase theta = build_staircase(kTorusCover, StairKind::ExtMinusStair);
  ExtendedDiagram loop = points_of({{2, 1, PointKind::ExtMinus, 1}});

  MatchingResult same = staircase_bottleneck(loop, loop, theta);
  CHECK(same.cost == 0);
  REQUIRE(same.pairs.size() == 1);
  CHECK(same.unmatched.empty());

  // deleting (2, 1) costs its distance to the nearest staircase square
  MatchingResult del = staircase_bottleneck(loop, points_of({}), theta);
  CHECK(del.cost == doctest::Approx(0.4));
  CHECK(del.pairs.empty());
  REQUIRE(del.unmatched.size() == 1);

  // matching a nearby point beats deleting both
  MatchingResult near =
      staircase_bottleneck(loop, points_of({{2.1, 0.9, PointKind::ExtMinus, 1}}), theta);
  CHECK(near.cost == doctest::Approx(0.1));
  CHECK(near.pairs.size() == 1);

  ExtendedDiagram mixed = loop;
  mixed.points.push_back({0.5, 1, PointKind::Ord, 0});
  CHECK_THROWS_AS(staircase_bottleneck(mixed, loop, theta), error);
}

TEST_CASE("bottleneck_with_deletion matches the brute-force oracle") {
  testutil::Rng rng(20260815u);
  auto del = [](const DiagramPoint& p) { return std::abs(p.birth - p.death) / 2; };
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<DiagramPoint> a, b;
    int na = testutil::pick(rng, 0, 5), nb = testutil::pick(rng, 0, 5);
    for (int i = 0; i < na; ++i)
      a.push_back({testutil::uni(rng, 0, 4), testutil::uni(rng, 0, 4), PointKind::Ord, 0});
    for (int i = 0; i < nb; ++i)
      b.push_back({testutil::uni(rng, 0, 4), testutil::uni(rng, 0, 4), PointKind::Ord, 0});
    MatchingResult got = bottleneck_with_deletion(a, b, del, del);
    double want = oracle::brute_bottleneck(a, b, del, del);
    CAPTURE(trial);
    CHECK(got.cost == doctest::Approx(want));
    CHECK(got.pairs.size() * 2 + got.unmatched.size() == a.size() + b.size());
  }
}

TEST_CASE("diagram_bottleneck against hand values") {
  ExtendedDiagram a = points_of({{1, 2, PointKind::Ord, 0}});
  CHECK(diagram_bottleneck(a, points_of({})) == doctest::Approx(0.5));
  CHECK(diagram_bottleneck(a, a) == 0);

  // classes never mix: distant kinds are each deleted
  ExtendedDiagram b = points_of({{1, 2, PointKind::ExtPlus, 0}});
  CHECK(diagram_bottleneck(a, b) == doctest::Approx(0.5));

  ExtendedDiagram c = points_of({{1, 2.2, PointKind::Ord, 0}});
  CHECK(diagram_bottleneck(a, c) == doctest::Approx(0.2));
}

TEST_CASE("mapper_distance on the torus signature") {
  ExtendedDiagram sig = points_of({{0, 3, PointKind::ExtPlus, 0},
                                   {2, 1, PointKind::ExtMinus, 1}});
  CHECK(mapper_distance(sig, sig, kTorusCover, Variant::MultiNerve) == 0);

  // against the empty diagram the essential component dominates: its
  // deletion cost is the l-inf gap to the Ext staircase closure
  double d = mapper_distance(sig, points_of({}), kTorusCover, Variant::MultiNerve);
  CHECK(d == doctest::Approx(1.5));

  DistanceReport rep =
      mapper_distance_report(sig, points_of({}), kTorusCover, Variant::MultiNerve);
  CHECK(rep.cost == doctest::Approx(1.5));
  CHECK(rep.ext == doctest::Approx(1.5));
  CHECK(rep.ord == 0);
  CHECK(rep.rel == 0);

  // the loop alone is only 0.4 away from deletion
  ExtendedDiagram loop = points_of({{2, 1, PointKind::ExtMinus, 1}});
  CHECK(mapper_distance(loop, points_of({}), kTorusCover, Variant::MultiNerve) ==
        doctest::Approx(0.4));
}

TEST_CASE("mapper_distance is a pseudometric on signatures") {
  testutil::Rng rng(5u);
  for (int trial = 0; trial < 20; ++trial) {
    GomicCover cover = testutil::random_gomic(rng, 0, 10);
    auto sig = [&] {
      ExtendedDiagram d = testutil::random_signature_diagram(rng, cover.lo(), cover.hi());
      // staying clear of the endpoints keeps prune_signature happy elsewhere;
      // here any diagram works as long as coordinates are in range
      return d;
    };
    ExtendedDiagram x = sig(), y = sig(), z = sig();
    double xy = mapper_distance(x, y, cover, Variant::MultiNerve);
    double yx = mapper_distance(y, x, cover, Variant::MultiNerve);
    double xz = mapper_distance(x, z, cover, Variant::MultiNerve);
    double zy = mapper_distance(z, y, cover, Variant::MultiNerve);
    CAPTURE(trial);
    CHECK(xy == doctest::Approx(yx));
    CHECK(xy <= xz + zy + 1e-9);
    CHECK(mapper_distance(x, x, cover, Variant::MultiNerve) == 0);
  }
}

TEST_CASE("staircase matching is never worse than diagonal matching") {
  testutil::Rng rng(9u);
  for (int trial = 0; trial < 25; ++trial) {
    GomicCover cover = testutil::random_gomic(rng, 0, 8);
    ExtendedDiagram x = testutil::random_signature_diagram(rng, cover.lo(), cover.hi());
    ExtendedDiagram y = testutil::random_signature_diagram(rng, cover.lo(), cover.hi());
    CAPTURE(trial);
    CHECK(mapper_distance(x, y, cover, Variant::MultiNerve) <=
          diagram_bottleneck(x, y) + 1e-9);
  }
}

TEST_CASE("interleaving-style distance separates covers, not functions") {
  // two nearby functions on the same shape: Dg(g) has its loop at (1.96, 1)
  GomicCover cover = testutil::cover_of({{-0.5, 1.98}, {1.9, 3.5}});
  ExtendedDiagram sig_f = points_of({{0, 3, PointKind::ExtPlus, 0},
                                     {2, 1, PointKind::ExtMinus, 1}});
  ExtendedDiagram sig_g_raw = points_of({{0, 3, PointKind::ExtPlus, 0},
                                         {1.96, 1, PointKind::ExtMinus, 1}});
  // under this cover the loop of g is swallowed by the staircase
  ExtendedDiagram sig_g = prune_signature(sig_g_raw, cover, Variant::MultiNerve);
  CHECK(sig_g == points_of({{0, 3, PointKind::ExtPlus, 0}}));

  CHECK(diagram_bottleneck(sig_f, sig_g) == doctest::Approx(0.5));
  CHECK(mapper_distance(sig_f, sig_g, cover, Variant::MultiNerve) == doctest::Approx(0.02));
}

TEST_CASE("cover_discrepancy measures classification disagreement") {
  ExtendedDiagram sig = points_of({{0, 3, PointKind::ExtPlus, 0},
                                   {2, 1, PointKind::ExtMinus, 1}});
  GomicCover i = kTorusCover;
  GomicCover j = testutil::cover_of({{-0.5, 2.2}, {2.1, 3.5}});

  // (2, 1) is outside the ExtMinus staircase of i but inside for j
  CHECK(cover_discrepancy(sig, i, j) == doctest::Approx(0.4));
  CHECK(cover_discrepancy(sig, i, i) == 0);
  CHECK(cover_discrepancy(points_of({}), i, j) == 0);
}

TEST_CASE("cover_discrepancy is bounded by the worst staircase hausdorff gap") {
  testutil::Rng rng(13u);
  for (int trial = 0; trial < 40; ++trial) {
    GomicCover i = testutil::random_gomic(rng, 0, 6);
    GomicCover j = testutil::random_gomic(rng, 0, 6);
    ExtendedDiagram d = testutil::random_signature_diagram(
        rng, std::min(i.lo(), j.lo()), std::max(i.hi(), j.hi()));
    double disc = cover_discrepancy(d, i, j);
    double bound = 0;
    for (StairKind k : {StairKind::OrdStair, StairKind::ExtMinusStair, StairKind::RelStair})
      bound = std::max(bound, staircase_hausdorff(i, j, k));
    CAPTURE(trial);
    CHECK(disc <= bound + 1e-9);
  }
}

TEST_CASE("staircase_hausdorff hand values") {
  GomicCover i = testutil::cover_of({{0, 2}, {1, 10}});
  GomicCover j = testutil::cover_of({{0, 3}, {1, 10}});
  CHECK(staircase_hausdorff(i, j, StairKind::ExtMinusStair) == doctest::Approx(1.0));
  CHECK(staircase_hausdorff(i, i, StairKind::OrdStair) == 0);
  CHECK(staircase_hausdorff(i, j, StairKind::OrdStair) ==
        staircase_hausdorff(j, i, StairKind::OrdStair));
}

TEST_CASE("approximate_signature of a sampled circle") {
  PointCloud cloud = testutil::circle_cloud(100);
  GomicCover cover = testutil::cover_of({{-1.4, 0.3}, {-0.3, 1.4}});
  ExtendedDiagram sig = approximate_signature(cloud, 0.2, cover, Variant::MultiNerve);

  auto comps = sig.filtered(PointKind::ExtPlus, 0);
  REQUIRE(comps.points.size() == 1);
  CHECK(comps.points[0].birth == doctest::Approx(-1).epsilon(0.05));
  CHECK(comps.points[0].death == doctest::Approx(1).epsilon(0.05));
  auto loops = sig.filtered(PointKind::ExtMinus, 1);
  REQUIRE(loops.points.size() == 1);
  CHECK(loops.points[0].birth == doctest::Approx(1).epsilon(0.05));
  CHECK(loops.points[0].death == doctest::Approx(-1).epsilon(0.05));

  // with a tiny delta the sample shatters into isolated vertices
  ExtendedDiagram dust = approximate_signature(cloud, 1e-4, cover, Variant::MultiNerve);
  CHECK(dust.points.size() == 100);
  for (const DiagramPoint& p : dust.points) {
    CHECK(p.kind == PointKind::ExtPlus);
    CHECK(p.birth == p.death);
  }
}
