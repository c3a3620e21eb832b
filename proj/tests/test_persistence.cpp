#include <algorithm>

#include "doctest.h"
#include "generators.hpp"
#include "mnm/complex.hpp"
#include "oracle.hpp"

using namespace mnm;

TEST_CASE("path with an interior dip") {
  // vertex values 0, 2, 1, 3 along a path
  SimplicialComplex2 k = make_complex(4, {{0, 1}, {1, 2}, {2, 3}});
  VertexFunction f = {0, 2, 1, 3};
  ExtendedDiagram d = extended_persistence(k, f);
  ExtendedDiagram want;
  want.points = {
      {1, 2, PointKind::Ord, 0},
      {0, 3, PointKind::ExtPlus, 0},
      {2, 1, PointKind::Rel, 1},
  };
  CHECK(d == want);
}

TEST_CASE("cycle carries an essential class in each dimension") {
  SimplicialComplex2 k = make_complex(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  VertexFunction f = {0, 1, 2, 1};
  CHECK_THROWS_AS(extended_persistence(k, f, false), error);

  ExtendedDiagram d = extended_persistence(k, f, true);
  ExtendedDiagram want;
  want.points = {
      {0, 2, PointKind::ExtPlus, 0},
      {2, 0, PointKind::ExtMinus, 1},
  };
  CHECK(d == want);
}

TEST_CASE("octahedron sphere") {
  testutil::ValuedComplexFixture fx = testutil::octahedron_complex();
  ExtendedDiagram d = extended_persistence(fx.k, fx.f);
  ExtendedDiagram want;
  want.points = {
      {0, 5, PointKind::ExtPlus, 0},
      {5, 0, PointKind::ExtMinus, 2},
  };
  CHECK(d == want);

  // poles at -1 and 1, the whole equator tied at 0
  VertexFunction flat = {-1, 0, 0, 0, 0, 1};
  ExtendedDiagram d2 = extended_persistence(fx.k, flat, true);
  ExtendedDiagram want2;
  want2.points = {
      {-1, 1, PointKind::ExtPlus, 0},
      {1, -1, PointKind::ExtMinus, 2},
  };
  CHECK(d2 == want2);
}

TEST_CASE("torus model") {
  testutil::ValuedComplexFixture fx = testutil::torus_complex();
  ExtendedDiagram d = extended_persistence(fx.k, fx.f);
  auto ext_plus = d.filtered(PointKind::ExtPlus, 0);
  REQUIRE(ext_plus.points.size() == 1);
  CHECK(ext_plus.points[0].birth == 0);
  CHECK(ext_plus.points[0].death == 6);
  // a torus has two essential loops and one essential 2-class
  CHECK(d.filtered(PointKind::ExtMinus, 1).points.size()
            + d.filtered(PointKind::ExtPlus, 1).points.size() == 2);
  CHECK(d.filtered(PointKind::ExtMinus, 2).points.size() == 1);
}

TEST_CASE("generic_values accepts distinct, rejects ties") {
  CHECK(generic_values({0, 1, 2}));
  CHECK_FALSE(generic_values({0, 1, 1}));
}

TEST_CASE("perturbed output keeps raw values") {
  SimplicialComplex2 k = make_complex(3, {{0, 1}, {1, 2}});
  VertexFunction f = {1, 1, 1};
  ExtendedDiagram d = extended_persistence(k, f, true);
  ExtendedDiagram want;
  want.points = {{1, 1, PointKind::ExtPlus, 0}};
  CHECK(d == want);
}

TEST_CASE("levelset_components slices preimages of open intervals") {
  SimplicialComplex2 k = make_complex(4, {{0, 1}, {1, 2}, {2, 3}});
  VertexFunction f = {0, 2, 1, 3};
  // the slab (0.5, 1.5) meets edge 0-1 and vertex 2 with its two edges
  auto comps = levelset_components(k, f, Interval::open(0.5, 1.5));
  CHECK(comps.size() == 2);
  auto all = levelset_components(k, f, Interval::open(-1, 4));
  CHECK(all.size() == 1);
  auto none = levelset_components(k, f, Interval::open(10, 11));
  CHECK(none.empty());
}

TEST_CASE("matches the rank oracle on random complexes") {
  testutil::Rng rng(20260815u);
  for (int trial = 0; trial < 40; ++trial) {
    SimplicialComplex2 k = testutil::random_complex(rng);
    VertexFunction f = testutil::random_values(rng, k.n_vertices);
    ExtendedDiagram got = extended_persistence(k, f);
    ExtendedDiagram want = oracle::full_diagram(k, f);
    CAPTURE(trial);
    CHECK(got == want);
  }
}

TEST_CASE("duality on graphs: Dg(-f) reflects Dg(f)") {
  testutil::Rng rng(7u);
  for (int trial = 0; trial < 10; ++trial) {
    SimplicialComplex2 k = testutil::random_graph_complex(rng);
    VertexFunction f = testutil::random_values(rng, k.n_vertices);
    ExtendedDiagram fwd = extended_persistence(k, f);
    VertexFunction neg = f;
    for (double& v : neg) v = -v;
    ExtendedDiagram bwd = extended_persistence(k, neg);

    ExtendedDiagram want;
    for (const DiagramPoint& p : fwd.points) {
      switch (p.kind) {
        case PointKind::Ord:
          want.points.push_back({-p.birth, -p.death, PointKind::Rel, p.dim + 1});
          break;
        case PointKind::Rel:
          want.points.push_back({-p.birth, -p.death, PointKind::Ord, p.dim - 1});
          break;
        default:
          want.points.push_back({-p.death, -p.birth, p.kind, p.dim});
          break;
      }
    }
    CAPTURE(trial);
    CHECK(bwd == want);
  }
}
