#include "doctest.h"
#include "generators.hpp"
#include "mnm/reeb.hpp"

using namespace mnm;

namespace {

LeveledMultigraph torus_model_graph() {
  LeveledMultigraph g;
  g.levels = {0, 1, 2, 3};
  g.edges = {{0, 1}, {1, 2}, {1, 2}, {2, 3}};
  return g;
}

}  // namespace

TEST_CASE("reeb_graph of a path is the path, with regular crossings as nodes") {
  SimplicialComplex2 k = make_complex(4, {{0, 1}, {1, 2}, {2, 3}});
  VertexFunction f = {0, 2, 1, 3};
  LeveledMultigraph g = reeb_graph(k, f);
  // edge 0-1 crosses level 1 and edge 2-3 crosses level 2
  LeveledMultigraph want;
  want.levels = {0, 1, 2, 1, 2, 3};
  want.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
  CHECK(leveled_isomorphic(g, want));
  ExtendedDiagram d = quotient_diagram(g);
  ExtendedDiagram direct = extended_persistence(k, f);
  CHECK(d == direct);
}

TEST_CASE("reeb_graph collapses a cylinder to an interval") {
  SimplicialComplex2 k = make_complex(
      6, {},
      {{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}});
  VertexFunction f = {0, 0.1, 0.2, 1, 1.1, 1.2};
  LeveledMultigraph g = reeb_graph(k, f);
  REQUIRE(g.levels.size() == 6);
  REQUIRE(g.edges.size() == 5);
  ExtendedDiagram d = quotient_diagram(g);
  ExtendedDiagram want;
  want.points = {{0, 1.2, PointKind::ExtPlus, 0}};
  CHECK(d == want);
}

TEST_CASE("reeb_graph of the torus keeps one loop") {
  testutil::ValuedComplexFixture fx = testutil::torus_complex();
  LeveledMultigraph g = reeb_graph(fx.k, fx.f);
  ExtendedDiagram d = quotient_diagram(g);
  auto ext0 = d.filtered(PointKind::ExtPlus, 0);
  REQUIRE(ext0.points.size() == 1);
  CHECK(ext0.points[0].birth == 0);
  CHECK(ext0.points[0].death == 6);
  CHECK(d.filtered(PointKind::ExtMinus, 1).points.size() == 1);
  CHECK(d.filtered(PointKind::ExtMinus, 2).points.empty());
}

TEST_CASE("reeb_graph requires generic values") {
  SimplicialComplex2 k = make_complex(2, {{0, 1}});
  CHECK_THROWS_AS(reeb_graph(k, {1, 1}), error);
}

TEST_CASE("quotient_diagram of the torus model graph") {
  ExtendedDiagram d = quotient_diagram(torus_model_graph());
  ExtendedDiagram want;
  want.points = {{0, 3, PointKind::ExtPlus, 0}, {2, 1, PointKind::ExtMinus, 1}};
  CHECK(d == want);
}

TEST_CASE("quotient_diagram rejects self loops") {
  LeveledMultigraph g;
  g.levels = {0, 1};
  g.edges = {{0, 0}, {0, 1}};
  CHECK_THROWS_AS(quotient_diagram(g), error);
}

TEST_CASE("quotient_diagram on the double torus graph") {
  testutil::ValuedComplexFixture fx = testutil::double_torus_reeb();
  LeveledMultigraph g;
  g.levels = fx.f;
  for (const auto& e : fx.k.edges) g.edges.push_back(e);
  ExtendedDiagram d = quotient_diagram(g);
  ExtendedDiagram want;
  want.points = {
      {0, 5, PointKind::ExtPlus, 0},
      {2, 1, PointKind::ExtMinus, 1},
      {4, 3, PointKind::ExtMinus, 1},
  };
  CHECK(d == want);
}

TEST_CASE("leveled_isomorphic compares shapes over occupied levels") {
  LeveledMultigraph a = torus_model_graph();

  // same shape, permuted ids
  LeveledMultigraph b;
  b.levels = {3, 1, 0, 2};
  b.edges = {{2, 1}, {1, 3}, {3, 1}, {3, 0}};
  CHECK(leveled_isomorphic(a, b));

  // levels only need to match in order, not value
  LeveledMultigraph c = a;
  c.levels = {-5, 0.5, 7, 8};
  CHECK(leveled_isomorphic(a, c));

  // dropping one parallel edge changes the multigraph
  LeveledMultigraph d = a;
  d.edges = {{0, 1}, {1, 2}, {2, 3}};
  CHECK_FALSE(leveled_isomorphic(a, d));

  // same level multiset, different wiring
  LeveledMultigraph e = a;
  e.edges = {{0, 1}, {0, 1}, {1, 2}, {2, 3}};
  CHECK_FALSE(leveled_isomorphic(a, e));

  // collapsing two distinct levels to a tie is a different occupancy pattern
  LeveledMultigraph h = a;
  h.levels = {0, 1, 1, 3};
  CHECK_FALSE(leveled_isomorphic(a, h));
}
