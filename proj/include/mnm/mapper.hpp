#pragma once

#include <array>
#include <string>
#include <vector>

#include "mnm/complex.hpp"
#include "mnm/covers.hpp"
#include "mnm/reeb.hpp"

namespace mnm {

// Points carry either coordinates or an explicit distance matrix, plus a
// scalar value each. Triangle inequality of a matrix is not enforced.
struct PointCloud {
  std::vector<std::vector<double>> coords;
  std::vector<std::vector<double>> dist;  // full symmetric matrix when coords is empty
  std::vector<double> values;

  int size() const { return static_cast<int>(values.size()); }
  double distance(int i, int j) const;
};

void validate_cloud(const PointCloud& cloud);

struct RipsGraph {
  int n = 0;
  double delta = 0.0;
  std::vector<std::array<int, 2>> edges;  // pairs at distance <= delta
};

RipsGraph rips_graph(const PointCloud& cloud, double delta);

struct CrossingEdges {
  std::vector<std::array<int, 2>> interval_crossing;
  std::vector<std::array<int, 2>> intersection_crossing;
};

CrossingEdges crossing_edges(const RipsGraph& g, const std::vector<double>& values,
                             const GomicCover& cover);

enum class Connectivity { vertex, edge };

LeveledMultigraph mapper_discrete(const RipsGraph& g, const std::vector<double>& values,
                                  const GomicCover& cover, Connectivity connectivity,
                                  Variant variant);

LeveledMultigraph mapper_continuous(const SimplicialComplex2& k, const VertexFunction& f,
                                    const GomicCover& cover, Variant variant);

// Collapses every parallel-edge bundle to a single edge.
LeveledMultigraph pi1_project(const LeveledMultigraph& m);

// Clique completion of the Rips graph up to dimension 2.
SimplicialComplex2 rips_complex(const RipsGraph& g);

struct InclusionReport {
  bool intersection_crossing_empty = false;
  bool interval_crossing_empty = false;
  bool vertex_subset_edge = false;
  bool mapper_subset_multinerve = false;
  bool vertex_equals_edge = false;
  bool edge_equals_continuous = false;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Builds the four discrete constructions plus the continuous one and checks
// the inclusion diagram and both coincidence lemmas.
InclusionReport inclusion_check(const RipsGraph& g, const std::vector<double>& values,
                                const GomicCover& cover);

}  // namespace mnm
