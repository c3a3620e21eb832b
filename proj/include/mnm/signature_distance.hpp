#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "mnm/covers.hpp"
#include "mnm/diagram.hpp"
#include "mnm/mapper.hpp"

namespace mnm {

struct MatchingResult {
  double cost = 0;
  std::vector<std::pair<DiagramPoint, DiagramPoint>> pairs;
  std::vector<std::pair<DiagramPoint, double>> unmatched;  // point, deletion cost
};

using DeletionCost = std::function<double(const DiagramPoint&)>;

// Bottleneck matching where points may be deleted at an individual cost
// instead of being matched. Exact: the optimum is realized by a candidate
// (a pairwise l-inf distance or a deletion cost).
MatchingResult bottleneck_with_deletion(const std::vector<DiagramPoint>& a,
                                        const std::vector<DiagramPoint>& b,
                                        const DeletionCost& del_a, const DeletionCost& del_b);

// Deletion cost is the l-inf distance to the staircase's closure. Points of
// both diagrams must form a single (kind, dim) class.
MatchingResult staircase_bottleneck(const ExtendedDiagram& d, const ExtendedDiagram& d2,
                                    const Staircase& theta);

// Classical bottleneck distance with deletion to the diagonal, matched per
// (kind, dim) class; returns the max over classes.
double diagram_bottleneck(const ExtendedDiagram& d, const ExtendedDiagram& d2);

struct DistanceReport {
  double cost = 0;
  double ord = 0, ext = 0, rel = 0;
  std::vector<MatchingResult> matchings;  // one per populated (type, dim) class
};

DistanceReport mapper_distance_report(const ExtendedDiagram& d, const ExtendedDiagram& d2,
                                      const GomicCover& cover, Variant variant);

double mapper_distance(const ExtendedDiagram& d, const ExtendedDiagram& d2,
                       const GomicCover& cover, Variant variant);

// How differently two covers classify the points of one diagram: the max,
// over points lying in the staircase of one cover but not the other's, of the
// larger of the two staircase distances.
double cover_discrepancy(const ExtendedDiagram& d, const GomicCover& i, const GomicCover& j);

double staircase_hausdorff(const GomicCover& i, const GomicCover& j, StairKind kind);

ExtendedDiagram approximate_signature(const PointCloud& cloud, double delta,
                                      const GomicCover& cover, Variant variant);

}  // namespace mnm
