#pragma once

#include <vector>

#include "mnm/covers.hpp"

namespace mnm {

enum class PointKind { Ord, Rel, ExtPlus, ExtMinus };
enum class Variant { MultiNerve, Mapper };

const char* kind_name(PointKind k);

struct DiagramPoint {
  double birth = 0;
  double death = 0;
  PointKind kind = PointKind::Ord;
  int dim = 0;

  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

bool point_less(const DiagramPoint& a, const DiagramPoint& b);

struct ExtendedDiagram {
  std::vector<DiagramPoint> points;

  void sort_canonical();
  ExtendedDiagram filtered(PointKind kind) const;
  ExtendedDiagram filtered(PointKind kind, int dim) const;
  bool operator==(const ExtendedDiagram& o) const;  // as sorted multisets
};

ExtendedDiagram merge_transform(const ExtendedDiagram& d, double a, double b);
ExtendedDiagram split_transform(const ExtendedDiagram& d, double a_i, double eps);
ExtendedDiagram shift_transform(const ExtendedDiagram& d, double a_i, double eps);
ExtendedDiagram prune_signature(const ExtendedDiagram& d, const GomicCover& cover,
                                Variant variant);

}  // namespace mnm
