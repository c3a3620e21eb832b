#include "mnm/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace mnm {

const char* kind_name(PointKind k) {
  switch (k) {
    case PointKind::Ord: return "Ord";
    case PointKind::Rel: return "Rel";
    case PointKind::ExtPlus: return "ExtPlus";
    case PointKind::ExtMinus: return "ExtMinus";
  }
  return "?";
}

bool point_less(const DiagramPoint& a, const DiagramPoint& b) {
  return std::tie(a.birth, a.death, a.kind, a.dim) <
         std::tie(b.birth, b.death, b.kind, b.dim);
}

void ExtendedDiagram::sort_canonical() {
  std::sort(points.begin(), points.end(), point_less);
}

ExtendedDiagram ExtendedDiagram::filtered(PointKind kind) const {
  ExtendedDiagram out;
  for (const auto& p : points)
    if (p.kind == kind) out.points.push_back(p);
  return out;
}

ExtendedDiagram ExtendedDiagram::filtered(PointKind kind, int dim) const {
  ExtendedDiagram out;
  for (const auto& p : points)
    if (p.kind == kind && p.dim == dim) out.points.push_back(p);
  return out;
}

bool ExtendedDiagram::operator==(const ExtendedDiagram& o) const {
  if (points.size() != o.points.size()) return false;
  auto a = points, b = o.points;
  std::sort(a.begin(), a.end(), point_less);
  std::sort(b.begin(), b.end(), point_less);
  return a == b;
}

ExtendedDiagram merge_transform(const ExtendedDiagram& d, double a, double b) {
  if (!(a <= b)) throw error(errc::invalid_parameters, "merge_transform needs a <= b");
  const double mid = (a + b) / 2;
  ExtendedDiagram out;
  for (auto p : d.points) {
    if (p.birth >= a && p.birth <= b) p.birth = mid;
    if (p.death >= a && p.death <= b) p.death = mid;
    if (p.birth == p.death) {
      if (p.kind == PointKind::Ord || p.kind == PointKind::Rel) continue;
      if (p.kind == PointKind::ExtMinus) p.kind = PointKind::ExtPlus;
    }
    out.points.push_back(p);
  }
  return out;
}

namespace {

void check_band(const ExtendedDiagram& d, double lo, double hi) {
  for (const auto& p : d.points)
    if ((p.birth > lo && p.birth < hi) || (p.death > lo && p.death < hi)) {
      std::ostringstream os;
      os << "coordinate inside the band (" << lo << ", " << hi << ")";
      throw error(errc::band_occupied, os.str());
    }
}

}  // namespace

ExtendedDiagram split_transform(const ExtendedDiagram& d, double a_i, double eps) {
  if (!(eps > 0)) throw error(errc::invalid_parameters, "split_transform needs eps > 0");
  check_band(d, a_i - eps, a_i);
  check_band(d, a_i, a_i + eps);
  ExtendedDiagram out;
  for (auto p : d.points) {
    if (p.birth == a_i) p.birth = p.kind == PointKind::Rel ? a_i + eps : a_i - eps;
    if (p.death == a_i) p.death = p.kind == PointKind::Ord ? a_i - eps : a_i + eps;
    out.points.push_back(p);
  }
  return out;
}

ExtendedDiagram shift_transform(const ExtendedDiagram& d, double a_i, double eps) {
  check_band(d, std::min(a_i, a_i + eps), std::max(a_i, a_i + eps));
  ExtendedDiagram out;
  for (auto p : d.points) {
    if (p.birth == a_i) p.birth = a_i + eps;
    if (p.death == a_i) p.death = a_i + eps;
    out.points.push_back(p);
  }
  return out;
}

ExtendedDiagram prune_signature(const ExtendedDiagram& d, const GomicCover& cover,
                                Variant variant) {
  ExtendedDiagram quot;
  for (const auto& p : d.points) {
    bool keep = (p.kind == PointKind::Ord && p.dim == 0) ||
                (p.kind == PointKind::ExtPlus && p.dim == 0) ||
                (p.kind == PointKind::ExtMinus && p.dim == 1) ||
                (p.kind == PointKind::Rel && p.dim == 1);
    if (keep) quot.points.push_back(p);
  }
  for (const auto& p : quot.points)
    for (const auto& iv : cover.intervals)
      if (p.birth == iv.lo || p.birth == iv.hi || p.death == iv.lo || p.death == iv.hi) {
        std::ostringstream os;
        os << "diagram coordinate " << (p.birth == iv.lo || p.birth == iv.hi ? p.birth : p.death)
           << " equals a cover endpoint";
        throw error(errc::degenerate_cover, os.str());
      }
  Staircase ord = build_staircase(cover, StairKind::OrdStair);
  Staircase rel = build_staircase(cover, StairKind::RelStair);
  Staircase ext = build_staircase(
      cover, variant == Variant::Mapper ? StairKind::ExtStair : StairKind::ExtMinusStair);
  ExtendedDiagram out;
  for (const auto& p : quot.points) {
    const Staircase* st = nullptr;
    if (p.kind == PointKind::Ord) st = &ord;
    else if (p.kind == PointKind::Rel) st = &rel;
    else if (p.kind == PointKind::ExtMinus) st = &ext;
    if (st && classify_point(*st, p.birth, p.death).inside) continue;
    out.points.push_back(p);
  }
  out.sort_canonical();
  return out;
}

}  // namespace mnm
