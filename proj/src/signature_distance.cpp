#include "mnm/signature_distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "mnm/complex.hpp"

namespace mnm {

namespace {

double linf(const DiagramPoint& p, const DiagramPoint& q) {
  return std::max(std::abs(p.birth - q.birth), std::abs(p.death - q.death));
}

// Feasibility graph for one threshold: real points on both sides, plus a
// ghost per point so that deletions are matchable. Ghost-to-ghost is free.
struct Matcher {
  int na = 0, nb = 0;
  std::vector<std::vector<double>> pair_cost;
  std::vector<double> da, db;

  bool admissible(int l, int r, double t) const {
    if (l < na) {
      if (r < nb) return pair_cost[l][r] <= t;
      return r - nb == l && da[l] <= t;
    }
    if (r < nb) return l - na == r && db[r] <= t;
    return true;
  }

  bool feasible(double t, std::vector<int>* match_right = nullptr) const {
    int total = na + nb;
    std::vector<int> mr(total, -1);
    std::vector<char> vis(total, 0);
    auto aug = [&](auto&& self, int l) -> bool {
      for (int r = 0; r < total; ++r) {
        if (vis[r] || !admissible(l, r, t)) continue;
        vis[r] = 1;
        if (mr[r] == -1 || self(self, mr[r])) {
          mr[r] = l;
          return true;
        }
      }
      return false;
    };
    for (int l = 0; l < total; ++l) {
      std::fill(vis.begin(), vis.end(), 0);
      if (!aug(aug, l)) return false;
    }
    if (match_right) *match_right = mr;
    return true;
  }
};

int type_of(PointKind k) {
  switch (k) {
    case PointKind::Ord: return 0;
    case PointKind::ExtPlus:
    case PointKind::ExtMinus: return 1;
    default: return 2;
  }
}

}  // namespace

MatchingResult bottleneck_with_deletion(const std::vector<DiagramPoint>& a,
                                        const std::vector<DiagramPoint>& b,
                                        const DeletionCost& del_a, const DeletionCost& del_b) {
  Matcher m;
  m.na = static_cast<int>(a.size());
  m.nb = static_cast<int>(b.size());
  m.pair_cost.assign(m.na, std::vector<double>(m.nb, 0));
  std::vector<double> candidates{0};
  for (int i = 0; i < m.na; ++i) {
    m.da.push_back(del_a(a[i]));
    candidates.push_back(m.da.back());
    for (int j = 0; j < m.nb; ++j) {
      m.pair_cost[i][j] = linf(a[i], b[j]);
      candidates.push_back(m.pair_cost[i][j]);
    }
  }
  for (int j = 0; j < m.nb; ++j) {
    m.db.push_back(del_b(b[j]));
    candidates.push_back(m.db.back());
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (m.feasible(candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }

  std::vector<int> mr;
  m.feasible(candidates[lo], &mr);
  std::vector<int> ml(m.na + m.nb, -1);
  for (size_t r = 0; r < mr.size(); ++r)
    if (mr[r] != -1) ml[mr[r]] = static_cast<int>(r);

  MatchingResult res;
  for (int i = 0; i < m.na; ++i) {
    if (ml[i] < m.nb) {
      res.pairs.emplace_back(a[i], b[ml[i]]);
      res.cost = std::max(res.cost, m.pair_cost[i][ml[i]]);
    } else {
      res.unmatched.emplace_back(a[i], m.da[i]);
      res.cost = std::max(res.cost, m.da[i]);
    }
  }
  for (int j = 0; j < m.nb; ++j) {
    // b_j's ghost either claims b_j itself (deletion) or idles on a ghost slot
    if (ml[m.na + j] == j) {
      res.unmatched.emplace_back(b[j], m.db[j]);
      res.cost = std::max(res.cost, m.db[j]);
    }
  }
  return res;
}

MatchingResult staircase_bottleneck(const ExtendedDiagram& d, const ExtendedDiagram& d2,
                                    const Staircase& theta) {
  std::set<std::pair<PointKind, int>> classes;
  for (const auto& p : d.points) classes.insert({p.kind, p.dim});
  for (const auto& p : d2.points) classes.insert({p.kind, p.dim});
  if (classes.size() > 1)
    throw error(errc::invalid_parameters, "diagrams span more than one (kind, dim) class");
  DeletionCost del = [&theta](const DiagramPoint& p) {
    return classify_point(theta, p.birth, p.death).dist;
  };
  return bottleneck_with_deletion(d.points, d2.points, del, del);
}

double diagram_bottleneck(const ExtendedDiagram& d, const ExtendedDiagram& d2) {
  std::set<std::pair<PointKind, int>> classes;
  for (const auto& p : d.points) classes.insert({p.kind, p.dim});
  for (const auto& p : d2.points) classes.insert({p.kind, p.dim});
  DeletionCost diag = [](const DiagramPoint& p) { return std::abs(p.birth - p.death) / 2; };
  double cost = 0;
  for (auto [kind, dim] : classes) {
    auto a = d.filtered(kind, dim), b = d2.filtered(kind, dim);
    cost = std::max(cost, bottleneck_with_deletion(a.points, b.points, diag, diag).cost);
  }
  return cost;
}

DistanceReport mapper_distance_report(const ExtendedDiagram& d, const ExtendedDiagram& d2,
                                      const GomicCover& cover, Variant variant) {
  Staircase stairs[3] = {
      build_staircase(cover, StairKind::OrdStair),
      build_staircase(cover, variant == Variant::Mapper ? StairKind::ExtStair
                                                        : StairKind::ExtMinusStair),
      build_staircase(cover, StairKind::RelStair),
  };
  DistanceReport rep;
  double* slots[3] = {&rep.ord, &rep.ext, &rep.rel};
  for (int t = 0; t < 3; ++t) {
    std::set<int> dims;
    for (const auto& p : d.points)
      if (type_of(p.kind) == t) dims.insert(p.dim);
    for (const auto& p : d2.points)
      if (type_of(p.kind) == t) dims.insert(p.dim);
    DeletionCost del = [&stairs, t](const DiagramPoint& p) {
      return classify_point(stairs[t], p.birth, p.death).dist;
    };
    for (int dim : dims) {
      std::vector<DiagramPoint> a, b;
      for (const auto& p : d.points)
        if (type_of(p.kind) == t && p.dim == dim) a.push_back(p);
      for (const auto& p : d2.points)
        if (type_of(p.kind) == t && p.dim == dim) b.push_back(p);
      MatchingResult res = bottleneck_with_deletion(a, b, del, del);
      *slots[t] = std::max(*slots[t], res.cost);
      rep.matchings.push_back(std::move(res));
    }
  }
  rep.cost = std::max({rep.ord, rep.ext, rep.rel});
  return rep;
}

double mapper_distance(const ExtendedDiagram& d, const ExtendedDiagram& d2,
                       const GomicCover& cover, Variant variant) {
  return mapper_distance_report(d, d2, cover, variant).cost;
}

double cover_discrepancy(const ExtendedDiagram& d, const GomicCover& i, const GomicCover& j) {
  struct TypeSpec {
    PointKind kind;
    StairKind stair;
  };
  const TypeSpec specs[3] = {
      {PointKind::Ord, StairKind::OrdStair},
      {PointKind::ExtMinus, StairKind::ExtMinusStair},
      {PointKind::Rel, StairKind::RelStair},
  };
  double best = 0;
  for (const auto& spec : specs) {
    Staircase si = build_staircase(i, spec.stair);
    Staircase sj = build_staircase(j, spec.stair);
    for (const auto& p : d.points) {
      if (p.kind != spec.kind) continue;
      Classify ci = classify_point(si, p.birth, p.death);
      Classify cj = classify_point(sj, p.birth, p.death);
      if (ci.inside != cj.inside) best = std::max(best, std::max(ci.dist, cj.dist));
    }
  }
  return best;
}

double staircase_hausdorff(const GomicCover& i, const GomicCover& j, StairKind kind) {
  Staircase si = build_staircase(i, kind);
  Staircase sj = build_staircase(j, kind);
  if (kind == StairKind::ExtMinusStair) {
    auto dir = [](const Staircase& a, const Staircase& b) {
      double worst = 0;
      for (const auto& sa : a.squares) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& sb : b.squares)
          nearest = std::min(nearest, std::max(std::abs(sa.iv.lo - sb.iv.lo),
                                               std::abs(sa.iv.hi - sb.iv.hi)));
        worst = std::max(worst, nearest);
      }
      return worst;
    };
    return std::max(dir(si, sj), dir(sj, si));
  }
  // The sup over a union of half-squares is attained at a far corner.
  auto dir = [](const Staircase& a, const Staircase& b) {
    double worst = 0;
    for (const auto& sq : a.squares) {
      double x = sq.side == Side::above ? sq.iv.lo : sq.iv.hi;
      double y = sq.side == Side::above ? sq.iv.hi : sq.iv.lo;
      worst = std::max(worst, classify_point(b, x, y).dist);
    }
    return worst;
  };
  return std::max(dir(si, sj), dir(sj, si));
}

ExtendedDiagram approximate_signature(const PointCloud& cloud, double delta,
                                      const GomicCover& cover, Variant variant) {
  for (size_t p = 0; p < cloud.values.size(); ++p) {
    if (!cover.covers(cloud.values[p]))
      throw error(errc::uncovered_value, "value " + std::to_string(cloud.values[p]) +
                                             " of point " + std::to_string(p) +
                                             " lies in no cover interval");
  }
  RipsGraph g = rips_graph(cloud, delta);
  SimplicialComplex2 k = rips_complex(g);
  ExtendedDiagram dg = extended_persistence(k, cloud.values, true);
  ExtendedDiagram kept;
  for (const auto& p : dg.points) {
    if (p.dim >= 2) continue;
    if (p.dim == 1 && (p.kind == PointKind::Ord || p.kind == PointKind::ExtPlus)) continue;
    kept.points.push_back(p);
  }
  return prune_signature(kept, cover, variant);
}

}  // namespace mnm
