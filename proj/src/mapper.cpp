#include "mnm/mapper.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace mnm {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

void check_covered(const std::vector<double>& values, const GomicCover& cover) {
  for (size_t p = 0; p < values.size(); ++p) {
    if (!cover.covers(values[p]))
      throw error(errc::uncovered_value, "value " + std::to_string(values[p]) +
                                             " of point " + std::to_string(p) +
                                             " lies in no cover interval");
  }
}

Interval intersection_of(const GomicCover& cover, size_t q) {
  return Interval::open(cover.intervals[q + 1].lo, cover.intervals[q].hi);
}

}  // namespace

double PointCloud::distance(int i, int j) const {
  if (!coords.empty()) return euclidean(coords[i], coords[j]);
  return dist[i][j];
}

void validate_cloud(const PointCloud& cloud) {
  size_t n = cloud.values.size();
  if (!cloud.coords.empty()) {
    if (cloud.coords.size() != n)
      throw error(errc::invalid_parameters, "coordinate and value counts differ");
    for (const auto& row : cloud.coords)
      if (row.size() != cloud.coords.front().size())
        throw error(errc::invalid_parameters, "inconsistent coordinate dimensions");
    return;
  }
  if (cloud.dist.size() != n)
    throw error(errc::invalid_parameters, "distance matrix and value counts differ");
  for (size_t i = 0; i < n; ++i) {
    if (cloud.dist[i].size() != n)
      throw error(errc::invalid_parameters, "distance matrix is not square");
    if (cloud.dist[i][i] != 0)
      throw error(errc::invalid_parameters, "distance matrix has nonzero diagonal");
    for (size_t j = 0; j < i; ++j)
      if (cloud.dist[i][j] != cloud.dist[j][i])
        throw error(errc::invalid_parameters, "distance matrix is not symmetric");
  }
}

RipsGraph rips_graph(const PointCloud& cloud, double delta) {
  validate_cloud(cloud);
  if (delta < 0) throw error(errc::invalid_parameters, "negative Rips threshold");
  RipsGraph g;
  g.n = cloud.size();
  g.delta = delta;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (cloud.distance(i, j) <= delta) g.edges.push_back({i, j});
  return g;
}

CrossingEdges crossing_edges(const RipsGraph& g, const std::vector<double>& values,
                             const GomicCover& cover) {
  if (static_cast<int>(values.size()) != g.n)
    throw error(errc::invalid_parameters, "value count does not match graph");
  CrossingEdges out;
  for (const auto& e : g.edges) {
    double m = std::min(values[e[0]], values[e[1]]);
    double M = std::max(values[e[0]], values[e[1]]);
    bool interval = false, intersection = false;
    for (size_t q = 0; q < cover.size(); ++q) {
      const Interval& iv = cover.intervals[q];
      if (m <= iv.lo && iv.hi <= M) interval = true;
      if (q + 1 < cover.size()) {
        Interval r = intersection_of(cover, q);
        if (r.lo < r.hi && m <= r.lo && r.hi <= M) intersection = true;
      }
    }
    if (interval) out.interval_crossing.push_back(e);
    if (intersection) out.intersection_crossing.push_back(e);
  }
  return out;
}

LeveledMultigraph mapper_discrete(const RipsGraph& g, const std::vector<double>& values,
                                  const GomicCover& cover, Connectivity connectivity,
                                  Variant variant) {
  if (static_cast<int>(values.size()) != g.n)
    throw error(errc::invalid_parameters, "value count does not match graph");
  check_covered(values, cover);

  LeveledMultigraph out;
  // node_of[q][p] is the node of point p over interval q, or -1.
  std::vector<std::vector<int>> node_of(cover.size(), std::vector<int>(g.n, -1));
  for (size_t q = 0; q < cover.size(); ++q) {
    const Interval& iv = cover.intervals[q];
    UnionFind uf(g.n);
    for (const auto& e : g.edges)
      if (iv.contains(values[e[0]]) && iv.contains(values[e[1]])) uf.unite(e[0], e[1]);
    std::map<int, int> comp;  // representative -> node id, keyed by smallest member
    for (int p = 0; p < g.n; ++p) {
      if (!iv.contains(values[p])) continue;
      int r = uf.find(p);
      auto it = comp.find(r);
      if (it == comp.end()) {
        it = comp.emplace(r, static_cast<int>(out.levels.size())).first;
        out.levels.push_back(iv.mid());
      }
      node_of[q][p] = it->second;
    }
  }

  for (size_t q = 0; q + 1 < cover.size(); ++q) {
    Interval r = intersection_of(cover, q);
    std::vector<bool> in_r(g.n, false);
    for (int p = 0; p < g.n; ++p) in_r[p] = r.contains(values[p]);

    if (connectivity == Connectivity::vertex) {
      UnionFind uf(g.n);
      for (const auto& e : g.edges)
        if (in_r[e[0]] && in_r[e[1]]) uf.unite(e[0], e[1]);
      std::set<int> seen;
      for (int p = 0; p < g.n; ++p) {
        if (!in_r[p] || !seen.insert(uf.find(p)).second) continue;
        out.edges.push_back({node_of[q][p], node_of[q + 1][p]});
      }
      continue;
    }

    // Edge connectivity: enrich the intersection preimage with the interiors
    // of edges running from one interval's preimage into the other's.
    const Interval &ivq = cover.intervals[q], &ivn = cover.intervals[q + 1];
    std::vector<int> witness;  // indices into g.edges
    for (size_t e = 0; e < g.edges.size(); ++e) {
      double a = values[g.edges[e][0]], b = values[g.edges[e][1]];
      bool fwd = ivq.contains(a) && ivn.contains(b);
      bool bwd = ivn.contains(a) && ivq.contains(b);
      if (fwd || bwd) witness.push_back(static_cast<int>(e));
    }
    // Items 0..n-1 are points, n + i is witness edge i.
    UnionFind uf(g.n + static_cast<int>(witness.size()));
    for (size_t w = 0; w < witness.size(); ++w) {
      const auto& e = g.edges[witness[w]];
      for (int end : e)
        if (in_r[end]) uf.unite(g.n + static_cast<int>(w), end);
    }
    struct Attach {
      int lo = -1, hi = -1;
    };
    std::map<int, Attach> comps;
    auto attach = [&](int item, int point, size_t side) {
      int node = node_of[side][point];
      Attach& at = comps[uf.find(item)];
      int& slot = side == q ? at.lo : at.hi;
      if (slot == -1)
        slot = node;
      else if (slot != node)
        throw error(errc::invalid_parameters, "ambiguous intersection attachment");
    };
    std::vector<int> order;  // first item of each component, in item order
    auto note = [&](int item) {
      if (!comps.count(uf.find(item))) order.push_back(item);
    };
    for (int p = 0; p < g.n; ++p) {
      if (!in_r[p]) continue;
      note(p);
      attach(p, p, q);
      attach(p, p, q + 1);
    }
    for (size_t w = 0; w < witness.size(); ++w) {
      int item = g.n + static_cast<int>(w);
      note(item);
      for (int end : g.edges[witness[w]]) {
        if (ivq.contains(values[end])) attach(item, end, q);
        if (ivn.contains(values[end])) attach(item, end, q + 1);
      }
    }
    for (int item : order) {
      const Attach& at = comps.at(uf.find(item));
      if (at.lo == -1 || at.hi == -1)
        throw error(errc::invalid_parameters, "intersection component misses a side");
      out.edges.push_back({at.lo, at.hi});
    }
  }

  return variant == Variant::Mapper ? pi1_project(out) : out;
}

LeveledMultigraph mapper_continuous(const SimplicialComplex2& k, const VertexFunction& f,
                                    const GomicCover& cover, Variant variant) {
  check_covered(f, cover);

  LeveledMultigraph out;
  std::vector<std::map<Simplex, int>> node_of(cover.size());
  for (size_t q = 0; q < cover.size(); ++q) {
    const Interval& iv = cover.intervals[q];
    for (const auto& comp : levelset_components(k, f, iv)) {
      int node = static_cast<int>(out.levels.size());
      out.levels.push_back(iv.mid());
      for (const auto& s : comp) node_of[q][s] = node;
    }
  }
  for (size_t q = 0; q + 1 < cover.size(); ++q) {
    Interval r = intersection_of(cover, q);
    for (const auto& comp : levelset_components(k, f, r)) {
      int lo = -1, hi = -1;
      for (const auto& s : comp) {
        int a = node_of[q].at(s), b = node_of[q + 1].at(s);
        if (lo == -1) {
          lo = a;
          hi = b;
        } else if (lo != a || hi != b) {
          throw error(errc::invalid_parameters, "ambiguous intersection attachment");
        }
      }
      out.edges.push_back({lo, hi});
    }
  }
  return variant == Variant::Mapper ? pi1_project(out) : out;
}

LeveledMultigraph pi1_project(const LeveledMultigraph& m) {
  LeveledMultigraph out;
  out.levels = m.levels;
  std::set<std::array<int, 2>> seen;
  for (auto e : m.edges) {
    if (e[0] > e[1]) std::swap(e[0], e[1]);
    if (seen.insert(e).second) out.edges.push_back(e);
  }
  return out;
}

SimplicialComplex2 rips_complex(const RipsGraph& g) {
  std::set<std::array<int, 2>> adj;
  for (auto e : g.edges) {
    if (e[0] > e[1]) std::swap(e[0], e[1]);
    adj.insert(e);
  }
  std::vector<std::array<int, 3>> triangles;
  for (const auto& e : adj)
    for (int k = e[1] + 1; k < g.n; ++k)
      if (adj.count({e[0], k}) && adj.count({e[1], k}))
        triangles.push_back({e[0], e[1], k});
  return make_complex(g.n, g.edges, triangles);
}

InclusionReport inclusion_check(const RipsGraph& g, const std::vector<double>& values,
                                const GomicCover& cover) {
  InclusionReport rep;
  CrossingEdges crossing = crossing_edges(g, values, cover);
  rep.intersection_crossing_empty = crossing.intersection_crossing.empty();
  rep.interval_crossing_empty = crossing.interval_crossing.empty();

  auto vmn = mapper_discrete(g, values, cover, Connectivity::vertex, Variant::MultiNerve);
  auto emn = mapper_discrete(g, values, cover, Connectivity::edge, Variant::MultiNerve);
  auto vma = mapper_discrete(g, values, cover, Connectivity::vertex, Variant::Mapper);
  auto ema = mapper_discrete(g, values, cover, Connectivity::edge, Variant::Mapper);

  if (vmn.levels != emn.levels || vmn.levels != vma.levels || vmn.levels != ema.levels)
    rep.violations.push_back("node sets of the discrete constructions differ");

  auto multiset = [](const LeveledMultigraph& m) {
    std::vector<std::array<int, 2>> es = m.edges;
    for (auto& e : es)
      if (e[0] > e[1]) std::swap(e[0], e[1]);
    std::sort(es.begin(), es.end());
    return es;
  };
  auto vs = multiset(vmn), es = multiset(emn);
  rep.vertex_subset_edge = std::includes(es.begin(), es.end(), vs.begin(), vs.end());
  if (!rep.vertex_subset_edge)
    rep.violations.push_back("vertex-witnessed edges not contained in edge-witnessed ones");

  auto support = vs;
  support.erase(std::unique(support.begin(), support.end()), support.end());
  rep.mapper_subset_multinerve = multiset(vma) == support;
  support = es;
  support.erase(std::unique(support.begin(), support.end()), support.end());
  rep.mapper_subset_multinerve = rep.mapper_subset_multinerve && multiset(ema) == support;
  if (!rep.mapper_subset_multinerve)
    rep.violations.push_back("Mapper is not the support of the MultiNerve Mapper");

  rep.vertex_equals_edge = vs == es;
  if (rep.intersection_crossing_empty && !rep.vertex_equals_edge)
    rep.violations.push_back(
        "no intersection-crossing edges but vertex and edge constructions differ");

  // The PL comparison runs on the 1-skeleton: triangles cannot change the
  // components of interval preimages, but they can merge parallel components
  // over an intersection, collapsing MultiNerve multiplicities.
  auto cont = mapper_continuous(make_complex(g.n, g.edges, {}), values, cover,
                                Variant::MultiNerve);
  rep.edge_equals_continuous = leveled_isomorphic(emn, cont);
  if (rep.interval_crossing_empty && !rep.edge_equals_continuous)
    rep.violations.push_back(
        "no interval-crossing edges but discrete and continuous constructions differ");

  return rep;
}

}  // namespace mnm
