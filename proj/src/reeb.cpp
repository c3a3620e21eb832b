#include "mnm/reeb.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mnm/errors.hpp"

namespace mnm {

LeveledMultigraph reeb_graph(const SimplicialComplex2& k, const VertexFunction& f) {
  if (static_cast<int>(f.size()) != k.n_vertices)
    throw error(errc::invalid_parameters, "function size does not match vertex count");
  if (!generic_values(f))
    throw error(errc::non_generic_values, "reeb_graph requires distinct vertex values");

  std::vector<double> vs(f.begin(), f.end());
  std::sort(vs.begin(), vs.end());

  LeveledMultigraph g;
  // One node per component of each vertex-value level set.
  std::vector<std::map<Simplex, int>> node_of(vs.size());
  for (size_t t = 0; t < vs.size(); ++t) {
    const auto comps = levelset_components(k, f, Interval::closed(vs[t], vs[t]));
    for (const auto& comp : comps) {
      const int id = static_cast<int>(g.levels.size());
      g.levels.push_back(vs[t]);
      for (const auto& s : comp) node_of[t][s] = id;
    }
  }

  // One edge per component of each open slab, witnessed at the midpoint.
  for (size_t t = 0; t + 1 < vs.size(); ++t) {
    const double m = 0.5 * (vs[t] + vs[t + 1]);
    for (const auto& comp : levelset_components(k, f, Interval::closed(m, m))) {
      int lo_node = -1, hi_node = -1;
      for (const auto& s : comp) {
        const auto lo_it = node_of[t].find(s);
        const auto hi_it = node_of[t + 1].find(s);
        if (lo_it == node_of[t].end() || hi_it == node_of[t + 1].end() ||
            (lo_node >= 0 && (lo_it->second != lo_node || hi_it->second != hi_node)))
          throw error(errc::slab_attachment_ambiguous,
                      "slab component does not attach to a unique node per side");
        lo_node = lo_it->second;
        hi_node = hi_it->second;
      }
      if (lo_node >= 0) g.edges.push_back({lo_node, hi_node});
    }
  }
  return g;
}

ExtendedDiagram quotient_diagram(const LeveledMultigraph& g) {
  VertexFunction f = g.levels;
  std::vector<std::array<int, 2>> edges;

  std::map<std::pair<int, int>, int> seen;
  for (auto e : g.edges) {
    int u = e[0], v = e[1];
    if (u == v) throw error(errc::invalid_parameters, "self-loops are not leveled");
    if (u > v) std::swap(u, v);
    if (seen[{u, v}]++ == 0) {
      edges.push_back({u, v});
    } else {
      // Parallel edge: subdivide at the midpoint level to keep the complex simplicial.
      const int w = static_cast<int>(f.size());
      f.push_back(0.5 * (g.levels[u] + g.levels[v]));
      edges.push_back({u, w});
      edges.push_back({w, v});
    }
  }
  return extended_persistence(make_complex(static_cast<int>(f.size()), edges), f, true);
}

namespace {

std::vector<int> level_index(const LeveledMultigraph& g, const std::vector<double>& occupied) {
  std::vector<int> idx(g.levels.size());
  for (size_t i = 0; i < g.levels.size(); ++i)
    idx[i] = static_cast<int>(std::lower_bound(occupied.begin(), occupied.end(), g.levels[i]) -
                              occupied.begin());
  return idx;
}

std::vector<double> occupied_levels(const LeveledMultigraph& g) {
  std::vector<double> v = g.levels;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct IsoSearch {
  const LeveledMultigraph &a, &b;
  std::vector<int> la, lb;                       // level index per node
  std::vector<std::map<int, int>> adj_a, adj_b;  // neighbor -> multiplicity
  std::vector<std::vector<int>> sig_a, sig_b;    // sorted neighbor level indices
  std::vector<int> order;                        // a-nodes sorted by level
  std::vector<int> image;                        // a-node -> b-node or -1
  std::vector<bool> used;

  bool candidate_ok(int an, int bn) const {
    if (la[an] != lb[bn] || sig_a[an] != sig_b[bn]) return false;
    // Edges towards already-assigned nodes must match multiplicities exactly.
    std::map<int, int> want;
    for (const auto& [nbr, m] : adj_a[an])
      if (image[nbr] >= 0) want[image[nbr]] += m;
    std::map<int, int> have;
    for (const auto& [nbr, m] : adj_b[bn])
      if (std::find(image.begin(), image.end(), nbr) != image.end()) have[nbr] += m;
    return want == have;
  }

  bool search(size_t q) {
    if (q == order.size()) return true;
    const int an = order[q];
    for (int bn = 0; bn < static_cast<int>(b.levels.size()); ++bn) {
      if (used[bn] || !candidate_ok(an, bn)) continue;
      used[bn] = true;
      image[an] = bn;
      if (search(q + 1)) return true;
      image[an] = -1;
      used[bn] = false;
    }
    return false;
  }
};

}  // namespace

bool leveled_isomorphic(const LeveledMultigraph& a, const LeveledMultigraph& b) {
  if (a.levels.size() != b.levels.size() || a.edges.size() != b.edges.size()) return false;
  const auto occ_a = occupied_levels(a), occ_b = occupied_levels(b);
  if (occ_a.size() != occ_b.size()) return false;

  IsoSearch s{a, b, level_index(a, occ_a), level_index(b, occ_b), {}, {}, {}, {}, {}, {}, {}};
  auto adjacency = [](const LeveledMultigraph& g) {
    std::vector<std::map<int, int>> adj(g.levels.size());
    for (auto e : g.edges) {
      adj[e[0]][e[1]]++;
      adj[e[1]][e[0]]++;
    }
    return adj;
  };
  s.adj_a = adjacency(a);
  s.adj_b = adjacency(b);

  auto signatures = [](const std::vector<std::map<int, int>>& adj, const std::vector<int>& lv) {
    std::vector<std::vector<int>> sig(adj.size());
    for (size_t i = 0; i < adj.size(); ++i) {
      for (const auto& [nbr, m] : adj[i])
        for (int t = 0; t < m; ++t) sig[i].push_back(lv[nbr]);
      std::sort(sig[i].begin(), sig[i].end());
    }
    return sig;
  };
  s.sig_a = signatures(s.adj_a, s.la);
  s.sig_b = signatures(s.adj_b, s.lb);

  // Cheap refutations: per-level node counts and signature multisets must agree.
  auto census = [](const std::vector<int>& lv, const std::vector<std::vector<int>>& sig) {
    std::map<std::pair<int, std::vector<int>>, int> c;
    for (size_t i = 0; i < lv.size(); ++i) c[{lv[i], sig[i]}]++;
    return c;
  };
  if (census(s.la, s.sig_a) != census(s.lb, s.sig_b)) return false;

  s.order.resize(a.levels.size());
  for (size_t i = 0; i < s.order.size(); ++i) s.order[i] = static_cast<int>(i);
  std::sort(s.order.begin(), s.order.end(), [&](int x, int y) {
    if (s.la[x] != s.la[y]) return s.la[x] < s.la[y];
    return s.sig_a[x].size() > s.sig_a[y].size();
  });
  s.image.assign(a.levels.size(), -1);
  s.used.assign(b.levels.size(), false);
  return s.search(0);
}

}  // namespace mnm
