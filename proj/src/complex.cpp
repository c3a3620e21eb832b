#include "mnm/complex.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "mnm/errors.hpp"

namespace mnm {

std::vector<Simplex> SimplicialComplex2::all_simplices() const {
  std::vector<Simplex> out;
  out.reserve(static_cast<size_t>(n_vertices) + edges.size() + triangles.size());
  for (int v = 0; v < n_vertices; ++v) out.push_back({v});
  for (const auto& e : edges) out.push_back({e[0], e[1]});
  for (const auto& t : triangles) out.push_back({t[0], t[1], t[2]});
  return out;
}

SimplicialComplex2 make_complex(int n_vertices, std::vector<std::array<int, 2>> edges,
                                std::vector<std::array<int, 3>> triangles) {
  if (n_vertices < 0) throw error(errc::invalid_parameters, "negative vertex count");
  auto check = [&](int v) {
    if (v < 0 || v >= n_vertices)
      throw error(errc::invalid_parameters, "vertex id out of range");
  };
  std::set<std::array<int, 2>> eset;
  std::set<std::array<int, 3>> tset;
  for (auto t : triangles) {
    std::sort(t.begin(), t.end());
    for (int v : t) check(v);
    if (t[0] == t[1] || t[1] == t[2])
      throw error(errc::invalid_parameters, "degenerate triangle");
    tset.insert(t);
    eset.insert({t[0], t[1]});
    eset.insert({t[0], t[2]});
    eset.insert({t[1], t[2]});
  }
  for (auto e : edges) {
    std::sort(e.begin(), e.end());
    for (int v : e) check(v);
    if (e[0] == e[1]) throw error(errc::invalid_parameters, "degenerate edge");
    eset.insert(e);
  }
  SimplicialComplex2 k;
  k.n_vertices = n_vertices;
  k.edges.assign(eset.begin(), eset.end());
  k.triangles.assign(tset.begin(), tset.end());
  return k;
}

bool generic_values(const VertexFunction& f) {
  VertexFunction s = f;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

namespace {

using Key = std::pair<double, int>;  // (value, vertex id), breaks ties by id

struct Cell {
  Simplex verts;
  Key asc_key;   // max vertex key
  Key desc_key;  // min vertex key
  int asc_pos = -1;
  int cone_pos = -1;
};

void xor_into(std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  a = std::move(out);
}

}  // namespace

ExtendedDiagram extended_persistence(const SimplicialComplex2& k, const VertexFunction& f,
                                     bool perturb) {
  if (static_cast<int>(f.size()) != k.n_vertices)
    throw error(errc::invalid_parameters, "function size does not match vertex count");
  if (!perturb && !generic_values(f))
    throw error(errc::non_generic_values, "duplicate vertex values; pass perturb to break ties");

  std::vector<Cell> cells;
  std::map<Simplex, int> index_of;
  for (const auto& s : k.all_simplices()) {
    Cell c;
    c.verts = s;
    c.asc_key = {f[s[0]], s[0]};
    c.desc_key = {f[s[0]], s[0]};
    for (int v : s) {
      c.asc_key = std::max(c.asc_key, Key{f[v], v});
      c.desc_key = std::min(c.desc_key, Key{f[v], v});
    }
    index_of[s] = static_cast<int>(cells.size());
    cells.push_back(std::move(c));
  }

  const int m = static_cast<int>(cells.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);

  // Ascending phase: lower-star order on max vertex key.
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Cell &ca = cells[a], &cb = cells[b];
    if (ca.asc_key != cb.asc_key) return ca.asc_key < cb.asc_key;
    if (ca.verts.size() != cb.verts.size()) return ca.verts.size() < cb.verts.size();
    return ca.verts < cb.verts;
  });
  for (int p = 0; p < m; ++p) cells[order[p]].asc_pos = 1 + p;

  // Descending phase: cone cells in decreasing min vertex key.
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Cell &ca = cells[a], &cb = cells[b];
    if (ca.desc_key != cb.desc_key) return ca.desc_key > cb.desc_key;
    if (ca.verts.size() != cb.verts.size()) return ca.verts.size() < cb.verts.size();
    return ca.verts < cb.verts;
  });
  for (int p = 0; p < m; ++p) cells[order[p]].cone_pos = 1 + m + p;

  const int n_cols = 2 * m + 1;
  std::vector<std::vector<int>> cols(n_cols);
  std::vector<int> cell_at(n_cols, -1);  // cell index, -1 for the cone vertex
  std::vector<bool> is_cone(n_cols, false);

  for (int i = 0; i < m; ++i) {
    const Cell& c = cells[i];
    cell_at[c.asc_pos] = i;
    cell_at[c.cone_pos] = i;
    is_cone[c.cone_pos] = true;

    std::vector<int>& asc = cols[c.asc_pos];
    std::vector<int>& cone = cols[c.cone_pos];
    cone.push_back(c.asc_pos);
    if (c.verts.size() == 1) {
      cone.push_back(0);  // the cone vertex itself
    } else {
      for (size_t drop = 0; drop < c.verts.size(); ++drop) {
        Simplex face;
        for (size_t q = 0; q < c.verts.size(); ++q)
          if (q != drop) face.push_back(c.verts[q]);
        const Cell& fc = cells[index_of.at(face)];
        asc.push_back(fc.asc_pos);
        cone.push_back(fc.cone_pos);
      }
    }
    std::sort(asc.begin(), asc.end());
    std::sort(cone.begin(), cone.end());
  }

  std::vector<int> owner(n_cols, -1);
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < n_cols; ++j) {
    std::vector<int>& c = cols[j];
    while (!c.empty() && owner[c.back()] >= 0) xor_into(c, cols[owner[c.back()]]);
    if (!c.empty()) {
      owner[c.back()] = j;
      pairs.emplace_back(c.back(), j);
    }
  }

  std::vector<bool> paired(n_cols, false);
  for (auto [b, d] : pairs) paired[b] = paired[d] = true;
  for (int j = 1; j < n_cols; ++j) assert(paired[j] && "only the cone vertex is essential");
  assert(!paired[0]);

  auto asc_val = [&](int cell) { return cells[cell].asc_key.first; };
  auto desc_val = [&](int cell) { return cells[cell].desc_key.first; };

  ExtendedDiagram dg;
  for (auto [b, d] : pairs) {
    const int cb = cell_at[b], cd = cell_at[d];
    const int dim = static_cast<int>(cells[cb].verts.size()) - 1;
    if (!is_cone[b] && !is_cone[d]) {
      const double x = asc_val(cb), y = asc_val(cd);
      if (x != y) dg.points.push_back({x, y, PointKind::Ord, dim});
    } else if (!is_cone[b] && is_cone[d]) {
      const double x = asc_val(cb), y = desc_val(cd);
      dg.points.push_back({x, y, x <= y ? PointKind::ExtPlus : PointKind::ExtMinus, dim});
    } else {
      const double x = desc_val(cb), y = desc_val(cd);
      if (x != y) dg.points.push_back({x, y, PointKind::Rel, dim + 1});
    }
  }
  dg.sort_canonical();
  return dg;
}

std::vector<std::vector<Simplex>> levelset_components(const SimplicialComplex2& k,
                                                      const VertexFunction& f,
                                                      const Interval& range) {
  if (static_cast<int>(f.size()) != k.n_vertices)
    throw error(errc::invalid_parameters, "function size does not match vertex count");

  const auto simplices = k.all_simplices();
  const int n = static_cast<int>(simplices.size());
  std::map<Simplex, int> index_of;
  std::vector<bool> in(n, false);
  for (int i = 0; i < n; ++i) {
    const Simplex& s = simplices[i];
    index_of[s] = i;
    double lo = f[s[0]], hi = f[s[0]];
    for (int v : s) {
      lo = std::min(lo, f[v]);
      hi = std::max(hi, f[v]);
    }
    in[i] = range.meets_range(lo, hi);
  }

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  for (int i = 0; i < n; ++i) {
    if (!in[i] || simplices[i].size() == 1) continue;
    const Simplex& s = simplices[i];
    for (size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (size_t q = 0; q < s.size(); ++q)
        if (q != drop) face.push_back(s[q]);
      const int fi = index_of.at(face);
      if (in[fi]) unite(i, fi);
    }
  }

  std::map<int, std::vector<Simplex>> by_root;
  for (int i = 0; i < n; ++i)
    if (in[i]) by_root[find(i)].push_back(simplices[i]);

  std::vector<std::vector<Simplex>> out;
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end(), [](const Simplex& a, const Simplex& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace mnm
