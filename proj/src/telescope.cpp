#include "mnm/telescope.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "mnm/errors.hpp"

namespace mnm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Union-find element: (2*slice_index, label) or (2*cyl_index+1, label).
using Key = std::pair<int, std::string>;

Key slice_key(int i, const std::string& lab) { return {2 * i, lab}; }
Key cyl_key(int i, const std::string& lab) { return {2 * i + 1, lab}; }

struct UF {
  std::map<Key, Key> parent;
  void add(const Key& k) { parent.emplace(k, k); }
  Key find(const Key& k) {
    Key r = k;
    while (parent.at(r) != r) r = parent.at(r);
    return r;
  }
  void unite(const Key& a, const Key& b) { parent[find(a)] = find(b); }
};

int find_crit(const CombinatorialTelescope& t, double a_i) {
  for (size_t i = 0; i < t.crit.size(); ++i)
    if (t.crit[i] == a_i) return static_cast<int>(i);
  throw error(errc::invalid_parameters, "not a critical value of the telescope");
}

bool is_bijection(const std::map<std::string, std::string>& m,
                  const std::vector<std::string>& target) {
  if (m.size() != target.size()) return false;
  std::set<std::string> image;
  for (const auto& [from, to] : m) image.insert(to);
  return image.size() == target.size();
}

// Connected components of the telescope over an open range; endpoints are
// assumed to avoid critical values. Components come out ordered by their
// smallest element key.
std::vector<std::vector<Key>> components_over(const CombinatorialTelescope& t, double lo,
                                              double hi) {
  UF uf;
  const int n = static_cast<int>(t.crit.size());
  auto slice_in = [&](int k) { return lo < t.crit[k] && t.crit[k] < hi; };
  for (int k = 0; k < n; ++k)
    if (slice_in(k))
      for (const auto& lab : t.slices[k]) uf.add(slice_key(k, lab));
  for (int k = 0; k + 1 < n; ++k) {
    if (!(t.crit[k] < hi && lo < t.crit[k + 1])) continue;
    for (const auto& lab : t.cylinders[k].labels) {
      uf.add(cyl_key(k, lab));
      if (slice_in(k)) uf.unite(cyl_key(k, lab), slice_key(k, t.cylinders[k].lower.at(lab)));
      if (slice_in(k + 1)) uf.unite(cyl_key(k, lab), slice_key(k + 1, t.cylinders[k].upper.at(lab)));
    }
  }
  std::map<Key, std::vector<Key>> by_root;
  for (const auto& [k, p] : uf.parent) by_root[uf.find(k)].push_back(k);
  std::vector<std::vector<Key>> out;
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace

void validate_telescope(const CombinatorialTelescope& t) {
  for (size_t i = 0; i + 1 < t.crit.size(); ++i)
    if (!(t.crit[i] < t.crit[i + 1]))
      throw error(errc::invalid_parameters, "critical values not strictly increasing");
  if (t.slices.size() != t.crit.size())
    throw error(errc::invalid_parameters, "slice count does not match critical values");
  const size_t want = t.crit.empty() ? 0 : t.crit.size() - 1;
  if (t.cylinders.size() != want)
    throw error(errc::invalid_parameters, "cylinder count must be one less than slice count");
  auto check_labels = [](const std::vector<std::string>& labs) {
    std::set<std::string> seen(labs.begin(), labs.end());
    return seen.size() == labs.size();
  };
  for (const auto& s : t.slices)
    if (!check_labels(s)) throw error(errc::invalid_parameters, "duplicate slice label");
  for (size_t k = 0; k < t.cylinders.size(); ++k) {
    const auto& c = t.cylinders[k];
    if (!check_labels(c.labels)) throw error(errc::invalid_parameters, "duplicate cylinder label");
    const std::set<std::string> lo(t.slices[k].begin(), t.slices[k].end());
    const std::set<std::string> hi(t.slices[k + 1].begin(), t.slices[k + 1].end());
    for (const auto& lab : c.labels) {
      const auto l = c.lower.find(lab);
      const auto u = c.upper.find(lab);
      if (l == c.lower.end() || u == c.upper.end())
        throw error(errc::invalid_parameters, "attaching map not total on cylinder");
      if (!lo.count(l->second) || !hi.count(u->second))
        throw error(errc::invalid_parameters, "attaching map targets a missing component");
    }
  }
}

LeveledMultigraph telescope_to_graph(const CombinatorialTelescope& t) {
  validate_telescope(t);
  LeveledMultigraph g;
  std::vector<std::map<std::string, int>> node(t.slices.size());
  for (size_t k = 0; k < t.slices.size(); ++k) {
    for (const auto& lab : t.slices[k]) {
      node[k][lab] = static_cast<int>(g.levels.size());
      g.levels.push_back(t.crit[k]);
    }
  }
  for (size_t k = 0; k < t.cylinders.size(); ++k)
    for (const auto& lab : t.cylinders[k].labels)
      g.edges.push_back({node[k].at(t.cylinders[k].lower.at(lab)),
                         node[k + 1].at(t.cylinders[k].upper.at(lab))});
  return g;
}

CombinatorialTelescope merge_op(const CombinatorialTelescope& t, double a, double b) {
  validate_telescope(t);
  if (a > b) throw error(errc::invalid_parameters, "merge needs a <= b");
  if (t.empty() || b < t.support_lo() || a > t.support_hi())
    throw error(errc::out_of_range, "merge range does not meet the telescope support");

  const int n = static_cast<int>(t.crit.size());
  const double mid = 0.5 * (a + b);
  int i = 0;
  while (i < n && t.crit[i] < a) ++i;
  int j = n - 1;
  while (j >= 0 && t.crit[j] > b) --j;

  CombinatorialTelescope out;
  if (i > j) {
    // No critical value inside: cut the crossing cylinder at mid.
    const int k = i - 1;  // gap (crit[k], crit[k+1]) contains [a, b]
    const auto& cyl = t.cylinders[k];
    out = t;
    out.crit.insert(out.crit.begin() + k + 1, mid);
    out.slices.insert(out.slices.begin() + k + 1, cyl.labels);
    CombinatorialTelescope::Cylinder low, high;
    low.labels = cyl.labels;
    low.lower = cyl.lower;
    high.labels = cyl.labels;
    high.upper = cyl.upper;
    for (const auto& lab : cyl.labels) {
      low.upper[lab] = lab;
      high.lower[lab] = lab;
    }
    out.cylinders[k] = std::move(low);
    out.cylinders.insert(out.cylinders.begin() + k + 1, std::move(high));
    return out;
  }

  UF uf;
  for (int k = i; k <= j; ++k)
    for (const auto& lab : t.slices[k]) uf.add(slice_key(k, lab));
  for (int k = i; k < j; ++k) {
    for (const auto& lab : t.cylinders[k].labels) {
      uf.add(cyl_key(k, lab));
      uf.unite(cyl_key(k, lab), slice_key(k, t.cylinders[k].lower.at(lab)));
      uf.unite(cyl_key(k, lab), slice_key(k + 1, t.cylinders[k].upper.at(lab)));
    }
  }
  std::map<Key, std::vector<Key>> by_root;
  for (const auto& [k, p] : uf.parent) by_root[uf.find(k)].push_back(k);
  std::vector<Key> reps;
  for (auto& [root, members] : by_root)
    reps.push_back(*std::min_element(members.begin(), members.end()));
  std::sort(reps.begin(), reps.end());
  std::map<Key, std::string> collapse;
  std::vector<std::string> merged_labels;
  for (size_t q = 0; q < reps.size(); ++q) merged_labels.push_back("q" + std::to_string(q));
  for (const auto& [k, p] : uf.parent) {
    const Key root = uf.find(k);
    const Key rep = *std::min_element(by_root[root].begin(), by_root[root].end());
    collapse[k] = merged_labels[std::lower_bound(reps.begin(), reps.end(), rep) - reps.begin()];
  }

  out.crit.assign(t.crit.begin(), t.crit.begin() + i);
  out.crit.push_back(mid);
  out.crit.insert(out.crit.end(), t.crit.begin() + j + 1, t.crit.end());
  out.slices.assign(t.slices.begin(), t.slices.begin() + i);
  out.slices.push_back(merged_labels);
  out.slices.insert(out.slices.end(), t.slices.begin() + j + 1, t.slices.end());
  out.cylinders.assign(t.cylinders.begin(), t.cylinders.begin() + std::max(i - 1, 0));
  if (i >= 1) {
    CombinatorialTelescope::Cylinder c = t.cylinders[i - 1];
    for (auto& [lab, target] : c.upper) target = collapse.at(slice_key(i, target));
    out.cylinders.push_back(std::move(c));
  }
  if (j <= n - 2) {
    CombinatorialTelescope::Cylinder c = t.cylinders[j];
    for (auto& [lab, target] : c.lower) target = collapse.at(slice_key(j, target));
    out.cylinders.push_back(std::move(c));
    out.cylinders.insert(out.cylinders.end(), t.cylinders.begin() + j + 1, t.cylinders.end());
  }
  return out;
}

CombinatorialTelescope split_op(const CombinatorialTelescope& t, double a_i, double eps) {
  validate_telescope(t);
  const int idx = find_crit(t, a_i);
  const int n = static_cast<int>(t.crit.size());
  const double lo_gap = idx > 0 ? a_i - t.crit[idx - 1] : kInf;
  const double hi_gap = idx + 1 < n ? t.crit[idx + 1] - a_i : kInf;
  if (!(eps > 0 && eps < lo_gap && eps < hi_gap))
    throw error(errc::invalid_epsilon, "split epsilon must fit inside both gaps");

  CombinatorialTelescope out = t;
  out.crit[idx] = a_i - eps;
  out.crit.insert(out.crit.begin() + idx + 1, a_i + eps);
  out.slices.insert(out.slices.begin() + idx + 1, t.slices[idx]);
  CombinatorialTelescope::Cylinder id_cyl;
  id_cyl.labels = t.slices[idx];
  for (const auto& lab : id_cyl.labels) {
    id_cyl.lower[lab] = lab;
    id_cyl.upper[lab] = lab;
  }
  out.cylinders.insert(out.cylinders.begin() + idx, std::move(id_cyl));
  return out;
}

CombinatorialTelescope shift_op(const CombinatorialTelescope& t, double a_i, double eps) {
  validate_telescope(t);
  const int idx = find_crit(t, a_i);
  const int n = static_cast<int>(t.crit.size());
  const double nv = a_i + eps;
  if ((idx > 0 && !(t.crit[idx - 1] < nv)) || (idx + 1 < n && !(nv < t.crit[idx + 1])))
    throw error(errc::invalid_epsilon, "shift would cross a neighboring critical value");
  CombinatorialTelescope out = t;
  out.crit[idx] = nv;
  return out;
}

std::set<Fork> fork_classify(const CombinatorialTelescope& t, double a_i) {
  validate_telescope(t);
  const int idx = find_crit(t, a_i);
  const int n = static_cast<int>(t.crit.size());
  std::set<Fork> out;
  if (idx > 0 && is_bijection(t.cylinders[idx - 1].upper, t.slices[idx]))
    out.insert(Fork::up_fork);
  if (idx + 1 < n && is_bijection(t.cylinders[idx].lower, t.slices[idx]))
    out.insert(Fork::down_fork);
  return out;
}

namespace {

std::vector<double> crits_between(const CombinatorialTelescope& t, double lo, double hi) {
  std::vector<double> out;
  for (double v : t.crit)
    if (lo < v && v < hi) out.push_back(v);
  return out;
}

double prev_crit_below(const CombinatorialTelescope& t, double v) {
  double best = -kInf;
  for (double c : t.crit)
    if (c < v) best = std::max(best, c);
  return best;
}

double next_crit_above(const CombinatorialTelescope& t, double v) {
  double best = kInf;
  for (double c : t.crit)
    if (c > v) best = std::min(best, c);
  return best;
}

void check_cover_against(const CombinatorialTelescope& t, const GomicCover& cover) {
  validate_gomic(cover.intervals);
  for (double c : t.crit)
    for (double e : cover.endpoints())
      if (c == e)
        throw error(errc::endpoint_collision, "critical value coincides with a cover endpoint");
  if (!t.empty() && !(cover.lo() < t.support_lo() && t.support_hi() < cover.hi()))
    throw error(errc::uncovered_value, "telescope support leaves the covered range");
}

}  // namespace

CanonicalizeTrace canonicalize_traced(const CombinatorialTelescope& t, const GomicCover& cover) {
  validate_telescope(t);
  check_cover_against(t, cover);
  CanonicalizeTrace res{t, {}};
  if (t.empty()) return res;
  CombinatorialTelescope& cur = res.telescope;
  auto do_merge = [&](double a, double b) {
    cur = merge_op(cur, a, b);
    res.ops.push_back({TelescopeOp::Kind::merge, a, b});
  };

  const std::vector<double> ends = cover.endpoints();
  const int regions = static_cast<int>(ends.size()) - 1;

  // Merge within every region; carve a regular slice in crit-free proper
  // subintervals that the support crosses.
  for (int j = 0; j < regions; ++j) {
    const auto inside = crits_between(cur, ends[j], ends[j + 1]);
    if (inside.size() >= 2) {
      do_merge(inside.front(), inside.back());
    } else if (inside.empty() && j % 2 == 0) {
      const double lo = std::max(ends[j], cur.support_lo());
      const double hi = std::min(ends[j + 1], cur.support_hi());
      if (lo < hi) {
        const double m = 0.5 * (lo + hi);
        do_merge(m, m);
      }
    }
  }

  // Split every critical value; copies stay within their region.
  for (const double v : std::vector<double>(cur.crit)) {
    const int idx = find_crit(cur, v);
    double bound = kInf;
    if (idx > 0) bound = std::min(bound, v - cur.crit[idx - 1]);
    if (idx + 1 < static_cast<int>(cur.crit.size())) bound = std::min(bound, cur.crit[idx + 1] - v);
    for (double e : ends) bound = std::min(bound, std::abs(v - e));
    const double eps = 0.25 * bound;
    cur = split_op(cur, v, eps);
    res.ops.push_back({TelescopeOp::Kind::split, v, eps});
  }

  // Move the split copies out of every intersection: the lower copy is a
  // down-fork and descends into the proper below, the upper copy an up-fork
  // ascending into the proper above.
  for (int j = 1; j < regions; j += 2) {
    const auto inside = crits_between(cur, ends[j], ends[j + 1]);
    if (inside.empty()) continue;
    assert(inside.size() == 2 && "an intersection holds a split pair after the merge phase");
    const double d = inside[0], u = inside[1];
    {
      const double floor = std::max(ends[j - 1], prev_crit_below(cur, d));
      const double land = 0.5 * (floor + ends[j]);
      cur = shift_op(cur, d, land - d);
      res.ops.push_back({TelescopeOp::Kind::shift, d, land - d});
    }
    {
      const double ceil = std::min(ends[j + 2], next_crit_above(cur, u));
      const double land = 0.5 * (ends[j + 1] + ceil);
      cur = shift_op(cur, u, land - u);
      res.ops.push_back({TelescopeOp::Kind::shift, u, land - u});
    }
  }

  // Final merge inside each proper subinterval.
  for (int j = 0; j < regions; j += 2) {
    const auto inside = crits_between(cur, ends[j], ends[j + 1]);
    if (inside.size() >= 2) do_merge(inside.front(), inside.back());
  }

  for (int j = 1; j < regions; j += 2)
    assert(crits_between(cur, ends[j], ends[j + 1]).empty());
  for (int j = 0; j < regions; j += 2)
    assert(crits_between(cur, ends[j], ends[j + 1]).size() <= 1);
  return res;
}

CombinatorialTelescope canonicalize(const CombinatorialTelescope& t, const GomicCover& cover) {
  return canonicalize_traced(t, cover).telescope;
}

LeveledMultigraph multinerve_of_telescope(const CombinatorialTelescope& t,
                                          const GomicCover& cover, Variant variant) {
  validate_telescope(t);
  check_cover_against(t, cover);
  LeveledMultigraph g;
  if (t.empty()) return g;

  const int n = static_cast<int>(cover.size());
  std::vector<std::map<Key, int>> node_of(n);
  for (int q = 0; q < n; ++q) {
    const auto comps = components_over(t, cover.intervals[q].lo, cover.intervals[q].hi);
    for (const auto& comp : comps) {
      const int id = static_cast<int>(g.levels.size());
      g.levels.push_back(cover.intervals[q].mid());
      for (const auto& k : comp) node_of[q][k] = id;
    }
  }
  for (int q = 0; q + 1 < n; ++q) {
    const double lo = cover.intervals[q + 1].lo, hi = cover.intervals[q].hi;
    for (const auto& comp : components_over(t, lo, hi)) {
      int a = -1, b = -1;
      for (const auto& k : comp) {
        const auto ia = node_of[q].find(k);
        const auto ib = node_of[q + 1].find(k);
        assert(ia != node_of[q].end() && ib != node_of[q + 1].end());
        assert((a < 0 || (ia->second == a && ib->second == b)) &&
               "intersection component attaches to a unique node per side");
        a = ia->second;
        b = ib->second;
      }
      if (a >= 0) g.edges.push_back({a, b});
    }
  }
  if (variant == Variant::Mapper) {
    std::set<std::pair<int, int>> seen;
    std::vector<std::array<int, 2>> dedup;
    for (auto e : g.edges)
      if (seen.insert({e[0], e[1]}).second) dedup.push_back(e);
    g.edges = std::move(dedup);
  }
  return g;
}

}  // namespace mnm
