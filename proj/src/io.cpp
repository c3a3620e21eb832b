#include "mnm/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mnm::io {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    throw error(errc::parse_error, e.what());
  }
}

double to_double(const json& j, const char* what) {
  if (!j.is_number()) throw error(errc::parse_error, std::string(what) + " is not a number");
  return j.get<double>();
}

int to_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw error(errc::parse_error, std::string(what) + " is not an integer");
  return j.get<int>();
}

PointKind kind_of(const std::string& s) {
  if (s == "Ord") return PointKind::Ord;
  if (s == "Rel") return PointKind::Rel;
  if (s == "ExtPlus") return PointKind::ExtPlus;
  if (s == "ExtMinus") return PointKind::ExtMinus;
  throw error(errc::parse_error, "unknown point kind '" + s + "'");
}

json point_json(const DiagramPoint& p) {
  return json{{"birth", p.birth}, {"death", p.death}, {"kind", kind_name(p.kind)},
              {"dim", p.dim}};
}

double cell_double(const std::string& cell, int line_no) {
  const char* b = cell.data();
  const char* e = b + cell.size();
  double v = 0;
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e)
    throw error(errc::parse_error,
                "line " + std::to_string(line_no) + ": '" + cell + "' is not a number");
  return v;
}

std::string trim(std::string s) {
  auto sp = [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && sp(s.front())) s.erase(s.begin());
  while (!s.empty() && sp(s.back())) s.pop_back();
  return s;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::parse_error, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::parse_error, "cannot write " + path);
  out << text;
}

std::string fmt_double(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, p);
}

GomicCover parse_cover(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_array()) throw error(errc::parse_error, "cover must be an array of [lo, hi]");
  std::vector<Interval> ivs;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw error(errc::parse_error, "cover entries must be [lo, hi]");
    ivs.push_back(Interval::open(to_double(e[0], "interval lo"), to_double(e[1], "interval hi")));
  }
  return validate_gomic(std::move(ivs));
}

ValuedComplex parse_complex(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("vertices"))
    throw error(errc::parse_error, "complex must be an object with 'vertices'");
  ValuedComplex out;
  const json& vs = j["vertices"];
  out.values.assign(vs.size(), 0);
  std::vector<bool> seen(vs.size(), false);
  for (const auto& v : vs) {
    int id = to_int(v.at("id"), "vertex id");
    if (id < 0 || id >= static_cast<int>(vs.size()) || seen[id])
      throw error(errc::parse_error, "vertex ids must be 0..n-1, distinct");
    seen[id] = true;
    out.values[id] = to_double(v.at("value"), "vertex value");
  }
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> triangles;
  for (const auto& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 2) throw error(errc::parse_error, "edges must be [i, j]");
    edges.push_back({to_int(e[0], "edge end"), to_int(e[1], "edge end")});
  }
  for (const auto& t : j.value("triangles", json::array())) {
    if (!t.is_array() || t.size() != 3)
      throw error(errc::parse_error, "triangles must be [i, j, k]");
    triangles.push_back(
        {to_int(t[0], "triangle vertex"), to_int(t[1], "triangle vertex"),
         to_int(t[2], "triangle vertex")});
  }
  out.complex = make_complex(static_cast<int>(vs.size()), std::move(edges), std::move(triangles));
  return out;
}

CombinatorialTelescope parse_telescope(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw error(errc::parse_error, "telescope must be an object");
  CombinatorialTelescope t;
  for (const auto& c : j.value("crit", json::array()))
    t.crit.push_back(to_double(c, "critical value"));
  for (const auto& s : j.value("slices", json::array())) {
    t.slices.emplace_back();
    for (const auto& l : s) t.slices.back().push_back(l.get<std::string>());
  }
  for (const auto& c : j.value("cylinders", json::array())) {
    CombinatorialTelescope::Cylinder cyl;
    for (const auto& l : c.value("labels", json::array()))
      cyl.labels.push_back(l.get<std::string>());
    // .items() keeps a reference, so the maps must outlive the loops
    const json lower = c.value("lower", json::object());
    for (const auto& [k, v] : lower.items()) cyl.lower[k] = v.get<std::string>();
    const json upper = c.value("upper", json::object());
    for (const auto& [k, v] : upper.items()) cyl.upper[k] = v.get<std::string>();
    t.cylinders.push_back(std::move(cyl));
  }
  validate_telescope(t);
  return t;
}

ExtendedDiagram parse_diagram(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_array()) throw error(errc::parse_error, "diagram must be an array of points");
  ExtendedDiagram d;
  for (const auto& p : j) {
    DiagramPoint pt;
    pt.birth = to_double(p.at("birth"), "birth");
    pt.death = to_double(p.at("death"), "death");
    pt.kind = kind_of(p.at("kind").get<std::string>());
    pt.dim = to_int(p.at("dim"), "dim");
    d.points.push_back(pt);
  }
  return d;
}

PointCloud parse_cloud_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(trim(cell));
    bool numeric = true;
    std::vector<double> row;
    for (const auto& c : cells) {
      double v = 0;
      auto [p, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
      if (ec != std::errc() || p != c.data() + c.size()) {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!numeric) {
      if (header_allowed) {
        header_allowed = false;
        continue;
      }
      for (const auto& c : cells) cell_double(c, line_no);
    }
    header_allowed = false;
    if (row.size() < 2)
      throw error(errc::parse_error,
                  "line " + std::to_string(line_no) + ": need at least one coordinate and a value");
    if (!rows.empty() && row.size() != rows.front().size())
      throw error(errc::parse_error, "line " + std::to_string(line_no) + ": ragged row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw error(errc::parse_error, "cloud CSV has no data rows");
  PointCloud cloud;
  for (const auto& row : rows) {
    cloud.coords.emplace_back(row.begin(), row.end() - 1);
    cloud.values.push_back(row.back());
  }
  validate_cloud(cloud);
  return cloud;
}

PointCloud parse_cloud_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("values"))
    throw error(errc::parse_error, "cloud must be an object with 'values'");
  PointCloud cloud;
  for (const auto& v : j["values"]) cloud.values.push_back(to_double(v, "value"));
  for (const auto& row : j.value("coords", json::array())) {
    cloud.coords.emplace_back();
    for (const auto& x : row) cloud.coords.back().push_back(to_double(x, "coordinate"));
  }
  for (const auto& row : j.value("dist", json::array())) {
    cloud.dist.emplace_back();
    for (const auto& x : row) cloud.dist.back().push_back(to_double(x, "distance"));
  }
  if (!cloud.coords.empty() && !cloud.dist.empty())
    throw error(errc::parse_error, "cloud has both 'coords' and 'dist'");
  validate_cloud(cloud);
  return cloud;
}

std::string cover_json(const GomicCover& cover) {
  json j = json::array();
  for (const auto& iv : cover.intervals) j.push_back(json::array({iv.lo, iv.hi}));
  return j.dump(2) + "\n";
}

std::string staircase_json(const Staircase& stair) {
  json j = json::array();
  for (const auto& sq : stair.squares)
    j.push_back(json{{"interval", json::array({sq.iv.lo, sq.iv.hi})},
                     {"side", sq.side == Side::above ? "above" : "below"}});
  return j.dump(2) + "\n";
}

std::string telescope_json(const CombinatorialTelescope& t) {
  json j;
  j["crit"] = t.crit;
  j["slices"] = t.slices;
  j["cylinders"] = json::array();
  for (const auto& c : t.cylinders) {
    json cyl;
    cyl["labels"] = c.labels;
    cyl["lower"] = json::object();
    for (const auto& [k, v] : c.lower) cyl["lower"][k] = v;
    cyl["upper"] = json::object();
    for (const auto& [k, v] : c.upper) cyl["upper"][k] = v;
    j["cylinders"].push_back(std::move(cyl));
  }
  return j.dump(2) + "\n";
}

std::string diagram_json(const ExtendedDiagram& d) {
  json j = json::array();
  for (const auto& p : d.points) j.push_back(point_json(p));
  return j.dump(2) + "\n";
}

std::string graph_json(const LeveledMultigraph& g) {
  json j;
  j["nodes"] = json::array();
  for (size_t i = 0; i < g.levels.size(); ++i)
    j["nodes"].push_back(json{{"id", i}, {"level", g.levels[i]}});
  j["edges"] = json::array();
  for (const auto& e : g.edges) j["edges"].push_back(json::array({e[0], e[1]}));
  return j.dump(2) + "\n";
}

std::string graph_dot(const LeveledMultigraph& g, const std::string& name) {
  std::string out = "graph " + name + " {\n";
  for (size_t i = 0; i < g.levels.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + fmt_double(g.levels[i]) + "\"];\n";
  for (const auto& e : g.edges)
    out += "  n" + std::to_string(e[0]) + " -- n" + std::to_string(e[1]) + ";\n";
  out += "}\n";
  return out;
}

std::string report_json(const DistanceReport& rep) {
  json j;
  j["cost"] = rep.cost;
  j["per_type"] = json{{"ord", rep.ord}, {"ext", rep.ext}, {"rel", rep.rel}};
  j["matching"] = json::array();
  for (const auto& m : rep.matchings) {
    for (const auto& [a, b] : m.pairs) {
      double c = std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
      j["matching"].push_back(json{{"pair", json::array({point_json(a), point_json(b)})},
                                   {"cost", c}});
    }
    for (const auto& [p, c] : m.unmatched)
      j["matching"].push_back(json{{"deleted", point_json(p)}, {"cost", c}});
  }
  return j.dump(2) + "\n";
}

std::string inclusion_json(const InclusionReport& rep) {
  json j;
  j["ok"] = rep.ok();
  j["intersection_crossing_empty"] = rep.intersection_crossing_empty;
  j["interval_crossing_empty"] = rep.interval_crossing_empty;
  j["vertex_subset_edge"] = rep.vertex_subset_edge;
  j["mapper_subset_multinerve"] = rep.mapper_subset_multinerve;
  j["vertex_equals_edge"] = rep.vertex_equals_edge;
  j["edge_equals_continuous"] = rep.edge_equals_continuous;
  j["violations"] = rep.violations;
  return j.dump(2) + "\n";
}

std::string error_json(const error& e) {
  json j;
  j["error"] = errc_name(e.code);
  j["message"] = e.what();
  return j.dump() + "\n";
}

std::string render_diagram_svg(const ExtendedDiagram& d, const GomicCover* cover) {
  double lo = 0, hi = 1;
  bool seeded = false;
  auto feed = [&](double v) {
    if (!seeded) {
      lo = hi = v;
      seeded = true;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  };
  for (const auto& p : d.points) {
    feed(p.birth);
    feed(p.death);
  }
  if (cover) {
    feed(cover->lo());
    feed(cover->hi());
  }
  if (!seeded) {
    lo = 0;
    hi = 1;
  }
  double pad = (hi - lo) * 0.1;
  if (pad == 0) pad = 0.5;
  lo -= pad;
  hi += pad;

  const double size = 480, margin = 40;
  auto sx = [&](double v) { return margin + (v - lo) / (hi - lo) * (size - 2 * margin); };
  auto sy = [&](double v) { return size - margin - (v - lo) / (hi - lo) * (size - 2 * margin); };
  auto num = [](double v) {
    return fmt_double(std::round(v * 100) / 100);
  };

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" "
      "viewBox=\"0 0 480 480\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"480\" height=\"480\" fill=\"white\"/>\n";
  svg += "<rect x=\"" + num(margin) + "\" y=\"" + num(margin) + "\" width=\"" +
         num(size - 2 * margin) + "\" height=\"" + num(size - 2 * margin) +
         "\" fill=\"none\" stroke=\"#333\"/>\n";
  svg += "<line x1=\"" + num(sx(lo)) + "\" y1=\"" + num(sy(lo)) + "\" x2=\"" + num(sx(hi)) +
         "\" y2=\"" + num(sy(hi)) + "\" stroke=\"#999\"/>\n";

  if (cover) {
    struct Style {
      StairKind kind;
      const char* dash;
    };
    const Style styles[4] = {
        {StairKind::OrdStair, "8 4"},
        {StairKind::RelStair, "8 4 2 4"},
        {StairKind::ExtMinusStair, "2 4"},
        {StairKind::ExtStair, "8 4 2 4 2 4"},
    };
    for (const auto& st : styles) {
      Staircase stair = build_staircase(*cover, st.kind);
      for (const auto& sq : stair.squares) {
        double a = sq.iv.lo, b = sq.iv.hi;
        std::string pts;
        if (sq.side == Side::above)
          pts = num(sx(a)) + "," + num(sy(a)) + " " + num(sx(a)) + "," + num(sy(b)) + " " +
                num(sx(b)) + "," + num(sy(b));
        else
          pts = num(sx(a)) + "," + num(sy(a)) + " " + num(sx(b)) + "," + num(sy(a)) + " " +
                num(sx(b)) + "," + num(sy(b));
        svg += "<polygon points=\"" + pts +
               "\" fill=\"none\" stroke=\"#555\" stroke-dasharray=\"" + st.dash + "\"/>\n";
      }
    }
  }

  for (const auto& p : d.points) {
    const char* color = p.dim == 0 ? "#1f77b4" : p.dim == 1 ? "#ff7f0e"
                                  : p.dim == 2 ? "#2ca02c"
                                               : "#9467bd";
    double cx = sx(p.birth), cy = sy(p.death);
    if (p.kind == PointKind::ExtPlus || p.kind == PointKind::ExtMinus)
      svg += "<rect x=\"" + num(cx - 4) + "\" y=\"" + num(cy - 4) +
             "\" width=\"8\" height=\"8\" fill=\"" + color + "\"/>\n";
    else
      svg += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"4\" fill=\"" + color +
             "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace mnm::io
