#pragma once

#include <string>

#include "mnm/covers.hpp"
#include "mnm/diagram.hpp"
#include "mnm/mapper.hpp"
#include "mnm/reeb.hpp"
#include "mnm/signature_distance.hpp"
#include "mnm/telescope.hpp"

namespace mnm::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Shortest round-trip decimal form.
std::string fmt_double(double x);

struct ValuedComplex {
  SimplicialComplex2 complex;
  VertexFunction values;
};

GomicCover parse_cover(const std::string& text);
ValuedComplex parse_complex(const std::string& text);
CombinatorialTelescope parse_telescope(const std::string& text);
ExtendedDiagram parse_diagram(const std::string& text);
PointCloud parse_cloud_csv(const std::string& text);
PointCloud parse_cloud_json(const std::string& text);

std::string cover_json(const GomicCover& cover);
std::string staircase_json(const Staircase& stair);
std::string telescope_json(const CombinatorialTelescope& t);
std::string diagram_json(const ExtendedDiagram& d);
std::string graph_json(const LeveledMultigraph& g);
std::string graph_dot(const LeveledMultigraph& g, const std::string& name);
std::string report_json(const DistanceReport& rep);
std::string inclusion_json(const InclusionReport& rep);
std::string error_json(const error& e);

// Points colored by dimension, extended points square, others round;
// staircase outlines in four dash styles when a cover is supplied.
std::string render_diagram_svg(const ExtendedDiagram& d, const GomicCover* cover);

}  // namespace mnm::io
