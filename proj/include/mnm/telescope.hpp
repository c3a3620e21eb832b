#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mnm/covers.hpp"
#include "mnm/diagram.hpp"
#include "mnm/reeb.hpp"

namespace mnm {

// Telescope of a Morse-type function, modeled at the level of connected
// components: slices and cylinders are label sets, attaching maps are set
// maps. Compact support: there are exactly crit.size()-1 cylinders.
struct CombinatorialTelescope {
  struct Cylinder {
    std::vector<std::string> labels;
    std::map<std::string, std::string> lower;  // label -> component of the slice below
    std::map<std::string, std::string> upper;  // label -> component of the slice above
  };

  std::vector<double> crit;  // strictly increasing
  std::vector<std::vector<std::string>> slices;
  std::vector<Cylinder> cylinders;

  bool empty() const { return crit.empty(); }
  double support_lo() const { return crit.front(); }
  double support_hi() const { return crit.back(); }
};

void validate_telescope(const CombinatorialTelescope& t);

LeveledMultigraph telescope_to_graph(const CombinatorialTelescope& t);

// Collapses the critical values inside [a, b] to (a+b)/2; if [a, b] contains
// none, inserts a regular slice cut from the crossing cylinder.
CombinatorialTelescope merge_op(const CombinatorialTelescope& t, double a, double b);

// Replaces the slice at a_i by two copies at a_i -/+ eps joined by an
// identity cylinder.
CombinatorialTelescope split_op(const CombinatorialTelescope& t, double a_i, double eps);

// Moves the critical value a_i to a_i + eps (slices and maps unchanged).
CombinatorialTelescope shift_op(const CombinatorialTelescope& t, double a_i, double eps);

enum class Fork { up_fork, down_fork };

std::set<Fork> fork_classify(const CombinatorialTelescope& t, double a_i);

struct TelescopeOp {
  enum class Kind { merge, split, shift } kind;
  double a = 0.0;  // merge: lower bound; split/shift: the critical value
  double b = 0.0;  // merge: upper bound; split/shift: eps
};

struct CanonicalizeTrace {
  CombinatorialTelescope telescope;
  std::vector<TelescopeOp> ops;
};

// Merge' . Shift . Split . Merge pipeline: afterwards every proper
// subinterval meeting the telescope holds exactly one critical value and the
// intersections hold none.
CanonicalizeTrace canonicalize_traced(const CombinatorialTelescope& t, const GomicCover& cover);
CombinatorialTelescope canonicalize(const CombinatorialTelescope& t, const GomicCover& cover);

LeveledMultigraph multinerve_of_telescope(const CombinatorialTelescope& t,
                                          const GomicCover& cover, Variant variant);

}  // namespace mnm
