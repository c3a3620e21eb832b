#pragma once

#include <array>
#include <vector>

#include "mnm/complex.hpp"

namespace mnm {

// Nodes carry real levels (id = index); edges are unordered pairs, parallel
// edges allowed. Used both for Reeb graphs and (MultiNerve) Mappers.
struct LeveledMultigraph {
  std::vector<double> levels;
  std::vector<std::array<int, 2>> edges;
};

LeveledMultigraph reeb_graph(const SimplicialComplex2& k, const VertexFunction& f);

// Extended persistence of the level function on the multigraph.
ExtendedDiagram quotient_diagram(const LeveledMultigraph& g);

// Multigraph isomorphism mapping levels by the order-preserving bijection
// between occupied level sets.
bool leveled_isomorphic(const LeveledMultigraph& a, const LeveledMultigraph& b);

}  // namespace mnm
