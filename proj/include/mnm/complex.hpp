#pragma once

#include <array>
#include <vector>

#include "mnm/covers.hpp"
#include "mnm/diagram.hpp"

namespace mnm {

using Simplex = std::vector<int>;  // sorted vertex ids

struct SimplicialComplex2 {
  int n_vertices = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> triangles;

  std::vector<Simplex> all_simplices() const;
};

// Sorts simplices, removes duplicates, completes the face closure.
SimplicialComplex2 make_complex(int n_vertices,
                                std::vector<std::array<int, 2>> edges,
                                std::vector<std::array<int, 3>> triangles = {});

using VertexFunction = std::vector<double>;

bool generic_values(const VertexFunction& f);

// Full extended persistence diagram via boundary-matrix reduction over the
// cone-extended filtration. With perturb, ties are broken by vertex index.
ExtendedDiagram extended_persistence(const SimplicialComplex2& k, const VertexFunction& f,
                                     bool perturb = false);

std::vector<std::vector<Simplex>> levelset_components(const SimplicialComplex2& k,
                                                      const VertexFunction& f,
                                                      const Interval& range);

}  // namespace mnm
