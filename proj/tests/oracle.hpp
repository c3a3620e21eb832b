#pragma once

#include <functional>

#include "mnm/complex.hpp"

// Independent checks used by the test suites. Ranks are computed by plain
// GF(2) linear algebra on chain spaces, with no reference to the reduction
// engine in src/.
namespace oracle {

// rank of H_p(sublevel(beta)) -> H_p(sublevel(gamma)), beta <= gamma
int ord_rank(const mnm::SimplicialComplex2& k, const mnm::VertexFunction& f, int p,
             double beta, double gamma);

// rank of H_p(sublevel(beta)) -> H_p(K, superlevel(gamma))
int ext_rank(const mnm::SimplicialComplex2& k, const mnm::VertexFunction& f, int p,
             double beta, double gamma);

// rank of H_p(K, superlevel(gamma1)) -> H_p(K, superlevel(gamma2)), gamma1 >= gamma2
int rel_rank(const mnm::SimplicialComplex2& k, const mnm::VertexFunction& f, int p,
             double gamma1, double gamma2);

// Reconstructs the whole extended diagram from rank queries on a midpoint grid.
mnm::ExtendedDiagram full_diagram(const mnm::SimplicialComplex2& k, const mnm::VertexFunction& f);

// Exhaustive bottleneck with deletion costs, for small inputs only.
double brute_bottleneck(const std::vector<mnm::DiagramPoint>& a,
                        const std::vector<mnm::DiagramPoint>& b,
                        const std::function<double(const mnm::DiagramPoint&)>& del_a,
                        const std::function<double(const mnm::DiagramPoint&)>& del_b);

}  // namespace oracle
