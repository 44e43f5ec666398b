#ifndef TSPSURF_BASELINE_MODEL_HPP
#define TSPSURF_BASELINE_MODEL_HPP

#include "tspsurf/complex.hpp"
#include "tspsurf/milp.hpp"

namespace tspsurf {

enum class EdgeSetSource { COMPLETE, DELAUNAY_EDGES, CUSTOM };

/// Undirected candidate edges for the conventional edge formulation.
struct EdgeSet {
  std::vector<Edge> edges; // sorted, unique
  std::vector<double> length;
  EdgeSetSource source = EdgeSetSource::CUSTOM;
  int n = 0;
};

EdgeSet complete_edge_set(const TspInstance& inst);
EdgeSet edge_set_from_complex(const TspInstance& inst, const TriangleSet& ts);

/**
 * @brief Lifted-MTZ edge formulation (Desrochers-Laporte) on an arbitrary
 * connected edge set, with city 0 as depot and 2-city subtour cuts.
 */
MilpModel build_lifted_mtz(const TspInstance& inst, const EdgeSet& es);

} // namespace tspsurf

#endif
