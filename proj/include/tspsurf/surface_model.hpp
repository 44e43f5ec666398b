#ifndef TSPSURF_SURFACE_MODEL_HPP
#define TSPSURF_SURFACE_MODEL_HPP

#include "tspsurf/complex.hpp"
#include "tspsurf/milp.hpp"

namespace tspsurf {

/// How the global tree constraint is enforced.
enum class TreeVariant { FLOW, MTZ };

const char* tree_variant_name(TreeVariant v);

/**
 * @brief Surface MILP over the bipartite triangle--edge incidence graph.
 *
 * Objective: minimize sum_e 2 L_e y_e - sum_(t,e) L_e z_te, which equals
 * the boundary length of the selected 2-complex. Constraints: linking,
 * closure, cardinality, manifold degree, per-vertex Euler filter and a
 * rooted tree (single-commodity flow or MTZ levels) over the K = 3N-5
 * active nodes.
 */
MilpModel build_general(const IncidenceGraph& inc, TreeVariant variant,
                        const std::string& instance_name = "");

/**
 * @brief Planar simplification on the triangle dual graph.
 *
 * Valid when every primal edge lies in at most two candidate triangles.
 * Objective: minimize sum_t P(t) x_t - 2 sum_d L(e_d) w_d; edge variables
 * are eliminated, the Euler filter takes its dual form and the manifold
 * constraint is implicit. Tree constraints run over K = N-2 active nodes.
 */
MilpModel build_planar(const DualGraph& dual, TreeVariant variant,
                       const std::string& instance_name = "");

/// Triangles incident to the minimum-degree city of the complex's edge
/// universe (ties: smallest city index). Used to restrict tree roots.
std::vector<int> root_candidates(const TriangleSet& ts);

} // namespace tspsurf

#endif
