#ifndef TSPSURF_BOUNDARY_HPP
#define TSPSURF_BOUNDARY_HPP

#include <string>
#include <vector>

#include "tspsurf/complex.hpp"
#include "tspsurf/milp.hpp"
#include "tspsurf/solver.hpp"

namespace tspsurf {

/**
 * @brief A selected 2-complex. Edge multiplicities are always recomputed
 * from the triangle selection, never taken from solver values.
 */
struct Surface {
  const TriangleSet* complex = nullptr;
  int n = 0;
  std::vector<int> selected; // triangle indices, sorted
  std::vector<std::pair<Edge, int>> active_edges; // (edge, multiplicity)
};

struct Tour {
  std::vector<int> order; // cyclic, starts at the smallest city
  double length = 0.0;
};

struct VerificationReport {
  bool cardinality = false;
  bool closure = false;
  bool manifold = false;
  bool euler_per_vertex = false;
  bool dual_connected = false;
  bool boundary_is_single_cycle = false;
  bool hamiltonian = false;
  std::vector<int> chi; // per-vertex local Euler characteristic
  std::vector<std::string> failures;

  bool valid() const {
    return cardinality && closure && manifold && euler_per_vertex &&
           dual_connected && boundary_is_single_cycle && hamiltonian;
  }
  std::string to_json() const;
};

/// Build a Surface from an explicit triangle selection.
Surface make_surface(const TriangleSet& ts, std::vector<int> selected);

/// Decode x_t > 0.5 selections from a solved model.
Surface extract_surface(const MilpModel& model, const MilpSolution& sol,
                        const TriangleSet& ts);

/// Run every disk-admissibility check from the triangle selection alone.
VerificationReport verify_surface(const Surface& s);

/// Edges with incidence multiplicity exactly 1.
std::vector<Edge> boundary_edges(const Surface& s);

/// Walk the boundary cycle; throws NotACycle / NotHamiltonian /
/// MultipleCycles when the edge set is not a single N-cycle.
Tour assemble_tour(const std::vector<Edge>& edges, int n,
                   const TspInstance& inst);

/// True when the recomputed boundary length matches the solver objective
/// within 1e-6 * (1 + |Z|).
bool objective_identity_check(const Surface& s, const TspInstance& inst,
                              double sol_objective);

/// 100 * (tour_length - reference) / reference.
double gap_percent(double tour_length, double reference);

/// "NAME length N : c0 c1 ... c(N-1)"
std::string format_tour_line(const std::string& name, const Tour& tour);

} // namespace tspsurf

#endif
