#ifndef TSPSURF_ORACLES_HPP
#define TSPSURF_ORACLES_HPP

#include <optional>

#include "tspsurf/boundary.hpp"
#include "tspsurf/complex.hpp"
#include "tspsurf/instance.hpp"

namespace tspsurf {

/**
 * Exhaustive oracles used to cross-check the MILP pipeline. Each oracle
 * has an OpenMP-parallel implementation (the default) and a plain serial
 * reference; tests assert they agree and tools/bench_oracles compares
 * their throughput.
 */

inline constexpr int kBruteForceTspMaxN = 11;
inline constexpr double kBruteForceSurfaceMaxSubsets = 1e7;

/// Minimum over all (N-1)!/2 undirected tours; ties broken by
/// lexicographically smallest canonical tour. Requires n <= 11.
Tour brute_force_tsp(const TspInstance& inst);
Tour brute_force_tsp_serial(const TspInstance& inst);

struct SurfaceOptimum {
  Surface surface;
  double boundary_length = 0.0;
};

/// Minimum-boundary disk over all (N-2)-subsets of the candidate set that
/// pass verify_surface; nullopt when no subset is admissible. Requires
/// C(|T|, N-2) <= 1e7.
std::optional<SurfaceOptimum> brute_force_surface(const TspInstance& inst,
                                                  const TriangleSet& ts);
std::optional<SurfaceOptimum> brute_force_surface_serial(
    const TspInstance& inst, const TriangleSet& ts);

/// C(n,k) saturated at kBruteForceSurfaceMaxSubsets + 1.
double subset_count_estimate(int n, int k);

} // namespace tspsurf

#endif
