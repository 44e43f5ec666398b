#ifndef TSPSURF_INSTANCE_HPP
#define TSPSURF_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tspsurf/errors.hpp"

namespace tspsurf {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

enum class EdgeWeightKind { EUC_2D_ROUNDED, EUC_2D_EXACT, EXPLICIT };

enum class RandomMode { EUCLIDEAN, NONMETRIC };

/**
 * @brief A symmetric TSP instance: city count, optional planar coordinates
 * and the full distance matrix.
 *
 * Instances are immutable after construction and safe to share across
 * threads. For the EUC_2D kinds the matrix is derived from the coordinates
 * by the declared rounding rule and is bit-identical under recomputation.
 */
struct TspInstance {
  std::string name;
  int n = 0;
  std::optional<std::vector<Point>> coords;
  std::vector<double> dist; // n*n row-major, symmetric, zero diagonal
  EdgeWeightKind kind = EdgeWeightKind::EXPLICIT;

  /// Distance between cities i and j. Throws IndexOutOfRange.
  double distance(int i, int j) const {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw TspError(ErrorCode::IndexOutOfRange,
                     "city index outside [0," + std::to_string(n) + ")");
    return dist[static_cast<size_t>(i) * n + j];
  }

  bool has_coords() const { return coords.has_value(); }
};

/// Parse a TSPLIB-format TSP file (EUC_2D or EXPLICIT/FULL_MATRIX).
TspInstance parse_tsplib(const std::string& text);

/// Serialize back to TSPLIB text; re-parsing yields an identical matrix.
std::string write_tsplib(const TspInstance& inst);

/// Recompute the distance matrix from coordinates under the given rule.
std::vector<double> derive_distances(const std::vector<Point>& coords,
                                     EdgeWeightKind kind);

/// Random instance, deterministic per (n, seed, mode).
TspInstance gen_random(int n, std::uint64_t seed, RandomMode mode);

/// Two nested regular hexagons (radii 1 and 2) plus a central city; N=13.
TspInstance gen_nested_hexagons();

/// Hard-to-solve Tnm instance on tetrahedron edges (Hougardy & Zhong
/// construction); n must be > 50 with n % 3 == 1. The canonical files round
/// coordinates to integers after a 1e4 scaling; `exact` keeps them
/// unrounded, which preserves the construction's near-degenerate geometry
/// instead of collapsing it onto lattice lines.
TspInstance gen_tnm(int n, bool exact = false);

/// Load from a file path or a "gen:..." spec such as
/// "gen:euclidean:n=20:seed=3", "gen:nonmetric:n=10:seed=7",
/// "gen:hexagons", "gen:tnm:n=199".
TspInstance load_instance(const std::string& path_or_spec);

} // namespace tspsurf

#endif
