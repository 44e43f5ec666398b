#ifndef TSPSURF_COMPLEX_HPP
#define TSPSURF_COMPLEX_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tspsurf/instance.hpp"

namespace tspsurf {

/// Undirected city pair with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Sorted city triple a < b < c.
struct Triangle {
  int a = 0, b = 0, c = 0;
  auto operator<=>(const Triangle&) const = default;
  std::array<Edge, 3> edges() const {
    return {Edge{a, b}, Edge{a, c}, Edge{b, c}};
  }
  bool contains(int v) const { return v == a || v == b || v == c; }
};

inline Triangle make_triangle(int a, int b, int c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return Triangle{a, b, c};
}

enum class ComplexSource { COMPLETE, DELAUNAY, GREEDY, CUSTOM };

const char* complex_source_name(ComplexSource s);
ComplexSource complex_source_from_name(const std::string& name);

/**
 * @brief Candidate triangle set over an instance's cities.
 *
 * Triangles are stored sorted and duplicate-free; edge_universe is the
 * sorted union of all member edges.
 */
struct TriangleSet {
  std::vector<Triangle> triangles;
  ComplexSource source = ComplexSource::CUSTOM;
  std::vector<Edge> edge_universe;
  int n = 0; // city count of the underlying instance

  double perimeter(const TspInstance& inst, int t) const;
};

/// Bipartite triangle--edge incidence structure with per-vertex indices.
struct IncidenceGraph {
  int n = 0;                       // cities
  const TriangleSet* complex = nullptr;
  std::vector<Edge> edges;         // W, sorted
  std::vector<double> edge_length; // parallel to edges
  // Arc (t, e): triangle index into complex->triangles, edge index into edges.
  std::vector<std::pair<int, int>> arcs; // 3 per triangle, triangle-major
  std::vector<std::vector<int>> tri_at_vertex;  // U(v): triangle indices
  std::vector<std::vector<int>> edge_at_vertex; // W(v): edge indices
  std::vector<std::vector<int>> conn_at_vertex; // Conn(v): arc indices

  int edge_index(const Edge& e) const; // -1 if absent
};

/// Triangle adjacency over shared primal edges; valid only when every
/// primal edge lies in at most two triangles.
struct DualGraph {
  int n = 0;
  const TriangleSet* complex = nullptr;
  struct DualEdge {
    int t1 = 0, t2 = 0; // t1 < t2
    Edge shared;
    double length = 0.0;
  };
  std::vector<DualEdge> dual_edges;
  std::vector<double> tri_perimeter; // P(t), parallel to complex->triangles
  std::vector<std::vector<int>> tri_at_vertex;  // triangles containing v
  std::vector<std::vector<int>> dual_at_vertex; // dual edges with v in shared
};

inline constexpr std::size_t kDefaultComplexCap = 200000;

/// All C(n,3) triangles; throws ComplexTooLarge past the cap.
TriangleSet complete_complex(const TspInstance& inst,
                             std::size_t cap = kDefaultComplexCap);

/// Delaunay triangulation (incremental Bowyer-Watson). Requires coordinates
/// and a non-collinear point set.
TriangleSet delaunay_complex(const TspInstance& inst);

/// Greedy triangulation: edges by nondecreasing length, skipping crossings;
/// triangles are the bounded triangular faces.
TriangleSet greedy_complex(const TspInstance& inst);

/// Sort, deduplicate and wrap triangles into a TriangleSet.
TriangleSet finalize_triangle_set(std::vector<Triangle> tris,
                                  ComplexSource source, int n);

/// The returned graphs keep a pointer into `ts`; temporaries are rejected.
IncidenceGraph build_incidence(const TspInstance& inst, const TriangleSet& ts);
IncidenceGraph build_incidence(const TspInstance& inst, TriangleSet&& ts) =
    delete;

DualGraph build_dual(const TspInstance& inst, const TriangleSet& ts);
DualGraph build_dual(const TspInstance& inst, TriangleSet&& ts) = delete;

/// Convex hull size of the instance's point set (collinear hull points on
/// the hull boundary are counted).
int hull_size(const TspInstance& inst);

/// JSON (de)serialization so custom complexes can be supplied to the CLI.
std::string triangle_set_to_json(const TriangleSet& ts);
TriangleSet triangle_set_from_json(const std::string& json_text);

} // namespace tspsurf

#endif
