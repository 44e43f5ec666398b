#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "tspsurf/complex.hpp"
#include "tspsurf/geometry.hpp"

namespace tspsurf {

namespace {

struct CandidateEdge {
  double length;
  int u, v; // u < v
};

// Bounded faces of the accepted planar subdivision, walked with the
// interior kept on the left of each directed edge.
std::vector<Triangle> extract_triangular_faces(
    const std::vector<Point>& pts, const std::vector<Edge>& accepted) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<int>> nbr(n);
  for (const auto& e : accepted) {
    nbr[e.u].push_back(e.v);
    nbr[e.v].push_back(e.u);
  }
  for (int v = 0; v < n; ++v)
    std::sort(nbr[v].begin(), nbr[v].end(), [&](int a, int b) {
      double aa = std::atan2(pts[a].y - pts[v].y, pts[a].x - pts[v].x);
      double ab = std::atan2(pts[b].y - pts[v].y, pts[b].x - pts[v].x);
      return aa < ab;
    });

  auto next_cw = [&](int v, int from) {
    // Predecessor of `from` in the CCW angular order around v, i.e. the
    // first edge clockwise of (v -> from).
    const auto& list = nbr[v];
    auto it = std::find(list.begin(), list.end(), from);
    return it == list.begin() ? list.back() : *(it - 1);
  };

  std::map<std::pair<int, int>, bool> visited;
  for (const auto& e : accepted) {
    visited[{e.u, e.v}] = false;
    visited[{e.v, e.u}] = false;
  }

  std::vector<Triangle> tris;
  for (auto& [start, seen] : visited) {
    if (seen) continue;
    // Walk one face: from directed edge (u->v), continue along (v->w)
    // where w is the first neighbor clockwise of u around v; this keeps
    // the face on the left of every directed edge.
    std::vector<int> cycle;
    int u = start.first, v = start.second;
    while (!visited[{u, v}]) {
      visited[{u, v}] = true;
      cycle.push_back(u);
      int w = next_cw(v, u);
      u = v;
      v = w;
    }
    if (cycle.size() != 3) continue;
    // Discard the outer face (clockwise cycle).
    if (orient2d(pts[cycle[0]], pts[cycle[1]], pts[cycle[2]]) > 0)
      tris.push_back(make_triangle(cycle[0], cycle[1], cycle[2]));
  }
  return tris;
}

} // namespace

TriangleSet greedy_complex(const TspInstance& inst) {
  if (!inst.has_coords())
    throw TspError(ErrorCode::NoCoordinates,
                   "greedy_complex requires coordinates");
  const auto& pts = *inst.coords;
  const int n = inst.n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pts[i].x == pts[j].x && pts[i].y == pts[j].y)
        throw TspError(ErrorCode::DegenerateGeometry,
                       "duplicate points " + std::to_string(i) + " and " +
                           std::to_string(j));

  std::vector<CandidateEdge> cands;
  cands.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      cands.push_back({inst.distance(i, j), i, j});
  std::sort(cands.begin(), cands.end(), [](const CandidateEdge& a,
                                           const CandidateEdge& b) {
    return std::tie(a.length, a.u, a.v) < std::tie(b.length, b.u, b.v);
  });

  std::vector<Edge> accepted;
  for (const auto& cand : cands) {
    bool ok = true;
    for (const auto& e : accepted) {
      if (segments_conflict(pts[cand.u], pts[cand.v], pts[e.u], pts[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) accepted.push_back({cand.u, cand.v});
  }

  auto tris = extract_triangular_faces(pts, accepted);
  if (tris.empty())
    throw TspError(ErrorCode::DegenerateGeometry,
                   "greedy subdivision has no triangular faces");
  return finalize_triangle_set(std::move(tris), ComplexSource::GREEDY, inst.n);
}

} // namespace tspsurf
