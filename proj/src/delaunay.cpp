#include <algorithm>
#include <map>
#include <set>

#include "tspsurf/complex.hpp"
#include "tspsurf/geometry.hpp"

namespace tspsurf {

namespace {

constexpr int kGhost = -1;

struct Tri {
  int v[3]; // solid triangles CCW; ghost triangles (a, b, kGhost) where
            // a->b reverses a hull edge, so the solid side is on its right
  bool alive = true;
  bool ghost() const { return v[2] == kGhost; }
};

class BowyerWatson {
public:
  explicit BowyerWatson(const std::vector<Point>& pts) : pts_(pts) {}

  std::vector<Triangle> run() {
    const int n = static_cast<int>(pts_.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (pts_[i].x == pts_[j].x && pts_[i].y == pts_[j].y)
          throw TspError(ErrorCode::DegenerateGeometry,
                         "duplicate points " + std::to_string(i) + " and " +
                             std::to_string(j));

    // Seed with the first non-collinear triple, in index order.
    int k = -1;
    for (int i = 2; i < n; ++i)
      if (orient2d(pts_[0], pts_[1], pts_[i]) != 0) {
        k = i;
        break;
      }
    if (k < 0)
      throw TspError(ErrorCode::DegenerateGeometry, "all points collinear");

    int a = 0, b = 1, c = k;
    if (orient2d(pts_[a], pts_[b], pts_[c]) < 0) std::swap(b, c);
    add_tri(a, b, c);
    add_tri(b, a, kGhost);
    add_tri(c, b, kGhost);
    add_tri(a, c, kGhost);

    for (int i = 2; i < n; ++i)
      if (i != k) insert(i);

    std::vector<Triangle> out;
    for (const auto& t : tris_)
      if (t.alive && !t.ghost()) out.push_back(make_triangle(t.v[0], t.v[1], t.v[2]));
    return out;
  }

  int ghost_count() const {
    int c = 0;
    for (const auto& t : tris_)
      if (t.alive && t.ghost()) ++c;
    return c;
  }

private:
  const std::vector<Point>& pts_;
  std::vector<Tri> tris_;
  std::map<std::pair<int, int>, int> by_edge_; // directed edge -> triangle

  void add_tri(int a, int b, int c) {
    int id = static_cast<int>(tris_.size());
    tris_.push_back({{a, b, c}, true});
    by_edge_[{a, b}] = id;
    by_edge_[{b, c}] = id;
    by_edge_[{c, a}] = id;
  }

  void kill_tri(int id) {
    Tri& t = tris_[id];
    t.alive = false;
    by_edge_.erase({t.v[0], t.v[1]});
    by_edge_.erase({t.v[1], t.v[2]});
    by_edge_.erase({t.v[2], t.v[0]});
  }

  // Circumdisk membership with closed-disk semantics: cocircular points and
  // points on triangle edges count as inside, which keeps cavity
  // retriangulation free of zero-area triangles. Ghost (x,y,G) owns the
  // reversed hull edge x->y, so its region is the open half-plane to the
  // LEFT of x->y plus the open edge itself.
  bool in_disk(const Tri& t, const Point& p) const {
    if (!t.ghost())
      return incircle(pts_[t.v[0]], pts_[t.v[1]], pts_[t.v[2]], p) >= 0;
    const Point& a = pts_[t.v[0]];
    const Point& b = pts_[t.v[1]];
    int o = orient2d(a, b, p);
    if (o > 0) return true; // beyond the hull edge
    if (o < 0) return false;
    // Collinear: inside only on the open segment (a,b).
    double dab = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
    double dot = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
    return dot > 0 && dot < dab;
  }

  // Triangle (or ghost region) containing p; the flood-fill seed.
  int find_seed(const Point& p) const {
    for (int id = 0; id < static_cast<int>(tris_.size()); ++id) {
      const Tri& t = tris_[id];
      if (!t.alive) continue;
      if (t.ghost()) {
        if (in_disk(t, p)) return id;
      } else {
        const Point& a = pts_[t.v[0]];
        const Point& b = pts_[t.v[1]];
        const Point& c = pts_[t.v[2]];
        if (orient2d(a, b, p) >= 0 && orient2d(b, c, p) >= 0 &&
            orient2d(c, a, p) >= 0)
          return id;
      }
    }
    return -1;
  }

  void insert(int pi) {
    const Point& p = pts_[pi];
    int seed = find_seed(p);
    if (seed < 0)
      throw TspError(ErrorCode::DegenerateGeometry,
                     "no containing region for point " + std::to_string(pi));

    // Cavity = the edge-connected component of circumdisk-containing
    // triangles around the seed. Restricting to the connected component
    // matters on degenerate inputs, where far-away exactly-cocircular
    // triangles would otherwise join the cavity and corrupt the walk.
    std::vector<int> bad;
    std::set<int> bad_set{seed};
    std::vector<int> stack{seed};
    while (!stack.empty()) {
      int id = stack.back();
      stack.pop_back();
      bad.push_back(id);
      const Tri& t = tris_[id];
      const int e[3][2] = {{t.v[0], t.v[1]}, {t.v[1], t.v[2]}, {t.v[2], t.v[0]}};
      for (const auto& ed : e) {
        auto it = by_edge_.find({ed[1], ed[0]});
        if (it == by_edge_.end()) continue;
        int nb = it->second;
        if (!bad_set.count(nb) && in_disk(tris_[nb], p)) {
          bad_set.insert(nb);
          stack.push_back(nb);
        }
      }
    }
    std::vector<std::pair<int, int>> boundary; // directed edges (u -> v)
    for (int id : bad) {
      const Tri& t = tris_[id];
      const int e[3][2] = {{t.v[0], t.v[1]}, {t.v[1], t.v[2]}, {t.v[2], t.v[0]}};
      for (const auto& ed : e) {
        auto it = by_edge_.find({ed[1], ed[0]});
        bool neighbor_bad =
            it != by_edge_.end() && bad_set.count(it->second) > 0;
        if (!neighbor_bad) boundary.emplace_back(ed[0], ed[1]);
      }
    }
    for (int id : bad) kill_tri(id);
    for (const auto& [u, v] : boundary) {
      // Canonicalize ghosts to (x, y, kGhost).
      if (u == kGhost)
        add_tri(v, pi, kGhost);
      else if (v == kGhost)
        add_tri(pi, u, kGhost);
      else
        add_tri(u, v, pi);
    }
  }
};

} // namespace

TriangleSet delaunay_complex(const TspInstance& inst) {
  if (!inst.has_coords())
    throw TspError(ErrorCode::NoCoordinates,
                   "delaunay_complex requires coordinates");
  BowyerWatson bw(*inst.coords);
  auto tris = bw.run();
  return finalize_triangle_set(std::move(tris), ComplexSource::DELAUNAY,
                               inst.n);
}

} // namespace tspsurf
