#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

#include "doctest.h"
#include "tspsurf/complex.hpp"
#include "tspsurf/geometry.hpp"

using namespace tspsurf;

namespace {

TspInstance square() {
  TspInstance inst;
  inst.name = "square4";
  inst.n = 4;
  inst.kind = EdgeWeightKind::EUC_2D_EXACT;
  inst.coords = std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  inst.dist = derive_distances(*inst.coords, inst.kind);
  return inst;
}

bool delaunay_empty_circumcircle(const TspInstance& inst,
                                 const TriangleSet& ts, double tol) {
  const auto& pts = *inst.coords;
  for (const auto& t : ts.triangles) {
    Point a = pts[t.a], b = pts[t.b], c = pts[t.c];
    if (orient2d(a, b, c) < 0) std::swap(b, c);
    // Circumcenter via perpendicular bisectors.
    double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) +
                      c.x * (a.y - b.y));
    double ux = ((a.x * a.x + a.y * a.y) * (b.y - c.y) +
                 (b.x * b.x + b.y * b.y) * (c.y - a.y) +
                 (c.x * c.x + c.y * c.y) * (a.y - b.y)) /
                d;
    double uy = ((a.x * a.x + a.y * a.y) * (c.x - b.x) +
                 (b.x * b.x + b.y * b.y) * (a.x - c.x) +
                 (c.x * c.x + c.y * c.y) * (b.x - a.x)) /
                d;
    double r2 = (a.x - ux) * (a.x - ux) + (a.y - uy) * (a.y - uy);
    double r = std::sqrt(r2);
    for (int p = 0; p < inst.n; ++p) {
      if (t.contains(p)) continue;
      double dist = std::sqrt((pts[p].x - ux) * (pts[p].x - ux) +
                              (pts[p].y - uy) * (pts[p].y - uy));
      if (dist < r - tol * std::max(1.0, r)) return false;
    }
  }
  return true;
}

bool dual_graph_connected(const DualGraph& g) {
  size_t t_count = g.complex->triangles.size();
  if (t_count == 0) return false;
  std::vector<std::vector<int>> adj(t_count);
  for (const auto& d : g.dual_edges) {
    adj[d.t1].push_back(d.t2);
    adj[d.t2].push_back(d.t1);
  }
  std::vector<char> seen(t_count, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  size_t reached = 1;
  while (!q.empty()) {
    int t = q.front();
    q.pop();
    for (int u : adj[t])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        q.push(u);
      }
  }
  return reached == t_count;
}

} // namespace

TEST_CASE("complete complex counts") {
  CHECK(complete_complex(gen_nested_hexagons()).triangles.size() == 286);
  TspInstance sq = square();
  TriangleSet ts = complete_complex(sq);
  CHECK(ts.triangles.size() == 4);
  CHECK(ts.edge_universe.size() == 6);
  CHECK(ts.source == ComplexSource::COMPLETE);
  CHECK_THROWS_AS(complete_complex(gen_random(60, 1, RandomMode::EUCLIDEAN),
                                   20000),
                  TspError); // C(60,3) = 34220 > cap
}

TEST_CASE("delaunay of the unit square has two triangles") {
  TriangleSet ts = delaunay_complex(square());
  CHECK(ts.triangles.size() == 2);
  CHECK(ts.source == ComplexSource::DELAUNAY);
}

TEST_CASE("delaunay rejects degenerate input") {
  TspInstance line;
  line.n = 4;
  line.kind = EdgeWeightKind::EUC_2D_EXACT;
  line.coords = std::vector<Point>{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  line.dist = derive_distances(*line.coords, line.kind);
  CHECK_THROWS_AS(delaunay_complex(line), TspError);
  CHECK_THROWS_AS(delaunay_complex(gen_random(8, 1, RandomMode::NONMETRIC)),
                  TspError);
}

TEST_CASE("delaunay triangle count satisfies 2n-2-h") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
    TspInstance inst = gen_random(40, seed, RandomMode::EUCLIDEAN);
    TriangleSet ts = delaunay_complex(inst);
    int h = hull_size(inst);
    CHECK(static_cast<int>(ts.triangles.size()) == 2 * inst.n - 2 - h);
  }
  TspInstance hexagons = gen_nested_hexagons();
  TriangleSet ts = delaunay_complex(hexagons);
  CHECK(static_cast<int>(ts.triangles.size()) ==
        2 * 13 - 2 - hull_size(hexagons));
  CHECK(!ts.triangles.empty());
  CHECK(dual_graph_connected(build_dual(hexagons, ts)));
}

TEST_CASE("delaunay empty-circumcircle property on random and cocircular input") {
  for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
    TspInstance inst = gen_random(120, seed, RandomMode::EUCLIDEAN);
    TriangleSet ts = delaunay_complex(inst);
    CHECK(delaunay_empty_circumcircle(inst, ts, 1e-9));
  }
  CHECK(delaunay_empty_circumcircle(gen_nested_hexagons(),
                                    delaunay_complex(gen_nested_hexagons()),
                                    1e-9));
}

TEST_CASE("delaunay handles collinear chains and grids") {
  // Three parallel lines of integer points.
  TspInstance inst;
  inst.n = 15;
  inst.kind = EdgeWeightKind::EUC_2D_EXACT;
  std::vector<Point> pts;
  for (int row = 0; row < 3; ++row)
    for (int i = 0; i < 5; ++i)
      pts.push_back({static_cast<double>(i * 7), static_cast<double>(row * 3)});
  inst.coords = pts;
  inst.dist = derive_distances(pts, inst.kind);
  TriangleSet ts = delaunay_complex(inst);
  CHECK(static_cast<int>(ts.triangles.size()) == 2 * inst.n - 2 - hull_size(inst));
  CHECK(delaunay_empty_circumcircle(inst, ts, 1e-9));
}

TEST_CASE("delaunay stays planar-compatible on near-degenerate input") {
  // Points on the edges of a scaled tetrahedron projection carry large
  // exactly-cocircular families; the cavity search must not absorb
  // far-away cocircular triangles.
  TspInstance inst = gen_tnm(52, true);
  TriangleSet ts = delaunay_complex(inst);
  std::map<Edge, int> mult;
  for (const auto& t : ts.triangles)
    for (const auto& e : t.edges()) mult[e]++;
  for (const auto& [e, m] : mult) CHECK(m <= 2);
  CHECK(static_cast<int>(ts.triangles.size()) ==
        2 * inst.n - 2 - hull_size(inst));
  CHECK(delaunay_empty_circumcircle(inst, ts, 1e-9));

  TspInstance rounded = gen_tnm(52, false);
  TriangleSet ts2 = delaunay_complex(rounded);
  CHECK(static_cast<int>(ts2.triangles.size()) ==
        2 * rounded.n - 2 - hull_size(rounded));
  CHECK(delaunay_empty_circumcircle(rounded, ts2, 1e-9));
}

TEST_CASE("greedy triangulation of the square picks one diagonal") {
  TriangleSet ts = greedy_complex(square());
  CHECK(ts.triangles.size() == 2);
  // Tie between the diagonals broken lexicographically: (0,2) wins.
  CHECK(std::count(ts.edge_universe.begin(), ts.edge_universe.end(),
                   Edge{0, 2}) == 1);
  CHECK(std::count(ts.edge_universe.begin(), ts.edge_universe.end(),
                   Edge{1, 3}) == 0);
}

TEST_CASE("greedy and delaunay share hull edges on convex point sets") {
  TspInstance inst = gen_nested_hexagons(); // outer hexagon is the hull
  TriangleSet greedy = greedy_complex(inst);
  TriangleSet delaunay = delaunay_complex(inst);
  auto hull_edges = [&](const TriangleSet& ts) {
    std::map<Edge, int> mult;
    for (const auto& t : ts.triangles)
      for (const auto& e : t.edges()) mult[e]++;
    std::set<Edge> hull;
    for (const auto& [e, m] : mult)
      if (m == 1) hull.insert(e);
    return hull;
  };
  CHECK(hull_edges(greedy) == hull_edges(delaunay));
}

TEST_CASE("incidence graph indices are consistent") {
  TspInstance hexagons = gen_nested_hexagons();
  TriangleSet ts = delaunay_complex(hexagons);
  IncidenceGraph inc = build_incidence(hexagons, ts);
  CHECK(inc.arcs.size() == 3 * ts.triangles.size());
  for (const auto& e : inc.edges) {
    CHECK(inc.edge_index(e) >= 0);
  }
  // Conn(v) holds (t,e) iff v is in e (and hence in t).
  for (int v = 0; v < inc.n; ++v) {
    for (int arc : inc.conn_at_vertex[v]) {
      const auto& [t, e] = inc.arcs[arc];
      CHECK((inc.edges[e].u == v || inc.edges[e].v == v));
      CHECK(ts.triangles[t].contains(v));
    }
    CHECK(inc.conn_at_vertex[v].size() == 2 * inc.tri_at_vertex[v].size());
  }
}

TEST_CASE("single triangle incidence") {
  TspInstance inst = gen_random(4, 1, RandomMode::EUCLIDEAN);
  TriangleSet ts = finalize_triangle_set({Triangle{0, 1, 2}},
                                         ComplexSource::CUSTOM, 4);
  IncidenceGraph inc = build_incidence(inst, ts);
  CHECK(inc.edges.size() == 3);
  CHECK(inc.arcs.size() == 3);
}

TEST_CASE("dual graph construction and planar-compatibility errors") {
  TspInstance sq = square();
  TriangleSet two = delaunay_complex(sq);
  DualGraph dual = build_dual(sq, two);
  CHECK(dual.dual_edges.size() == 1);

  TspInstance five = gen_random(5, 2, RandomMode::EUCLIDEAN);
  TriangleSet all = complete_complex(five);
  try {
    build_dual(five, all);
    FAIL("expected NotPlanarCompatible");
  } catch (const TspError& e) {
    CHECK(e.code() == ErrorCode::NotPlanarCompatible);
  }
}

TEST_CASE("dual of berlin-sized delaunay is connected") {
  TspInstance inst = gen_random(52, 52, RandomMode::EUCLIDEAN);
  TriangleSet ts = delaunay_complex(inst);
  CHECK(dual_graph_connected(build_dual(inst, ts)));
}

TEST_CASE("berlin52 fixture: complete and delaunay complex sizes") {
  const char* env = std::getenv("TSPSURF_DATA");
  std::string dir = env ? env : "data";
  TspInstance inst;
  try {
    inst = load_instance(dir + "/berlin52.tsp");
  } catch (const TspError&) {
    return; // fixture not present in this checkout
  }
  CHECK(inst.n == 52);
  CHECK(complete_complex(inst).triangles.size() == 22100); // C(52,3)
  TriangleSet ts = delaunay_complex(inst);
  int count = static_cast<int>(ts.triangles.size());
  CHECK(count >= 52);
  CHECK(count <= 102);
  CHECK(count == 94); // 2*52 - 2 - 8 hull points
  CHECK(hull_size(inst) == 8);
}

TEST_CASE("triangle set JSON round-trip") {
  TspInstance sq = square();
  TriangleSet ts = delaunay_complex(sq);
  TriangleSet back = triangle_set_from_json(triangle_set_to_json(ts));
  CHECK(back.triangles == ts.triangles);
  CHECK(back.n == ts.n);
  CHECK(back.source == ts.source);
  CHECK_THROWS_AS(triangle_set_from_json("{\"triangles\": [[0,0,1]]}"),
                  TspError);
  CHECK_THROWS_AS(triangle_set_from_json("not json"), TspError);
}
