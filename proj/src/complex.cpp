#include "tspsurf/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "tspsurf/geometry.hpp"

namespace tspsurf {

const char* complex_source_name(ComplexSource s) {
  switch (s) {
    case ComplexSource::COMPLETE: return "complete";
    case ComplexSource::DELAUNAY: return "delaunay";
    case ComplexSource::GREEDY: return "greedy";
    case ComplexSource::CUSTOM: return "custom";
  }
  return "custom";
}

ComplexSource complex_source_from_name(const std::string& name) {
  if (name == "complete") return ComplexSource::COMPLETE;
  if (name == "delaunay") return ComplexSource::DELAUNAY;
  if (name == "greedy") return ComplexSource::GREEDY;
  if (name == "custom") return ComplexSource::CUSTOM;
  throw TspError(ErrorCode::InvalidArgument, "unknown complex source " + name);
}

namespace {

std::vector<Edge> collect_edge_universe(const std::vector<Triangle>& tris) {
  std::vector<Edge> edges;
  edges.reserve(tris.size() * 3);
  for (const auto& t : tris)
    for (const auto& e : t.edges()) edges.push_back(e);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

} // namespace

TriangleSet finalize_triangle_set(std::vector<Triangle> tris,
                                  ComplexSource source, int n) {
  std::sort(tris.begin(), tris.end());
  tris.erase(std::unique(tris.begin(), tris.end()), tris.end());
  TriangleSet ts;
  ts.edge_universe = collect_edge_universe(tris);
  ts.triangles = std::move(tris);
  ts.source = source;
  ts.n = n;
  return ts;
}

double TriangleSet::perimeter(const TspInstance& inst, int t) const {
  const Triangle& tr = triangles[t];
  return inst.distance(tr.a, tr.b) + inst.distance(tr.a, tr.c) +
         inst.distance(tr.b, tr.c);
}

TriangleSet complete_complex(const TspInstance& inst, std::size_t cap) {
  if (inst.n < 4)
    throw TspError(ErrorCode::InvalidArgument, "complete_complex needs n >= 4");
  const std::size_t n = static_cast<std::size_t>(inst.n);
  const std::size_t count = n * (n - 1) * (n - 2) / 6;
  if (count > cap)
    throw TspError(ErrorCode::ComplexTooLarge,
                   "C(n,3) = " + std::to_string(count) + " exceeds cap " +
                       std::to_string(cap));
  std::vector<Triangle> tris;
  tris.reserve(count);
  for (int a = 0; a < inst.n; ++a)
    for (int b = a + 1; b < inst.n; ++b)
      for (int c = b + 1; c < inst.n; ++c) tris.push_back(Triangle{a, b, c});
  return finalize_triangle_set(std::move(tris), ComplexSource::COMPLETE,
                               inst.n);
}

IncidenceGraph build_incidence(const TspInstance& inst, const TriangleSet& ts) {
  IncidenceGraph g;
  g.n = inst.n;
  g.complex = &ts;
  g.edges = ts.edge_universe;
  g.edge_length.reserve(g.edges.size());
  for (const auto& e : g.edges) g.edge_length.push_back(inst.distance(e.u, e.v));

  std::map<Edge, int> edge_idx;
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
    edge_idx[g.edges[i]] = i;

  g.arcs.reserve(ts.triangles.size() * 3);
  g.tri_at_vertex.assign(g.n, {});
  g.edge_at_vertex.assign(g.n, {});
  g.conn_at_vertex.assign(g.n, {});

  for (int t = 0; t < static_cast<int>(ts.triangles.size()); ++t) {
    const Triangle& tr = ts.triangles[t];
    g.tri_at_vertex[tr.a].push_back(t);
    g.tri_at_vertex[tr.b].push_back(t);
    g.tri_at_vertex[tr.c].push_back(t);
    for (const auto& e : tr.edges()) {
      int ei = edge_idx.at(e);
      int arc = static_cast<int>(g.arcs.size());
      g.arcs.emplace_back(t, ei);
      // v in e implies v in t, so Conn(v) gathers arcs keyed by edge ends.
      g.conn_at_vertex[e.u].push_back(arc);
      g.conn_at_vertex[e.v].push_back(arc);
    }
  }
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    g.edge_at_vertex[g.edges[i].u].push_back(i);
    g.edge_at_vertex[g.edges[i].v].push_back(i);
  }
  return g;
}

int IncidenceGraph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || !(*it == e)) return -1;
  return static_cast<int>(it - edges.begin());
}

DualGraph build_dual(const TspInstance& inst, const TriangleSet& ts) {
  std::map<Edge, std::vector<int>> owners;
  for (int t = 0; t < static_cast<int>(ts.triangles.size()); ++t)
    for (const auto& e : ts.triangles[t].edges()) owners[e].push_back(t);

  DualGraph g;
  g.n = inst.n;
  g.complex = &ts;
  for (const auto& [e, tris] : owners) {
    if (tris.size() > 2)
      throw TspError(ErrorCode::NotPlanarCompatible,
                     "edge (" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + ") lies in " +
                         std::to_string(tris.size()) +
                         " triangles; use the general bipartite model");
    if (tris.size() == 2)
      g.dual_edges.push_back(
          {tris[0], tris[1], e, inst.distance(e.u, e.v)});
  }
  std::sort(g.dual_edges.begin(), g.dual_edges.end(),
            [](const DualGraph::DualEdge& x, const DualGraph::DualEdge& y) {
              return std::tie(x.t1, x.t2) < std::tie(y.t1, y.t2);
            });
  g.tri_at_vertex.assign(g.n, {});
  g.dual_at_vertex.assign(g.n, {});
  g.tri_perimeter.reserve(ts.triangles.size());
  for (int t = 0; t < static_cast<int>(ts.triangles.size()); ++t) {
    const Triangle& tr = ts.triangles[t];
    g.tri_perimeter.push_back(ts.perimeter(inst, t));
    g.tri_at_vertex[tr.a].push_back(t);
    g.tri_at_vertex[tr.b].push_back(t);
    g.tri_at_vertex[tr.c].push_back(t);
  }
  for (int d = 0; d < static_cast<int>(g.dual_edges.size()); ++d) {
    g.dual_at_vertex[g.dual_edges[d].shared.u].push_back(d);
    g.dual_at_vertex[g.dual_edges[d].shared.v].push_back(d);
  }
  return g;
}

int hull_size(const TspInstance& inst) {
  if (!inst.has_coords())
    throw TspError(ErrorCode::NoCoordinates, "hull needs coordinates");
  const auto& pts = *inst.coords;
  std::vector<int> order(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return std::tie(pts[i].x, pts[i].y) < std::tie(pts[j].x, pts[j].y);
  });
  // Monotone chain, keeping collinear boundary points: pop only on strict
  // right turns so points interior to hull edges stay on the chain.
  auto build = [&](const std::vector<int>& idx) {
    std::vector<int> chain;
    for (int i : idx) {
      while (chain.size() >= 2 &&
             orient2d(pts[chain[chain.size() - 2]], pts[chain.back()],
                      pts[i]) < 0)
        chain.pop_back();
      chain.push_back(i);
    }
    return chain;
  };
  std::vector<int> lower = build(order);
  std::reverse(order.begin(), order.end());
  std::vector<int> upper = build(order);
  std::set<int> hull(lower.begin(), lower.end());
  hull.insert(upper.begin(), upper.end());
  return static_cast<int>(hull.size());
}

std::string triangle_set_to_json(const TriangleSet& ts) {
  nlohmann::json j;
  j["n"] = ts.n;
  j["source"] = complex_source_name(ts.source);
  auto& arr = j["triangles"] = nlohmann::json::array();
  for (const auto& t : ts.triangles) arr.push_back({t.a, t.b, t.c});
  return j.dump(2);
}

TriangleSet triangle_set_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw TspError(ErrorCode::MalformedSection,
                   std::string("bad complex JSON: ") + e.what());
  }
  if (!j.contains("triangles") || !j["triangles"].is_array())
    throw TspError(ErrorCode::MalformedSection,
                   "complex JSON needs a 'triangles' array");
  std::vector<Triangle> tris;
  int max_city = -1;
  for (const auto& item : j["triangles"]) {
    if (!item.is_array() || item.size() != 3)
      throw TspError(ErrorCode::MalformedSection,
                     "triangle entries must be [a,b,c]");
    int a = item[0].get<int>(), b = item[1].get<int>(), c = item[2].get<int>();
    if (a == b || b == c || a == c || a < 0 || b < 0 || c < 0)
      throw TspError(ErrorCode::MalformedSection, "invalid triangle vertices");
    tris.push_back(make_triangle(a, b, c));
    max_city = std::max({max_city, a, b, c});
  }
  int n = j.contains("n") ? j["n"].get<int>() : max_city + 1;
  if (n <= max_city)
    throw TspError(ErrorCode::MalformedSection,
                   "declared n smaller than largest city index");
  ComplexSource src = j.contains("source")
                          ? complex_source_from_name(j["source"].get<std::string>())
                          : ComplexSource::CUSTOM;
  return finalize_triangle_set(std::move(tris), src, n);
}

} // namespace tspsurf
