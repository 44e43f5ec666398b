#include "tspsurf/baseline_model.hpp"

#include <algorithm>
#include <array>
#include <queue>

namespace tspsurf {

EdgeSet complete_edge_set(const TspInstance& inst) {
  EdgeSet es;
  es.n = inst.n;
  es.source = EdgeSetSource::COMPLETE;
  for (int i = 0; i < inst.n; ++i)
    for (int j = i + 1; j < inst.n; ++j) {
      es.edges.push_back({i, j});
      es.length.push_back(inst.distance(i, j));
    }
  return es;
}

EdgeSet edge_set_from_complex(const TspInstance& inst, const TriangleSet& ts) {
  EdgeSet es;
  es.n = inst.n;
  es.source = ts.source == ComplexSource::DELAUNAY
                  ? EdgeSetSource::DELAUNAY_EDGES
                  : EdgeSetSource::CUSTOM;
  es.edges = ts.edge_universe;
  for (const auto& e : es.edges) es.length.push_back(inst.distance(e.u, e.v));
  return es;
}

namespace {

bool connected(const EdgeSet& es) {
  if (es.n == 0) return false;
  std::vector<std::vector<int>> adj(es.n);
  for (const auto& e : es.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(es.n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
  }
  return count == es.n;
}

} // namespace

MilpModel build_lifted_mtz(const TspInstance& inst, const EdgeSet& es) {
  const int n = inst.n;
  if (n < 3)
    throw TspError(ErrorCode::InvalidArgument, "lifted MTZ needs n >= 3");
  if (!connected(es))
    throw TspError(ErrorCode::DisconnectedEdgeSet,
                   "candidate edge set does not connect all cities");

  MilpModel m;
  m.builder = "lifted-mtz";
  m.instance = inst.name;

  // Directed arc pair per undirected edge.
  std::vector<std::array<int, 2>> arc(es.edges.size());
  std::vector<std::vector<std::pair<int, int>>> out(n), in(n); // (var, other)
  for (size_t e = 0; e < es.edges.size(); ++e) {
    int i = es.edges[e].u, j = es.edges[e].v;
    double L = es.length[e];
    arc[e][0] = m.add_variable("xd_" + std::to_string(i) + "_" +
                                   std::to_string(j),
                               VarKind::BINARY, 0, 1, L,
                               {VarRole::Kind::DIRECTED, -1, i, j});
    arc[e][1] = m.add_variable("xd_" + std::to_string(j) + "_" +
                                   std::to_string(i),
                               VarKind::BINARY, 0, 1, L,
                               {VarRole::Kind::DIRECTED, -1, j, i});
    out[i].push_back({arc[e][0], j});
    in[j].push_back({arc[e][0], i});
    out[j].push_back({arc[e][1], i});
    in[i].push_back({arc[e][1], j});
  }

  // Levels: u_0 = 0, u_i in [1, n-1] otherwise.
  std::vector<int> u(n);
  for (int i = 0; i < n; ++i)
    u[i] = m.add_variable("u_" + std::to_string(i), VarKind::CONTINUOUS,
                          i == 0 ? 0.0 : 1.0, i == 0 ? 0.0 : n - 1.0, 0,
                          {VarRole::Kind::CITY_LEVEL, -1, i, -1});

  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<int, double>> to, ti;
    for (const auto& [v, _] : out[i]) to.emplace_back(v, 1.0);
    for (const auto& [v, _] : in[i]) ti.emplace_back(v, 1.0);
    m.add_constraint("deg_out_" + std::to_string(i), std::move(to), Sense::EQ,
                     1.0);
    m.add_constraint("deg_in_" + std::to_string(i), std::move(ti), Sense::EQ,
                     1.0);
  }

  // Desrochers-Laporte lifting; arcs touching the depot are unconstrained.
  for (size_t e = 0; e < es.edges.size(); ++e) {
    int i = es.edges[e].u, j = es.edges[e].v;
    if (i != 0 && j != 0) {
      m.add_constraint("mtz_" + std::to_string(i) + "_" + std::to_string(j),
                       {{u[i], 1.0},
                        {u[j], -1.0},
                        {arc[e][0], n - 1.0},
                        {arc[e][1], n - 3.0}},
                       Sense::LE, n - 2.0);
      m.add_constraint("mtz_" + std::to_string(j) + "_" + std::to_string(i),
                       {{u[j], 1.0},
                        {u[i], -1.0},
                        {arc[e][1], n - 1.0},
                        {arc[e][0], n - 3.0}},
                       Sense::LE, n - 2.0);
    }
    // 2-city subtour cut.
    m.add_constraint("twocycle_" + std::to_string(i) + "_" +
                         std::to_string(j),
                     {{arc[e][0], 1.0}, {arc[e][1], 1.0}}, Sense::LE, 1.0);
  }
  return m;
}

} // namespace tspsurf
