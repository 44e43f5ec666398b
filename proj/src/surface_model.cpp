#include "tspsurf/surface_model.hpp"

#include <algorithm>

namespace tspsurf {

const char* tree_variant_name(TreeVariant v) {
  return v == TreeVariant::FLOW ? "flow" : "mtz";
}

namespace {

std::string city_pair(int i, int j) {
  return std::to_string(i) + "_" + std::to_string(j);
}

// One undirected link of the connectivity graph whose selection variable
// already exists in the model (z for incidences, w for dual edges).
struct TreeLink {
  int node1;
  int node2;
  int select_var;
};

struct TreeNode {
  std::string name;   // node id used inside variable names
  int active_var;     // x_t or y_e
  int root_var = -1;  // r_t, only for root candidates
};

// Rooted directed tree over the active nodes: arc-pair selection,
// single incoming arc per active non-root node, and either a
// single-commodity flow or MTZ level ordering.
void add_tree_constraints(MilpModel& m, std::vector<TreeNode> nodes,
                          const std::vector<TreeLink>& links,
                          const std::vector<int>& root_nodes, double K,
                          TreeVariant variant) {
  std::vector<std::pair<int, double>> root_sum;
  for (int nid : root_nodes) {
    TreeNode& node = nodes[nid];
    node.root_var = m.add_variable(
        "r_" + node.name.substr(1), VarKind::BINARY, 0, 1, 0,
        {VarRole::Kind::ROOT, std::stoi(node.name.substr(1)), -1, -1});
    root_sum.emplace_back(node.root_var, 1.0);
    m.add_constraint("rootlink_" + node.name,
                     {{node.root_var, 1.0}, {node.active_var, -1.0}},
                     Sense::LE, 0.0);
  }
  m.add_constraint("root_one", root_sum, Sense::EQ, 1.0);

  // Directed arcs, two per link.
  struct Arc {
    int from, to, var;
  };
  std::vector<Arc> arcs;
  arcs.reserve(links.size() * 2);
  for (const auto& link : links) {
    const std::string& n1 = nodes[link.node1].name;
    const std::string& n2 = nodes[link.node2].name;
    int a12 = m.add_variable("aF_" + n1 + "_" + n2, VarKind::BINARY, 0, 1, 0,
                             {VarRole::Kind::ARC, -1, link.node1, link.node2});
    int a21 = m.add_variable("aF_" + n2 + "_" + n1, VarKind::BINARY, 0, 1, 0,
                             {VarRole::Kind::ARC, -1, link.node2, link.node1});
    arcs.push_back({link.node1, link.node2, a12});
    arcs.push_back({link.node2, link.node1, a21});
    m.add_constraint(
        "arcsel_" + n1 + "_" + n2,
        {{a12, 1.0}, {a21, 1.0}, {link.select_var, -1.0}}, Sense::EQ, 0.0);
  }

  std::vector<std::vector<int>> arcs_in(nodes.size());
  std::vector<std::vector<int>> arcs_out(nodes.size());
  for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
    arcs_in[arcs[a].to].push_back(a);
    arcs_out[arcs[a].from].push_back(a);
  }

  // Every active non-root node has exactly one incoming arc.
  for (size_t i = 0; i < nodes.size(); ++i) {
    std::vector<std::pair<int, double>> terms;
    for (int a : arcs_in[i]) terms.emplace_back(arcs[a].var, 1.0);
    terms.emplace_back(nodes[i].active_var, -1.0);
    if (nodes[i].root_var >= 0) terms.emplace_back(nodes[i].root_var, 1.0);
    m.add_constraint("indeg_" + nodes[i].name, std::move(terms), Sense::EQ,
                     0.0);
  }

  if (variant == TreeVariant::FLOW) {
    // f_uv <= K a_uv; inflow - outflow = active_i - K r_i.
    std::vector<int> flow_var(arcs.size());
    for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
      const std::string& nf = nodes[arcs[a].from].name;
      const std::string& nt = nodes[arcs[a].to].name;
      flow_var[a] = m.add_variable("f_" + nf + "_" + nt, VarKind::CONTINUOUS,
                                   0, K, 0,
                                   {VarRole::Kind::FLOW, -1, arcs[a].from,
                                    arcs[a].to});
      m.add_constraint("cap_" + nf + "_" + nt,
                       {{flow_var[a], 1.0}, {arcs[a].var, -K}}, Sense::LE,
                       0.0);
    }
    for (size_t i = 0; i < nodes.size(); ++i) {
      std::vector<std::pair<int, double>> terms;
      for (int a : arcs_in[i]) terms.emplace_back(flow_var[a], 1.0);
      for (int a : arcs_out[i]) terms.emplace_back(flow_var[a], -1.0);
      terms.emplace_back(nodes[i].active_var, -1.0);
      if (nodes[i].root_var >= 0) terms.emplace_back(nodes[i].root_var, K);
      m.add_constraint("cons_" + nodes[i].name, std::move(terms), Sense::EQ,
                       0.0);
    }
  } else {
    // Levels u_i in [0,K]; lifted ordering rows on each arc pair force
    // u to be the tree depth along selected arcs (Desrochers-Laporte
    // lifting), which keeps the relaxation competitive with the flow
    // variant. Roots are pinned to level 0.
    std::vector<int> level_var(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i)
      level_var[i] =
          m.add_variable("u_" + nodes[i].name, VarKind::CONTINUOUS, 0, K, 0,
                         {VarRole::Kind::LEVEL, -1, static_cast<int>(i), -1});
    // Inactive nodes sit at level 0; active non-roots start at depth 1.
    for (size_t i = 0; i < nodes.size(); ++i) {
      m.add_constraint("lvlcap_" + nodes[i].name,
                       {{level_var[i], 1.0}, {nodes[i].active_var, -K}},
                       Sense::LE, 0.0);
      std::vector<std::pair<int, double>> lo{{level_var[i], 1.0},
                                             {nodes[i].active_var, -1.0}};
      if (nodes[i].root_var >= 0) lo.emplace_back(nodes[i].root_var, 1.0);
      m.add_constraint("lvlfloor_" + nodes[i].name, std::move(lo), Sense::GE,
                       0.0);
    }
    for (size_t a = 0; a + 1 < arcs.size(); a += 2) {
      const Arc& fwd = arcs[a];
      const Arc& rev = arcs[a + 1];
      m.add_constraint("mtz_" + nodes[fwd.from].name + "_" +
                           nodes[fwd.to].name,
                       {{level_var[fwd.from], 1.0},
                        {level_var[fwd.to], -1.0},
                        {fwd.var, K},
                        {rev.var, K - 2.0}},
                       Sense::LE, K - 1.0);
      m.add_constraint("mtz_" + nodes[rev.from].name + "_" +
                           nodes[rev.to].name,
                       {{level_var[rev.from], 1.0},
                        {level_var[rev.to], -1.0},
                        {rev.var, K},
                        {fwd.var, K - 2.0}},
                       Sense::LE, K - 1.0);
    }
    for (int nid : root_nodes)
      m.add_constraint("rootlevel_" + nodes[nid].name,
                       {{level_var[nid], 1.0}, {nodes[nid].root_var, K}},
                       Sense::LE, K);
  }
}

std::vector<int> root_candidate_nodes(const TriangleSet& ts) {
  std::vector<int> degree(ts.n, 0);
  for (const auto& e : ts.edge_universe) {
    degree[e.u]++;
    degree[e.v]++;
  }
  int best = -1;
  for (int v = 0; v < ts.n; ++v) {
    if (degree[v] == 0) continue; // city absent from the complex
    if (best < 0 || degree[v] < degree[best]) best = v;
  }
  if (best < 0)
    throw TspError(ErrorCode::InvalidArgument, "empty candidate complex");
  std::vector<int> cands;
  for (int t = 0; t < static_cast<int>(ts.triangles.size()); ++t)
    if (ts.triangles[t].contains(best)) cands.push_back(t);
  return cands;
}

} // namespace

std::vector<int> root_candidates(const TriangleSet& ts) {
  return root_candidate_nodes(ts);
}

MilpModel build_general(const IncidenceGraph& inc, TreeVariant variant,
                        const std::string& instance_name) {
  const TriangleSet& ts = *inc.complex;
  const int n = inc.n;
  const int T = static_cast<int>(ts.triangles.size());
  const int E = static_cast<int>(inc.edges.size());
  if (n < 4)
    throw TspError(ErrorCode::InvalidArgument, "model needs n >= 4");
  if (T < n - 2)
    throw TspError(ErrorCode::TooFewTriangles,
                   std::to_string(T) + " triangles < N-2 = " +
                       std::to_string(n - 2));

  MilpModel m;
  m.builder = std::string("surface-general-") + tree_variant_name(variant);
  m.instance = instance_name;

  std::vector<int> x(T), y(E);
  for (int t = 0; t < T; ++t)
    x[t] = m.add_variable("x_t" + std::to_string(t), VarKind::BINARY, 0, 1, 0,
                          {VarRole::Kind::TRIANGLE, t, -1, -1});
  for (int e = 0; e < E; ++e)
    y[e] = m.add_variable("y_" + city_pair(inc.edges[e].u, inc.edges[e].v),
                          VarKind::BINARY, 0, 1, 2.0 * inc.edge_length[e],
                          {VarRole::Kind::EDGE, -1, inc.edges[e].u,
                           inc.edges[e].v});
  std::vector<int> z(inc.arcs.size());
  for (int a = 0; a < static_cast<int>(inc.arcs.size()); ++a) {
    const auto& [t, e] = inc.arcs[a];
    z[a] = m.add_variable(
        "z_" + std::to_string(t) + "_" + city_pair(inc.edges[e].u,
                                                   inc.edges[e].v),
        VarKind::BINARY, 0, 1, -inc.edge_length[e],
        {VarRole::Kind::INCIDENCE, t, inc.edges[e].u, inc.edges[e].v});
  }

  // Linking: incidences need both endpoints.
  for (int a = 0; a < static_cast<int>(inc.arcs.size()); ++a) {
    const auto& [t, e] = inc.arcs[a];
    std::string tag =
        std::to_string(t) + "_" + city_pair(inc.edges[e].u, inc.edges[e].v);
    m.add_constraint("linkx_" + tag, {{z[a], 1.0}, {x[t], -1.0}}, Sense::LE,
                     0.0);
    m.add_constraint("linky_" + tag, {{z[a], 1.0}, {y[e], -1.0}}, Sense::LE,
                     0.0);
  }

  // Closure: an active triangle activates exactly its three incidences.
  for (int t = 0; t < T; ++t) {
    std::vector<std::pair<int, double>> terms;
    for (int a = 3 * t; a < 3 * t + 3; ++a) terms.emplace_back(z[a], 1.0);
    terms.emplace_back(x[t], -3.0);
    m.add_constraint("closure_t" + std::to_string(t), std::move(terms),
                     Sense::EQ, 0.0);
  }

  // Cardinality of a disk triangulation with all N cities on the boundary.
  {
    std::vector<std::pair<int, double>> tx, ty;
    for (int t = 0; t < T; ++t) tx.emplace_back(x[t], 1.0);
    for (int e = 0; e < E; ++e) ty.emplace_back(y[e], 1.0);
    m.add_constraint("card_tri", std::move(tx), Sense::EQ, n - 2.0);
    m.add_constraint("card_edge", std::move(ty), Sense::EQ, 2.0 * n - 3.0);
  }

  // Manifold degree: active edges carry one or two incidences.
  {
    std::vector<std::vector<int>> arcs_at_edge(E);
    for (int a = 0; a < static_cast<int>(inc.arcs.size()); ++a)
      arcs_at_edge[inc.arcs[a].second].push_back(a);
    for (int e = 0; e < E; ++e) {
      std::string tag = city_pair(inc.edges[e].u, inc.edges[e].v);
      std::vector<std::pair<int, double>> lo, hi;
      lo.emplace_back(y[e], 1.0);
      for (int a : arcs_at_edge[e]) {
        lo.emplace_back(z[a], -1.0);
        hi.emplace_back(z[a], 1.0);
      }
      hi.emplace_back(y[e], -2.0);
      m.add_constraint("manifold_lo_" + tag, std::move(lo), Sense::LE, 0.0);
      m.add_constraint("manifold_hi_" + tag, std::move(hi), Sense::LE, 0.0);
    }
  }

  // Local Euler filter: T(v) + E(v) - I(v) = 1 at every city.
  for (int v = 0; v < n; ++v) {
    std::vector<std::pair<int, double>> terms;
    for (int t : inc.tri_at_vertex[v]) terms.emplace_back(x[t], 1.0);
    for (int e : inc.edge_at_vertex[v]) terms.emplace_back(y[e], 1.0);
    for (int a : inc.conn_at_vertex[v]) terms.emplace_back(z[a], -1.0);
    m.add_constraint("euler_v" + std::to_string(v), std::move(terms),
                     Sense::EQ, 1.0);
  }

  // Global tree over the bipartite node set.
  const double K = 3.0 * n - 5.0;
  std::vector<TreeNode> nodes;
  nodes.reserve(T + E);
  for (int t = 0; t < T; ++t)
    nodes.push_back({"t" + std::to_string(t), x[t]});
  for (int e = 0; e < E; ++e)
    nodes.push_back(
        {"e" + city_pair(inc.edges[e].u, inc.edges[e].v), y[e]});
  std::vector<TreeLink> links;
  links.reserve(inc.arcs.size());
  for (int a = 0; a < static_cast<int>(inc.arcs.size()); ++a)
    links.push_back({inc.arcs[a].first, T + inc.arcs[a].second, z[a]});
  add_tree_constraints(m, std::move(nodes), links, root_candidate_nodes(ts),
                       K, variant);
  return m;
}

MilpModel build_planar(const DualGraph& dual, TreeVariant variant,
                       const std::string& instance_name) {
  const TriangleSet& ts = *dual.complex;
  const int n = dual.n;
  const int T = static_cast<int>(ts.triangles.size());
  const int D = static_cast<int>(dual.dual_edges.size());
  if (n < 4)
    throw TspError(ErrorCode::InvalidArgument, "model needs n >= 4");
  if (T < n - 2)
    throw TspError(ErrorCode::TooFewTriangles,
                   std::to_string(T) + " triangles < N-2 = " +
                       std::to_string(n - 2));

  MilpModel m;
  m.builder = std::string("surface-planar-") + tree_variant_name(variant);
  m.instance = instance_name;

  std::vector<int> x(T), w(D);
  for (int t = 0; t < T; ++t)
    x[t] = m.add_variable("x_t" + std::to_string(t), VarKind::BINARY, 0, 1,
                          dual.tri_perimeter[t],
                          {VarRole::Kind::TRIANGLE, t, -1, -1});
  for (int d = 0; d < D; ++d) {
    const auto& de = dual.dual_edges[d];
    w[d] = m.add_variable(
        "wD_" + std::to_string(de.t1) + "_" + std::to_string(de.t2),
        VarKind::BINARY, 0, 1, -2.0 * de.length,
        {VarRole::Kind::DUAL_EDGE, -1, de.t1, de.t2});
  }

  // Linking: a dual edge needs both its triangles.
  for (int d = 0; d < D; ++d) {
    const auto& de = dual.dual_edges[d];
    std::string tag = std::to_string(de.t1) + "_" + std::to_string(de.t2);
    m.add_constraint("linkw1_" + tag, {{w[d], 1.0}, {x[de.t1], -1.0}},
                     Sense::LE, 0.0);
    m.add_constraint("linkw2_" + tag, {{w[d], 1.0}, {x[de.t2], -1.0}},
                     Sense::LE, 0.0);
  }

  // Cardinality: N-2 triangles spanning a tree with N-3 dual edges.
  {
    std::vector<std::pair<int, double>> tx, tw;
    for (int t = 0; t < T; ++t) tx.emplace_back(x[t], 1.0);
    for (int d = 0; d < D; ++d) tw.emplace_back(w[d], 1.0);
    m.add_constraint("card_tri", std::move(tx), Sense::EQ, n - 2.0);
    m.add_constraint("card_dual", std::move(tw), Sense::EQ, n - 3.0);
  }

  // Euler filter in dual form: per city, triangles minus dual edges = 1.
  for (int v = 0; v < n; ++v) {
    std::vector<std::pair<int, double>> terms;
    for (int t : dual.tri_at_vertex[v]) terms.emplace_back(x[t], 1.0);
    for (int d : dual.dual_at_vertex[v]) terms.emplace_back(w[d], -1.0);
    m.add_constraint("euler_v" + std::to_string(v), std::move(terms),
                     Sense::EQ, 1.0);
  }

  const double K = n - 2.0;
  std::vector<TreeNode> nodes;
  nodes.reserve(T);
  for (int t = 0; t < T; ++t)
    nodes.push_back({"t" + std::to_string(t), x[t]});
  std::vector<TreeLink> links;
  links.reserve(D);
  for (int d = 0; d < D; ++d)
    links.push_back({dual.dual_edges[d].t1, dual.dual_edges[d].t2, w[d]});
  add_tree_constraints(m, std::move(nodes), links, root_candidate_nodes(ts),
                       K, variant);
  return m;
}

} // namespace tspsurf
