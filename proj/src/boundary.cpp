#include "tspsurf/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace tspsurf {

Surface make_surface(const TriangleSet& ts, std::vector<int> selected) {
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()),
                 selected.end());
  Surface s;
  s.complex = &ts;
  s.n = ts.n;
  s.selected = std::move(selected);
  std::map<Edge, int> mult;
  for (int t : s.selected)
    for (const auto& e : ts.triangles[t].edges()) mult[e]++;
  s.active_edges.assign(mult.begin(), mult.end());
  return s;
}

Surface extract_surface(const MilpModel& model, const MilpSolution& sol,
                        const TriangleSet& ts) {
  std::vector<int> selected;
  bool any_x = false;
  for (const auto& var : model.variables()) {
    if (var.role.kind != VarRole::Kind::TRIANGLE) continue;
    any_x = true;
    auto it = sol.values.find(var.name);
    if (it == sol.values.end())
      throw TspError(ErrorCode::DecodeError,
                     "solution lacks a value for " + var.name);
    if (it->second > 0.5) selected.push_back(var.role.t);
  }
  if (!any_x)
    throw TspError(ErrorCode::DecodeError, "model declares no x_t variables");
  return make_surface(ts, std::move(selected));
}

std::vector<Edge> boundary_edges(const Surface& s) {
  std::vector<Edge> out;
  for (const auto& [e, m] : s.active_edges)
    if (m == 1) out.push_back(e);
  return out;
}

namespace {

// Walks the cycle from the smallest present city toward its smaller
// neighbor. Throws NotACycle, MultipleCycles or NotHamiltonian.
std::vector<int> walk_boundary_cycle(const std::vector<Edge>& edges, int n) {
  std::map<int, std::vector<int>> adj;
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& [city, nb] : adj) {
    if (nb.size() != 2)
      throw TspError(ErrorCode::NotACycle,
                     "city " + std::to_string(city) + " has boundary degree " +
                         std::to_string(nb.size()));
    std::sort(nb.begin(), nb.end());
  }
  if (adj.empty()) throw TspError(ErrorCode::NotACycle, "no boundary edges");

  int start = adj.begin()->first;
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    const auto& nb = adj[cur];
    int next = (nb[0] != prev) ? nb[0] : nb[1];
    if (next == start) break;
    order.push_back(next);
    prev = cur;
    cur = next;
    if (order.size() > adj.size())
      throw TspError(ErrorCode::NotACycle, "boundary walk does not close");
  }
  if (order.size() < adj.size())
    throw TspError(ErrorCode::MultipleCycles,
                   "boundary splits into more than one cycle");
  if (static_cast<int>(order.size()) != n)
    throw TspError(ErrorCode::NotHamiltonian,
                   "boundary cycle visits " + std::to_string(order.size()) +
                       " of " + std::to_string(n) + " cities");
  return order;
}

} // namespace

Tour assemble_tour(const std::vector<Edge>& edges, int n,
                   const TspInstance& inst) {
  Tour tour;
  tour.order = walk_boundary_cycle(edges, n);
  for (size_t i = 0; i < tour.order.size(); ++i) {
    int a = tour.order[i];
    int b = tour.order[(i + 1) % tour.order.size()];
    tour.length += inst.distance(a, b);
  }
  return tour;
}

VerificationReport verify_surface(const Surface& s) {
  VerificationReport rep;
  const TriangleSet& ts = *s.complex;
  const int n = s.n;
  const int t_count = static_cast<int>(s.selected.size());
  const int e_count = static_cast<int>(s.active_edges.size());

  rep.cardinality = (t_count == n - 2) && (e_count == 2 * n - 3);
  if (!rep.cardinality)
    rep.failures.push_back("cardinality: " + std::to_string(t_count) +
                           " triangles / " + std::to_string(e_count) +
                           " edges, want " + std::to_string(n - 2) + " / " +
                           std::to_string(2 * n - 3));

  // Closure is structural here: multiplicities are derived from triangles,
  // so every selected triangle contributes exactly its three edges.
  rep.closure = true;

  rep.manifold = true;
  for (const auto& [e, m] : s.active_edges) {
    if (m > 2) {
      rep.manifold = false;
      rep.failures.push_back("manifold: edge (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ") in " +
                             std::to_string(m) + " triangles");
    }
  }

  // Local Euler characteristic chi(v) = T(v) + E(v) - I(v).
  rep.chi.assign(n, 0);
  {
    std::vector<int> tv(n, 0), ev(n, 0), iv(n, 0);
    for (int t : s.selected) {
      const Triangle& tr = ts.triangles[t];
      tv[tr.a]++;
      tv[tr.b]++;
      tv[tr.c]++;
      for (const auto& e : tr.edges()) {
        iv[e.u]++;
        iv[e.v]++;
      }
    }
    for (const auto& [e, m] : s.active_edges) {
      ev[e.u]++;
      ev[e.v]++;
    }
    rep.euler_per_vertex = true;
    for (int v = 0; v < n; ++v) {
      rep.chi[v] = tv[v] + ev[v] - iv[v];
      if (rep.chi[v] != 1) {
        rep.euler_per_vertex = false;
        rep.failures.push_back("euler: chi(" + std::to_string(v) +
                               ") = " + std::to_string(rep.chi[v]));
      }
    }
  }

  // Connectivity of the selected triangles across shared edges.
  rep.dual_connected = !s.selected.empty();
  if (!s.selected.empty()) {
    std::map<Edge, std::vector<int>> owners;
    for (int t : s.selected)
      for (const auto& e : ts.triangles[t].edges()) owners[e].push_back(t);
    std::map<int, std::vector<int>> adj;
    for (int t : s.selected) adj[t] = {};
    for (const auto& [e, tris] : owners)
      for (size_t i = 0; i + 1 < tris.size(); ++i)
        for (size_t j = i + 1; j < tris.size(); ++j) {
          adj[tris[i]].push_back(tris[j]);
          adj[tris[j]].push_back(tris[i]);
        }
    std::queue<int> q;
    std::map<int, char> seen;
    q.push(s.selected[0]);
    seen[s.selected[0]] = 1;
    size_t reached = 1;
    while (!q.empty()) {
      int t = q.front();
      q.pop();
      for (int u : adj[t])
        if (!seen.count(u)) {
          seen[u] = 1;
          ++reached;
          q.push(u);
        }
    }
    rep.dual_connected = reached == s.selected.size();
    if (!rep.dual_connected)
      rep.failures.push_back("connectivity: " + std::to_string(reached) +
                             " of " + std::to_string(s.selected.size()) +
                             " triangles reachable");
  } else {
    rep.failures.push_back("connectivity: empty selection");
  }

  try {
    std::vector<int> order = walk_boundary_cycle(boundary_edges(s), n);
    rep.boundary_is_single_cycle = true;
    rep.hamiltonian = static_cast<int>(order.size()) == n;
  } catch (const TspError& e) {
    rep.boundary_is_single_cycle =
        e.code() == ErrorCode::NotHamiltonian; // one cycle, too short
    rep.hamiltonian = false;
    rep.failures.push_back(std::string("boundary: ") + e.what());
  }
  return rep;
}

bool objective_identity_check(const Surface& s, const TspInstance& inst,
                              double sol_objective) {
  double boundary_sum = 0.0;
  for (const auto& e : boundary_edges(s)) boundary_sum += inst.distance(e.u, e.v);
  return std::fabs(boundary_sum - sol_objective) <=
         1e-6 * (1.0 + std::fabs(sol_objective));
}

double gap_percent(double tour_length, double reference) {
  if (reference <= 0)
    throw TspError(ErrorCode::InvalidArgument, "reference must be positive");
  return 100.0 * (tour_length - reference) / reference;
}

std::string format_tour_line(const std::string& name, const Tour& tour) {
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", tour.length);
  out << name << " " << buf << " " << tour.order.size() << " :";
  for (int c : tour.order) out << " " << c;
  return out.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["cardinality"] = cardinality;
  j["closure"] = closure;
  j["manifold"] = manifold;
  j["euler_per_vertex"] = euler_per_vertex;
  j["dual_connected"] = dual_connected;
  j["boundary_is_single_cycle"] = boundary_is_single_cycle;
  j["hamiltonian"] = hamiltonian;
  j["valid"] = valid();
  j["chi"] = chi;
  j["failures"] = failures;
  return j.dump(2);
}

} // namespace tspsurf
