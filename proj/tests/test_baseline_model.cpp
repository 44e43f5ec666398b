#include "doctest.h"
#include "tspsurf/baseline_model.hpp"
#include "tspsurf/instance.hpp"
#include "tspsurf/oracles.hpp"
#include "tspsurf/solver.hpp"

using namespace tspsurf;

TEST_CASE("lifted MTZ structure on the complete N=4 graph") {
  TspInstance inst = gen_random(4, 4, RandomMode::EUCLIDEAN);
  EdgeSet es = complete_edge_set(inst);
  MilpModel m = build_lifted_mtz(inst, es);
  int directed = 0, levels = 0;
  for (const auto& v : m.variables()) {
    if (v.role.kind == VarRole::Kind::DIRECTED) ++directed;
    if (v.role.kind == VarRole::Kind::CITY_LEVEL) ++levels;
  }
  CHECK(directed == 12);
  CHECK(levels == 4);
  int deg = 0, mtz = 0, twocycle = 0;
  for (const auto& c : m.constraints()) {
    if (c.name.rfind("deg_", 0) == 0) ++deg;
    if (c.name.rfind("mtz_", 0) == 0) ++mtz;
    if (c.name.rfind("twocycle_", 0) == 0) ++twocycle;
  }
  CHECK(deg == 8);
  CHECK(mtz == 6); // both directions of the 3 non-depot edges
  CHECK(twocycle == 6);
  // Depot level pinned to zero, others in [1, n-1].
  for (const auto& v : m.variables()) {
    if (v.role.kind != VarRole::Kind::CITY_LEVEL) continue;
    if (v.role.i == 0) {
      CHECK(v.lower == 0.0);
      CHECK(v.upper == 0.0);
    } else {
      CHECK(v.lower == 1.0);
      CHECK(v.upper == 3.0);
    }
  }
}

TEST_CASE("disconnected edge sets are rejected") {
  TspInstance inst = gen_random(5, 5, RandomMode::EUCLIDEAN);
  EdgeSet es;
  es.n = 5;
  es.edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}};
  for (const auto& e : es.edges) es.length.push_back(inst.distance(e.u, e.v));
  try {
    build_lifted_mtz(inst, es);
    FAIL("expected DisconnectedEdgeSet");
  } catch (const TspError& e) {
    CHECK(e.code() == ErrorCode::DisconnectedEdgeSet);
  }
}

TEST_CASE("lifted MTZ optimum matches the brute-force oracle") {
  for (std::uint64_t seed : {1ull, 9ull}) {
    for (auto mode : {RandomMode::EUCLIDEAN, RandomMode::NONMETRIC}) {
      TspInstance inst = gen_random(6, seed, mode);
      MilpModel m = build_lifted_mtz(inst, complete_edge_set(inst));
      MilpSolution sol = solve(m, "scipy", SolveLimits{});
      REQUIRE(sol.status == SolveStatus::OPTIMAL);
      Tour oracle = brute_force_tsp(inst);
      CHECK(sol.objective == doctest::Approx(oracle.length).epsilon(1e-6));
    }
  }
}
