#include <algorithm>
#include <map>

#include "doctest.h"
#include "tspsurf/complex.hpp"
#include "tspsurf/instance.hpp"
#include "tspsurf/surface_model.hpp"

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

std::map<VarRole::Kind, int> role_counts(const MilpModel& m) {
  std::map<VarRole::Kind, int> counts;
  for (const auto& v : m.variables()) counts[v.role.kind]++;
  return counts;
}

const Constraint* find_constraint(const MilpModel& m, const std::string& name) {
  for (const auto& c : m.constraints())
    if (c.name == name) return &c;
  return nullptr;
}

} // namespace

TEST_CASE("general FLOW model on the N=4 complete complex") {
  TspInstance inst = square();
  TriangleSet ts = complete_complex(inst);
  IncidenceGraph inc = build_incidence(inst, ts);
  MilpModel m = build_general(inc, TreeVariant::FLOW, inst.name);

  auto counts = role_counts(m);
  CHECK(counts[VarRole::Kind::TRIANGLE] == 4);
  CHECK(counts[VarRole::Kind::EDGE] == 6);
  CHECK(counts[VarRole::Kind::INCIDENCE] == 12);
  CHECK(counts[VarRole::Kind::ARC] == 24);
  CHECK(counts[VarRole::Kind::FLOW] == 24);
  CHECK(counts[VarRole::Kind::ROOT] == 3); // triangles containing city 0

  const Constraint* card_tri = find_constraint(m, "card_tri");
  REQUIRE(card_tri);
  CHECK(card_tri->rhs == 2.0);
  CHECK(card_tri->sense == Sense::EQ);
  const Constraint* card_edge = find_constraint(m, "card_edge");
  REQUIRE(card_edge);
  CHECK(card_edge->rhs == 5.0); // 2N-3

  // K = 3N-5 = 7 caps the flow bounds.
  for (const auto& v : m.variables())
    if (v.role.kind == VarRole::Kind::FLOW) CHECK(v.upper == 7.0);

  // Objective: 2 L_e on edges, -L_e on incidences, nothing else.
  for (const auto& v : m.variables()) {
    if (v.role.kind == VarRole::Kind::EDGE)
      CHECK(v.objective ==
            doctest::Approx(2.0 * inst.distance(v.role.i, v.role.j)));
    else if (v.role.kind == VarRole::Kind::INCIDENCE)
      CHECK(v.objective ==
            doctest::Approx(-inst.distance(v.role.i, v.role.j)));
    else
      CHECK(v.objective == 0.0);
  }

  // Euler rows exist for every city with rhs 1.
  for (int v = 0; v < 4; ++v) {
    const Constraint* euler = find_constraint(m, "euler_v" + std::to_string(v));
    REQUIRE(euler);
    CHECK(euler->rhs == 1.0);
    CHECK(euler->sense == Sense::EQ);
  }
}

TEST_CASE("general MTZ variant swaps flow for levels") {
  TspInstance inst = square();
  TriangleSet ts = complete_complex(inst);
  IncidenceGraph inc = build_incidence(inst, ts);
  MilpModel m = build_general(inc, TreeVariant::MTZ, inst.name);
  auto counts = role_counts(m);
  CHECK(counts[VarRole::Kind::FLOW] == 0);
  CHECK(counts[VarRole::Kind::LEVEL] == 10); // 4 triangles + 6 edges
  CHECK(counts[VarRole::Kind::ARC] == 24);
  bool has_mtz_row = false, has_rootlevel = false;
  for (const auto& c : m.constraints()) {
    if (c.name.rfind("mtz_", 0) == 0) has_mtz_row = true;
    if (c.name.rfind("rootlevel_", 0) == 0) has_rootlevel = true;
  }
  CHECK(has_mtz_row);
  CHECK(has_rootlevel);
}

TEST_CASE("too few triangles is rejected at build time") {
  TspInstance inst = gen_random(5, 1, RandomMode::EUCLIDEAN);
  TriangleSet ts = finalize_triangle_set(
      {Triangle{0, 1, 2}, Triangle{2, 3, 4}}, ComplexSource::CUSTOM, 5);
  IncidenceGraph inc = build_incidence(inst, ts);
  try {
    build_general(inc, TreeVariant::FLOW, inst.name);
    FAIL("expected TooFewTriangles");
  } catch (const TspError& e) {
    CHECK(e.code() == ErrorCode::TooFewTriangles);
  }
}

TEST_CASE("root candidates pick the minimum-degree city") {
  // Hexagon fan: the rim has degree 3, the center 6.
  std::vector<Triangle> fan;
  for (int i = 1; i <= 6; ++i)
    fan.push_back(make_triangle(0, i, i == 6 ? 1 : i + 1));
  TriangleSet ts = finalize_triangle_set(fan, ComplexSource::CUSTOM, 7);
  std::vector<int> cands = root_candidates(ts);
  // City 1 is the smallest rim city; it lies in two fan triangles.
  CHECK(cands.size() == 2);
  for (int t : cands) CHECK(ts.triangles[t].contains(1));

  // Complete complex: all degrees equal, city 0 wins, C(N-1,2) triangles.
  TspInstance inst = gen_random(6, 2, RandomMode::EUCLIDEAN);
  TriangleSet all = complete_complex(inst);
  CHECK(root_candidates(all).size() == 10);

  // Delaunay square: a degree-2 corner wins.
  TriangleSet sq = delaunay_complex(square());
  std::vector<int> sq_cands = root_candidates(sq);
  CHECK(sq_cands.size() == 1);
}

TEST_CASE("planar model on the glued pair") {
  TspInstance inst = square();
  TriangleSet ts = delaunay_complex(inst);
  DualGraph dual = build_dual(inst, ts);
  MilpModel m = build_planar(dual, TreeVariant::FLOW, inst.name);

  auto counts = role_counts(m);
  CHECK(counts[VarRole::Kind::TRIANGLE] == 2);
  CHECK(counts[VarRole::Kind::DUAL_EDGE] == 1);
  CHECK(counts[VarRole::Kind::EDGE] == 0); // edge variables eliminated

  const Constraint* card_tri = find_constraint(m, "card_tri");
  REQUIRE(card_tri);
  CHECK(card_tri->rhs == 2.0);
  const Constraint* card_dual = find_constraint(m, "card_dual");
  REQUIRE(card_dual);
  CHECK(card_dual->rhs == 1.0); // N-3

  // Objective: P(t) on triangles, -2 L(e) on dual edges.
  for (const auto& v : m.variables()) {
    if (v.role.kind == VarRole::Kind::TRIANGLE)
      CHECK(v.objective == doctest::Approx(ts.perimeter(inst, v.role.t)));
    if (v.role.kind == VarRole::Kind::DUAL_EDGE)
      CHECK(v.objective ==
            doctest::Approx(-2.0 * dual.dual_edges[0].length));
  }

  // No manifold rows in the planar form.
  for (const auto& c : m.constraints())
    CHECK(c.name.rfind("manifold", 0) != 0);
}

TEST_CASE("model naming follows the fixed scheme") {
  TspInstance inst = square();
  TriangleSet ts = complete_complex(inst);
  IncidenceGraph inc = build_incidence(inst, ts);
  MilpModel m = build_general(inc, TreeVariant::FLOW, inst.name);
  CHECK(m.variable_index("x_t0") >= 0);
  CHECK(m.variable_index("y_0_1") >= 0);
  CHECK(m.variable_index("z_0_0_1") >= 0);
  CHECK(m.variable_index("aF_t0_e0_1") >= 0);
  CHECK(m.variable_index("f_e0_1_t0") >= 0);
  CHECK(m.variable_index("r_0") >= 0);

  TriangleSet planar_ts = delaunay_complex(inst);
  DualGraph dual = build_dual(inst, planar_ts);
  MilpModel p = build_planar(dual, TreeVariant::MTZ, inst.name);
  CHECK(p.variable_index("wD_0_1") >= 0);
  CHECK(p.variable_index("u_t0") >= 0);
  CHECK(p.variable_index("aF_t0_t1") >= 0);
}

TEST_CASE("decode map JSON covers the selection variables") {
  TspInstance inst = square();
  TriangleSet ts = complete_complex(inst);
  IncidenceGraph inc = build_incidence(inst, ts);
  MilpModel m = build_general(inc, TreeVariant::FLOW, inst.name);
  std::string json = m.decode_map_json();
  CHECK(json.find("\"x_t0\"") != std::string::npos);
  CHECK(json.find("\"y_0_1\"") != std::string::npos);
  CHECK(json.find("\"role\": \"x\"") != std::string::npos);
}
