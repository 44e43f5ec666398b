#include <cmath>

#include "doctest.h"
#include "tspsurf/boundary.hpp"
#include "tspsurf/oracles.hpp"

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

TriangleSet custom(std::vector<Triangle> tris, int n) {
  return finalize_triangle_set(std::move(tris), ComplexSource::CUSTOM, n);
}

} // namespace

TEST_CASE("boundary edges of glued and lone triangles") {
  TriangleSet pair = custom({Triangle{0, 1, 2}, Triangle{1, 2, 3}}, 4);
  Surface s = make_surface(pair, {0, 1});
  CHECK(boundary_edges(s).size() == 4); // shared edge cancels
  TriangleSet lone = custom({Triangle{0, 1, 2}}, 4);
  CHECK(boundary_edges(make_surface(lone, {0})).size() == 3);
}

TEST_CASE("bowtie fails the euler filter at the pinch vertex") {
  TriangleSet ts = custom({Triangle{0, 1, 2}, Triangle{0, 3, 4}}, 5);
  Surface s = make_surface(ts, {0, 1});
  VerificationReport rep = verify_surface(s);
  CHECK_FALSE(rep.euler_per_vertex);
  CHECK(rep.chi[0] == 2); // T=2, E=4, I=4
  CHECK(rep.chi[1] == 1);
  CHECK_FALSE(rep.valid());
}

TEST_CASE("an edge in three triangles fails the manifold flag") {
  TriangleSet ts = custom(
      {Triangle{0, 1, 2}, Triangle{0, 1, 3}, Triangle{0, 1, 4}}, 5);
  Surface s = make_surface(ts, {0, 1, 2});
  VerificationReport rep = verify_surface(s);
  CHECK_FALSE(rep.manifold);
  CHECK(rep.cardinality); // 3 triangles, 7 edges: counts do match at N=5
  CHECK_FALSE(rep.valid());
}

TEST_CASE("two disjoint triangles: single-cycle flag fails, euler holds") {
  TriangleSet ts = custom({Triangle{0, 1, 2}, Triangle{3, 4, 5}}, 6);
  Surface s = make_surface(ts, {0, 1});
  VerificationReport rep = verify_surface(s);
  CHECK(rep.euler_per_vertex); // every chi(v) = 1 + 2 - 2 = 1
  CHECK_FALSE(rep.boundary_is_single_cycle);
  CHECK_FALSE(rep.dual_connected);
  CHECK_FALSE(rep.cardinality); // 2 != 4 triangles, 6 != 9 edges
}

TEST_CASE("hexagon fan minus one triangle is a valid disk") {
  TspInstance inst = gen_nested_hexagons(); // only topology matters here
  (void)inst;
  std::vector<Triangle> fan;
  for (int i = 1; i <= 5; ++i) fan.push_back(make_triangle(0, i, i + 1));
  TriangleSet ts = custom(fan, 7);
  Surface s = make_surface(ts, {0, 1, 2, 3, 4});
  VerificationReport rep = verify_surface(s);
  CHECK(rep.cardinality);
  CHECK(rep.manifold);
  CHECK(rep.euler_per_vertex);
  CHECK(rep.chi[0] == 1); // 5 + 6 - 10
  CHECK(rep.dual_connected);
  CHECK(rep.boundary_is_single_cycle);
  CHECK(rep.hamiltonian);
  CHECK(rep.valid());
}

TEST_CASE("assemble_tour walks the square boundary canonically") {
  TspInstance inst = square();
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  Tour t = assemble_tour(edges, 4, inst);
  CHECK(t.order == std::vector<int>{0, 1, 2, 3});
  CHECK(t.length == doctest::Approx(4.0));
}

TEST_CASE("assemble_tour failure modes carry distinct codes") {
  TspInstance inst = gen_random(6, 1, RandomMode::EUCLIDEAN);
  auto code_of = [&](const std::vector<Edge>& edges, int n) {
    try {
      assemble_tour(edges, n, inst);
      return ErrorCode::InvalidArgument; // not expected
    } catch (const TspError& e) {
      return e.code();
    }
  };
  // Two disjoint triangles.
  CHECK(code_of({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, 6) ==
        ErrorCode::MultipleCycles);
  // Degree three at city 0.
  CHECK(code_of({{0, 1}, {0, 2}, {0, 3}, {1, 2}}, 4) == ErrorCode::NotACycle);
  // A single short cycle.
  CHECK(code_of({{0, 1}, {1, 2}, {0, 2}}, 6) == ErrorCode::NotHamiltonian);
}

TEST_CASE("objective identity on the glued pair") {
  TspInstance inst = square();
  TriangleSet ts = delaunay_complex(inst);
  Surface s = make_surface(ts, {0, 1});
  double quad_perimeter = 4.0;
  CHECK(objective_identity_check(s, inst, quad_perimeter));
  CHECK_FALSE(objective_identity_check(s, inst, quad_perimeter + 1.0));
}

TEST_CASE("gap percentages match the reference arithmetic") {
  CHECK(gap_percent(3333452, 3139778) == doctest::Approx(6.17).epsilon(2e-3));
  CHECK(gap_percent(3197767, 3139778) == doctest::Approx(1.85).epsilon(2e-3));
  CHECK(gap_percent(42.0, 42.0) == 0.0);
  CHECK_THROWS_AS(gap_percent(1.0, 0.0), TspError);
}

TEST_CASE("tour output line is stable") {
  Tour t;
  t.order = {0, 2, 1, 3};
  t.length = 12.5;
  CHECK(format_tour_line("toy", t) == "toy 12.5 4 : 0 2 1 3");
}

TEST_CASE("tour assembly succeeds exactly on verifier-valid subsets") {
  // Exhaustive cross-check at N=6 over every 4-subset of the complete
  // complex: the boundary of a subset walks into a Hamiltonian cycle iff
  // verify_surface accepts the subset.
  TspInstance inst = gen_random(6, 2, RandomMode::EUCLIDEAN);
  TriangleSet ts = complete_complex(inst);
  const int T = static_cast<int>(ts.triangles.size());
  int valid_count = 0;
  std::vector<int> idx{0, 1, 2, 3};
  auto advance = [&]() {
    int k = 3;
    while (k >= 0 && idx[k] == T - 4 + k) --k;
    if (k < 0) return false;
    ++idx[k];
    for (int j = k + 1; j < 4; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  do {
    Surface s = make_surface(ts, idx);
    bool assembles = false;
    try {
      assemble_tour(boundary_edges(s), inst.n, inst);
      assembles = true;
    } catch (const TspError&) {
      assembles = false;
    }
    bool valid = verify_surface(s).valid();
    CHECK(assembles == valid);
    if (valid) ++valid_count;
  } while (advance());
  CHECK(valid_count > 0);
}
