#include <cmath>

#include "doctest.h"
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

} // namespace

TEST_CASE("brute force on the unit square") {
  Tour t = brute_force_tsp(square());
  CHECK(t.length == doctest::Approx(4.0));
  CHECK(t.order == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("brute force avoids a poisoned edge when possible") {
  TspInstance inst = gen_random(5, 1, RandomMode::NONMETRIC);
  inst.dist[0 * 5 + 1] = 1e6;
  inst.dist[1 * 5 + 0] = 1e6;
  Tour t = brute_force_tsp(inst);
  for (size_t i = 0; i < t.order.size(); ++i) {
    int a = t.order[i], b = t.order[(i + 1) % t.order.size()];
    CHECK(!((a == 0 && b == 1) || (a == 1 && b == 0)));
  }
}

TEST_CASE("parallel and serial brute force agree exactly") {
  for (int n : {5, 7, 8}) {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      for (auto mode : {RandomMode::EUCLIDEAN, RandomMode::NONMETRIC}) {
        TspInstance inst = gen_random(n, seed, mode);
        Tour a = brute_force_tsp(inst);
        Tour b = brute_force_tsp_serial(inst);
        CHECK(a.length == b.length);
        CHECK(a.order == b.order);
      }
    }
  }
}

TEST_CASE("brute force size cap") {
  CHECK_THROWS_AS(brute_force_tsp(gen_random(12, 1, RandomMode::EUCLIDEAN)),
                  TspError);
}

TEST_CASE("surface enumeration on the N=4 complete complex") {
  TspInstance inst = square();
  TriangleSet ts = complete_complex(inst);
  auto best = brute_force_surface(inst, ts);
  REQUIRE(best.has_value());
  // Feasible pairs are the ones sharing an edge; the minimum boundary is
  // the shortest 4-cycle.
  Tour oracle = brute_force_tsp(inst);
  CHECK(best->boundary_length == doctest::Approx(oracle.length));
  CHECK(best->surface.selected.size() == 2);
}

TEST_CASE("surface enumeration equals the tour oracle at N=5") {
  for (std::uint64_t seed : {1ull, 2ull}) {
    for (auto mode : {RandomMode::EUCLIDEAN, RandomMode::NONMETRIC}) {
      TspInstance inst = gen_random(5, seed, mode);
      TriangleSet ts = complete_complex(inst);
      auto best = brute_force_surface(inst, ts);
      REQUIRE(best.has_value());
      Tour oracle = brute_force_tsp(inst);
      CHECK(best->boundary_length == doctest::Approx(oracle.length));
    }
  }
}

TEST_CASE("parallel and serial surface enumeration agree") {
  for (std::uint64_t seed : {4ull, 5ull}) {
    TspInstance inst = gen_random(6, seed, RandomMode::EUCLIDEAN);
    TriangleSet ts = complete_complex(inst);
    auto a = brute_force_surface(inst, ts);
    auto b = brute_force_surface_serial(inst, ts);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->boundary_length == b->boundary_length);
    CHECK(a->surface.selected == b->surface.selected);
  }
}

TEST_CASE("too few triangles make the surface oracle infeasible") {
  TspInstance inst = gen_random(6, 1, RandomMode::EUCLIDEAN);
  // N-3 = 3 triangles cannot reach the N-2 cardinality.
  TriangleSet ts = finalize_triangle_set(
      {Triangle{0, 1, 2}, Triangle{1, 2, 3}, Triangle{2, 3, 4}},
      ComplexSource::CUSTOM, 6);
  CHECK_FALSE(brute_force_surface(inst, ts).has_value());
}

TEST_CASE("subset count estimates saturate") {
  CHECK(subset_count_estimate(10, 3) == 120);
  CHECK(subset_count_estimate(1000, 10) > kBruteForceSurfaceMaxSubsets);
  TspInstance inst = gen_random(11, 1, RandomMode::EUCLIDEAN);
  TriangleSet ts = complete_complex(inst); // C(165, 9) is astronomical
  CHECK_THROWS_AS(brute_force_surface(inst, ts), TspError);
}
