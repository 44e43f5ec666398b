#include <cmath>

#include "doctest.h"
#include "tspsurf/instance.hpp"

using namespace tspsurf;

namespace {

const char* kSquare =
    "NAME : square4\n"
    "TYPE : TSP\n"
    "DIMENSION : 4\n"
    "EDGE_WEIGHT_TYPE : EUC_2D\n"
    "NODE_COORD_SECTION\n"
    "1 0 0\n"
    "2 1 0\n"
    "3 1 1\n"
    "4 0 1\n"
    "EOF\n";

} // namespace

TEST_CASE("tsplib EUC_2D parsing uses nearest-integer rounding") {
  TspInstance inst = parse_tsplib(kSquare);
  CHECK(inst.n == 4);
  CHECK(inst.kind == EdgeWeightKind::EUC_2D_ROUNDED);
  CHECK(inst.distance(0, 1) == 1.0);
  CHECK(inst.distance(0, 2) == 1.0); // round(sqrt(2)) = 1
  CHECK(inst.distance(0, 0) == 0.0);
}

TEST_CASE("tsplib dimension mismatch is MalformedSection") {
  std::string text =
      "DIMENSION : 5\nEDGE_WEIGHT_TYPE : EUC_2D\nNODE_COORD_SECTION\n"
      "1 0 0\n2 1 0\n3 1 1\n4 0 1\nEOF\n";
  CHECK_THROWS_WITH_AS(parse_tsplib(text), doctest::Contains("disagrees"),
                       TspError);
  try {
    parse_tsplib(text);
  } catch (const TspError& e) {
    CHECK(e.code() == ErrorCode::MalformedSection);
  }
}

TEST_CASE("tsplib unsupported weight types are rejected") {
  for (const char* wt : {"ATT", "GEO", "CEIL_2D"}) {
    std::string text = std::string("DIMENSION : 4\nEDGE_WEIGHT_TYPE : ") + wt +
                       "\nNODE_COORD_SECTION\n1 0 0\n2 1 0\n3 1 1\n4 0 1\nEOF\n";
    try {
      parse_tsplib(text);
      FAIL("expected UnsupportedFormat for " << wt);
    } catch (const TspError& e) {
      CHECK(e.code() == ErrorCode::UnsupportedFormat);
    }
  }
}

TEST_CASE("explicit full matrix round-trips") {
  TspInstance inst;
  inst.name = "m4";
  inst.n = 4;
  inst.kind = EdgeWeightKind::EXPLICIT;
  inst.dist = {0, 7, 2, 3.5, 7, 0, 4, 5, 2, 4, 0, 6, 3.5, 5, 6, 0};
  TspInstance back = parse_tsplib(write_tsplib(inst));
  CHECK(back.dist == inst.dist);
  CHECK(back.distance(1, 2) == 4.0);
  CHECK(back.distance(2, 1) == 4.0);
}

TEST_CASE("exact euclidean distance") {
  TspInstance inst;
  inst.n = 2;
  inst.coords = std::vector<Point>{{0, 0}, {3, 4}};
  inst.kind = EdgeWeightKind::EUC_2D_EXACT;
  inst.dist = derive_distances(*inst.coords, inst.kind);
  CHECK(inst.distance(0, 1) == 5.0);
}

TEST_CASE("distance bounds checking") {
  TspInstance inst = gen_random(5, 1, RandomMode::EUCLIDEAN);
  CHECK_THROWS_AS((void)inst.distance(0, 5), TspError);
  CHECK_THROWS_AS((void)inst.distance(-1, 0), TspError);
}

TEST_CASE("generated instances are symmetric, zero-diagonal, deterministic") {
  for (auto mode : {RandomMode::EUCLIDEAN, RandomMode::NONMETRIC}) {
    for (std::uint64_t seed : {1ull, 7ull, 42ull}) {
      TspInstance a = gen_random(10, seed, mode);
      TspInstance b = gen_random(10, seed, mode);
      CHECK(a.dist == b.dist);
      for (int i = 0; i < a.n; ++i) {
        CHECK(a.distance(i, i) == 0.0);
        for (int j = 0; j < a.n; ++j) {
          CHECK(a.distance(i, j) == a.distance(j, i));
          if (i != j) CHECK(a.distance(i, j) > 0.0);
        }
      }
    }
  }
}

TEST_CASE("nonmetric generator violates the triangle inequality somewhere") {
  TspInstance inst = gen_random(10, 3, RandomMode::NONMETRIC);
  bool violated = false;
  for (int i = 0; i < 10 && !violated; ++i)
    for (int j = 0; j < 10 && !violated; ++j)
      for (int k = 0; k < 10 && !violated; ++k) {
        if (i == j || j == k || i == k) continue;
        if (inst.distance(i, k) > inst.distance(i, j) + inst.distance(j, k))
          violated = true;
      }
  CHECK(violated);
}

TEST_CASE("euclidean generator round-trips through TSPLIB text") {
  TspInstance inst = gen_random(12, 9, RandomMode::EUCLIDEAN);
  TspInstance back = parse_tsplib(write_tsplib(inst));
  CHECK(back.kind == EdgeWeightKind::EUC_2D_EXACT);
  CHECK(back.dist == inst.dist);
}

TEST_CASE("nested hexagons: 13 cities, two radii around the center") {
  TspInstance inst = gen_nested_hexagons();
  CHECK(inst.n == 13);
  int at_inner = 0, at_outer = 0;
  for (int i = 1; i < 13; ++i) {
    double d = inst.distance(0, i);
    if (std::fabs(d - 1.0) < 1e-12) ++at_inner;
    if (std::fabs(d - 2.0) < 1e-12) ++at_outer;
  }
  CHECK(at_inner == 6);
  CHECK(at_outer == 6);
}

TEST_CASE("tnm generator matches its published shape") {
  TspInstance inst = gen_tnm(199);
  CHECK(inst.n == 199);
  CHECK(inst.name == "Tnm199");
  CHECK(inst.kind == EdgeWeightKind::EUC_2D_ROUNDED);
  // All coordinates are integers after the 1e4 scaling.
  for (const auto& p : *inst.coords) {
    CHECK(p.x == std::floor(p.x));
    CHECK(p.y == std::floor(p.y));
  }
  CHECK_THROWS_AS(gen_tnm(200), TspError);
  CHECK_THROWS_AS(gen_tnm(40), TspError);
}

TEST_CASE("generator specs parse") {
  CHECK(load_instance("gen:euclidean:n=8:seed=5").n == 8);
  CHECK(load_instance("gen:nonmetric:n=10:seed=7").n == 10);
  CHECK(load_instance("gen:hexagons").n == 13);
  CHECK_THROWS_AS(load_instance("gen:bogus:n=4"), TspError);
}
