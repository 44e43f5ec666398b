#include "doctest.h"
#include "tspsurf/geometry.hpp"

using namespace tspsurf;

TEST_CASE("orient2d signs and exact collinearity") {
  CHECK(orient2d({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient2d({0, 0}, {0, 1}, {1, 0}) == -1);
  CHECK(orient2d({0, 0}, {1, 1}, {2, 2}) == 0);
  // Large integer coordinates stay exact.
  CHECK(orient2d({100000, 100000}, {200000, 200000}, {300000, 300000}) == 0);
  CHECK(orient2d({100000, 100000}, {200000, 200000}, {300000, 300001}) == 1);
}

TEST_CASE("incircle on the unit square") {
  Point a{0, 0}, b{1, 0}, c{1, 1};
  CHECK(incircle(a, b, c, {0.5, 0.5}) == 1);  // center of circumcircle
  CHECK(incircle(a, b, c, {0, 1}) == 0);      // cocircular corner
  CHECK(incircle(a, b, c, {2, 2}) == -1);
}

TEST_CASE("incircle exact integer path decides near-cocircular grids") {
  // Four grid points are exactly cocircular; a fifth shifted by one unit
  // at coordinate magnitude 1e5 must be classified exactly.
  Point a{0, 0}, b{100000, 0}, c{100000, 100000};
  CHECK(incircle(a, b, c, {0, 100000}) == 0);
  CHECK(incircle(a, b, c, {1, 100000}) == 1);
  CHECK(incircle(a, b, c, {-1, 100000}) == -1);
}

TEST_CASE("segment conflicts") {
  Point o{0, 0}, e{2, 0}, n{1, 1}, s{1, -1};
  CHECK(segments_conflict(o, e, n, s));          // proper crossing
  CHECK(segments_conflict(o, e, {1, 0}, n));     // T-contact on interior
  CHECK_FALSE(segments_conflict(o, e, e, n));    // shared endpoint only
  CHECK(segments_conflict(o, e, {1, 0}, {3, 0})); // collinear overlap
  CHECK_FALSE(segments_conflict(o, e, {2, 0}, {3, 0})); // collinear touch
  CHECK_FALSE(segments_conflict(o, e, {0, 1}, {2, 1})); // parallel apart
  CHECK(segments_conflict(o, e, o, e));          // identical
}
