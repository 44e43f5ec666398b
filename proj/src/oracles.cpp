#include "tspsurf/oracles.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tspsurf {

namespace {

double tour_length_fixed0(const TspInstance& inst,
                          const std::vector<int>& rest) {
  double len = inst.distance(0, rest.front());
  for (size_t i = 0; i + 1 < rest.size(); ++i)
    len += inst.distance(rest[i], rest[i + 1]);
  len += inst.distance(rest.back(), 0);
  return len;
}

struct BestTour {
  double length = std::numeric_limits<double>::infinity();
  std::vector<int> rest; // tour minus the leading city 0

  void offer(double len, const std::vector<int>& cand) {
    if (len < length || (len == length && cand < rest)) {
      length = len;
      rest = cand;
    }
  }
  void merge(const BestTour& other) {
    if (!other.rest.empty()) offer(other.length, other.rest);
  }
};

void check_brute_force_n(const TspInstance& inst) {
  if (inst.n > kBruteForceTspMaxN)
    throw TspError(ErrorCode::TooLarge,
                   "brute force capped at n <= " +
                       std::to_string(kBruteForceTspMaxN));
  if (inst.n < 3)
    throw TspError(ErrorCode::InvalidArgument, "need n >= 3 for a tour");
}

Tour finish_tour(const TspInstance& inst, const BestTour& best) {
  Tour t;
  t.order.push_back(0);
  t.order.insert(t.order.end(), best.rest.begin(), best.rest.end());
  t.length = best.length;
  return t;
}

} // namespace

Tour brute_force_tsp_serial(const TspInstance& inst) {
  check_brute_force_n(inst);
  std::vector<int> rest;
  for (int i = 1; i < inst.n; ++i) rest.push_back(i);
  BestTour best;
  do {
    if (rest.front() > rest.back()) continue; // one orientation per tour
    best.offer(tour_length_fixed0(inst, rest), rest);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return finish_tour(inst, best);
}

Tour brute_force_tsp(const TspInstance& inst) {
  check_brute_force_n(inst);
  const int n = inst.n;
  BestTour best;
#pragma omp parallel
  {
    BestTour local;
#pragma omp for schedule(dynamic, 1) nowait
    for (int first = 1; first < n; ++first) {
      // Enumerate tours 0 -> first -> (permutations of the rest).
      std::vector<int> tail;
      for (int i = 1; i < n; ++i)
        if (i != first) tail.push_back(i);
      std::vector<int> rest(n - 1);
      rest[0] = first;
      do {
        std::copy(tail.begin(), tail.end(), rest.begin() + 1);
        if (rest.front() > rest.back()) continue;
        local.offer(tour_length_fixed0(inst, rest), rest);
      } while (std::next_permutation(tail.begin(), tail.end()));
    }
#pragma omp critical
    best.merge(local);
  }
  return finish_tour(inst, best);
}

double subset_count_estimate(int n, int k) {
  if (k < 0 || k > n) return 0;
  double count = 1;
  for (int i = 0; i < k; ++i) {
    count *= static_cast<double>(n - i) / (i + 1);
    if (count > kBruteForceSurfaceMaxSubsets)
      return kBruteForceSurfaceMaxSubsets + 1;
  }
  return std::round(count);
}

namespace {

struct BestSurface {
  double length = std::numeric_limits<double>::infinity();
  std::vector<int> selected;

  void offer(double len, const std::vector<int>& cand) {
    if (len < length || (len == length && cand < selected)) {
      length = len;
      selected = cand;
    }
  }
  void merge(const BestSurface& other) {
    if (!other.selected.empty()) offer(other.length, other.selected);
  }
};

// Evaluate one candidate subset; records it when it is a valid disk.
void consider_subset(const TspInstance& inst, const TriangleSet& ts,
                     const std::vector<int>& subset, BestSurface& best) {
  Surface s = make_surface(ts, subset);
  if (!verify_surface(s).valid()) return;
  double len = 0.0;
  for (const auto& e : boundary_edges(s)) len += inst.distance(e.u, e.v);
  best.offer(len, subset);
}

// Lexicographic k-combinations of {from..limit-1} appended to `prefix`.
void enumerate_combinations(const TspInstance& inst, const TriangleSet& ts,
                            std::vector<int>& prefix, int from, int k,
                            int limit, BestSurface& best) {
  if (k == 0) {
    consider_subset(inst, ts, prefix, best);
    return;
  }
  for (int i = from; i <= limit - k; ++i) {
    prefix.push_back(i);
    enumerate_combinations(inst, ts, prefix, i + 1, k - 1, limit, best);
    prefix.pop_back();
  }
}

void check_surface_size(const TspInstance& inst, const TriangleSet& ts) {
  int k = inst.n - 2;
  double combos = subset_count_estimate(
      static_cast<int>(ts.triangles.size()), k);
  if (combos > kBruteForceSurfaceMaxSubsets)
    throw TspError(ErrorCode::TooLarge,
                   "subset count exceeds " +
                       std::to_string(kBruteForceSurfaceMaxSubsets));
}

std::optional<SurfaceOptimum> surface_result(const TspInstance& inst,
                                             const TriangleSet& ts,
                                             const BestSurface& best) {
  if (best.selected.empty()) return std::nullopt;
  SurfaceOptimum out{make_surface(ts, best.selected), best.length};
  return out;
}

} // namespace

std::optional<SurfaceOptimum> brute_force_surface_serial(
    const TspInstance& inst, const TriangleSet& ts) {
  check_surface_size(inst, ts);
  const int T = static_cast<int>(ts.triangles.size());
  const int k = inst.n - 2;
  if (T < k) return std::nullopt;
  BestSurface best;
  std::vector<int> prefix;
  enumerate_combinations(inst, ts, prefix, 0, k, T, best);
  return surface_result(inst, ts, best);
}

std::optional<SurfaceOptimum> brute_force_surface(const TspInstance& inst,
                                                  const TriangleSet& ts) {
  check_surface_size(inst, ts);
  const int T = static_cast<int>(ts.triangles.size());
  const int k = inst.n - 2;
  if (T < k) return std::nullopt;
  BestSurface best;
#pragma omp parallel
  {
    BestSurface local;
#pragma omp for schedule(dynamic, 1) nowait
    for (int first = 0; first <= T - k; ++first) {
      std::vector<int> prefix{first};
      enumerate_combinations(inst, ts, prefix, first + 1, k - 1, T, local);
    }
#pragma omp critical
    best.merge(local);
  }
  return surface_result(inst, ts, best);
}

} // namespace tspsurf
