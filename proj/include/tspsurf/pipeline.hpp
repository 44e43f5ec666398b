#ifndef TSPSURF_PIPELINE_HPP
#define TSPSURF_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tspsurf/boundary.hpp"
#include "tspsurf/complex.hpp"
#include "tspsurf/solver.hpp"
#include "tspsurf/surface_model.hpp"

namespace tspsurf {

enum class ModelKind { SURFACE_GENERAL, SURFACE_PLANAR, LIFTED_MTZ };

const char* model_kind_name(ModelKind k);
ModelKind model_kind_from_name(const std::string& name);

struct RunConfig {
  std::string instance;             // path or gen:spec
  std::string complex_choice = "delaunay"; // complete|delaunay|greedy|custom:<path>
  ModelKind model = ModelKind::SURFACE_GENERAL;
  TreeVariant tree = TreeVariant::FLOW;
  std::string backend = "auto";
  SolveLimits limits;
  int seed = 0;
  std::optional<double> reference; // known optimum for gap reporting
  std::string out_dir;             // empty: write nothing
  bool emit_lp = false;
  std::size_t complex_cap = kDefaultComplexCap;
};

/// Everything needed to audit one run; serializable, self-contained for
/// later validation without a re-solve.
struct RunReport {
  int schema_version = 1;
  std::string instance;
  std::string complex_source;
  ModelKind model = ModelKind::SURFACE_GENERAL;
  TreeVariant tree = TreeVariant::FLOW;
  SolveStatus status = SolveStatus::ERROR;
  double objective = 0.0;
  std::optional<Tour> tour;
  std::optional<double> gap;
  SolveStats stats;
  std::optional<VerificationReport> verification;
  bool objective_identity = false;
  int seed = 0;
  int n = 0;
  std::vector<Triangle> selected_triangles;
  std::vector<std::pair<int, int>> selected_dual_edges; // planar models
  std::string message;

  std::string to_json() const;
  static RunReport from_json(const std::string& text);
  /// 0 solved+valid, 2 infeasible, 3 invalid decode/verification.
  int exit_code() const;
};

/// Build the chosen candidate complex for an instance.
TriangleSet build_complex(const TspInstance& inst, const std::string& choice,
                          std::size_t cap = kDefaultComplexCap);

/// Build the chosen model over a prepared complex.
MilpModel build_model(const TspInstance& inst, const TriangleSet& ts,
                      ModelKind kind, TreeVariant tree);

/// Full solve pipeline: ingest, build, solve, decode, verify, report.
/// Writes report/tour/LP files into cfg.out_dir when set.
RunReport run_solve(const RunConfig& cfg);

/// Decode a Hamiltonian cycle from a solved lifted-MTZ model.
Tour decode_directed_tour(const MilpModel& model, const MilpSolution& sol,
                          const TspInstance& inst);

struct CompareCombo {
  ModelKind model = ModelKind::SURFACE_GENERAL;
  TreeVariant tree = TreeVariant::FLOW;
  std::string complex_choice = "delaunay";
};

struct CompareRow {
  CompareCombo combo;
  int runs = 0;
  int solved = 0;
  double mean_time_s = 0.0;
  double mean_nodes = 0.0;
  double objective = 0.0; // of solved runs
  int vars = 0;
  int cons = 0;
  std::string error;
};

struct CompareResult {
  std::string instance;
  std::vector<CompareRow> rows;
  std::string to_text() const;
  std::string to_json() const;
};

/// 10-run protocol: solve each combo `runs` times with seeds 1..runs,
/// aggregating means; `jobs` bounds concurrent backend processes.
CompareResult run_compare(const std::string& instance_spec,
                          const std::vector<CompareCombo>& combos, int runs,
                          const SolveLimits& limits, const std::string& backend,
                          int jobs = 1, std::size_t cap = kDefaultComplexCap);

} // namespace tspsurf

#endif
