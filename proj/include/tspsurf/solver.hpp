#ifndef TSPSURF_SOLVER_HPP
#define TSPSURF_SOLVER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tspsurf/milp.hpp"

namespace tspsurf {

enum class SolveStatus { OPTIMAL, FEASIBLE, INFEASIBLE, TIME_LIMIT, ERROR };

const char* solve_status_name(SolveStatus s);

struct SolveStats {
  long long nodes = -1;
  double runtime_s = 0.0;
  std::string backend;
  std::optional<double> dual_bound;
};

struct MilpSolution {
  SolveStatus status = SolveStatus::ERROR;
  double objective = 0.0;
  std::map<std::string, double> values; // present iff OPTIMAL or FEASIBLE
  SolveStats stats;
};

struct SolveLimits {
  double time_limit_s = 3600.0; // matches the 1-hour protocol
  double mip_gap = 0.0;
  int threads = 1;
};

/// One solver invocation: model plus per-run knobs.
struct SolveJob {
  const MilpModel* model = nullptr;
  SolveLimits limits;
  int seed = 0;
};

/**
 * @brief File-based MILP backend: writes the LP file, runs an external
 * solver process, parses the solution file back.
 */
class MilpBackend {
public:
  virtual ~MilpBackend() = default;
  virtual std::string id() const = 0;
  virtual bool available() const = 0;
  virtual MilpSolution solve(const MilpModel& model, const SolveLimits& limits,
                             int seed) const;
  /// Solve many models in one backend process where the adapter supports
  /// it; the default loops over solve().
  virtual std::vector<MilpSolution> solve_batch(
      const std::vector<SolveJob>& jobs) const;
};

/// Adapter around tools/milp_backend.py (scipy's HiGHS wrapper).
class ScipyHighsBackend : public MilpBackend {
public:
  explicit ScipyHighsBackend(std::string driver_path = "");
  std::string id() const override { return "scipy"; }
  bool available() const override;
  std::vector<MilpSolution> solve_batch(
      const std::vector<SolveJob>& jobs) const override;

private:
  std::string driver_;
};

/// Adapter around a `highs` executable found on PATH.
class HighsCliBackend : public MilpBackend {
public:
  std::string id() const override { return "highs"; }
  bool available() const override;
  std::vector<MilpSolution> solve_batch(
      const std::vector<SolveJob>& jobs) const override;
};

/// Parse a HiGHS raw-style solution file (used by the highs CLI adapter;
/// exposed for tests).
MilpSolution parse_highs_solution(const std::string& text);

/// Resolve a backend by id ("scipy", "highs", or "auto").
const MilpBackend& get_backend(const std::string& id);

/// Round near-integral binaries and validate their integrality; throws
/// BackendParseError outside [-1e-6, 1+1e-6].
void validate_binaries(const MilpModel& model, MilpSolution& sol);

MilpSolution solve(const MilpModel& model, const std::string& backend_id,
                   const SolveLimits& limits, int seed = 0);

} // namespace tspsurf

#endif
