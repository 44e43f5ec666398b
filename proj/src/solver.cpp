#include "tspsurf/solver.hpp"

#include <unistd.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "json.hpp"

#ifndef TSPSURF_DEFAULT_DRIVER
#define TSPSURF_DEFAULT_DRIVER ""
#endif

namespace tspsurf {

namespace fs = std::filesystem;

const char* solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::OPTIMAL: return "OPTIMAL";
    case SolveStatus::FEASIBLE: return "FEASIBLE";
    case SolveStatus::INFEASIBLE: return "INFEASIBLE";
    case SolveStatus::TIME_LIMIT: return "TIME_LIMIT";
    case SolveStatus::ERROR: return "ERROR";
  }
  return "ERROR";
}

namespace {

SolveStatus status_from_name(const std::string& s) {
  if (s == "OPTIMAL") return SolveStatus::OPTIMAL;
  if (s == "FEASIBLE") return SolveStatus::FEASIBLE;
  if (s == "INFEASIBLE") return SolveStatus::INFEASIBLE;
  if (s == "TIME_LIMIT") return SolveStatus::TIME_LIMIT;
  return SolveStatus::ERROR;
}

int run_command(const std::string& cmd, std::string* output) {
  std::string full = cmd + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return -1;
  std::array<char, 4096> buf;
  std::string out;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int rc = pclose(pipe);
  if (output) *output = std::move(out);
  return rc;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Unique scratch directory, removed on destruction.
struct ScratchDir {
  fs::path path;
  ScratchDir() {
    auto base = fs::temp_directory_path();
    for (int attempt = 0; attempt < 100; ++attempt) {
      auto p = base / ("tspsurf-" + std::to_string(::getpid()) + "-" +
                       std::to_string(rand()));
      std::error_code ec;
      if (fs::create_directory(p, ec)) {
        path = p;
        return;
      }
    }
    throw TspError(ErrorCode::IoError, "cannot create scratch directory");
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s)
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  out += "'";
  return out;
}

} // namespace

MilpSolution MilpBackend::solve(const MilpModel& model,
                                const SolveLimits& limits, int seed) const {
  SolveJob job{&model, limits, seed};
  return solve_batch({job}).at(0);
}

std::vector<MilpSolution> MilpBackend::solve_batch(
    const std::vector<SolveJob>& jobs) const {
  std::vector<MilpSolution> out;
  out.reserve(jobs.size());
  for (const auto& j : jobs) out.push_back(solve(*j.model, j.limits, j.seed));
  return out;
}

ScipyHighsBackend::ScipyHighsBackend(std::string driver_path)
    : driver_(std::move(driver_path)) {
  if (driver_.empty()) {
    if (const char* env = std::getenv("TSPSURF_BACKEND_DRIVER"))
      driver_ = env;
    else
      driver_ = TSPSURF_DEFAULT_DRIVER;
  }
}

bool ScipyHighsBackend::available() const {
  if (driver_.empty() || !fs::exists(driver_)) return false;
  static int cached = -1;
  if (cached < 0)
    cached = run_command("python3 -c 'import scipy.optimize' >/dev/null",
                         nullptr) == 0
                 ? 1
                 : 0;
  return cached == 1;
}

std::vector<MilpSolution> ScipyHighsBackend::solve_batch(
    const std::vector<SolveJob>& jobs) const {
  if (!available())
    throw TspError(ErrorCode::BackendUnavailable,
                   "scipy backend driver not found (looked at '" + driver_ +
                       "'; set TSPSURF_BACKEND_DRIVER)");
  ScratchDir scratch;
  nlohmann::json manifest = nlohmann::json::array();
  for (size_t i = 0; i < jobs.size(); ++i) {
    auto lp_path = scratch.path / ("model" + std::to_string(i) + ".lp");
    std::ofstream lp(lp_path);
    lp << write_lp(*jobs[i].model);
    lp.close();
    nlohmann::json job;
    job["lp"] = lp_path.string();
    job["out"] = (scratch.path / ("sol" + std::to_string(i) + ".json")).string();
    job["time_limit"] = jobs[i].limits.time_limit_s;
    job["mip_gap"] = jobs[i].limits.mip_gap;
    job["seed"] = jobs[i].seed;
    manifest.push_back(job);
  }
  auto manifest_path = scratch.path / "jobs.json";
  {
    std::ofstream mf(manifest_path);
    mf << manifest.dump();
  }
  std::string cmd = "python3 " + shell_quote(driver_) + " --batch " +
                    shell_quote(manifest_path.string());
  std::string output;
  int rc = run_command(cmd, &output);
  if (rc != 0)
    throw TspError(ErrorCode::BackendParseError,
                   "backend driver failed (rc=" + std::to_string(rc) +
                       "): " + output.substr(0, 2000));

  std::vector<MilpSolution> results;
  for (size_t i = 0; i < jobs.size(); ++i) {
    auto sol_path = scratch.path / ("sol" + std::to_string(i) + ".json");
    if (!fs::exists(sol_path))
      throw TspError(ErrorCode::BackendParseError,
                     "missing solution file for job " + std::to_string(i));
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(sol_path));
    } catch (const nlohmann::json::exception& e) {
      throw TspError(ErrorCode::BackendParseError,
                     std::string("bad solution JSON: ") + e.what());
    }
    MilpSolution sol;
    sol.status = status_from_name(j.value("status", "ERROR"));
    sol.objective = j.value("objective", 0.0);
    sol.stats.nodes = j.value("nodes", -1LL);
    sol.stats.runtime_s = j.value("runtime_s", 0.0);
    sol.stats.backend = j.value("backend", "scipy");
    if (j.contains("dual_bound") && j["dual_bound"].is_number())
      sol.stats.dual_bound = j["dual_bound"].get<double>();
    if (sol.status == SolveStatus::OPTIMAL ||
        sol.status == SolveStatus::FEASIBLE) {
      if (!j.contains("values") || !j["values"].is_object())
        throw TspError(ErrorCode::BackendParseError,
                       "solution claims feasibility but has no values");
      for (auto& [k, v] : j["values"].items())
        sol.values[k] = v.get<double>();
      validate_binaries(*jobs[i].model, sol);
    }
    results.push_back(std::move(sol));
  }
  return results;
}

bool HighsCliBackend::available() const {
  static int cached = -1;
  if (cached < 0)
    cached = run_command("which highs >/dev/null", nullptr) == 0 ? 1 : 0;
  return cached == 1;
}

MilpSolution parse_highs_solution(const std::string& text) {
  MilpSolution sol;
  std::istringstream in(text);
  std::string line;
  std::string model_status;
  bool in_columns = false;
  long long columns_left = 0;
  while (std::getline(in, line)) {
    if (line.rfind("Model status", 0) == 0) {
      std::getline(in, model_status);
      continue;
    }
    if (line.rfind("Objective", 0) == 0) {
      sol.objective = std::stod(line.substr(line.find(' ') + 1));
      continue;
    }
    if (line.rfind("# Columns", 0) == 0) {
      columns_left = std::stoll(line.substr(line.rfind(' ') + 1));
      in_columns = true;
      continue;
    }
    if (in_columns && columns_left > 0) {
      auto sp = line.rfind(' ');
      if (sp == std::string::npos)
        throw TspError(ErrorCode::BackendParseError,
                       "bad column line: " + line);
      sol.values[line.substr(0, sp)] = std::stod(line.substr(sp + 1));
      --columns_left;
      if (columns_left == 0) in_columns = false;
    }
  }
  if (model_status.find("Optimal") != std::string::npos)
    sol.status = SolveStatus::OPTIMAL;
  else if (model_status.find("Infeasible") != std::string::npos)
    sol.status = SolveStatus::INFEASIBLE;
  else if (model_status.find("Time limit") != std::string::npos ||
           model_status.find("time limit") != std::string::npos)
    sol.status = SolveStatus::TIME_LIMIT;
  else
    sol.status = SolveStatus::ERROR;
  if (sol.status != SolveStatus::OPTIMAL && sol.status != SolveStatus::FEASIBLE)
    sol.values.clear();
  sol.stats.backend = "highs";
  return sol;
}

std::vector<MilpSolution> HighsCliBackend::solve_batch(
    const std::vector<SolveJob>& jobs) const {
  if (!available())
    throw TspError(ErrorCode::BackendUnavailable, "no highs executable on PATH");
  std::vector<MilpSolution> results;
  for (const auto& job : jobs) {
    ScratchDir scratch;
    auto lp_path = scratch.path / "model.lp";
    auto sol_path = scratch.path / "model.sol";
    {
      std::ofstream lp(lp_path);
      lp << write_lp(*job.model);
    }
    std::ostringstream cmd;
    cmd << "highs --solution_file " << shell_quote(sol_path.string())
        << " --time_limit " << job.limits.time_limit_s << " --random_seed "
        << job.seed << " " << shell_quote(lp_path.string());
    auto t0 = std::chrono::steady_clock::now();
    std::string output;
    run_command(cmd.str(), &output);
    auto t1 = std::chrono::steady_clock::now();
    if (!fs::exists(sol_path))
      throw TspError(ErrorCode::BackendParseError,
                     "highs produced no solution file: " +
                         output.substr(0, 2000));
    MilpSolution sol = parse_highs_solution(read_file(sol_path));
    sol.stats.runtime_s = std::chrono::duration<double>(t1 - t0).count();
    if (sol.status == SolveStatus::OPTIMAL ||
        sol.status == SolveStatus::FEASIBLE)
      validate_binaries(*job.model, sol);
    results.push_back(std::move(sol));
  }
  return results;
}

void validate_binaries(const MilpModel& model, MilpSolution& sol) {
  constexpr double kTol = 1e-6;
  for (const auto& var : model.variables()) {
    auto it = sol.values.find(var.name);
    if (it == sol.values.end()) {
      if (var.kind == VarKind::BINARY)
        throw TspError(ErrorCode::BackendParseError,
                       "solution missing binary " + var.name);
      continue;
    }
    if (var.kind != VarKind::BINARY) continue;
    double v = it->second;
    if (v < -kTol || v > 1.0 + kTol)
      throw TspError(ErrorCode::BackendParseError,
                     "binary " + var.name + " = " + std::to_string(v) +
                         " outside [0,1]");
    double r = v < 0.5 ? 0.0 : 1.0;
    if (std::abs(v - r) > kTol)
      throw TspError(ErrorCode::BackendParseError,
                     "binary " + var.name + " = " + std::to_string(v) +
                         " not integral");
    it->second = r;
  }
}

const MilpBackend& get_backend(const std::string& id) {
  static ScipyHighsBackend scipy;
  static HighsCliBackend highs;
  if (id == "scipy") return scipy;
  if (id == "highs") return highs;
  if (id == "auto" || id.empty()) {
    if (scipy.available()) return scipy;
    if (highs.available()) return highs;
    throw TspError(ErrorCode::BackendUnavailable, "no MILP backend available");
  }
  throw TspError(ErrorCode::BackendUnavailable, "unknown backend id " + id);
}

MilpSolution solve(const MilpModel& model, const std::string& backend_id,
                   const SolveLimits& limits, int seed) {
  return get_backend(backend_id).solve(model, limits, seed);
}

} // namespace tspsurf
