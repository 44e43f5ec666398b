#include "tspsurf/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "tspsurf/baseline_model.hpp"

namespace tspsurf {

namespace fs = std::filesystem;

const char* model_kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::SURFACE_GENERAL: return "surface";
    case ModelKind::SURFACE_PLANAR: return "surface-planar";
    case ModelKind::LIFTED_MTZ: return "mtz-baseline";
  }
  return "surface";
}

ModelKind model_kind_from_name(const std::string& name) {
  if (name == "surface") return ModelKind::SURFACE_GENERAL;
  if (name == "surface-planar") return ModelKind::SURFACE_PLANAR;
  if (name == "mtz-baseline") return ModelKind::LIFTED_MTZ;
  throw TspError(ErrorCode::InvalidArgument, "unknown model kind " + name);
}

TriangleSet build_complex(const TspInstance& inst, const std::string& choice,
                          std::size_t cap) {
  if (choice == "complete") return complete_complex(inst, cap);
  if (choice == "delaunay") return delaunay_complex(inst);
  if (choice == "greedy") return greedy_complex(inst);
  if (choice.rfind("custom:", 0) == 0) {
    std::string path = choice.substr(7);
    std::ifstream f(path);
    if (!f) throw TspError(ErrorCode::IoError, "cannot open " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    TriangleSet ts = triangle_set_from_json(buf.str());
    if (ts.n > inst.n)
      throw TspError(ErrorCode::MalformedSection,
                     "custom complex references cities beyond the instance");
    ts.n = inst.n;
    return ts;
  }
  throw TspError(ErrorCode::InvalidArgument,
                 "unknown complex choice " + choice);
}

MilpModel build_model(const TspInstance& inst, const TriangleSet& ts,
                      ModelKind kind, TreeVariant tree) {
  switch (kind) {
    case ModelKind::SURFACE_GENERAL: {
      IncidenceGraph inc = build_incidence(inst, ts);
      return build_general(inc, tree, inst.name);
    }
    case ModelKind::SURFACE_PLANAR: {
      DualGraph dual = build_dual(inst, ts);
      return build_planar(dual, tree, inst.name);
    }
    case ModelKind::LIFTED_MTZ: {
      EdgeSet es = ts.source == ComplexSource::COMPLETE
                       ? complete_edge_set(inst)
                       : edge_set_from_complex(inst, ts);
      return build_lifted_mtz(inst, es);
    }
  }
  throw TspError(ErrorCode::InvalidArgument, "unreachable model kind");
}

Tour decode_directed_tour(const MilpModel& model, const MilpSolution& sol,
                          const TspInstance& inst) {
  std::map<int, int> next;
  bool any = false;
  for (const auto& var : model.variables()) {
    if (var.role.kind != VarRole::Kind::DIRECTED) continue;
    any = true;
    auto it = sol.values.find(var.name);
    if (it == sol.values.end())
      throw TspError(ErrorCode::DecodeError,
                     "solution lacks a value for " + var.name);
    if (it->second > 0.5) {
      if (next.count(var.role.i))
        throw TspError(ErrorCode::DecodeError,
                       "city " + std::to_string(var.role.i) +
                           " has two outgoing arcs");
      next[var.role.i] = var.role.j;
    }
  }
  if (!any)
    throw TspError(ErrorCode::DecodeError, "model declares no arc variables");
  Tour tour;
  int cur = 0;
  for (int step = 0; step < inst.n; ++step) {
    tour.order.push_back(cur);
    auto it = next.find(cur);
    if (it == next.end())
      throw TspError(ErrorCode::DecodeError,
                     "no outgoing arc at city " + std::to_string(cur));
    int nxt = it->second;
    tour.length += inst.distance(cur, nxt);
    cur = nxt;
    if (cur == 0 && step + 1 < inst.n)
      throw TspError(ErrorCode::DecodeError, "subtour through the depot");
  }
  if (cur != 0)
    throw TspError(ErrorCode::DecodeError, "arc walk does not close at depot");
  // Canonic orientation: second city smaller than last.
  if (tour.order.size() > 2 && tour.order[1] > tour.order.back())
    std::reverse(tour.order.begin() + 1, tour.order.end());
  return tour;
}

namespace {

void write_outputs(const RunConfig& cfg, const RunReport& rep,
                   const MilpModel* model) {
  if (cfg.out_dir.empty()) return;
  fs::create_directories(cfg.out_dir);
  std::string stem = rep.instance + "-" + rep.complex_source + "-" +
                     model_kind_name(rep.model) + "-" +
                     tree_variant_name(rep.tree) + "-s" +
                     std::to_string(rep.seed);
  {
    std::ofstream f(fs::path(cfg.out_dir) / (stem + ".report.json"));
    f << rep.to_json() << "\n";
  }
  if (rep.tour) {
    std::ofstream f(fs::path(cfg.out_dir) / (stem + ".tour"));
    f << format_tour_line(rep.instance, *rep.tour) << "\n";
  }
  if (cfg.emit_lp && model) {
    std::ofstream f(fs::path(cfg.out_dir) / (stem + ".lp"));
    f << write_lp(*model);
    std::ofstream d(fs::path(cfg.out_dir) / (stem + ".decode.json"));
    d << model->decode_map_json() << "\n";
  }
}

} // namespace

RunReport run_solve(const RunConfig& cfg) {
  RunReport rep;
  rep.model = cfg.model;
  rep.tree = cfg.tree;
  rep.seed = cfg.seed;

  TspInstance inst = load_instance(cfg.instance);
  rep.instance = inst.name;
  rep.n = inst.n;

  TriangleSet ts = build_complex(inst, cfg.complex_choice, cfg.complex_cap);
  rep.complex_source = complex_source_name(ts.source);

  MilpModel model;
  try {
    model = build_model(inst, ts, cfg.model, cfg.tree);
  } catch (const TspError& e) {
    if (e.code() == ErrorCode::TooFewTriangles) {
      // Trivially infeasible: fewer candidates than the N-2 cardinality row.
      rep.status = SolveStatus::INFEASIBLE;
      rep.message = e.what();
      write_outputs(cfg, rep, nullptr);
      return rep;
    }
    throw;
  }

  MilpSolution sol = solve(model, cfg.backend, cfg.limits, cfg.seed);
  rep.status = sol.status;
  rep.objective = sol.objective;
  rep.stats = sol.stats;

  if (sol.status == SolveStatus::OPTIMAL ||
      sol.status == SolveStatus::FEASIBLE) {
    if (cfg.model == ModelKind::LIFTED_MTZ) {
      Tour tour = decode_directed_tour(model, sol, inst);
      rep.tour = tour;
      rep.objective_identity =
          std::fabs(tour.length - sol.objective) <=
          1e-6 * (1.0 + std::fabs(sol.objective));
    } else {
      Surface s = extract_surface(model, sol, ts);
      for (int t : s.selected) rep.selected_triangles.push_back(ts.triangles[t]);
      if (cfg.model == ModelKind::SURFACE_PLANAR) {
        for (const auto& var : model.variables())
          if (var.role.kind == VarRole::Kind::DUAL_EDGE &&
              sol.values.count(var.name) && sol.values.at(var.name) > 0.5)
            rep.selected_dual_edges.emplace_back(var.role.i, var.role.j);
      }
      rep.verification = verify_surface(s);
      rep.objective_identity =
          objective_identity_check(s, inst, sol.objective);
      if (rep.verification->valid()) {
        rep.tour = assemble_tour(boundary_edges(s), inst.n, inst);
      }
    }
    if (cfg.reference && rep.tour)
      rep.gap = gap_percent(rep.tour->length, *cfg.reference);
  } else if (cfg.model != ModelKind::LIFTED_MTZ &&
             sol.status == SolveStatus::INFEASIBLE &&
             ts.source != ComplexSource::COMPLETE) {
    rep.message =
        "sparse candidate complex admits no disk (it may contain no "
        "Hamiltonian tour); retry with --complex complete";
  }

  write_outputs(cfg, rep, &model);
  return rep;
}

int RunReport::exit_code() const {
  if (status == SolveStatus::INFEASIBLE) return 2;
  if (status == SolveStatus::OPTIMAL || status == SolveStatus::FEASIBLE) {
    if (model == ModelKind::LIFTED_MTZ)
      return tour && objective_identity ? 0 : 3;
    return verification && verification->valid() && objective_identity ? 0 : 3;
  }
  return 1;
}

std::string RunReport::to_json() const {
  nlohmann::json j;
  j["schema_version"] = schema_version;
  j["instance"] = instance;
  j["complex"] = complex_source;
  j["model"] = model_kind_name(model);
  j["tree"] = tree_variant_name(tree);
  j["status"] = solve_status_name(status);
  j["objective"] = objective;
  j["n"] = n;
  j["seed"] = seed;
  j["objective_identity"] = objective_identity;
  if (tour) {
    j["tour"]["order"] = tour->order;
    j["tour"]["length"] = tour->length;
  }
  if (gap) j["gap_percent"] = *gap;
  j["stats"]["runtime_s"] = stats.runtime_s;
  j["stats"]["nodes"] = stats.nodes;
  j["stats"]["backend"] = stats.backend;
  if (stats.dual_bound) j["stats"]["dual_bound"] = *stats.dual_bound;
  if (verification) j["verification"] = nlohmann::json::parse(verification->to_json());
  auto& sel = j["selected_triangles"] = nlohmann::json::array();
  for (const auto& t : selected_triangles) sel.push_back({t.a, t.b, t.c});
  auto& dual = j["selected_dual_edges"] = nlohmann::json::array();
  for (const auto& [a, b] : selected_dual_edges) dual.push_back({a, b});
  if (!message.empty()) j["message"] = message;
  return j.dump(2);
}

RunReport RunReport::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RunReport rep;
  rep.schema_version = j.value("schema_version", 1);
  rep.instance = j.value("instance", "");
  rep.complex_source = j.value("complex", "");
  rep.model = model_kind_from_name(j.value("model", "surface"));
  rep.tree = j.value("tree", "flow") == std::string("mtz") ? TreeVariant::MTZ
                                                           : TreeVariant::FLOW;
  for (int s = 0; s < 5; ++s)
    if (j.value("status", "") == solve_status_name(static_cast<SolveStatus>(s)))
      rep.status = static_cast<SolveStatus>(s);
  rep.objective = j.value("objective", 0.0);
  rep.n = j.value("n", 0);
  rep.seed = j.value("seed", 0);
  rep.objective_identity = j.value("objective_identity", false);
  if (j.contains("tour")) {
    Tour t;
    t.order = j["tour"]["order"].get<std::vector<int>>();
    t.length = j["tour"]["length"].get<double>();
    rep.tour = t;
  }
  if (j.contains("gap_percent")) rep.gap = j["gap_percent"].get<double>();
  if (j.contains("selected_triangles"))
    for (const auto& item : j["selected_triangles"])
      rep.selected_triangles.push_back(
          make_triangle(item[0].get<int>(), item[1].get<int>(),
                        item[2].get<int>()));
  if (j.contains("selected_dual_edges"))
    for (const auto& item : j["selected_dual_edges"])
      rep.selected_dual_edges.emplace_back(item[0].get<int>(),
                                           item[1].get<int>());
  if (j.contains("message")) rep.message = j["message"].get<std::string>();
  return rep;
}

CompareResult run_compare(const std::string& instance_spec,
                          const std::vector<CompareCombo>& combos, int runs,
                          const SolveLimits& limits, const std::string& backend,
                          int jobs, std::size_t cap) {
  TspInstance inst = load_instance(instance_spec);
  CompareResult result;
  result.instance = inst.name;

  for (const auto& combo : combos) {
    CompareRow row;
    row.combo = combo;
    row.runs = runs;
    MilpModel model;
    try {
      TriangleSet ts = build_complex(inst, combo.complex_choice, cap);
      model = build_model(inst, ts, combo.model, combo.tree);
    } catch (const TspError& e) {
      row.error = e.what();
      result.rows.push_back(std::move(row));
      continue;
    }
    row.vars = static_cast<int>(model.variables().size());
    row.cons = static_cast<int>(model.constraints().size());

    std::vector<MilpSolution> sols(runs);
    const MilpBackend& be = get_backend(backend);
    std::vector<SolveJob> all_jobs(runs);
    for (int s = 0; s < runs; ++s) all_jobs[s] = {&model, limits, s + 1};
    int workers = std::max(1, jobs);
    if (workers == 1) {
      sols = be.solve_batch(all_jobs);
    } else {
      // Chunk the seeds across a bounded number of backend processes.
      std::vector<std::thread> pool;
      std::vector<std::vector<int>> chunk_idx(workers);
      for (int s = 0; s < runs; ++s) chunk_idx[s % workers].push_back(s);
      for (int wkr = 0; wkr < workers; ++wkr) {
        if (chunk_idx[wkr].empty()) continue;
        pool.emplace_back([&, wkr] {
          std::vector<SolveJob> chunk;
          for (int s : chunk_idx[wkr]) chunk.push_back(all_jobs[s]);
          auto part = be.solve_batch(chunk);
          for (size_t i = 0; i < part.size(); ++i)
            sols[chunk_idx[wkr][i]] = std::move(part[i]);
        });
      }
      for (auto& th : pool) th.join();
    }

    double time_sum = 0.0, node_sum = 0.0, obj = 0.0;
    for (const auto& sol : sols) {
      if (sol.status == SolveStatus::OPTIMAL) {
        row.solved++;
        time_sum += sol.stats.runtime_s;
        node_sum += sol.stats.nodes >= 0 ? sol.stats.nodes : 0;
        obj = sol.objective;
      }
    }
    if (row.solved > 0) {
      row.mean_time_s = time_sum / row.solved;
      row.mean_nodes = node_sum / row.solved;
      row.objective = obj;
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::string CompareResult::to_text() const {
  std::ostringstream out;
  out << "Instance: " << instance << "\n";
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-28s %8s %8s %16s %10s %14s\n", "Model",
                "Vars", "Cons", "Time(s)[Solved]", "Nodes", "Objective");
  out << buf;
  for (const auto& row : rows) {
    std::string label = std::string(model_kind_name(row.combo.model)) + "-" +
                        tree_variant_name(row.combo.tree) + " (" +
                        row.combo.complex_choice + ")";
    if (!row.error.empty()) {
      std::snprintf(buf, sizeof(buf), "%-28s %s\n", label.c_str(),
                    row.error.c_str());
      out << buf;
      continue;
    }
    std::string time_col;
    if (row.solved == 0) {
      time_col = "DNF [0/" + std::to_string(row.runs) + "]";
    } else {
      char t[64];
      std::snprintf(t, sizeof(t), "%.2fs [%d/%d]", row.mean_time_s, row.solved,
                    row.runs);
      time_col = t;
    }
    char nodes[32];
    std::snprintf(nodes, sizeof(nodes), "%.1f", row.mean_nodes);
    char obj[48];
    std::snprintf(obj, sizeof(obj), "%.6g", row.objective);
    std::snprintf(buf, sizeof(buf), "%-28s %8d %8d %16s %10s %14s\n",
                  label.c_str(), row.vars, row.cons, time_col.c_str(),
                  row.solved ? nodes : "-", row.solved ? obj : "-");
    out << buf;
  }
  return out.str();
}

std::string CompareResult::to_json() const {
  nlohmann::json j;
  j["instance"] = instance;
  auto& arr = j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r;
    r["model"] = model_kind_name(row.combo.model);
    r["tree"] = tree_variant_name(row.combo.tree);
    r["complex"] = row.combo.complex_choice;
    r["runs"] = row.runs;
    r["solved"] = row.solved;
    r["mean_time_s"] = row.mean_time_s;
    r["mean_nodes"] = row.mean_nodes;
    r["objective"] = row.objective;
    r["vars"] = row.vars;
    r["cons"] = row.cons;
    if (!row.error.empty()) r["error"] = row.error;
    arr.push_back(r);
  }
  return j.dump(2);
}

} // namespace tspsurf
