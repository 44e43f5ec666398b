#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tspsurf/config.hpp"
#include "tspsurf/oracles.hpp"
#include "tspsurf/pipeline.hpp"
#include "tspsurf/svg.hpp"

using namespace tspsurf;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw TspError(ErrorCode::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

CompareCombo parse_combo(const std::string& text) {
  // model:tree:complex, e.g. "surface-planar:flow:delaunay"
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 3)
    throw TspError(ErrorCode::InvalidArgument,
                   "combo must be model:tree:complex, got " + text);
  CompareCombo combo;
  combo.model = model_kind_from_name(parts[0]);
  combo.tree = parts[1] == "mtz" ? TreeVariant::MTZ : TreeVariant::FLOW;
  combo.complex_choice = parts[2];
  for (size_t i = 3; i < parts.size(); ++i)
    combo.complex_choice += ":" + parts[i]; // custom:<path> case
  return combo;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surface-based MILP formulation of the symmetric TSP"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key=value config file");

  // --- solve ---
  auto* solve_cmd = app.add_subcommand("solve", "solve one instance");
  RunConfig rc;
  std::string model_name = "surface";
  std::string tree_name = "flow";
  double reference = -1.0;
  double time_limit = -1.0;
  solve_cmd->add_option("--instance", rc.instance, "path or gen:spec")
      ->required();
  solve_cmd->add_option("--complex", rc.complex_choice,
                        "complete|delaunay|greedy|custom:<path>");
  solve_cmd->add_option("--model", model_name,
                        "surface|surface-planar|mtz-baseline");
  solve_cmd->add_option("--tree", tree_name, "flow|mtz");
  solve_cmd->add_option("--backend", rc.backend, "scipy|highs|auto");
  solve_cmd->add_option("--time-limit", time_limit, "seconds");
  solve_cmd->add_option("--seed", rc.seed, "backend random seed");
  solve_cmd->add_option("--out", rc.out_dir, "output directory");
  solve_cmd->add_option("--reference", reference, "known optimum for gap");
  solve_cmd->add_flag("--emit-lp", rc.emit_lp, "also write LP + decode map");
  solve_cmd->add_option("--cap", rc.complex_cap, "complete-complex cap");

  // --- compare ---
  auto* cmp_cmd = app.add_subcommand("compare", "multi-run comparison table");
  std::string cmp_instance;
  std::vector<std::string> combo_texts;
  int runs = 10;
  int jobs = 0;
  std::string cmp_backend = "auto";
  double cmp_time_limit = -1.0;
  std::string cmp_out;
  std::size_t cmp_cap = kDefaultComplexCap;
  cmp_cmd->add_option("--instance", cmp_instance, "path or gen:spec")
      ->required();
  cmp_cmd->add_option("--combo", combo_texts, "model:tree:complex (repeat)")
      ->required();
  cmp_cmd->add_option("--runs", runs, "runs per combo (default 10)");
  cmp_cmd->add_option("--jobs", jobs, "concurrent backend processes");
  cmp_cmd->add_option("--backend", cmp_backend, "backend id");
  cmp_cmd->add_option("--time-limit", cmp_time_limit, "seconds per run");
  cmp_cmd->add_option("--out", cmp_out, "write JSON table here");
  cmp_cmd->add_option("--cap", cmp_cap, "complete-complex cap");

  // --- plot ---
  auto* plot_cmd = app.add_subcommand("plot", "render an SVG figure");
  std::string plot_instance, plot_complex, plot_report, plot_out = "figure.svg";
  plot_cmd->add_option("--instance", plot_instance, "path or gen:spec")
      ->required();
  plot_cmd->add_option("--complex", plot_complex,
                       "complete|delaunay|greedy|custom:<path>");
  plot_cmd->add_option("--report", plot_report, "run report JSON");
  plot_cmd->add_option("--out", plot_out, "output SVG path");

  // --- validate ---
  auto* val_cmd = app.add_subcommand("validate", "re-verify a saved run");
  std::string val_report, val_complex;
  val_cmd->add_option("--report", val_report, "run report JSON")->required();
  val_cmd->add_option("--complex", val_complex, "complex JSON")->required();

  // --- gen ---
  auto* gen_cmd = app.add_subcommand("gen", "write a generated instance");
  std::string gen_spec, gen_out;
  gen_cmd->add_option("--spec", gen_spec, "gen:... spec")->required();
  gen_cmd->add_option("--out", gen_out, "output .tsp path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    Config cfg;
    if (!config_path.empty()) cfg = Config::load(config_path);
    if (!cfg.backend_driver.empty())
      setenv("TSPSURF_BACKEND_DRIVER", cfg.backend_driver.c_str(), 0);

    if (*solve_cmd) {
      rc.model = model_kind_from_name(model_name);
      rc.tree = tree_name == "mtz" ? TreeVariant::MTZ : TreeVariant::FLOW;
      if (reference > 0) rc.reference = reference;
      rc.limits.time_limit_s =
          time_limit > 0 ? time_limit : cfg.time_limit_s;
      if (rc.backend == "auto") rc.backend = cfg.backend;
      if (rc.out_dir.empty()) rc.out_dir = cfg.out_dir;
      RunReport rep = run_solve(rc);
      std::cout << "status: " << solve_status_name(rep.status) << "\n";
      if (rep.status == SolveStatus::OPTIMAL ||
          rep.status == SolveStatus::FEASIBLE) {
        std::cout << "objective: " << rep.objective << "\n";
        if (rep.tour)
          std::cout << format_tour_line(rep.instance, *rep.tour) << "\n";
        if (rep.verification)
          std::cout << "surface valid: "
                    << (rep.verification->valid() ? "yes" : "no") << "\n";
        if (rep.gap) std::cout << "gap: " << *rep.gap << "%\n";
      }
      if (!rep.message.empty()) std::cout << rep.message << "\n";
      return rep.exit_code();
    }

    if (*cmp_cmd) {
      std::vector<CompareCombo> combos;
      for (const auto& text : combo_texts) combos.push_back(parse_combo(text));
      SolveLimits limits;
      limits.time_limit_s =
          cmp_time_limit > 0 ? cmp_time_limit : cfg.time_limit_s;
      int effective_jobs = jobs > 0 ? jobs : cfg.jobs;
      CompareResult res = run_compare(cmp_instance, combos, runs, limits,
                                      cmp_backend == "auto" ? cfg.backend
                                                            : cmp_backend,
                                      effective_jobs, cmp_cap);
      std::cout << res.to_text();
      if (!cmp_out.empty()) {
        std::ofstream f(cmp_out);
        f << res.to_json() << "\n";
      }
      return 0;
    }

    if (*plot_cmd) {
      TspInstance inst = load_instance(plot_instance);
      std::optional<TriangleSet> ts;
      if (!plot_complex.empty())
        ts = build_complex(inst, plot_complex, cfg.complex_cap);
      std::optional<RunReport> rep;
      if (!plot_report.empty())
        rep = RunReport::from_json(slurp(plot_report));
      std::string svg = render_svg(inst, ts ? &*ts : nullptr,
                                   rep ? &*rep : nullptr);
      std::ofstream f(plot_out);
      f << svg;
      std::cout << "wrote " << plot_out << "\n";
      return 0;
    }

    if (*val_cmd) {
      RunReport rep = RunReport::from_json(slurp(val_report));
      TriangleSet ts = triangle_set_from_json(slurp(val_complex));
      if (rep.n > ts.n) ts.n = rep.n;
      std::vector<int> selected;
      for (const auto& t : rep.selected_triangles) {
        auto it = std::lower_bound(ts.triangles.begin(), ts.triangles.end(), t);
        if (it == ts.triangles.end() || !(*it == t)) {
          std::cerr << "selected triangle (" << t.a << "," << t.b << "," << t.c
                    << ") not in complex\n";
          return 1;
        }
        selected.push_back(static_cast<int>(it - ts.triangles.begin()));
      }
      Surface s = make_surface(ts, selected);
      VerificationReport ver = verify_surface(s);
      std::cout << ver.to_json() << "\n";
      if (!ver.valid()) {
        for (int v = 0; v < static_cast<int>(ver.chi.size()); ++v)
          if (ver.chi[v] != 1)
            std::cout << "chi(" << v << ") = " << ver.chi[v] << "\n";
        return 1;
      }
      return 0;
    }

    if (*gen_cmd) {
      TspInstance inst = load_instance(gen_spec);
      std::ofstream f(gen_out);
      f << write_tsplib(inst);
      std::cout << "wrote " << gen_out << " (n=" << inst.n << ")\n";
      return 0;
    }
  } catch (const TspError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
