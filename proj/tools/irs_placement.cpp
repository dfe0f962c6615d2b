// SPDX-License-Identifier: Apache-2.0

// Command-line front end: optimize, sweep-power, case-study, heatmap, check.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "irs/errors.hpp"
#include "irs/experiments.hpp"
#include "irs/oracle.hpp"
#include "irs/scenario_io.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kValidation = 3,
  kGeometry = 4,
  kNotConverged = 5,
  kCheckFailed = 6,
  kInternal = 7,
};

struct Options {
  std::string scenario_path;
  std::optional<double> q;
  double eps = 1e-4;
  int max_iters = 100000;
  int starts = 9;
  bool backtracking = false;
  std::optional<double> lipschitz;
  std::string out;
  std::string q_list = "0,2,4,6";
  std::string power_range = "0:5:40";
  double q_num = 4.0;
  double q_den = 0.0;
  double res = 2.5;
  double y = 0.0;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw irs::Error("cannot write " + path);
  out << text;
}

void emit(irs::Table table, const std::string& command, const irs::Scenario& scenario,
          const irs::SweepSpec& spec, const Options& opt) {
  table.provenance.push_back("irs-placement " + command);
  table.provenance.push_back("scenario: " + irs::scenario_to_json(scenario).dump());
  nlohmann::ordered_json run;
  run["q_list"] = spec.q_list;
  run["p_b_dbm_list"] = spec.power_list_dbm;
  run["q_num"] = spec.q_num;
  run["q_den"] = spec.q_den;
  run["resolution"] = spec.heatmap_resolution;
  run["y"] = spec.heatmap_y;
  run["epsilon"] = opt.eps;
  run["max_iters"] = opt.max_iters;
  run["starts"] = spec.starts;
  run["backtracking"] = opt.backtracking;
  run["seed"] = spec.seed;
  table.provenance.push_back("run: " + run.dump());
  std::ostringstream text;
  table.write_csv(text);
  write_text(opt.out, text.str());
}

irs::OptimizerParams optimizer_params(const Options& opt) {
  irs::OptimizerParams p;
  p.epsilon = opt.eps;
  p.max_iters = opt.max_iters;
  p.backtracking = opt.backtracking;
  p.lipschitz_override = opt.lipschitz;
  return p;
}

irs::SweepSpec sweep_spec(const Options& opt, irs::SweepKind kind) {
  irs::SweepSpec spec;
  spec.kind = kind;
  spec.q_list = irs::parse_number_list(opt.q_list);
  spec.power_list_dbm = irs::parse_range(opt.power_range);
  spec.q_num = opt.q_num;
  spec.q_den = opt.q_den;
  spec.heatmap_resolution = opt.res;
  spec.heatmap_y = opt.y;
  spec.starts = opt.starts;
  spec.seed = irs::oracle::seed_from_env();
  spec.validate();
  return spec;
}

void add_optimizer_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--eps", opt.eps, "stop tolerance on iterate movement [m]");
  cmd->add_option("--max-iters", opt.max_iters, "iteration cap per start");
  cmd->add_option("--starts", opt.starts, "number of starts (centroid, corners, then random)");
  cmd->add_option("--lipschitz", opt.lipschitz, "override the global Lipschitz constant");
  cmd->add_flag("--backtracking", opt.backtracking, "adaptive step constant (capped at the global one)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UAV-mounted rotatable IRS placement and rotation optimizer"};
  app.require_subcommand(1);
  Options opt;

  auto* optimize = app.add_subcommand("optimize", "multi-start placement optimization, JSON report");
  optimize->add_option("scenario", opt.scenario_path)->required();
  optimize->add_option("--q", opt.q, "override the scenario directivity");
  optimize->add_option("--out", opt.out, "report path (default stdout)");
  add_optimizer_flags(optimize, opt);

  auto* sweep = app.add_subcommand("sweep-power", "optimized SNR versus BS transmit power");
  sweep->add_option("scenario", opt.scenario_path)->required();
  sweep->add_option("--q", opt.q_list, "comma-separated directivity factors");
  sweep->add_option("--pbm-dbm,--pb-dbm", opt.power_range, "powers as start:step:stop or a list [dBm]");
  sweep->add_option("--out", opt.out, "CSV path (default stdout)");
  add_optimizer_flags(sweep, opt);

  auto* case_study = app.add_subcommand("case-study", "optimized center and mean boresight per q");
  case_study->add_option("scenario", opt.scenario_path)->required();
  case_study->add_option("--q", opt.q_list, "comma-separated directivity factors");
  case_study->add_option("--out", opt.out, "CSV path (default stdout)");
  add_optimizer_flags(case_study, opt);

  auto* heatmap = app.add_subcommand("heatmap", "normalized gain over an airspace slice");
  heatmap->add_option("scenario", opt.scenario_path)->required();
  heatmap->add_option("--q-num", opt.q_num, "numerator directivity");
  heatmap->add_option("--q-den", opt.q_den, "denominator directivity");
  heatmap->add_option("--res", opt.res, "lattice spacing [m]");
  heatmap->add_option("--y", opt.y, "y coordinate of the slice [m]");
  heatmap->add_option("--out", opt.out, "CSV path (default stdout)");

  auto* check = app.add_subcommand("check", "run the oracle invariant suite on a scenario");
  check->add_option("scenario", opt.scenario_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    irs::Scenario scenario = irs::load_scenario(opt.scenario_path);

    if (*optimize) {
      if (opt.q) scenario = scenario.with_directivity(*opt.q);
      const irs::SweepSpec spec = sweep_spec(opt, irs::SweepKind::SingleOptimize);
      irs::OptimizerReport report;
      const auto json = irs::run_single_optimize(scenario, optimizer_params(opt), spec, &report);
      write_text(opt.out, json.dump(2) + "\n");
      return report.converged ? kOk : kNotConverged;
    }
    if (*sweep) {
      const irs::SweepSpec spec = sweep_spec(opt, irs::SweepKind::PowerSweep);
      emit(irs::run_power_sweep(scenario, spec, optimizer_params(opt)), "sweep-power", scenario,
           spec, opt);
      return kOk;
    }
    if (*case_study) {
      const irs::SweepSpec spec = sweep_spec(opt, irs::SweepKind::CaseStudy);
      emit(irs::run_case_study(scenario, spec, optimizer_params(opt)), "case-study", scenario,
           spec, opt);
      return kOk;
    }
    if (*heatmap) {
      const irs::SweepSpec spec = sweep_spec(opt, irs::SweepKind::Heatmap);
      emit(irs::run_heatmap(scenario, spec), "heatmap", scenario, spec, opt);
      return kOk;
    }
    if (*check) {
      return irs::run_checks(scenario, irs::oracle::seed_from_env(), std::cout) ? kOk
                                                                                 : kCheckFailed;
    }
  } catch (const irs::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const irs::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const irs::GeometryError& e) {
    std::cerr << "geometry error: " << e.what() << '\n';
    return kGeometry;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
