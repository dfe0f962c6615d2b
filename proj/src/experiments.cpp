// SPDX-License-Identifier: Apache-2.0

#include "irs/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "irs/closed_form.hpp"
#include "irs/errors.hpp"
#include "irs/kernels.hpp"
#include "irs/oracle.hpp"
#include "irs/radiation.hpp"
#include "irs/scenario_io.hpp"

namespace irs {

void SweepSpec::validate() const {
  if (q_list.empty()) throw ValidationError("sweep: q list must be nonempty");
  if (power_list_dbm.empty()) throw ValidationError("sweep: power list must be nonempty");
  for (double q : q_list) {
    if (!(q >= 0.0)) throw ValidationError("sweep: q values must be >= 0");
  }
  if (!(q_num >= 0.0) || !(q_den >= 0.0)) throw ValidationError("sweep: q values must be >= 0");
  if (!(heatmap_resolution > 0.0)) throw ValidationError("sweep: resolution must be positive");
  if (starts < 1) throw ValidationError("sweep: starts must be >= 1");
}

namespace {

double parse_double(std::string_view token, const std::string& context) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  double value = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || res.ec != std::errc{} || res.ptr != token.data() + token.size() ||
      !std::isfinite(value)) {
    throw ValidationError(context + ": not a number: \"" + std::string(token) + "\"");
  }
  return value;
}

nlohmann::ordered_json vec_json(const Vec3& v) {
  return nlohmann::ordered_json::array({round_sig9(v.x), round_sig9(v.y), round_sig9(v.z)});
}

nlohmann::ordered_json params_json(const OptimizerParams& p, const SweepSpec& spec) {
  nlohmann::ordered_json j;
  j["epsilon"] = p.epsilon;
  j["max_iters"] = p.max_iters;
  j["lipschitz_override"] =
      p.lipschitz_override ? nlohmann::ordered_json(*p.lipschitz_override) : nullptr;
  j["backtracking"] = p.backtracking;
  j["starts"] = spec.starts;
  j["seed"] = spec.seed;
  return j;
}

Vec3 random_point(const AirspaceBox& box, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Vec3 ext = box.extent();
  const double ux = unit(rng);
  const double uy = unit(rng);
  const double uz = unit(rng);
  return {box.min.x + ux * ext.x, box.min.y + uy * ext.y, box.min.z + uz * ext.z};
}

}  // namespace

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::string_view rest = text;
  for (;;) {
    const auto comma = rest.find(',');
    out.push_back(parse_double(rest.substr(0, comma), "list"));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<double> parse_range(const std::string& text) {
  if (text.find(':') == std::string::npos) return parse_number_list(text);
  std::vector<double> parts;
  std::string_view rest = text;
  for (;;) {
    const auto colon = rest.find(':');
    parts.push_back(parse_double(rest.substr(0, colon), "range"));
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  if (parts.size() != 3) throw ValidationError("range: expected start:step:stop");
  const double start = parts[0];
  const double step = parts[1];
  const double stop = parts[2];
  if (!(step > 0.0) || stop < start) throw ValidationError("range: need step > 0 and stop >= start");
  std::vector<double> out;
  const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
  for (long long i = 0; i <= count; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

double to_db(double ratio) { return 10.0 * std::log10(ratio); }

Vec3 mean_boresight(const std::vector<Vec3>& boresights) {
  Vec3 sum;
  for (const Vec3& f : boresights) sum += f;
  return normalized(sum);
}

Table run_power_sweep(const Scenario& scenario, const SweepSpec& spec,
                      const OptimizerParams& params) {
  spec.validate();
  Table table;
  table.columns = {"q", "p_b_dbm", "snr_db", "x_r", "y_r", "z_r"};
  for (double q : spec.q_list) {
    for (double p_dbm : spec.power_list_dbm) {
      const Scenario s = scenario.with_directivity(q).with_power_dbm(p_dbm);
      const OptimizerReport rep = optimize_multistart(s, params, spec.starts, spec.seed);
      table.rows.push_back({q, p_dbm, to_db(rep.final_snr), rep.final_center.x,
                            rep.final_center.y, rep.final_center.z});
    }
  }
  return table;
}

Table run_case_study(const Scenario& scenario, const SweepSpec& spec,
                     const OptimizerParams& params) {
  spec.validate();
  Table table;
  table.columns = {"q", "x_r", "y_r", "z_r", "fx", "fy", "fz", "snr_db"};
  for (double q : spec.q_list) {
    const Scenario s = scenario.with_directivity(q);
    const OptimizerReport rep = optimize_multistart(s, params, spec.starts, spec.seed);
    const Vec3 f = mean_boresight(rep.boresights);
    table.rows.push_back({q, rep.final_center.x, rep.final_center.y, rep.final_center.z, f.x, f.y,
                          f.z, to_db(rep.final_snr)});
  }
  return table;
}

double normalized_gain_db(const Scenario& scenario, const Vec3& center, double q_num,
                          double q_den) {
  // SNR = chi0 S^2 with chi0 proportional to g0^2, so the ratio only involves g0 and S.
  const Scenario num = scenario.with_directivity(q_num);
  const Scenario den = scenario.with_directivity(q_den);
  return 20.0 * std::log10(num.pattern.g0 / den.pattern.g0) +
         20.0 * std::log10(kernels::objective(num, center) / kernels::objective(den, center));
}

Table run_heatmap(const Scenario& scenario, const SweepSpec& spec) {
  spec.validate();
  const AirspaceBox& box = scenario.airspace;
  if (spec.heatmap_y < box.min.y || spec.heatmap_y > box.max.y) {
    throw ValidationError("heatmap: y slice lies outside the airspace");
  }
  const auto xs = oracle::lattice_axis(box.min.x, box.max.x, spec.heatmap_resolution);
  const auto zs = oracle::lattice_axis(box.min.z, box.max.z, spec.heatmap_resolution);
  std::vector<Vec3> cells;
  cells.reserve(xs.size() * zs.size());
  for (double x : xs) {
    for (double z : zs) cells.push_back({x, spec.heatmap_y, z});
  }
  const Scenario num = scenario.with_directivity(spec.q_num);
  const Scenario den = scenario.with_directivity(spec.q_den);
  const std::vector<double> s_num = kernels::objective_at(num, cells);
  const std::vector<double> s_den = kernels::objective_at(den, cells);
  const double g0_db = 20.0 * std::log10(num.pattern.g0 / den.pattern.g0);

  Table table;
  table.columns = {"x", "z", "gain_db"};
  for (std::size_t i = 0; i < cells.size(); ++i) {
    table.rows.push_back({cells[i].x, cells[i].z, g0_db + 20.0 * std::log10(s_num[i] / s_den[i])});
  }
  return table;
}

nlohmann::ordered_json run_single_optimize(const Scenario& scenario, const OptimizerParams& params,
                                           const SweepSpec& spec, OptimizerReport* out) {
  spec.validate();
  OptimizerReport rep = optimize_multistart(scenario, params, spec.starts, spec.seed);
  nlohmann::ordered_json j;
  j["scenario"] = scenario_to_json(scenario);
  j["params"] = params_json(params, spec);
  j["converged"] = rep.converged;
  j["iterations"] = rep.iterations;
  j["final_center"] = vec_json(rep.final_center);
  j["final_objective"] = round_sig9(rep.final_objective);
  j["final_snr"] = round_sig9(rep.final_snr);
  j["final_snr_db"] = round_sig9(to_db(rep.final_snr));
  j["lipschitz_used"] = round_sig9(rep.lipschitz_used);
  j["dmin_used"] = round_sig9(rep.dmin_used);
  auto& traj = j["trajectory"] = nlohmann::ordered_json::array();
  for (const TrajectoryPoint& p : rep.trajectory) {
    traj.push_back({round_sig9(p.center.x), round_sig9(p.center.y), round_sig9(p.center.z),
                    round_sig9(p.objective)});
  }
  auto& phases = j["phases"] = nlohmann::ordered_json::array();
  for (double ph : rep.phases) phases.push_back(round_sig9(ph));
  auto& bores = j["boresights"] = nlohmann::ordered_json::array();
  for (const Vec3& f : rep.boresights) bores.push_back(vec_json(f));
  if (out != nullptr) *out = std::move(rep);
  return j;
}

bool run_checks(const Scenario& scenario, unsigned long long seed, std::ostream& log) {
  std::mt19937_64 rng(seed);
  bool all_ok = true;
  auto report = [&](bool ok, const std::string& name, const std::string& detail) {
    log << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    all_ok = all_ok && ok;
  };
  auto fmt = [](double v) { return format_sig9(v); };
  const double q = scenario.pattern.q;

  {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Vec3 c = random_point(scenario.airspace, rng);
      const Vec3 g = objective_gradient(scenario, c);
      const Vec3 fd = oracle::fd_gradient(scenario, c, 1e-4);
      worst = std::max(worst, norm(g - fd) / norm(g));
    }
    report(worst < 1e-5, "gradient-vs-finite-differences", "max rel err " + fmt(worst));
  }
  {
    double worst_val = 0.0;
    double worst_ang = 0.0;
    for (int i = 0; i < 20; ++i) {
      const LinkGeometry geom = link_geometry(scenario, random_point(scenario.airspace, rng));
      const BisectorSolution sol = optimal_rotation(geom, q);
      for (std::size_t n = 0; n < geom.size(); n += std::max<std::size_t>(1, geom.size() / 16)) {
        const auto eig =
            oracle::dense_eigs_3x3(oracle::symmetric_outer(geom.r_b[n] * geom.d_b[n], geom.r_t[n] * geom.d_t[n]));
        worst_val = std::max(worst_val, std::abs(eig.values[0] - sol.lambda_max[n]) / sol.lambda_max[n]);
        const double ang = angle_between(sol.boresights[n], eig.vectors[0]);
        worst_ang = std::max(worst_ang, std::min(ang, std::numbers::pi - ang));
      }
    }
    report(worst_val < 1e-9 && worst_ang < 1e-6, "bisector-vs-eigensolver",
           "max rel eig err " + fmt(worst_val) + ", max angle " + fmt(worst_ang));
  }
  {
    int violations = 0;
    for (int i = 0; i < 20; ++i) {
      const LinkGeometry geom = link_geometry(scenario, random_point(scenario.airspace, rng));
      const BisectorSolution sol = optimal_rotation(geom, q);
      const std::size_t n = rng() % geom.size();
      const ElementLink link = geom.element(n);
      for (int k = 0; k < 1000; ++k) {
        const Vec3 f = oracle::random_unit_vector(rng);
        if (oracle::product_gain_term(f, link, q) > sol.objective_terms[n] * (1.0 + 1e-12)) {
          ++violations;
        }
      }
    }
    report(violations == 0, "rotation-optimality", std::to_string(violations) + " violations");
  }
  {
    const double lip = lipschitz_constant(scenario);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Vec3 c = random_point(scenario.airspace, rng);
      worst = std::max(worst, oracle::spectral_norm_symmetric(oracle::fd_hessian(scenario, c, 1e-3)));
    }
    report(worst <= lip, "lipschitz-bound", "max |H| " + fmt(worst) + " <= L " + fmt(lip));
  }
  {
    OptimizerParams params;
    params.max_iters = 2000;
    int drops = 0;
    for (const Vec3& start : multistart_points(scenario.airspace, 9, seed)) {
      const OptimizerReport rep = optimize_placement(scenario, params, start);
      for (std::size_t t = 1; t < rep.trajectory.size(); ++t) {
        const double prev = rep.trajectory[t - 1].objective;
        if (rep.trajectory[t].objective < prev - 1e-12 * std::abs(prev)) ++drops;
      }
    }
    report(drops == 0, "mm-monotone-ascent", std::to_string(drops) + " decreasing steps");
  }
  {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Vec3 c = random_point(scenario.airspace, rng);
      const double v = placement_objective(scenario, c);
      const double g = snr(scenario, optimal_configuration(scenario, c));
      worst = std::max(worst, std::abs(g - v * v) / (v * v));
    }
    report(worst < 1e-10, "aligned-snr-matches-objective", "max rel err " + fmt(worst));
  }
  {
    constexpr int kSamples = 10'000'000;
    const PatternParams pattern = scenario.pattern;
    const Vec3 boresight{0.0, 0.0, -1.0};
    double acc = 0.0;
    for (int i = 0; i < kSamples; ++i) acc += element_gain(boresight, oracle::random_unit_vector(rng), pattern);
    const double integral = 4.0 * std::numbers::pi * acc / kSamples;
    const double rel = std::abs(integral - 4.0 * std::numbers::pi) / (4.0 * std::numbers::pi);
    report(rel < 5e-3, "pattern-normalization", "integral/4pi - 1 = " + fmt(rel));
  }
  return all_ok;
}

}  // namespace irs
