// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "irs/optimizer.hpp"
#include "irs/scenario.hpp"
#include "irs/table.hpp"

namespace irs {

enum class SweepKind { PowerSweep, Heatmap, CaseStudy, SingleOptimize };

struct SweepSpec {
  SweepKind kind = SweepKind::SingleOptimize;
  std::vector<double> q_list{0.0, 2.0, 4.0, 6.0};
  std::vector<double> power_list_dbm{0, 5, 10, 15, 20, 25, 30, 35, 40};
  double heatmap_resolution = 2.5;
  double heatmap_y = 0.0;
  double q_num = 4.0;
  double q_den = 0.0;
  int starts = 9;
  unsigned long long seed = 0xC0FFEE;

  void validate() const;
};

/// Comma-separated list of numbers ("0,2,4,6").
std::vector<double> parse_number_list(const std::string& text);

/// Inclusive range "start:step:stop", or a comma-separated list.
std::vector<double> parse_range(const std::string& text);

/// Columns: q, p_b_dbm, snr_db, x_r, y_r, z_r. Placement is re-optimized per row.
Table run_power_sweep(const Scenario& scenario, const SweepSpec& spec,
                      const OptimizerParams& params);

/// Columns: q, x_r, y_r, z_r, fx, fy, fz, snr_db, where f is the renormalized mean of
/// the bisector boresights at the optimized center.
Table run_case_study(const Scenario& scenario, const SweepSpec& spec,
                     const OptimizerParams& params);

/// Columns: x, z, gain_db with gain_db = 10 log10(SNR(q_num) / SNR(q_den)), both with
/// aligned phases and per-cell bisector boresights, over the y = heatmap_y slice.
Table run_heatmap(const Scenario& scenario, const SweepSpec& spec);

/// Normalized gain in dB at one center. Independent of beta0, P_B and sigma2.
double normalized_gain_db(const Scenario& scenario, const Vec3& center, double q_num,
                          double q_den);

/// Multi-start optimization plus the resolved configuration, as a JSON report.
nlohmann::ordered_json run_single_optimize(const Scenario& scenario, const OptimizerParams& params,
                                           const SweepSpec& spec, OptimizerReport* out = nullptr);

/// Mean of the boresights, renormalized.
Vec3 mean_boresight(const std::vector<Vec3>& boresights);

double to_db(double ratio);

/// Oracle invariant suite for one scenario. Writes one PASS/FAIL line per check and
/// returns true when all pass.
bool run_checks(const Scenario& scenario, unsigned long long seed, std::ostream& log);

}  // namespace irs
