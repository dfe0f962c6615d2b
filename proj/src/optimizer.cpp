// SPDX-License-Identifier: Apache-2.0

#include "irs/optimizer.hpp"

#include <cmath>
#include <exception>
#include <random>

#include "irs/closed_form.hpp"
#include "irs/errors.hpp"
#include "irs/kernels.hpp"
#include "irs/radiation.hpp"

namespace irs {

void OptimizerParams::validate() const {
  if (!(epsilon > 0.0)) throw ValidationError("optimizer: epsilon must be positive");
  if (max_iters < 1) throw ValidationError("optimizer: max_iters must be >= 1");
  if (lipschitz_override && !(*lipschitz_override > 0.0)) {
    throw ValidationError("optimizer: Lipschitz override must be positive");
  }
}

namespace {

double lipschitz_polynomial(double q) { return 4.0 * q * q + 22.0 * q + 20.0; }

// Lipschitz constant of grad S (the objective without sqrt(chi0)).
double unscaled_lipschitz(const Scenario& scenario, double dmin) {
  return static_cast<double>(scenario.array.size()) * lipschitz_polynomial(scenario.pattern.q) /
         std::pow(dmin, 6);
}

}  // namespace

Vec3 objective_gradient(const Scenario& scenario, const Vec3& center) {
  return kernels::objective_and_gradient(scenario, center).gradient * std::sqrt(chi0(scenario));
}

double lipschitz_constant(const Scenario& scenario) {
  return std::sqrt(chi0(scenario)) * unscaled_lipschitz(scenario, compute_dmin(scenario));
}

Vec3 mm_step(const Scenario& scenario, const Vec3& center, double lipschitz) {
  if (!(lipschitz > 0.0)) throw ValidationError("optimizer: Lipschitz constant must be positive");
  return project_to_box(center + objective_gradient(scenario, center) / lipschitz,
                        scenario.airspace);
}

OptimizerReport optimize_placement(const Scenario& scenario, const OptimizerParams& params,
                                   const Vec3& start) {
  params.validate();
  // The iteration runs on S = v / sqrt(chi0) with L scaled the same way. The steps are
  // identical to the scaled ones, but the trajectory no longer depends on the link budget.
  const double scale = std::sqrt(chi0(scenario));
  const double dmin = compute_dmin(scenario);
  const double global_l = params.lipschitz_override ? *params.lipschitz_override / scale
                                                    : unscaled_lipschitz(scenario, dmin);

  OptimizerReport report;
  report.dmin_used = dmin;
  report.lipschitz_used = params.lipschitz_override ? *params.lipschitz_override : global_l * scale;

  Vec3 center = project_to_box(start, scenario.airspace);
  kernels::ObjectiveSample current = kernels::objective_and_gradient(scenario, center);
  report.trajectory.push_back({center, scale * current.value});

  double local_l = global_l;
  for (int iter = 1; iter <= params.max_iters; ++iter) {
    Vec3 next;
    if (params.backtracking) {
      double trial_l = 0.5 * local_l;
      for (;;) {
        next = project_to_box(center + current.gradient / trial_l, scenario.airspace);
        if (trial_l >= global_l || kernels::objective(scenario, next) >= current.value) break;
        trial_l = std::min(2.0 * trial_l, global_l);
      }
      local_l = trial_l;
    } else {
      next = project_to_box(center + current.gradient / global_l, scenario.airspace);
    }
    const kernels::ObjectiveSample next_sample = kernels::objective_and_gradient(scenario, next);
    const double moved = distance(next, center);
    center = next;
    current = next_sample;
    report.trajectory.push_back({center, scale * current.value});
    report.iterations = iter;
    if (moved <= params.epsilon) {
      report.converged = true;
      break;
    }
  }

  report.final_center = center;
  report.final_objective = scale * current.value;
  report.final_snr = report.final_objective * report.final_objective;

  const LinkGeometry geom = link_geometry(scenario, center);
  report.phases = align_phases(geom, scenario.budget.lambda_c);
  report.boresights = optimal_rotation(geom, scenario.pattern.q).boresights;
  return report;
}

std::vector<Vec3> multistart_points(const AirspaceBox& box, int count, unsigned long long seed) {
  std::vector<Vec3> points;
  if (count < 1) return points;
  points.push_back(box.centroid());
  for (const Vec3& corner : box.corners()) {
    if (static_cast<int>(points.size()) == count) return points;
    points.push_back(corner);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (static_cast<int>(points.size()) < count) {
    const Vec3 u{unit(rng), unit(rng), unit(rng)};
    const Vec3 ext = box.extent();
    points.push_back({box.min.x + u.x * ext.x, box.min.y + u.y * ext.y, box.min.z + u.z * ext.z});
  }
  return points;
}

OptimizerReport optimize_multistart(const Scenario& scenario, const OptimizerParams& params,
                                    int starts, unsigned long long seed) {
  if (starts < 1) throw ValidationError("optimizer: at least one start is required");
  params.validate();
  const std::vector<Vec3> points = multistart_points(scenario.airspace, starts, seed);
  std::vector<OptimizerReport> reports(points.size());
  std::exception_ptr error;
  const auto count = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      reports[i] = optimize_placement(scenario, params, points[i]);
    } catch (...) {
#pragma omp critical(irs_multistart_exception)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  std::size_t best = 0;
  for (std::size_t i = 1; i < reports.size(); ++i) {
    if (reports[i].final_objective > reports[best].final_objective) best = i;
  }
  return std::move(reports[best]);
}

}  // namespace irs
