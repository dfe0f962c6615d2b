// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "irs/scenario.hpp"
#include "irs/vec3.hpp"

namespace irs {

struct OptimizerParams {
  double epsilon = 1e-4;  ///< stop once an update moves the center by at most this [m]
  int max_iters = 100000;
  std::optional<double> lipschitz_override;  ///< replaces the global constant when set
  /// Halve/double a local step constant until ascent holds instead of always using
  /// the global one. Never exceeds the global constant, so ascent is still guaranteed.
  bool backtracking = false;

  void validate() const;
};

struct TrajectoryPoint {
  Vec3 center;
  double objective = 0.0;  ///< v = sqrt(SNR)
};

struct OptimizerReport {
  std::vector<TrajectoryPoint> trajectory;  ///< starts with the (projected) initial point
  Vec3 final_center;
  double final_objective = 0.0;
  double final_snr = 0.0;  ///< final_objective squared
  double lipschitz_used = 0.0;
  double dmin_used = 0.0;
  bool converged = false;
  int iterations = 0;  ///< number of updates performed
  std::vector<double> phases;   ///< aligned phase shifts at the final center
  std::vector<Vec3> boresights; ///< bisector boresights at the final center
};

/// Gradient of v(l_R) with respect to the array center.
Vec3 objective_gradient(const Scenario& scenario, const Vec3& center);

/// Global Lipschitz constant of the gradient over the airspace:
/// sqrt(chi0) N (4q^2 + 22q + 20) d_min^-6.
double lipschitz_constant(const Scenario& scenario);

/// One projected-gradient (MM) update: clip(center + grad v / L) onto the airspace.
Vec3 mm_step(const Scenario& scenario, const Vec3& center, double lipschitz);

/// Single-start placement optimization followed by the closed-form phase and
/// rotation stages at the final center.
OptimizerReport optimize_placement(const Scenario& scenario, const OptimizerParams& params,
                                   const Vec3& start);

/// Default start set: centroid, then the eight corners, then seeded uniform points.
std::vector<Vec3> multistart_points(const AirspaceBox& box, int count, unsigned long long seed);

/// Runs every start (concurrently when OpenMP is available) and keeps the best final
/// objective; ties go to the lowest start index.
OptimizerReport optimize_multistart(const Scenario& scenario, const OptimizerParams& params,
                                    int starts = 9, unsigned long long seed = 0xC0FFEE);

}  // namespace irs
