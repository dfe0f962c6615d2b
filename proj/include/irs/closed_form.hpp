// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "irs/radiation.hpp"
#include "irs/scenario.hpp"
#include "irs/vec3.hpp"

namespace irs {

/// Optimal per-element boresights (internal angular bisectors) with the
/// quantities the rotation subproblem produces along the way.
struct BisectorSolution {
  std::vector<Vec3> boresights;
  /// Largest eigenvalue of D_n = (d_B d_T^T + d_T d_B^T) / 2, i.e. (d_B.d_T + |d_B||d_T|) / 2.
  std::vector<double> lambda_max;
  /// (r_B.r_T + 1)^q / (2^q d_B^2 d_T^2), the per-element summands of the reduced objective.
  std::vector<double> objective_terms;
};

/// Wraps an angle into [-pi, pi).
double wrap_phase(double radians);

/// Phase shifts that cancel each element's total propagation phase,
/// -(2 pi / lambda_c)(d_B + d_T) wrapped into [-pi, pi).
std::vector<double> align_phases(const LinkGeometry& geom, double lambda_c);

/// Tolerance on |r_B + r_T| below which the two links are treated as antipodal.
inline constexpr double kAntipodalTolerance = 1e-9;

/// Bisector boresight for a single element. Throws GeometryError for antipodal links.
Vec3 bisector_boresight(const Vec3& r_b, const Vec3& r_t);

/// Closed-form optimal rotation for every element.
BisectorSolution optimal_rotation(const LinkGeometry& geom, double q);

/// Reduced placement objective v(l_R) = sqrt(chi0) * sum_n (r_B.r_T + 1)^q / (2^q d_B^2 d_T^2),
/// the square root of the SNR once phases and rotations are optimal.
double placement_objective(const Scenario& scenario, const Vec3& center);

/// Fully optimal configuration (aligned phases, bisector boresights) at a center.
IrsConfiguration optimal_configuration(const Scenario& scenario, const Vec3& center);

}  // namespace irs
