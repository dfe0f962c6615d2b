// SPDX-License-Identifier: Apache-2.0

#include "irs/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "irs/errors.hpp"
#include "irs/kernels.hpp"

namespace irs {

double wrap_phase(double radians) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double wrapped = radians - two_pi * std::floor((radians + std::numbers::pi) / two_pi);
  if (wrapped >= std::numbers::pi) wrapped -= two_pi;
  if (wrapped < -std::numbers::pi) wrapped += two_pi;
  return wrapped + 0.0;  // no negative zero
}

std::vector<double> align_phases(const LinkGeometry& geom, double lambda_c) {
  const double wavenumber = 2.0 * std::numbers::pi / lambda_c;
  std::vector<double> phases(geom.size());
  for (std::size_t n = 0; n < geom.size(); ++n) {
    phases[n] = wrap_phase(-wavenumber * (geom.d_b[n] + geom.d_t[n]));
  }
  return phases;
}

Vec3 bisector_boresight(const Vec3& r_b, const Vec3& r_t) {
  const Vec3 sum = r_b + r_t;
  const double len = norm(sum);
  if (!(len >= kAntipodalTolerance)) {
    throw GeometryError(
        "antipodal geometry: BS and GT are diametrically opposite as seen from an element");
  }
  return sum / len;
}

BisectorSolution optimal_rotation(const LinkGeometry& geom, double q) {
  BisectorSolution sol;
  sol.boresights.reserve(geom.size());
  sol.lambda_max.reserve(geom.size());
  sol.objective_terms.reserve(geom.size());
  for (std::size_t n = 0; n < geom.size(); ++n) {
    const Vec3& r_b = geom.r_b[n];
    const Vec3& r_t = geom.r_t[n];
    const double d_b = geom.d_b[n];
    const double d_t = geom.d_t[n];
    const double one_plus_c = 1.0 + dot(r_b, r_t);
    sol.boresights.push_back(bisector_boresight(r_b, r_t));
    // d_B.d_T + |d_B||d_T| = d_B d_T (r_B.r_T + 1)
    sol.lambda_max.push_back(0.5 * d_b * d_t * one_plus_c);
    const double angular = q == 0.0 ? 1.0 : std::pow(std::max(0.0, 0.5 * one_plus_c), q);
    sol.objective_terms.push_back(angular / (d_b * d_b * d_t * d_t));
  }
  return sol;
}

double placement_objective(const Scenario& scenario, const Vec3& center) {
  return std::sqrt(chi0(scenario)) * kernels::objective(scenario, center);
}

IrsConfiguration optimal_configuration(const Scenario& scenario, const Vec3& center) {
  const LinkGeometry geom = link_geometry(scenario, center);
  IrsConfiguration config;
  config.center = center;
  config.phases = align_phases(geom, scenario.budget.lambda_c);
  config.boresights = optimal_rotation(geom, scenario.pattern.q).boresights;
  return config;
}

}  // namespace irs
