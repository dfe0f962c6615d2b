// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>

#include "irs/geometry.hpp"
#include "irs/scenario.hpp"

namespace irs::testing {

/// BS at the origin, GT at [x_t, 0, 0], airspace x in [-25, 75], y in [-10, 10], z in [25, 50],
/// nx-by-nx array at half-wavelength spacing, 30 dBm.
inline Scenario relay_scenario(double q, int nx = 20, double x_t = 25.0) {
  Scenario s;
  s.bs = {0.0, 0.0, 0.0};
  s.gt = {x_t, 0.0, 0.0};
  s.airspace = {{-25.0, -10.0, 25.0}, {75.0, 10.0, 50.0}};
  s.array = build_upa_offsets(nx, nx, 0.025, 0.025);
  s.pattern = PatternParams::with_directivity(q);
  s.budget = LinkBudget{};
  return s;
}

inline Vec3 uniform_in(const AirspaceBox& box, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Vec3 ext = box.extent();
  const double ux = unit(rng);
  const double uy = unit(rng);
  const double uz = unit(rng);
  return {box.min.x + ux * ext.x, box.min.y + uy * ext.y, box.min.z + uz * ext.z};
}

/// Random relay scenario: random ground GT, random small array, random box above the ground.
inline Scenario random_scenario(std::mt19937_64& rng, double q) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Scenario s;
  s.bs = {0.0, 0.0, 0.0};
  s.gt = {10.0 + 140.0 * u(rng), -20.0 + 40.0 * u(rng), 0.0};
  const double x0 = -30.0 + 60.0 * u(rng);
  const double y0 = -15.0 + 15.0 * u(rng);
  const double z0 = 10.0 + 30.0 * u(rng);
  s.airspace = {{x0, y0, z0}, {x0 + 20.0 + 80.0 * u(rng), y0 + 5.0 + 20.0 * u(rng),
                               z0 + 5.0 + 30.0 * u(rng)}};
  const int nx = 1 + static_cast<int>(rng() % 6);
  const int ny = 1 + static_cast<int>(rng() % 6);
  s.array = build_upa_offsets(nx, ny, 0.025, 0.025);
  s.pattern = PatternParams::with_directivity(q);
  return s;
}

}  // namespace irs::testing
