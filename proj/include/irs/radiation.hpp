// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>
#include <span>
#include <vector>

#include "irs/scenario.hpp"
#include "irs/vec3.hpp"

namespace irs {

/// Distance and unit direction from one element to both terminals.
struct ElementLink {
  double d_b = 0.0;
  double d_t = 0.0;
  Vec3 r_b;  ///< (l_B - l_n) / d_b
  Vec3 r_t;  ///< (l_T - l_n) / d_t
};

/// Per-element link geometry for a given array center, in element order.
struct LinkGeometry {
  std::vector<double> d_b;
  std::vector<double> d_t;
  std::vector<Vec3> r_b;
  std::vector<Vec3> r_t;

  std::size_t size() const { return d_b.size(); }
  ElementLink element(std::size_t n) const { return {d_b[n], d_t[n], r_b[n], r_t[n]}; }
};

/// Minimum terminal-to-element distance accepted anywhere in the model [m].
inline constexpr double kMinLinkDistance = 1e-9;

/// Element-to-terminal link for one element position. Throws GeometryError on a
/// zero-length link.
ElementLink element_link(const Vec3& bs, const Vec3& gt, const Vec3& element_pos);

LinkGeometry link_geometry(const Scenario& scenario, const Vec3& center);

/// Full array configuration: center, per-element phase shifts, per-element boresights.
struct IrsConfiguration {
  Vec3 center;
  std::vector<double> phases;   ///< radians in [-pi, pi)
  std::vector<Vec3> boresights; ///< unit vectors
  double tilt_max = std::numbers::pi / 2;

  /// Checks unit boresights and, when tilt_max < pi/2, that each boresight is tilted at
  /// most tilt_max away from the down-tilted normal [0, 0, -1].
  void validate(std::size_t element_count) const;
};

/// [x]_+^p with the convention [x]_+^0 = 1 for x >= 0 and 0 for x < 0.
double positive_power(double x, double p);

/// Element power gain g0 (f.r)^(2q) when f.r >= 0, else 0.
double element_gain(const Vec3& f, const Vec3& r, const PatternParams& pattern);

/// Received SNR evaluated as the complex phasor sum over elements.
double snr(const Scenario& scenario, const IrsConfiguration& config);

/// SNR once phases are aligned; all per-element phasors are real and nonnegative.
double snr_given_optimal_phase(const Scenario& scenario, const Vec3& center,
                               std::span<const Vec3> boresights);

}  // namespace irs
