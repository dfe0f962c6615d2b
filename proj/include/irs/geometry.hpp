// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "irs/vec3.hpp"

namespace irs {

struct Scenario;

/// Axis-aligned feasible region for the array center.
struct AirspaceBox {
  Vec3 min;
  Vec3 max;

  /// Throws ValidationError unless min <= max component-wise and all bounds are finite.
  void validate() const;

  bool contains(const Vec3& p) const;
  Vec3 centroid() const { return (min + max) * 0.5; }
  Vec3 extent() const { return max - min; }
  AirspaceBox translated(const Vec3& offset) const { return {min + offset, max + offset}; }

  /// The eight vertices, ordered by bit pattern (bit 0 -> x, bit 1 -> y, bit 2 -> z).
  std::array<Vec3, 8> corners() const;
};

/// Uniform planar array: element counts, spacings and the fixed offsets of each
/// element from the array center.
struct ArrayGeometry {
  int nx = 1;
  int ny = 1;
  double dx = 0.0;
  double dy = 0.0;
  std::vector<Vec3> offsets;

  std::size_t size() const { return offsets.size(); }
};

/// Centered UPA offsets: element (i, j) sits at [(i - (nx-1)/2) dx, (j - (ny-1)/2) dy, 0],
/// enumerated with i outer and j inner.
ArrayGeometry build_upa_offsets(int nx, int ny, double dx, double dy);

/// Component-wise clipping onto the box.
Vec3 project_to_box(const Vec3& p, const AirspaceBox& box);

/// Euclidean distance from p to the closest point of the box (0 inside).
double point_to_box_distance(const Vec3& p, const AirspaceBox& box);

/// Smallest terminal-to-element distance achievable anywhere in the airspace.
/// Throws GeometryError when it is zero.
double compute_dmin(const Scenario& scenario);

}  // namespace irs
