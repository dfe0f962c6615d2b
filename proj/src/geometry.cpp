// SPDX-License-Identifier: Apache-2.0

#include "irs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "irs/errors.hpp"
#include "irs/scenario.hpp"

namespace irs {

void AirspaceBox::validate() const {
  if (!is_finite(min) || !is_finite(max)) {
    throw ValidationError("airspace: bounds must be finite");
  }
  for (int axis = 0; axis < 3; ++axis) {
    if (min[axis] > max[axis]) {
      std::ostringstream msg;
      msg << "airspace: min." << "xyz"[axis] << " = " << min[axis] << " exceeds max."
          << "xyz"[axis] << " = " << max[axis];
      throw ValidationError(msg.str());
    }
  }
}

bool AirspaceBox::contains(const Vec3& p) const {
  for (int axis = 0; axis < 3; ++axis) {
    if (p[axis] < min[axis] || p[axis] > max[axis]) return false;
  }
  return true;
}

std::array<Vec3, 8> AirspaceBox::corners() const {
  std::array<Vec3, 8> out;
  for (int bits = 0; bits < 8; ++bits) {
    out[bits] = {(bits & 1) ? max.x : min.x, (bits & 2) ? max.y : min.y,
                 (bits & 4) ? max.z : min.z};
  }
  return out;
}

ArrayGeometry build_upa_offsets(int nx, int ny, double dx, double dy) {
  if (nx < 1 || ny < 1) throw ValidationError("array: nx and ny must be >= 1");
  if (!(dx > 0.0) || !(dy > 0.0) || !std::isfinite(dx) || !std::isfinite(dy)) {
    throw ValidationError("array: spacings dx and dy must be positive");
  }
  ArrayGeometry geom{nx, ny, dx, dy, {}};
  geom.offsets.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  const double cx = 0.5 * (nx - 1);
  const double cy = 0.5 * (ny - 1);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      geom.offsets.push_back({(i - cx) * dx, (j - cy) * dy, 0.0});
    }
  }
  return geom;
}

Vec3 project_to_box(const Vec3& p, const AirspaceBox& box) {
  return {std::clamp(p.x, box.min.x, box.max.x), std::clamp(p.y, box.min.y, box.max.y),
          std::clamp(p.z, box.min.z, box.max.z)};
}

double point_to_box_distance(const Vec3& p, const AirspaceBox& box) {
  return distance(p, project_to_box(p, box));
}

double compute_dmin(const Scenario& scenario) {
  // Translating the box by an offset is the same as translating the terminal by its negative.
  double best = std::numeric_limits<double>::infinity();
  for (const Vec3& offset : scenario.array.offsets) {
    best = std::min(best, point_to_box_distance(scenario.bs - offset, scenario.airspace));
    best = std::min(best, point_to_box_distance(scenario.gt - offset, scenario.airspace));
  }
  if (!(best > 0.0)) {
    throw GeometryError(
        "degenerate geometry: an array element can reach the BS or GT inside the airspace "
        "(d_min = 0)");
  }
  return best;
}

}  // namespace irs
