// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "irs/kernels.hpp"
#include "irs/radiation.hpp"

namespace irs::kernels {

ObjectiveSample element_term(const Vec3& bs, const Vec3& gt, const Vec3& element_pos, double q,
                             bool with_gradient) {
  const ElementLink link = element_link(bs, gt, element_pos);
  const double c = dot(link.r_b, link.r_t);
  const double base = std::max(0.0, 0.5 * (1.0 + c));
  const double angular = q == 0.0 ? 1.0 : std::pow(base, q);
  const double path = 1.0 / (link.d_b * link.d_b * link.d_t * link.d_t);

  ObjectiveSample out;
  out.value = angular * path;
  if (!with_gradient) return out;

  // d(d_X^-2)/dl_R = 2 r_X / d_X^3, so the path factor contributes value * 2 (r_B/d_B + r_T/d_T).
  out.gradient = (link.r_b / link.d_b + link.r_t / link.d_t) * (2.0 * out.value);
  if (q != 0.0) {
    // d(r_B.r_T)/dl_R = -(I - r_B r_B^T) r_T / d_B - (I - r_T r_T^T) r_B / d_T
    const Vec3 grad_c = -(link.r_t - link.r_b * c) / link.d_b - (link.r_b - link.r_t * c) / link.d_t;
    const double dangular = 0.5 * q * (q == 1.0 ? 1.0 : std::pow(base, q - 1.0));
    out.gradient += grad_c * (dangular * path);
  }
  return out;
}

namespace serial {

double objective(const Scenario& scenario, const Vec3& center) {
  const double q = scenario.pattern.q;
  double sum = 0.0;
  for (const Vec3& offset : scenario.array.offsets) {
    sum += element_term(scenario.bs, scenario.gt, center + offset, q, false).value;
  }
  return sum;
}

ObjectiveSample objective_and_gradient(const Scenario& scenario, const Vec3& center) {
  const double q = scenario.pattern.q;
  ObjectiveSample sum;
  for (const Vec3& offset : scenario.array.offsets) {
    const ObjectiveSample term = element_term(scenario.bs, scenario.gt, center + offset, q, true);
    sum.value += term.value;
    sum.gradient += term.gradient;
  }
  return sum;
}

std::vector<double> objective_at(const Scenario& scenario, std::span<const Vec3> centers) {
  std::vector<double> out;
  out.reserve(centers.size());
  for (const Vec3& c : centers) out.push_back(objective(scenario, c));
  return out;
}

}  // namespace serial
}  // namespace irs::kernels
