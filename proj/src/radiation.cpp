// SPDX-License-Identifier: Apache-2.0

#include "irs/radiation.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "irs/errors.hpp"

namespace irs {

ElementLink element_link(const Vec3& bs, const Vec3& gt, const Vec3& element_pos) {
  const Vec3 to_b = bs - element_pos;
  const Vec3 to_t = gt - element_pos;
  const double d_b = norm(to_b);
  const double d_t = norm(to_t);
  if (!(d_b >= kMinLinkDistance) || !(d_t >= kMinLinkDistance)) {
    throw GeometryError("degenerate geometry: an element coincides with the BS or GT");
  }
  return {d_b, d_t, to_b / d_b, to_t / d_t};
}

LinkGeometry link_geometry(const Scenario& scenario, const Vec3& center) {
  const auto& offsets = scenario.array.offsets;
  LinkGeometry geom;
  geom.d_b.reserve(offsets.size());
  geom.d_t.reserve(offsets.size());
  geom.r_b.reserve(offsets.size());
  geom.r_t.reserve(offsets.size());
  for (const Vec3& offset : offsets) {
    const ElementLink link = element_link(scenario.bs, scenario.gt, center + offset);
    geom.d_b.push_back(link.d_b);
    geom.d_t.push_back(link.d_t);
    geom.r_b.push_back(link.r_b);
    geom.r_t.push_back(link.r_t);
  }
  return geom;
}

void IrsConfiguration::validate(std::size_t element_count) const {
  if (phases.size() != element_count || boresights.size() != element_count) {
    throw ValidationError("configuration: phases and boresights must have one entry per element");
  }
  const Vec3 down{0.0, 0.0, -1.0};
  for (std::size_t n = 0; n < boresights.size(); ++n) {
    if (std::abs(norm(boresights[n]) - 1.0) > 1e-12) {
      std::ostringstream msg;
      msg << "configuration: boresight " << n << " is not a unit vector";
      throw ValidationError(msg.str());
    }
    if (tilt_max < std::numbers::pi / 2 && angle_between(boresights[n], down) > tilt_max + 1e-12) {
      std::ostringstream msg;
      msg << "configuration: boresight " << n << " violates the tilt limit";
      throw ValidationError(msg.str());
    }
  }
}

double positive_power(double x, double p) {
  if (x < 0.0) return 0.0;
  if (p == 0.0) return 1.0;
  return std::pow(x, p);
}

double element_gain(const Vec3& f, const Vec3& r, const PatternParams& pattern) {
  return pattern.g0 * positive_power(dot(f, r), 2.0 * pattern.q);
}

double snr(const Scenario& scenario, const IrsConfiguration& config) {
  const std::size_t n_elem = scenario.array.size();
  config.validate(n_elem);
  const LinkGeometry geom = link_geometry(scenario, config.center);
  const double q = scenario.pattern.q;
  const double wavenumber = 2.0 * std::numbers::pi / scenario.budget.lambda_c;

  std::complex<double> sum{0.0, 0.0};
  for (std::size_t n = 0; n < n_elem; ++n) {
    const Vec3& f = config.boresights[n];
    // Normalized directions with d^2 denominators; identical to the unnormalized
    // (l_X - l_n).f form over d^(q+2).
    const double amplitude = positive_power(dot(geom.r_b[n], f), q) *
                             positive_power(dot(geom.r_t[n], f), q) /
                             (geom.d_b[n] * geom.d_b[n] * geom.d_t[n] * geom.d_t[n]);
    const double phase = config.phases[n] + wavenumber * (geom.d_b[n] + geom.d_t[n]);
    sum += std::polar(amplitude, phase);
  }
  return chi0(scenario) * std::norm(sum);
}

double snr_given_optimal_phase(const Scenario& scenario, const Vec3& center,
                               std::span<const Vec3> boresights) {
  const LinkGeometry geom = link_geometry(scenario, center);
  if (boresights.size() != geom.size()) {
    throw ValidationError("configuration: one boresight per element required");
  }
  const double q = scenario.pattern.q;
  double sum = 0.0;
  for (std::size_t n = 0; n < geom.size(); ++n) {
    sum += positive_power(dot(geom.r_b[n], boresights[n]), q) *
           positive_power(dot(geom.r_t[n], boresights[n]), q) /
           (geom.d_b[n] * geom.d_b[n] * geom.d_t[n] * geom.d_t[n]);
  }
  return chi0(scenario) * sum * sum;
}

}  // namespace irs
