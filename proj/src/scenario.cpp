// SPDX-License-Identifier: Apache-2.0

#include "irs/scenario.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "irs/errors.hpp"

namespace irs {

PatternParams PatternParams::with_directivity(double q) {
  if (!(q >= 0.0) || !std::isfinite(q)) throw ValidationError("pattern: q must be >= 0");
  return {q, 2.0 * (2.0 * q + 1.0)};
}

void LinkBudget::validate() const {
  auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!positive(beta0)) throw ValidationError("budget: beta0 must be positive");
  if (!positive(lambda_c)) throw ValidationError("budget: lambda_c must be positive");
  if (!positive(p_b)) throw ValidationError("budget: p_b must be positive");
  if (!positive(sigma2)) throw ValidationError("budget: sigma2 must be positive");
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

void Scenario::validate() const {
  if (!is_finite(bs)) throw ValidationError("bs: coordinates must be finite");
  if (!is_finite(gt)) throw ValidationError("gt: coordinates must be finite");
  if (!allow_elevated_terminals) {
    if (bs.z != 0.0) throw ValidationError("bs: terminal must lie on the ground (z = 0)");
    if (gt.z != 0.0) throw ValidationError("gt: terminal must lie on the ground (z = 0)");
  }
  airspace.validate();

  if (array.nx < 1 || array.ny < 1 ||
      array.offsets.size() != static_cast<std::size_t>(array.nx) * array.ny) {
    throw ValidationError("array: offsets must have nx*ny entries");
  }
  const Vec3 sum = std::accumulate(array.offsets.begin(), array.offsets.end(), Vec3{});
  const double span = std::max(array.nx * array.dx, array.ny * array.dy);
  if (norm(sum) > 1e-9 * std::max(1.0, span * array.offsets.size())) {
    throw ValidationError("array: offsets must be centered");
  }

  if (!(pattern.q >= 0.0) || pattern.g0 != 2.0 * (2.0 * pattern.q + 1.0)) {
    throw ValidationError("pattern: g0 must equal 2(2q+1) with q >= 0");
  }
  budget.validate();
  compute_dmin(*this);
}

Scenario Scenario::with_directivity(double q) const {
  Scenario out = *this;
  out.pattern = PatternParams::with_directivity(q);
  return out;
}

Scenario Scenario::with_power_dbm(double p_dbm) const {
  Scenario out = *this;
  out.budget.p_b = dbm_to_watts(p_dbm);
  return out;
}

double chi0(const PatternParams& pattern, const LinkBudget& budget) {
  constexpr double pi4 = std::numbers::pi * std::numbers::pi * std::numbers::pi * std::numbers::pi;
  return budget.beta0 * budget.beta0 * pattern.g0 * pattern.g0 * budget.p_b /
         (256.0 * pi4 * budget.sigma2);
}

}  // namespace irs
