// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "irs/geometry.hpp"
#include "irs/vec3.hpp"

namespace irs {

/// Cosine-power element pattern G(f, r) = g0 (f.r)^(2q) on the front half-space.
struct PatternParams {
  double q = 0.0;
  double g0 = 2.0;  ///< always 2(2q + 1)

  static PatternParams with_directivity(double q);
};

/// Large-scale link budget. All values strictly positive.
struct LinkBudget {
  double beta0 = 1.0;      ///< path-gain amplitude at unit distance
  double lambda_c = 0.05;  ///< carrier wavelength [m]
  double p_b = 1.0;        ///< BS transmit power [W]
  double sigma2 = 1e-11;   ///< noise power [W]

  void validate() const;
};

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Relay geometry and radio parameters for one BS -> UAV IRS -> GT link.
struct Scenario {
  Vec3 bs;
  Vec3 gt;
  AirspaceBox airspace;
  ArrayGeometry array;
  PatternParams pattern;
  LinkBudget budget;
  /// Terminals must sit on the ground (z = 0) unless this is set.
  bool allow_elevated_terminals = false;

  /// Checks every documented invariant, including d_min > 0.
  void validate() const;

  Scenario with_directivity(double q) const;
  Scenario with_power_dbm(double p_dbm) const;
};

/// Constant coefficient chi0 = beta0^2 G0^2 P_B / (256 pi^4 sigma^2) of the SNR expression.
double chi0(const PatternParams& pattern, const LinkBudget& budget);

inline double chi0(const Scenario& s) { return chi0(s.pattern, s.budget); }

}  // namespace irs
