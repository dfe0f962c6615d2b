// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "irs/scenario.hpp"
#include "irs/vec3.hpp"

// Hot loops of the placement objective
//
//   S(l_R) = sum_n (1 + r_B,n . r_T,n)^q / (2^q d_B,n^2 d_T,n^2),   v = sqrt(chi0) S.
//
// Every kernel comes in two flavours. `serial` is the reference implementation;
// `parallel` spreads elements (or points) over OpenMP threads, writes per-item
// results into a buffer and sums it in index order, so both flavours return
// bitwise-identical values. Kernels work on the unscaled sum S; callers apply sqrt(chi0).

namespace irs::kernels {

struct ObjectiveSample {
  double value = 0.0;  ///< S
  Vec3 gradient;       ///< dS/dl_R
};

enum class Exec { Auto, Serial, Parallel };

/// Element count at or above which Exec::Auto parallelizes a single evaluation.
inline constexpr std::size_t kParallelElementThreshold = 1024;

/// One summand of S and its gradient w.r.t. the array center, for an element at
/// `element_pos`. The gradient is skipped unless `with_gradient`.
ObjectiveSample element_term(const Vec3& bs, const Vec3& gt, const Vec3& element_pos, double q,
                             bool with_gradient);

namespace serial {
double objective(const Scenario& scenario, const Vec3& center);
ObjectiveSample objective_and_gradient(const Scenario& scenario, const Vec3& center);
std::vector<double> objective_at(const Scenario& scenario, std::span<const Vec3> centers);
}  // namespace serial

namespace parallel {
double objective(const Scenario& scenario, const Vec3& center);
ObjectiveSample objective_and_gradient(const Scenario& scenario, const Vec3& center);
/// Parallel over centers; each center is summed serially.
std::vector<double> objective_at(const Scenario& scenario, std::span<const Vec3> centers);
}  // namespace parallel

double objective(const Scenario& scenario, const Vec3& center, Exec exec = Exec::Auto);
ObjectiveSample objective_and_gradient(const Scenario& scenario, const Vec3& center,
                                       Exec exec = Exec::Auto);
std::vector<double> objective_at(const Scenario& scenario, std::span<const Vec3> centers,
                                 Exec exec = Exec::Auto);

/// Number of OpenMP threads available to the parallel kernels (1 without OpenMP).
int max_threads();

}  // namespace irs::kernels
