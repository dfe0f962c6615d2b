// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "irs/radiation.hpp"
#include "irs/scenario.hpp"
#include "irs/vec3.hpp"

// Brute-force verifiers. None of these share code paths with the closed forms or
// the optimizer they check, apart from evaluating the objective itself.

namespace irs::oracle {

inline constexpr unsigned long long kDefaultSeed = 0xC0FFEE;

/// Seed from the IRS_SEED environment variable (decimal or 0x-hex), else the default.
unsigned long long seed_from_env();

using Mat3 = std::array<std::array<double, 3>, 3>;

struct GridSearchResult {
  Vec3 best_center;
  double best_value = 0.0;
  double resolution = 0.0;
  std::size_t cells_evaluated = 0;
};

/// Maximum number of lattice points grid_search accepts.
inline constexpr std::size_t kMaxGridCells = 100'000'000;

/// Lattice coordinates min, min + res, ... strictly below max, followed by max itself.
std::vector<double> lattice_axis(double lo, double hi, double resolution);

/// Exhaustive search of the placement objective over the airspace lattice. Ties go to
/// the lexicographically smallest (x, y, z).
GridSearchResult grid_search(const Scenario& scenario, double resolution);

/// Central differences of the placement objective along each axis.
Vec3 fd_gradient(const Scenario& scenario, const Vec3& center, double step);

/// Symmetrized central-difference Hessian built from the analytic gradient.
Mat3 fd_hessian(const Scenario& scenario, const Vec3& center, double step);

struct SymmetricEigen {
  std::array<double, 3> values;   ///< descending
  std::array<Vec3, 3> vectors;    ///< orthonormal, vectors[i] pairs with values[i]
};

/// Cyclic Jacobi eigendecomposition of a symmetric 3x3 matrix.
/// Throws ValidationError when |M - M^T| >= 1e-9.
SymmetricEigen dense_eigs_3x3(const Mat3& m);

/// Spectral norm of a symmetric matrix (largest |eigenvalue|).
double spectral_norm_symmetric(const Mat3& m);

/// D = (a b^T + b a^T) / 2.
Mat3 symmetric_outer(const Vec3& a, const Vec3& b);

/// Uniform point on the unit sphere.
Vec3 random_unit_vector(std::mt19937_64& rng);

/// (f.r_B)_+^q (f.r_T)_+^q / (d_B^2 d_T^2): one element's summand of the rotation problem.
double product_gain_term(const Vec3& f, const ElementLink& link, double q);

struct RotationSearchResult {
  Vec3 best_f;
  double best_value = 0.0;
};

/// Best of `samples` uniform random boresights. When `first_candidate` is given it
/// is used as the first sample.
RotationSearchResult random_rotation_search(const ElementLink& link, double q, int samples,
                                            unsigned long long seed = kDefaultSeed,
                                            std::optional<Vec3> first_candidate = std::nullopt);

}  // namespace irs::oracle
