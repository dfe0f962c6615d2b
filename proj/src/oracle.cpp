// SPDX-License-Identifier: Apache-2.0

#include "irs/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "irs/closed_form.hpp"
#include "irs/errors.hpp"
#include "irs/kernels.hpp"
#include "irs/optimizer.hpp"

namespace irs::oracle {

unsigned long long seed_from_env() {
  const char* raw = std::getenv("IRS_SEED");
  if (raw == nullptr || *raw == '\0') return kDefaultSeed;
  char* end = nullptr;
  const unsigned long long seed = std::strtoull(raw, &end, 0);
  if (end == raw || *end != '\0') {
    throw ValidationError(std::string("IRS_SEED: not an integer: ") + raw);
  }
  return seed;
}

std::vector<double> lattice_axis(double lo, double hi, double resolution) {
  if (!(resolution > 0.0)) throw ValidationError("grid: resolution must be positive");
  std::vector<double> axis;
  const double tol = 1e-9 * std::max(1.0, std::abs(hi - lo));
  for (std::size_t i = 0;; ++i) {
    const double v = lo + static_cast<double>(i) * resolution;
    if (v >= hi - tol) break;
    axis.push_back(v);
  }
  axis.push_back(hi);
  return axis;
}

GridSearchResult grid_search(const Scenario& scenario, double resolution) {
  const AirspaceBox& box = scenario.airspace;
  const auto xs = lattice_axis(box.min.x, box.max.x, resolution);
  const auto ys = lattice_axis(box.min.y, box.max.y, resolution);
  const auto zs = lattice_axis(box.min.z, box.max.z, resolution);
  const double cells = static_cast<double>(xs.size()) * ys.size() * zs.size();
  if (cells > static_cast<double>(kMaxGridCells)) {
    throw BudgetError("grid: lattice has " + std::to_string(static_cast<long long>(cells)) +
                      " cells, above the 1e8 guard");
  }

  GridSearchResult result;
  result.resolution = resolution;
  result.best_value = -1.0;
  std::vector<Vec3> slice;
  slice.reserve(ys.size() * zs.size());
  // One x-slice at a time keeps memory bounded; scanning in (x, y, z) order with a
  // strict comparison keeps the lexicographically smallest maximizer.
  for (double x : xs) {
    slice.clear();
    for (double y : ys) {
      for (double z : zs) slice.push_back({x, y, z});
    }
    const std::vector<double> values = kernels::objective_at(scenario, slice);
    for (std::size_t i = 0; i < slice.size(); ++i) {
      if (values[i] > result.best_value) {
        result.best_value = values[i];
        result.best_center = slice[i];
      }
    }
    result.cells_evaluated += slice.size();
  }
  result.best_value = placement_objective(scenario, result.best_center);
  return result;
}

Vec3 fd_gradient(const Scenario& scenario, const Vec3& center, double step) {
  if (!(step > 0.0)) throw ValidationError("fd: step must be positive");
  Vec3 grad;
  for (int axis = 0; axis < 3; ++axis) {
    Vec3 plus = center;
    Vec3 minus = center;
    plus[axis] += step;
    minus[axis] -= step;
    grad[axis] = (placement_objective(scenario, plus) - placement_objective(scenario, minus)) /
                 (2.0 * step);
  }
  return grad;
}

Mat3 fd_hessian(const Scenario& scenario, const Vec3& center, double step) {
  if (!(step > 0.0)) throw ValidationError("fd: step must be positive");
  Mat3 h{};
  for (int col = 0; col < 3; ++col) {
    Vec3 plus = center;
    Vec3 minus = center;
    plus[col] += step;
    minus[col] -= step;
    const Vec3 dg =
        (objective_gradient(scenario, plus) - objective_gradient(scenario, minus)) / (2.0 * step);
    for (int row = 0; row < 3; ++row) h[row][col] = dg[row];
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double avg = 0.5 * (h[i][j] + h[j][i]);
      h[i][j] = avg;
      h[j][i] = avg;
    }
  }
  return h;
}

SymmetricEigen dense_eigs_3x3(const Mat3& m) {
  double scale = 0.0;
  for (const auto& row : m) {
    for (double v : row) scale = std::max(scale, std::abs(v));
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::abs(m[i][j] - m[j][i]) >= 1e-9) {
        throw ValidationError("eigensolver: matrix is not symmetric");
      }
    }
  }

  Mat3 a = m;
  Mat3 v{};
  for (int i = 0; i < 3; ++i) v[i][i] = 1.0;

  for (int sweep = 0; sweep < 64; ++sweep) {
    const double off = a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2];
    if (off <= 1e-300 || std::sqrt(off) <= 1e-18 * scale) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (a[p][q] == 0.0) continue;
        // Rotation angle that zeroes a[p][q] (Golub & Van Loan, symmetric Schur).
        const double tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < 3; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < 3; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a[i][i] > a[j][j]; });
  SymmetricEigen out;
  for (int k = 0; k < 3; ++k) {
    const int i = order[k];
    out.values[k] = a[i][i];
    out.vectors[k] = {v[0][i], v[1][i], v[2][i]};
  }
  return out;
}

double spectral_norm_symmetric(const Mat3& m) {
  const SymmetricEigen eig = dense_eigs_3x3(m);
  return std::max(std::abs(eig.values[0]), std::abs(eig.values[2]));
}

Mat3 symmetric_outer(const Vec3& a, const Vec3& b) {
  Mat3 d{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) d[i][j] = 0.5 * (a[i] * b[j] + b[i] * a[j]);
  }
  return d;
}

Vec3 random_unit_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const Vec3 g{gauss(rng), gauss(rng), gauss(rng)};
    const double len = norm(g);
    if (len > 1e-12) return g / len;
  }
}

double product_gain_term(const Vec3& f, const ElementLink& link, double q) {
  return positive_power(dot(f, link.r_b), q) * positive_power(dot(f, link.r_t), q) /
         (link.d_b * link.d_b * link.d_t * link.d_t);
}

RotationSearchResult random_rotation_search(const ElementLink& link, double q, int samples,
                                            unsigned long long seed,
                                            std::optional<Vec3> first_candidate) {
  if (samples < 1) throw ValidationError("rotation search: samples must be >= 1");
  std::mt19937_64 rng(seed);
  RotationSearchResult best{{}, -1.0};
  for (int i = 0; i < samples; ++i) {
    const Vec3 f = (i == 0 && first_candidate) ? *first_candidate : random_unit_vector(rng);
    const double value = product_gain_term(f, link, q);
    if (value > best.best_value) best = {f, value};
  }
  return best;
}

}  // namespace irs::oracle
