// SPDX-License-Identifier: Apache-2.0

#include <exception>
#include <vector>

#include "irs/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace irs::kernels {

namespace {

// Exceptions must not escape an OpenMP region; keep the first one and rethrow after the join.
class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
#pragma omp critical(irs_kernel_exception)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

bool in_parallel_region() {
#ifdef _OPENMP
  return omp_in_parallel() != 0;
#else
  return true;
#endif
}

bool use_parallel(Exec exec, std::size_t work) {
  switch (exec) {
    case Exec::Serial:
      return false;
    case Exec::Parallel:
      return true;
    case Exec::Auto:
      break;
  }
  return work >= kParallelElementThreshold && max_threads() > 1 && !in_parallel_region();
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace parallel {

double objective(const Scenario& scenario, const Vec3& center) {
  const auto& offsets = scenario.array.offsets;
  const auto n_elem = static_cast<std::ptrdiff_t>(offsets.size());
  const double q = scenario.pattern.q;
  std::vector<double> terms(offsets.size());
  ExceptionSlot slot;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t n = 0; n < n_elem; ++n) {
    slot.run([&] {
      terms[n] = element_term(scenario.bs, scenario.gt, center + offsets[n], q, false).value;
    });
  }
  slot.rethrow();
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum;
}

ObjectiveSample objective_and_gradient(const Scenario& scenario, const Vec3& center) {
  const auto& offsets = scenario.array.offsets;
  const auto n_elem = static_cast<std::ptrdiff_t>(offsets.size());
  const double q = scenario.pattern.q;
  std::vector<ObjectiveSample> terms(offsets.size());
  ExceptionSlot slot;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t n = 0; n < n_elem; ++n) {
    slot.run([&] { terms[n] = element_term(scenario.bs, scenario.gt, center + offsets[n], q, true); });
  }
  slot.rethrow();
  ObjectiveSample sum;
  for (const ObjectiveSample& t : terms) {
    sum.value += t.value;
    sum.gradient += t.gradient;
  }
  return sum;
}

std::vector<double> objective_at(const Scenario& scenario, std::span<const Vec3> centers) {
  std::vector<double> out(centers.size());
  const auto count = static_cast<std::ptrdiff_t>(centers.size());
  ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    slot.run([&] { out[i] = serial::objective(scenario, centers[i]); });
  }
  slot.rethrow();
  return out;
}

}  // namespace parallel

double objective(const Scenario& scenario, const Vec3& center, Exec exec) {
  return use_parallel(exec, scenario.array.size()) ? parallel::objective(scenario, center)
                                                   : serial::objective(scenario, center);
}

ObjectiveSample objective_and_gradient(const Scenario& scenario, const Vec3& center, Exec exec) {
  return use_parallel(exec, scenario.array.size())
             ? parallel::objective_and_gradient(scenario, center)
             : serial::objective_and_gradient(scenario, center);
}

std::vector<double> objective_at(const Scenario& scenario, std::span<const Vec3> centers,
                                 Exec exec) {
  // Point sweeps are worth splitting once there is more than a handful of work.
  const std::size_t work = centers.size() * scenario.array.size();
  return use_parallel(exec, work) && centers.size() > 1
             ? parallel::objective_at(scenario, centers)
             : serial::objective_at(scenario, centers);
}

}  // namespace irs::kernels
