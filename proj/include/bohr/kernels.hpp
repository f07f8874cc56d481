#pragma once

// Data-parallel kernels. Every OpenMP kernel has a serial twin with the same
// contract; tests compare the two and the benchmark times them.

#include <cstddef>
#include <exception>
#include <optional>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bohr/classes.hpp"

namespace bohr::kernels {

// Thread cap: BOHR_LAB_THREADS when set to a positive integer, otherwise
// the OpenMP default. Always 1 without OpenMP.
int thread_limit();

// max over theta_j = 2 pi j / grid of |h(r e^{i theta_j}) + conj(g(r e^{i theta_j}))|.
double modulus_sup_serial(const HarmonicModel& model, double r, int grid);
double modulus_sup_parallel(const HarmonicModel& model, double r, int grid);

// Applies f to 0..count-1 and returns the results in index order. If any
// call throws, the exception with the smallest index is rethrown after all
// calls finish, so the outcome does not depend on scheduling.
template <class F>
auto ordered_map_serial(std::size_t count, F&& f) {
  using T = std::invoke_result_t<F&, std::size_t>;
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(f(i));
  return out;
}

template <class F>
auto ordered_map(std::size_t count, F&& f) {
  using T = std::invoke_result_t<F&, std::size_t>;
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
  for (long long i = 0; i < n; ++i) {
    try {
      slots[static_cast<std::size_t>(i)].emplace(f(static_cast<std::size_t>(i)));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace bohr::kernels
