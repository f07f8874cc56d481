#include "bohr/kernels.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <string>

#include "bohr/errors.hpp"

namespace bohr::kernels {
namespace {

using cplx = std::complex<double>;

cplx horner(const HarmonicModel::Coeffs& c, cplx z) {
  cplx acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double modulus_at(const HarmonicModel& model, double r, int j, int grid) {
  const double theta = 2.0 * std::numbers::pi * j / grid;
  const cplx z = std::polar(r, theta);
  const cplx f = horner(model.analytic(), z) + std::conj(horner(model.co_analytic(), z));
  return std::abs(f);
}

void require_grid(int grid) {
  if (grid < 8) throw OutOfRange("angular grid must have at least 8 points");
}

}  // namespace

int thread_limit() {
#ifdef _OPENMP
  if (const char* env = std::getenv("BOHR_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return omp_get_max_threads();
#else
  return 1;
#endif
}

double modulus_sup_serial(const HarmonicModel& model, double r, int grid) {
  require_grid(grid);
  double best = 0.0;
  for (int j = 0; j < grid; ++j) best = std::max(best, modulus_at(model, r, j, grid));
  return best;
}

double modulus_sup_parallel(const HarmonicModel& model, double r, int grid) {
  require_grid(grid);
  double best = 0.0;
#pragma omp parallel for reduction(max : best) num_threads(thread_limit())
  for (int j = 0; j < grid; ++j) best = std::max(best, modulus_at(model, r, j, grid));
  return best;
}

}  // namespace bohr::kernels
