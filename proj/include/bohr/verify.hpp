#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>

#include "bohr/classes.hpp"
#include "bohr/radii.hpp"

namespace bohr {

enum class Status { holds, fails, inconclusive };

const char* to_string(Status s);

struct Verdict {
  Status status = Status::holds;
  // RHS - LHS for theorem checks; the smallest Re(L) - |R| for spot checks.
  double margin = 0.0;
  double at_r = 0.0;
  std::string details;
};

// r + sum_{n >= from_index} (|a_n| + |b_n|) r^n over the model's truncation.
double bohr_sum(const HarmonicModel& model, double r, int from_index = 2);

// Largest |f| on an equispaced angular grid of the circle |z| = r. The
// grid includes theta = 0, so the value is exact for models with
// nonnegative real analytic coefficients and b = 0.
double modulus_sup(const HarmonicModel& model, double r, int grid = 720);

// S_r / pi = r^2 + sum n (|a_n|^2 - |b_n|^2) r^{2n}.
double area_ratio(const HarmonicModel& model, double r);

// Left side of the theorem's inequality at |z| = r: |f| + Bohr sum for
// t31, t33, t35 and Bohr sum + S_r / pi for t32, t34, t36.
double theorem_lhs(const HarmonicModel& model, const RadiusProblem& theorem, double r,
                   int modulus_grid = 720);

// Compares the left side against the class-wide distance lower bound.
// Holds when RHS - LHS >= -tol for the whole RHS enclosure, Fails when it
// is below -tol for the whole enclosure.
Verdict check_theorem(const HarmonicModel& model, const ClassParams& cls,
                      const RadiusProblem& theorem, double r, double tol = 1e-9);

struct SharpnessReport {
  RootResult root;
  int truncation = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;  // lhs - rhs
};

// Solves the radius, evaluates the theorem's left side on the extremal
// function at the root and reports LHS - RHS. The extremal is truncated
// where its tail at the root drops below tol / 10.
SharpnessReport sharpness_report(const RadiusProblem& theorem, double tol = 1e-6);
double sharpness_gap(const RadiusProblem& theorem, double tol = 1e-6);

// Random model with |a_n| + |b_n| <= coeff_bound_sum(cls, n) at every
// index. These are necessary conditions for membership, not sufficient
// ones. Deterministic in seed.
HarmonicModel sample_admissible_model(const ClassParams& cls, std::uint64_t seed,
                                      int truncation);

struct SpotGrid {
  int radial = 64;
  int angular = 256;
  double r_max = 0.999;
};

// Evaluates the class's defining inequality Re(L) > |R| on a polar grid.
// Holds only means the grid found no violation.
Verdict membership_spot_check(const HarmonicModel& model, const ClassParams& cls,
                              const SpotGrid& grid = {});

// sum_{n>=0} |a_n| r^n + (16/9) sum_{n>=1} n |a_n|^2 r^{2n} for an analytic
// self-map of the disk given by its Taylor coefficients a_0, a_1, ...
double theorem_b_functional(std::span<const std::complex<double>> coeffs, double r);

struct FuzzConfig {
  int samples = 1000;
  std::uint64_t seed = 1;
  int truncation = 40;
  // Samples are checked at radius_fraction * r_i.
  double radius_fraction = 0.9;
  double tol = 1e-9;
  // Drop samples that fail membership_spot_check before checking.
  bool membership_filter = false;
  // Number of radii in (0, 0.99] for the extremal-dominance probe.
  int dominance_points = 16;
};

struct FuzzReport {
  std::string problem;
  double r = 0.0;
  int samples = 0;
  int holds = 0;
  int fails = 0;
  int inconclusive = 0;
  int filtered = 0;
  int dominance_violations = 0;
  double worst_margin = 0.0;
  std::uint64_t worst_seed = 0;
  std::string witness;
};

// Seeds are config.seed, config.seed + 1, ...; the report is identical for
// the serial and parallel variants and for any thread count.
FuzzReport fuzz_campaign(const RadiusProblem& theorem, const FuzzConfig& config);
FuzzReport fuzz_campaign_serial(const RadiusProblem& theorem, const FuzzConfig& config);

}  // namespace bohr
