#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "bohr/series.hpp"

namespace bohr {

// Re(h/z - beta) > |g/z|, 0 < beta < 1.
struct TildeG0H {
  double beta;
};

// Re(h' + alpha z h'') > |g' + alpha z g''|, 0 <= alpha < 1.
struct W0H {
  double alpha;
};

// Re((1 - alpha) h/z + alpha h') > |(1 - alpha) g/z + alpha g'| on maps whose
// coefficients 2..k vanish; k >= 1, alpha >= 1/k.
struct GkH {
  double alpha;
  int k;
};

// One of the three harmonic classes with validated parameters.
class ClassParams {
 public:
  using Variant = std::variant<TildeG0H, W0H, GkH>;

  // Throws InvalidParameter when the parameters leave the admissible range.
  ClassParams(TildeG0H params);
  ClassParams(W0H params);
  ClassParams(GkH params);

  const Variant& variant() const { return value_; }
  // First index whose coefficient may be nonzero: 2, or k + 1 for GkH.
  int first_free_index() const;
  std::string describe() const;

 private:
  Variant value_;
};

// Truncated f = h + conj(g): h = z + sum a_n z^n, g = sum b_n z^n.
// Both coefficient vectors are indexed by power, so a[1] == 1 and
// a[0] == b[0] == b[1] == 0.
class HarmonicModel {
 public:
  using Coeffs = std::vector<std::complex<double>>;

  // Throws InvalidParameter if the normalization is violated. `b` may be
  // shorter than `a`; it is zero-padded.
  HarmonicModel(Coeffs a, Coeffs b);
  static HarmonicModel identity(int truncation = 1);

  int truncation() const { return static_cast<int>(a_.size()) - 1; }
  const Coeffs& analytic() const { return a_; }
  const Coeffs& co_analytic() const { return b_; }
  std::complex<double> a(int n) const { return a_.at(n); }
  std::complex<double> b(int n) const { return b_.at(n); }

  // Every coefficient scaled by `factor`, except a_1.
  HarmonicModel scaled(double factor) const;

 private:
  Coeffs a_;
  Coeffs b_;
};

// True when coefficients 2..k of both parts vanish (always true unless GkH).
bool satisfies_normalization(const HarmonicModel& model, const ClassParams& cls);

// Sharp bound on |a_n| + |b_n| (and on ||a_n| - |b_n||). Zero for GkH below
// index k + 1; OutOfRange for n < 2.
double coeff_bound_sum(const ClassParams& cls, int n);

// The class's extremal function truncated at `truncation`, all b_n = 0.
HarmonicModel extremal_model(const ClassParams& cls, int truncation);

// Model whose coefficient at every admissible index equals
// coeff_bound_sum. Coincides with the extremal model except for GkH with
// k >= 2, where the extremal populates only indices kj + 1.
HarmonicModel majorant_model(const ClassParams& cls, int truncation);

struct GrowthEnvelope {
  Enclosure lower;
  Enclosure upper;
};

// Lower and upper bounds on |f(z)| at |z| = r for members of the class.
GrowthEnvelope growth_envelope(const ClassParams& cls, double r, double eps = 1e-13);

// sum_{n>=2} (-1)^{n-1} / (n (n alpha + 1 - alpha)).
Enclosure w0h_alternating_constant(double alpha, double eps = 1e-13);
// sum_{j>=1} (-1)^j / (1 + k j alpha).
Enclosure gkh_alternating_constant(int k, double alpha, double eps = 1e-13);

// Class-wide lower bound on d(f(0), boundary of f(D)).
Enclosure boundary_distance_lower(const ClassParams& cls, double eps = 1e-13);

}  // namespace bohr
