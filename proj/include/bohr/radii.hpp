#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>

#include "bohr/classes.hpp"
#include "bohr/errors.hpp"
#include "bohr/series.hpp"

namespace bohr {

// Constant term of the tilde-G0H radius quadratic. With -beta the extremal
// attains equality at the root; the -1 variant is kept for comparison.
enum class Q1Form { derived, statement };

struct T31 {
  double beta;
  Q1Form form = Q1Form::derived;
};
struct T32 {
  double beta;
};
struct T33 {
  double alpha;
};
struct T34 {
  double alpha;
};
struct T35 {
  int k;
  double alpha;
};
struct T36 {
  int k;
  double alpha;
};
// |f(z)| + sum_{n>=N} |a_n| r^n <= 1 for bounded analytic f.
struct TheoremA {
  int n;
};

// One radius equation with validated parameters.
class RadiusProblem {
 public:
  using Variant = std::variant<T31, T32, T33, T34, T35, T36, TheoremA>;

  // Throws InvalidParameter on inadmissible parameters.
  RadiusProblem(Variant v);
  template <class T>
    requires(!std::is_same_v<T, Variant> && std::is_constructible_v<Variant, T>)
  RadiusProblem(T v) : RadiusProblem(Variant(std::move(v))) {}

  const Variant& variant() const { return value_; }
  // "t31" ... "t36", "ta".
  std::string tag() const;
  std::string describe() const;
  // The harmonic class the theorem is about; empty for Theorem A.
  std::optional<ClassParams> harmonic_class() const;
  // Theorems whose left side carries |f(z)| rather than the area term.
  bool uses_modulus() const;

 private:
  Variant value_;
};

struct RootResult {
  double r = 0.0;
  double half_width = 0.0;
  // Q on the left end of the final bracket, certified negative.
  Enclosure q_lo;
  // Q on the right end of the final bracket, certified positive.
  Enclosure q_hi;
  int iterations = 0;
};

// Thrown when a midpoint's sign cannot be certified even at the smallest
// series tolerance. Carries the straddling point as the best root estimate,
// with the half width of the bracket that was still certified.
class SignAmbiguous : public Error {
 public:
  SignAmbiguous(const std::string& what, RootResult partial)
      : Error(what), partial_(partial) {}
  const RootResult& partial() const { return partial_; }

 private:
  RootResult partial_;
};

// Enclosure of the radius function Q(r) whose unique zero in (0, 1) is the
// theorem's radius.
Enclosure q_value(const RadiusProblem& problem, double r, double eps = 1e-13);

struct SolveOptions {
  // Search interval is [0, 1 - right_margin].
  double right_margin = 1e-6;
  double eps_start = 1e-6;
  double eps_min = 1e-15;
};

RootResult solve_radius(const RadiusProblem& problem, double tol, const SolveOptions& opts = {});

// Root in (0, 1) of (2 - 4 beta) r^2 + (2 + beta) r - beta.
double solve_q1_closed_form(double beta);

}  // namespace bohr
