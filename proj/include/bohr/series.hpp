#pragma once

#include <cstdint>
#include <functional>

namespace bohr {

// Closed interval certified to contain a real quantity. Arithmetic rounds
// outward by one ulp per operation so that containment survives floating
// point evaluation.
struct Enclosure {
  double lo = 0.0;
  double hi = 0.0;

  static Enclosure point(double value) { return {value, value}; }
  // [value - err, value + err], rounded outward. err must be >= 0.
  static Enclosure around(double value, double err);

  double mid() const { return lo + (hi - lo) / 2; }
  double width() const { return hi - lo; }
  double radius() const { return (hi - lo) / 2; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Enclosure& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  bool certainly_negative() const { return hi < 0.0; }
  bool certainly_positive() const { return lo > 0.0; }
  // Widens by `slack` on both sides.
  Enclosure inflated(double slack) const;
};

Enclosure operator+(const Enclosure& x, const Enclosure& y);
Enclosure operator-(const Enclosure& x, const Enclosure& y);
Enclosure operator+(const Enclosure& x, double c);
Enclosure operator-(const Enclosure& x, double c);
// Scaling by a real constant (either sign).
Enclosure operator*(double c, const Enclosure& x);

// General term of a real series sum_{n >= start} term(n).
struct TermRule {
  std::function<double(std::int64_t)> term;
  std::int64_t start = 0;
  // Upper bound q_n on |term(m+1) / term(m)| valid for every m >= n.
  // Required by eval_tail_bounded; ignored by eval_alternating.
  std::function<double(std::int64_t)> ratio_bound;
  // Relative accuracy of term(), in units of the unit roundoff. Added to the
  // rounding slack of every enclosure built from this rule.
  double term_ulps = 0.0;
  // The magnitudes |term(start + j)| form a Hausdorff moment sequence
  // (integral of x^j against a positive measure on [0, 1]). Unlocks the
  // accelerated remainder bound in eval_alternating.
  bool moment_sequence = false;
};

struct PartialSum {
  double sum = 0.0;   // sum of term(start) .. term(last)
  double tail = 0.0;  // |term(last + 1)| / (1 - ratio_bound(last))
};

// Partial sum through `last` with its geometric tail bound. Throws
// NonContracting if ratio_bound(last) >= 1.
PartialSum partial_sum(const TermRule& rule, std::int64_t last);

// Hard cap on the number of terms any evaluator will visit.
inline constexpr std::int64_t kMaxSeriesTerms = 1'000'000;

// Sums a series with a geometric tail majorant |term(N+1)| / (1 - q_N).
// Half of eps goes to truncation, the rounding slack is added on top.
// If the cap is reached after contraction has set in, the returned
// enclosure is still sound but wider than eps.
Enclosure eval_tail_bounded(const TermRule& rule, double eps);

// Sums an alternating series with strictly decreasing magnitudes. The
// result spans the partial sums S_N and S_{N+1} once |term(N+1)| <= eps / 2,
// so it sits inside S_N +- |term(N+1)|. When the plain bound would need too many
// terms and rule.moment_sequence is set, switches to the
// Cohen-Rodriguez Villegas-Zagier weighted sum, whose error is bounded by
// |term(start)| / d_n with d_n ~ (3 + sqrt 8)^n / 2.
Enclosure eval_alternating(const TermRule& rule, double eps);

}  // namespace bohr
