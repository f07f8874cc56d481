#include "bohr/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "bohr/errors.hpp"

namespace bohr {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

// gamma_m = m u / (1 - m u): bound on the relative error of m chained
// floating point operations.
double gamma(std::int64_t m) {
  if (m <= 0) return 0.0;
  const double mu = static_cast<double>(m) * kUnitRoundoff;
  return mu / (1.0 - mu);
}

// TwoSum: s == a + b exactly iff the recovered rounding error is zero.
bool sum_is_exact(double a, double b, double s) {
  const double bb = s - a;
  return (a - (s - bb)) + (b - bb) == 0.0;
}

// Cascaded TwoSum (Ogita, Rump and Oishi's Sum2). Its error bound grows with
// the square of the term count times u, so long series keep a rounding
// floor near one ulp of the result.
class CompensatedSum {
 public:
  void add(double t) {
    if (t == 0.0) return;
    const double s = hi_ + t;
    const double bb = s - hi_;
    lo_ += (hi_ - (s - bb)) + (t - bb);
    hi_ = s;
    abs_ += std::fabs(t);
    ++count_;
  }
  double value() const { return hi_ + lo_; }
  // Upper bound on sum(|t|), allowing for rounding in the running total.
  double abs_sum() const { return abs_ * (1.0 + gamma(count_)); }
  // Bound on |value() - exact sum of the added terms|.
  double rounding() const {
    if (count_ <= 1) return 0.0;
    const double g = gamma(count_ - 1);
    const double bound = (kUnitRoundoff * std::fabs(value()) + g * g * abs_sum()) /
                         (1.0 - kUnitRoundoff);
    return bound * (1.0 + 4 * kUnitRoundoff);
  }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
  double abs_ = 0.0;
  std::int64_t count_ = 0;
};

double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

void require_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw OutOfRange("series tolerance must be a positive finite number");
  }
}

double checked_term(const TermRule& rule, std::int64_t n) {
  const double t = rule.term(n);
  if (!std::isfinite(t)) {
    throw NonContracting("series term " + std::to_string(n) + " is not finite");
  }
  return t;
}

// Enclosure around a floating sum with a truncation radius and an absolute
// rounding slack. Zero radius and zero slack give a point.
Enclosure build(double sum, double truncation, double slack) {
  const double r = truncation + slack;
  if (r == 0.0) return Enclosure::point(sum);
  return {down(sum - up(r)), up(sum + up(r))};
}

// Only plain partial sums are tried for this many terms before a moment
// sequence is handed to the accelerated sum.
constexpr std::int64_t kPlainPrefix = 64;
// (3 + sqrt 8)^140 is about 1e107; far beyond any tolerance we need.
constexpr int kMaxAcceleratedTerms = 140;

class AlternationCheck {
 public:
  explicit AlternationCheck(std::int64_t start) : index_(start) {}

  // Feeds the next term; returns false once a zero term ends the series.
  bool feed(double t) {
    const double mag = std::fabs(t);
    if (have_prev_) {
      if (mag == 0.0) return false;
      if (prev_mag_ == 0.0 || mag >= prev_mag_ || sign_of(t) == prev_sign_) {
        throw NotAlternating("term " + std::to_string(index_) +
                             " breaks strict alternation or decrease");
      }
    }
    have_prev_ = true;
    prev_mag_ = mag;
    prev_sign_ = sign_of(t);
    ++index_;
    return mag != 0.0;
  }

 private:
  std::int64_t index_;
  bool have_prev_ = false;
  double prev_mag_ = 0.0;
  double prev_sign_ = 1.0;
};

// [min(a, a + t), max(a, a + t)] widened by slack; the alternating sum lies
// between consecutive partial sums.
Enclosure between_partial_sums(double a, double t, double slack) {
  if (t == 0.0) return slack == 0.0 ? Enclosure::point(a) : Enclosure{down(a - slack), up(a + slack)};
  const double b = a + t;
  const double lo = std::min(a, down(b));
  const double hi = std::max(a, up(b));
  return {down(lo - slack), up(hi + slack)};
}

Enclosure accelerated_alternating(const TermRule& rule, double eps, const Enclosure& prefix) {
  const double first = checked_term(rule, rule.start);
  const double a0 = std::fabs(first);
  if (a0 == 0.0) return Enclosure::point(0.0);
  const double base = 3.0 + std::sqrt(8.0);

  // Smallest n with a0 / d_n <= eps / 2, using d_n >= base^n / 2.
  int n = static_cast<int>(std::ceil(std::log(4.0 * a0 / eps) / std::log(base)));
  if (n < 1) n = 1;
  if (n > kMaxAcceleratedTerms) n = kMaxAcceleratedTerms;

  const double pow_n = std::pow(base, n);
  const double d = (pow_n + 1.0 / pow_n) / 2;
  double b = -1.0;
  double c = -d;
  double s = 0.0;
  double abs_s = 0.0;
  AlternationCheck check(rule.start);
  for (int k = 0; k < n; ++k) {
    const double t = k == 0 ? first : checked_term(rule, rule.start + k);
    if (!check.feed(t)) break;
    const double ak = std::fabs(t);
    c = b - c;
    s += c * ak;
    abs_s += std::fabs(c) * ak;
    b = (static_cast<double>(k + n) * static_cast<double>(k - n) * b) /
        ((k + 0.5) * (k + 1.0));
  }
  const double value = sign_of(first) * s / d;
  const double truncation = a0 / d;
  const double slack =
      (gamma(3 * static_cast<std::int64_t>(n) + 2) + rule.term_ulps * kUnitRoundoff) *
      abs_s / d;
  // Clip to the plain bracket so refining eps never leaves a coarser result.
  const Enclosure acc = build(value, truncation, slack);
  const Enclosure clipped{std::max(acc.lo, prefix.lo), std::min(acc.hi, prefix.hi)};
  return clipped.lo <= clipped.hi ? clipped : acc;
}

}  // namespace

Enclosure Enclosure::around(double value, double err) {
  if (err == 0.0) return point(value);
  return {down(value - up(err)), up(value + up(err))};
}

Enclosure Enclosure::inflated(double slack) const {
  if (slack == 0.0) return *this;
  return {down(lo - slack), up(hi + slack)};
}

Enclosure operator+(const Enclosure& x, const Enclosure& y) {
  const double lo = x.lo + y.lo;
  const double hi = x.hi + y.hi;
  return {sum_is_exact(x.lo, y.lo, lo) ? lo : down(lo),
          sum_is_exact(x.hi, y.hi, hi) ? hi : up(hi)};
}

Enclosure operator-(const Enclosure& x, const Enclosure& y) {
  return x + Enclosure{-y.hi, -y.lo};
}

Enclosure operator+(const Enclosure& x, double c) { return x + Enclosure::point(c); }
Enclosure operator-(const Enclosure& x, double c) { return x + Enclosure::point(-c); }

Enclosure operator*(double c, const Enclosure& x) {
  if (c == 0.0) return Enclosure::point(0.0);
  double lo = c * x.lo;
  double hi = c * x.hi;
  if (c < 0.0) std::swap(lo, hi);
  // Powers of two scale exactly.
  int exp = 0;
  if (std::frexp(std::fabs(c), &exp) == 0.5) return {lo, hi};
  return {down(lo), up(hi)};
}

PartialSum partial_sum(const TermRule& rule, std::int64_t last) {
  if (last < rule.start) throw OutOfRange("partial sum must include the first term");
  const double q = rule.ratio_bound(last);
  if (!(q >= 0.0 && q < 1.0)) {
    throw NonContracting("ratio bound at index " + std::to_string(last) + " is not below 1");
  }
  PartialSum out;
  CompensatedSum acc;
  for (std::int64_t n = rule.start; n <= last; ++n) acc.add(checked_term(rule, n));
  out.sum = acc.value();
  out.tail = std::fabs(checked_term(rule, last + 1)) / (1.0 - q);
  return out;
}

Enclosure eval_tail_bounded(const TermRule& rule, double eps) {
  require_eps(eps);
  if (!rule.term || !rule.ratio_bound) {
    throw OutOfRange("tail-bounded evaluation needs both a term and a ratio bound");
  }
  const double budget = eps / 2;
  CompensatedSum acc;
  bool contracting = false;
  double tail = kInf;

  double current = checked_term(rule, rule.start);
  for (std::int64_t n = rule.start; n < rule.start + kMaxSeriesTerms; ++n) {
    acc.add(current);
    const double next = checked_term(rule, n + 1);
    const double q = rule.ratio_bound(n);
    if (q >= 0.0 && q < 1.0) {
      contracting = true;
      tail = std::fabs(next) / (1.0 - q);
      if (tail <= budget) break;
    }
    current = next;
  }
  if (!contracting) {
    throw NonContracting("no index with ratio bound below 1 within " +
                         std::to_string(kMaxSeriesTerms) + " terms");
  }
  // Rounding of the tail quotient itself.
  if (tail != 0.0) tail *= 1.0 + 4 * kUnitRoundoff;
  const double slack = acc.rounding() + rule.term_ulps * kUnitRoundoff * acc.abs_sum();
  return build(acc.value(), tail, slack);
}

Enclosure eval_alternating(const TermRule& rule, double eps) {
  require_eps(eps);
  if (!rule.term) throw OutOfRange("alternating evaluation needs a term");
  const double budget = eps / 2;
  const std::int64_t plain_cap = rule.moment_sequence ? kPlainPrefix : kMaxSeriesTerms;

  AlternationCheck check(rule.start);
  CompensatedSum acc;
  double current = checked_term(rule, rule.start);
  Enclosure prefix{-kInf, kInf};
  for (std::int64_t n = rule.start; n < rule.start + plain_cap; ++n) {
    if (!check.feed(current)) {
      // A vanishing term ends a strictly decreasing alternating series.
      const double slack = acc.rounding() + rule.term_ulps * kUnitRoundoff * acc.abs_sum();
      return build(acc.value(), 0.0, slack);
    }
    acc.add(current);
    const double next = checked_term(rule, n + 1);
    // The step to S_{N+1} is widened by one ulp inside between_partial_sums.
    const double slack = acc.rounding() +
                         rule.term_ulps * kUnitRoundoff * (acc.abs_sum() + std::fabs(next));
    if (std::fabs(next) <= budget) {
      check.feed(next);
      return between_partial_sums(acc.value(), next, slack);
    }
    prefix = between_partial_sums(acc.value(), next, slack);
    current = next;
  }
  if (rule.moment_sequence) return accelerated_alternating(rule, eps, prefix);
  throw NonContracting("alternating remainder did not reach the tolerance within " +
                       std::to_string(kMaxSeriesTerms) + " terms");
}

}  // namespace bohr
