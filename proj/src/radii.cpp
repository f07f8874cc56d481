#include "bohr/radii.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "terms.hpp"

namespace bohr {
namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Shortest text that reads back to x.
std::string num(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// Closed-form value with a relative rounding budget of `ops` operations on
// terms of total magnitude `scale`.
Enclosure closed_form(double value, double scale, int ops) {
  return Enclosure::around(value, 2.0 * ops * kUnitRoundoff * scale);
}

Enclosure q1(const T31& p, double r) {
  const double b = p.beta;
  const double quad = (2.0 - 4.0 * b) * r * r;
  const double lin = (2.0 + b) * r;
  const double c = p.form == Q1Form::derived ? b : 1.0;
  if (r == 0.0) return Enclosure::point(-c);
  return closed_form(quad + lin - c, std::fabs(quad) + lin + c, 8);
}

Enclosure q2(const T32& p, double r) {
  const double b = p.beta;
  const double r2 = r * r;
  const double geo = 2.0 * (1.0 - b) * r2 / (1.0 - r);
  const double one_minus = 1.0 - r2;
  const double area = 4.0 * (1.0 - b) * (1.0 - b) * (2.0 - r2) * r2 * r2 / (one_minus * one_minus);
  return closed_form(r + geo + r2 + area - b, r + geo + r2 + area + b, 24);
}

// Each series gets a share of eps so that the total stays within eps.
Enclosure q3(const T33& p, double r, double eps) {
  const Enclosure s = eval_tail_bounded(terms::w0h_majorant(p.alpha, r), eps / 8);
  const Enclosure c = w0h_alternating_constant(p.alpha, eps / 8);
  return 4.0 * s - 2.0 * c + closed_form(2.0 * r - 1.0, 1.0, 1);
}

Enclosure q4(const T34& p, double r, double eps) {
  const Enclosure s = eval_tail_bounded(terms::w0h_majorant(p.alpha, r), eps / 8);
  const Enclosure area = eval_tail_bounded(terms::w0h_area(p.alpha, r), eps / 16);
  const Enclosure c = w0h_alternating_constant(p.alpha, eps / 8);
  return 2.0 * s + 4.0 * area - 2.0 * c + closed_form(r + r * r - 1.0, 3.0, 3);
}

Enclosure q5(const T35& p, double r, double eps) {
  const Enclosure lattice = eval_tail_bounded(terms::gkh_lattice(p.k, p.alpha, r, false), eps / 8);
  const Enclosure s = eval_tail_bounded(terms::gkh_majorant(p.k, p.alpha, r), eps / 8);
  const Enclosure c = gkh_alternating_constant(p.k, p.alpha, eps / 8);
  return 2.0 * lattice + 2.0 * s - 2.0 * c + closed_form(2.0 * r - 1.0, 1.0, 1);
}

Enclosure q6(const T36& p, double r, double eps) {
  const Enclosure s = eval_tail_bounded(terms::gkh_majorant(p.k, p.alpha, r), eps / 8);
  const Enclosure area = eval_tail_bounded(terms::gkh_area(p.k, p.alpha, r), eps / 16);
  const Enclosure c = gkh_alternating_constant(p.k, p.alpha, eps / 8);
  return 2.0 * s + 4.0 * area - 2.0 * c + closed_form(r + r * r - 1.0, 3.0, 3);
}

Enclosure qa(const TheoremA& p, double r) {
  const double power = std::pow(r, static_cast<double>(p.n));
  const double left = 2.0 * (1.0 + r) * power;
  const double right = (1.0 - r) * (1.0 - r);
  return closed_form(left - right, left + right, 8);
}

}  // namespace

RadiusProblem::RadiusProblem(Variant v) : value_(v) {
  std::visit(overloaded{
                 [](const T31& p) { ClassParams{TildeG0H{p.beta}}; },
                 [](const T32& p) { ClassParams{TildeG0H{p.beta}}; },
                 [](const T33& p) { ClassParams{W0H{p.alpha}}; },
                 [](const T34& p) { ClassParams{W0H{p.alpha}}; },
                 [](const T35& p) { ClassParams{GkH{p.alpha, p.k}}; },
                 [](const T36& p) { ClassParams{GkH{p.alpha, p.k}}; },
                 [](const TheoremA& p) {
                   if (p.n < 1) {
                     throw InvalidParameter("N = " + std::to_string(p.n) + " violates N >= 1");
                   }
                 },
             },
             value_);
}

std::string RadiusProblem::tag() const {
  static constexpr const char* kTags[] = {"t31", "t32", "t33", "t34", "t35", "t36", "ta"};
  return kTags[value_.index()];
}

std::string RadiusProblem::describe() const {
  return std::visit(
      overloaded{
          [](const T31& p) {
            return "t31(beta=" + num(p.beta) +
                   (p.form == Q1Form::statement ? ", statement form)" : ")");
          },
          [](const T32& p) { return "t32(beta=" + num(p.beta) + ")"; },
          [](const T33& p) { return "t33(alpha=" + num(p.alpha) + ")"; },
          [](const T34& p) { return "t34(alpha=" + num(p.alpha) + ")"; },
          [](const T35& p) { return "t35(k=" + std::to_string(p.k) + ", alpha=" + num(p.alpha) + ")"; },
          [](const T36& p) { return "t36(k=" + std::to_string(p.k) + ", alpha=" + num(p.alpha) + ")"; },
          [](const TheoremA& p) { return "ta(N=" + std::to_string(p.n) + ")"; },
      },
      value_);
}

std::optional<ClassParams> RadiusProblem::harmonic_class() const {
  return std::visit(overloaded{
                        [](const T31& p) -> std::optional<ClassParams> { return TildeG0H{p.beta}; },
                        [](const T32& p) -> std::optional<ClassParams> { return TildeG0H{p.beta}; },
                        [](const T33& p) -> std::optional<ClassParams> { return W0H{p.alpha}; },
                        [](const T34& p) -> std::optional<ClassParams> { return W0H{p.alpha}; },
                        [](const T35& p) -> std::optional<ClassParams> { return GkH{p.alpha, p.k}; },
                        [](const T36& p) -> std::optional<ClassParams> { return GkH{p.alpha, p.k}; },
                        [](const TheoremA&) -> std::optional<ClassParams> { return std::nullopt; },
                    },
                    value_);
}

bool RadiusProblem::uses_modulus() const {
  return std::holds_alternative<T31>(value_) || std::holds_alternative<T33>(value_) ||
         std::holds_alternative<T35>(value_) || std::holds_alternative<TheoremA>(value_);
}

Enclosure q_value(const RadiusProblem& problem, double r, double eps) {
  if (!(r >= 0.0 && r < 1.0)) throw OutOfRange("radius r = " + num(r) + " must lie in [0, 1)");
  if (!(eps > 0.0)) throw OutOfRange("eps must be positive");
  return std::visit(overloaded{
                        [r](const T31& p) { return q1(p, r); },
                        [r](const T32& p) { return q2(p, r); },
                        [r, eps](const T33& p) { return q3(p, r, eps); },
                        [r, eps](const T34& p) { return q4(p, r, eps); },
                        [r, eps](const T35& p) { return q5(p, r, eps); },
                        [r, eps](const T36& p) { return q6(p, r, eps); },
                        [r](const TheoremA& p) { return qa(p, r); },
                    },
                    problem.variant());
}

namespace {

enum class Sign { negative, positive, ambiguous };

struct SignedValue {
  Sign sign;
  Enclosure value;
};

SignedValue certified_sign(const RadiusProblem& problem, double r, const SolveOptions& opts) {
  Enclosure q{};
  for (double eps = opts.eps_start;; eps /= 100.0) {
    if (eps < opts.eps_min) eps = opts.eps_min;
    q = q_value(problem, r, eps);
    if (q.certainly_negative()) return {Sign::negative, q};
    if (q.certainly_positive()) return {Sign::positive, q};
    if (eps == opts.eps_min) break;
  }
  return {Sign::ambiguous, q};
}

}  // namespace

RootResult solve_radius(const RadiusProblem& problem, double tol, const SolveOptions& opts) {
  if (!(tol > 0.0)) throw OutOfRange("tolerance must be positive");
  double lo = 0.0;
  double hi = 1.0 - opts.right_margin;
  const SignedValue left = certified_sign(problem, lo, opts);
  if (left.sign != Sign::negative) {
    throw NoBracket(problem.describe() + ": Q(0) is not certified negative");
  }
  const SignedValue right = certified_sign(problem, hi, opts);
  if (right.sign != Sign::positive) {
    throw NoBracket(problem.describe() + ": Q(" + num(hi) + ") is not certified positive");
  }

  RootResult result;
  result.q_lo = left.value;
  result.q_hi = right.value;
  while ((hi - lo) / 2 > tol) {
    const double mid = lo + (hi - lo) / 2;
    if (mid == lo || mid == hi) break;
    const SignedValue s = certified_sign(problem, mid, opts);
    ++result.iterations;
    if (s.sign == Sign::ambiguous) {
      RootResult partial = result;
      partial.r = mid;
      partial.half_width = (hi - lo) / 2;
      throw SignAmbiguous(problem.describe() + ": sign of Q(" + num(mid) +
                              ") undecided at the smallest series tolerance",
                          partial);
    }
    if (s.sign == Sign::negative) {
      lo = mid;
      result.q_lo = s.value;
    } else {
      hi = mid;
      result.q_hi = s.value;
    }
  }
  result.r = lo + (hi - lo) / 2;
  result.half_width = (hi - lo) / 2;
  return result;
}

double solve_q1_closed_form(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw OutOfRange("beta = " + num(beta) + " violates 0 < beta < 1");
  }
  const double a = 2.0 - 4.0 * beta;
  const double b = 2.0 + beta;
  if (a == 0.0) return beta / b;
  // Rationalized positive root 2 beta / (b + sqrt(b^2 + 4 a beta)); no
  // cancellation for either sign of a.
  return 2.0 * beta / (b + std::sqrt(b * b + 4.0 * a * beta));
}

}  // namespace bohr
