#pragma once

// Term rules for the series shared by the growth envelopes, the distance
// constants and the radius functions. Internal to the library.

#include <cmath>
#include <cstdint>

#include "bohr/series.hpp"

namespace bohr::terms {

// pow, one multiply and one divide per term, with margin.
inline constexpr double kTermUlps = 8.0;

inline double alt_sign(std::int64_t n) { return (n % 2 == 0) ? 1.0 : -1.0; }

// n (n alpha + 1 - alpha), the W0H coefficient denominator.
inline double w0h_denominator(double alpha, std::int64_t n) {
  const double nd = static_cast<double>(n);
  return nd * (nd * alpha + 1.0 - alpha);
}

// 1 + (n - 1) alpha, the GkH coefficient denominator.
inline double gkh_denominator(double alpha, std::int64_t n) {
  return 1.0 + static_cast<double>(n - 1) * alpha;
}

// sum_{n>=2} r^n / (n (n alpha + 1 - alpha)).
inline TermRule w0h_majorant(double alpha, double r) {
  TermRule rule;
  rule.start = 2;
  rule.term = [=](std::int64_t n) {
    return std::pow(r, static_cast<double>(n)) / w0h_denominator(alpha, n);
  };
  rule.ratio_bound = [=](std::int64_t) { return r; };
  rule.term_ulps = kTermUlps;
  rule.moment_sequence = true;
  return rule;
}

// sum_{n>=2} (-1)^{n-1} r^n / (n (n alpha + 1 - alpha)).
inline TermRule w0h_alternating(double alpha, double r) {
  TermRule rule = w0h_majorant(alpha, r);
  rule.term = [=](std::int64_t n) {
    return -alt_sign(n) * std::pow(r, static_cast<double>(n)) / w0h_denominator(alpha, n);
  };
  return rule;
}

// sum_{n>=2} r^{2n} / (n (n alpha + 1 - alpha)^2).
inline TermRule w0h_area(double alpha, double r) {
  TermRule rule;
  rule.start = 2;
  rule.term = [=](std::int64_t n) {
    const double nd = static_cast<double>(n);
    const double lin = nd * alpha + 1.0 - alpha;
    return std::pow(r, 2.0 * nd) / (nd * lin * lin);
  };
  rule.ratio_bound = [=](std::int64_t) { return r * r; };
  rule.term_ulps = kTermUlps;
  return rule;
}

// sum_{j>=1} s_j r^{kj+1} / (1 + kj alpha) with s_j = 1 or (-1)^j.
inline TermRule gkh_lattice(int k, double alpha, double r, bool alternating) {
  TermRule rule;
  rule.start = 1;
  rule.term = [=](std::int64_t j) {
    const double kj = static_cast<double>(k) * static_cast<double>(j);
    const double mag = std::pow(r, kj + 1.0) / (1.0 + kj * alpha);
    return alternating ? alt_sign(j) * mag : mag;
  };
  rule.ratio_bound = [=](std::int64_t) { return std::pow(r, static_cast<double>(k)); };
  rule.term_ulps = kTermUlps;
  rule.moment_sequence = true;
  return rule;
}

// sum_{n>=k+1} r^n / (1 + (n - 1) alpha).
inline TermRule gkh_majorant(int k, double alpha, double r) {
  TermRule rule;
  rule.start = k + 1;
  rule.term = [=](std::int64_t n) {
    return std::pow(r, static_cast<double>(n)) / gkh_denominator(alpha, n);
  };
  rule.ratio_bound = [=](std::int64_t) { return r; };
  rule.term_ulps = kTermUlps;
  return rule;
}

// sum_{n>=k+1} n r^{2n} / (1 + (n - 1) alpha)^2.
inline TermRule gkh_area(int k, double alpha, double r) {
  TermRule rule;
  rule.start = k + 1;
  rule.term = [=](std::int64_t n) {
    const double nd = static_cast<double>(n);
    const double den = gkh_denominator(alpha, n);
    return nd * std::pow(r, 2.0 * nd) / (den * den);
  };
  // (m+1)/m is decreasing, and the squared denominator ratio is <= 1.
  rule.ratio_bound = [=](std::int64_t n) {
    return (static_cast<double>(n) + 1.0) / static_cast<double>(n) * r * r;
  };
  rule.term_ulps = kTermUlps;
  return rule;
}

}  // namespace bohr::terms
