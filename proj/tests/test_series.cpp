#include <doctest.h>

#include <cmath>
#include <random>

#include "bohr/errors.hpp"
#include "bohr/series.hpp"
#include "oracles.hpp"

using bohr::Enclosure;
using bohr::TermRule;

namespace {

TermRule geometric(double r, std::int64_t start = 2) {
  TermRule rule;
  rule.start = start;
  rule.term = [r](std::int64_t n) { return std::pow(r, static_cast<double>(n)); };
  rule.ratio_bound = [r](std::int64_t) { return r; };
  rule.term_ulps = 4;
  return rule;
}

// r^n / (n (n alpha + 1 - alpha)), n >= 2.
TermRule weighted(double alpha, double r) {
  TermRule rule;
  rule.start = 2;
  rule.term = [=](std::int64_t n) {
    const double nd = static_cast<double>(n);
    return std::pow(r, nd) / (nd * (nd * alpha + 1.0 - alpha));
  };
  rule.ratio_bound = [r](std::int64_t) { return r; };
  rule.term_ulps = 8;
  return rule;
}

// (-1)^{n-1} r^n / n, n >= 2.
TermRule alternating_log(double r) {
  TermRule rule;
  rule.start = 2;
  rule.term = [r](std::int64_t n) {
    const double nd = static_cast<double>(n);
    return (n % 2 == 0 ? -1.0 : 1.0) * std::pow(r, nd) / nd;
  };
  rule.term_ulps = 8;
  rule.moment_sequence = true;
  return rule;
}

}  // namespace

TEST_CASE("geometric tail encloses r^2 / (1 - r)") {
  const Enclosure e = bohr::eval_tail_bounded(geometric(0.5), 1e-12);
  CHECK(e.contains(0.5));
  CHECK(e.width() <= 2e-12);
}

TEST_CASE("all terms vanish at r = 0") {
  TermRule rule = weighted(0.0, 0.0);
  const Enclosure e = bohr::eval_tail_bounded(rule, 1e-12);
  CHECK(e.lo == 0.0);
  CHECK(e.hi == 0.0);
}

TEST_CASE("alpha = 0 weighted series matches -ln(1 - r) - r") {
  const Enclosure e = bohr::eval_tail_bounded(weighted(0.0, 0.3), 1e-13);
  CHECK(e.contains(-std::log(0.7) - 0.3));
  CHECK(e.contains(0.0566749439387));
  CHECK(e.width() < 1e-12);
}

TEST_CASE("a ratio bound that never contracts is rejected") {
  CHECK_THROWS_AS(bohr::eval_tail_bounded(geometric(1.0), 1e-10), bohr::NonContracting);
  CHECK_THROWS_AS(bohr::eval_tail_bounded(geometric(1.5), 1e-10), bohr::NonContracting);
}

TEST_CASE("non-positive tolerance is rejected") {
  CHECK_THROWS_AS(bohr::eval_tail_bounded(geometric(0.5), 0.0), bohr::OutOfRange);
  CHECK_THROWS_AS(bohr::eval_alternating(alternating_log(0.5), -1.0), bohr::OutOfRange);
}

TEST_CASE("near r = 1 the capped enclosure stays sound") {
  const double r = 1.0 - 1e-6;
  const Enclosure e = bohr::eval_tail_bounded(geometric(r), 1e-12);
  const double exact = r * r / (1.0 - r);
  CHECK(e.contains(exact));
  CHECK(e.width() > 1e-12);
}

TEST_CASE("alternating harmonic tail from n = 2 is ln 2 - 1") {
  TermRule rule = alternating_log(1.0);
  const Enclosure e = bohr::eval_alternating(rule, 1e-10);
  CHECK(e.contains(oracle::kLn2 - 1.0));
  CHECK(e.width() <= 1e-10);

  SUBCASE("without the moment-sequence property the plain bound cannot reach 1e-10") {
    rule.moment_sequence = false;
    CHECK_THROWS_AS(bohr::eval_alternating(rule, 1e-10), bohr::NonContracting);
  }
}

TEST_CASE("reindexed series (-1)^j / (1 + j) from j = 1 is ln 2 - 1") {
  TermRule rule;
  rule.start = 1;
  rule.term = [](std::int64_t j) { return (j % 2 == 0 ? 1.0 : -1.0) / (1.0 + static_cast<double>(j)); };
  rule.term_ulps = 2;
  rule.moment_sequence = true;
  const Enclosure e = bohr::eval_alternating(rule, 1e-12);
  CHECK(e.contains(oracle::kLn2 - 1.0));
  CHECK(e.width() <= 1e-12);
}

TEST_CASE("a single nonzero term is summed exactly") {
  TermRule rule;
  rule.start = 3;
  rule.term = [](std::int64_t n) { return n == 3 ? -0.125 : 0.0; };
  const Enclosure e = bohr::eval_alternating(rule, 1e-12);
  CHECK(e.lo == -0.125);
  CHECK(e.hi == -0.125);
}

TEST_CASE("sign repetition and growth are reported") {
  TermRule same_sign;
  same_sign.start = 1;
  same_sign.term = [](std::int64_t n) { return 1.0 / static_cast<double>(n); };
  CHECK_THROWS_AS(bohr::eval_alternating(same_sign, 1e-6), bohr::NotAlternating);

  TermRule growing;
  growing.start = 1;
  growing.term = [](std::int64_t n) {
    return (n % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(n);
  };
  CHECK_THROWS_AS(bohr::eval_alternating(growing, 1e-6), bohr::NotAlternating);
}

TEST_CASE("enclosure arithmetic rounds outward") {
  const Enclosure third = Enclosure::around(1.0 / 3.0, 0.0);
  const Enclosure sum = third + third + third;
  CHECK(sum.contains(third.lo + third.lo + third.lo));
  const Enclosure exact = Enclosure::point(0.5) + Enclosure::point(0.25);
  CHECK(exact.lo == 0.75);
  CHECK(exact.hi == 0.75);
  const Enclosure scaled = 3.0 * Enclosure{1.0, 2.0};
  CHECK(scaled.contains(Enclosure{3.0, 6.0}));
  const Enclosure neg = -2.0 * Enclosure{1.0, 2.0};
  CHECK(neg.lo == -4.0);
  CHECK(neg.hi == -2.0);
}

TEST_CASE("property: closed forms lie inside the enclosures") {
  std::mt19937_64 gen(20240611);
  for (int i = 0; i < 1000; ++i) {
    const double r = oracle::uniform(gen, 0.0, 0.95);
    const double eps = std::pow(10.0, oracle::uniform(gen, -14.0, -4.0));

    const Enclosure geo = bohr::eval_tail_bounded(geometric(r), eps);
    REQUIRE(geo.contains(r * r / (1.0 - r)));

    const Enclosure log_series = bohr::eval_tail_bounded(weighted(0.0, r), eps);
    REQUIRE(log_series.contains(-std::log1p(-r) - r));

    const Enclosure alt = bohr::eval_alternating(alternating_log(r), eps);
    REQUIRE(alt.contains(std::log1p(r) - r));
  }
}

TEST_CASE("property: doubling the cut index stays within the tail bound") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 200; ++i) {
    const double r = oracle::uniform(gen, 0.01, 0.95);
    const double alpha = oracle::uniform(gen, 0.0, 0.99);
    const auto last = static_cast<std::int64_t>(oracle::uniform(gen, 2.0, 200.0));
    const TermRule rule = weighted(alpha, r);
    const auto coarse = bohr::partial_sum(rule, last);
    const auto fine = bohr::partial_sum(rule, 2 * last);
    REQUIRE(std::fabs(fine.sum - coarse.sum) <= coarse.tail * (1.0 + 1e-12) + 1e-16);
  }
}

TEST_CASE("property: refining eps shrinks the enclosure") {
  std::mt19937_64 gen(99);
  for (int i = 0; i < 300; ++i) {
    const double r = oracle::uniform(gen, 0.0, 0.9);
    const double alpha = oracle::uniform(gen, 0.0, 0.99);
    const double eps = std::pow(10.0, oracle::uniform(gen, -12.0, -3.0));
    const TermRule rule = weighted(alpha, r);
    const Enclosure coarse = bohr::eval_tail_bounded(rule, eps);
    const Enclosure fine = bohr::eval_tail_bounded(rule, eps / 10);
    REQUIRE(coarse.contains(fine));

    const Enclosure alt_coarse = bohr::eval_alternating(alternating_log(r), eps);
    const Enclosure alt_fine = bohr::eval_alternating(alternating_log(r), eps / 10);
    REQUIRE(alt_coarse.contains(alt_fine));
  }
}
