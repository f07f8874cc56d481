#include "bohr/verify.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "bohr/errors.hpp"
#include "bohr/kernels.hpp"

namespace bohr {
namespace {

using cplx = std::complex<double>;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw OutOfRange("radius must lie in [0, 1)");
}

// Shortest text that reads back to x.
std::string num(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// Same class and identical parameters.
bool same_class(const ClassParams& x, const ClassParams& y) {
  if (x.variant().index() != y.variant().index()) return false;
  return std::visit(overloaded{
                        [&](const TildeG0H& c) { return c.beta == std::get<TildeG0H>(y.variant()).beta; },
                        [&](const W0H& c) { return c.alpha == std::get<W0H>(y.variant()).alpha; },
                        [&](const GkH& c) {
                          const auto& o = std::get<GkH>(y.variant());
                          return c.k == o.k && c.alpha == o.alpha;
                        },
                    },
                    x.variant());
}

// Portable uniform draw in [0, 1) from the standardized engine output.
double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

double bohr_sum(const HarmonicModel& model, double r, int from_index) {
  require_radius(r);
  if (from_index < 2) throw OutOfRange("Bohr sum starts at index 2 or later");
  double sum = 0.0;
  double power = std::pow(r, from_index);
  for (int n = from_index; n <= model.truncation(); ++n, power *= r) {
    sum += (std::abs(model.a(n)) + std::abs(model.b(n))) * power;
  }
  return r + sum;
}

double modulus_sup(const HarmonicModel& model, double r, int grid) {
  require_radius(r);
  if (r == 0.0) return 0.0;
  const long work = static_cast<long>(grid) * (model.truncation() + 1);
#ifdef _OPENMP
  if (!omp_in_parallel() && work >= (1L << 15)) {
    return kernels::modulus_sup_parallel(model, r, grid);
  }
#endif
  (void)work;
  return kernels::modulus_sup_serial(model, r, grid);
}

double area_ratio(const HarmonicModel& model, double r) {
  require_radius(r);
  const double r2 = r * r;
  double sum = 0.0;
  double power = r2 * r2;
  for (int n = 2; n <= model.truncation(); ++n, power *= r2) {
    sum += n * (std::norm(model.a(n)) - std::norm(model.b(n))) * power;
  }
  return r2 + sum;
}

double theorem_lhs(const HarmonicModel& model, const RadiusProblem& theorem, double r,
                   int modulus_grid) {
  const auto cls = theorem.harmonic_class();
  if (!cls) throw MismatchedVariant("Theorem A has no harmonic left side");
  const double bohr = bohr_sum(model, r, cls->first_free_index());
  if (theorem.uses_modulus()) return modulus_sup(model, r, modulus_grid) + bohr;
  return bohr + area_ratio(model, r);
}

Verdict check_theorem(const HarmonicModel& model, const ClassParams& cls,
                      const RadiusProblem& theorem, double r, double tol) {
  const auto theorem_class = theorem.harmonic_class();
  if (!theorem_class || !same_class(*theorem_class, cls)) {
    throw MismatchedVariant(theorem.describe() + " does not apply to " + cls.describe());
  }
  const double lhs = theorem_lhs(model, theorem, r);
  const Enclosure rhs = boundary_distance_lower(cls);
  const double worst = rhs.lo - lhs;
  const double best = rhs.hi - lhs;

  Verdict v;
  v.margin = rhs.mid() - lhs;
  v.at_r = r;
  if (worst >= -tol) {
    v.status = Status::holds;
  } else if (best < -tol) {
    v.status = Status::fails;
  } else {
    v.status = Status::inconclusive;
  }
  v.details = theorem.describe() + " lhs=" + num(lhs) + " rhs=[" + num(rhs.lo) + ", " +
              num(rhs.hi) + "]";
  return v;
}

SharpnessReport sharpness_report(const RadiusProblem& theorem, double tol) {
  if (!(tol > 0.0)) throw OutOfRange("sharpness tolerance must be positive");
  const auto cls = theorem.harmonic_class();
  if (!cls) throw MismatchedVariant("Theorem A has no harmonic extremal in this library");

  SharpnessReport report;
  report.root = solve_radius(theorem, 1e-12);
  const double r = report.root.r + report.root.half_width;

  // Coefficients are at most 2, so the modulus, Bohr and area tails together
  // stay below 8 (N + 1) r^{N+1} / (1 - r)^2.
  int n = std::max(2, cls->first_free_index());
  while (8.0 * (n + 1) * std::pow(r, n + 1) / ((1.0 - r) * (1.0 - r)) > 0.1 * tol) ++n;
  report.truncation = n;

  const HarmonicModel model = extremal_model(*cls, n);
  report.lhs = theorem_lhs(model, theorem, report.root.r);
  report.rhs = boundary_distance_lower(*cls).mid();
  report.gap = report.lhs - report.rhs;
  return report;
}

double sharpness_gap(const RadiusProblem& theorem, double tol) {
  return sharpness_report(theorem, tol).gap;
}

HarmonicModel sample_admissible_model(const ClassParams& cls, std::uint64_t seed,
                                      int truncation) {
  if (truncation < 2) throw OutOfRange("truncation must be at least 2");
  std::mt19937_64 gen(seed);
  HarmonicModel::Coeffs a(static_cast<std::size_t>(truncation) + 1, 0.0);
  HarmonicModel::Coeffs b(a.size(), 0.0);
  a[1] = 1.0;
  // Keeps |a_n| + |b_n| strictly below the bound after rounding.
  constexpr double kShrink = 1.0 - 1e-12;
  for (int n = cls.first_free_index(); n <= truncation; ++n) {
    const double bound = coeff_bound_sum(cls, n);
    const double mode = uniform01(gen);
    double total;
    if (mode < 0.3) {
      total = bound;  // saturate the bound
    } else if (mode < 0.4) {
      total = 0.0;
    } else {
      total = bound * uniform01(gen);
    }
    const double split_mode = uniform01(gen);
    const double split = split_mode < 0.25 ? 1.0 : uniform01(gen);
    const double phase_a = 2.0 * std::numbers::pi * uniform01(gen);
    const double phase_b = 2.0 * std::numbers::pi * uniform01(gen);
    a[n] = std::polar(kShrink * total * split, phase_a);
    b[n] = std::polar(kShrink * total * (1.0 - split), phase_b);
  }
  return HarmonicModel(std::move(a), std::move(b));
}

Verdict membership_spot_check(const HarmonicModel& model, const ClassParams& cls,
                              const SpotGrid& grid) {
  if (grid.radial < 4 || grid.angular < 4) throw OutOfRange("spot grids need at least 4 points");
  if (!(grid.r_max > 0.0 && grid.r_max <= 0.999)) throw OutOfRange("r_max must lie in (0, 0.999]");

  Verdict v;
  if (!satisfies_normalization(model, cls)) {
    v.status = Status::fails;
    v.margin = -std::numeric_limits<double>::infinity();
    v.details = "coefficients below index " + std::to_string(cls.first_free_index()) +
                " must vanish for " + cls.describe();
    return v;
  }

  // Both sides of every defining inequality are sum_n w_n c_n z^{n-1}.
  const int n_max = model.truncation();
  std::vector<double> weight(static_cast<std::size_t>(n_max) + 1, 1.0);
  double shift = 0.0;
  std::visit(overloaded{
                 [&](const TildeG0H& c) { shift = c.beta; },
                 [&](const W0H& c) {
                   for (int n = 1; n <= n_max; ++n) weight[n] = n * (1.0 + c.alpha * (n - 1));
                 },
                 [&](const GkH& c) {
                   for (int n = 1; n <= n_max; ++n) weight[n] = 1.0 + c.alpha * (n - 1);
                 },
             },
             cls.variant());

  v.margin = std::numeric_limits<double>::infinity();
  double worst_theta = 0.0;
  for (int i = 1; i <= grid.radial; ++i) {
    const double r = grid.r_max * i / grid.radial;
    for (int j = 0; j < grid.angular; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / grid.angular;
      const cplx z = std::polar(r, theta);
      cplx left = 0.0;
      cplx right = 0.0;
      for (int n = n_max; n >= 1; --n) {
        left = left * z + weight[n] * model.a(n);
        right = right * z + weight[n] * model.b(n);
      }
      const double margin = left.real() - shift - std::abs(right);
      if (margin < v.margin) {
        v.margin = margin;
        v.at_r = r;
        worst_theta = theta;
      }
    }
  }
  v.status = v.margin > 0.0 ? Status::holds : Status::fails;
  v.details = cls.describe() + " min Re(L)-|R| = " + num(v.margin) + " at r=" + num(v.at_r) +
              " theta=" + num(worst_theta);
  return v;
}

double theorem_b_functional(std::span<const std::complex<double>> coeffs, double r) {
  require_radius(r);
  double majorant = 0.0;
  double area = 0.0;
  double power = 1.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n, power *= r) {
    majorant += std::abs(coeffs[n]) * power;
    if (n >= 1) area += static_cast<double>(n) * std::norm(coeffs[n]) * power * power;
  }
  return majorant + 16.0 / 9.0 * area;
}

namespace {

struct SampleOutcome {
  bool filtered = false;
  Verdict verdict;
  int dominance_violations = 0;
};

struct Campaign {
  ClassParams cls;
  double r;
  HarmonicModel majorant;
};

Campaign prepare(const RadiusProblem& theorem, const FuzzConfig& config) {
  const auto cls = theorem.harmonic_class();
  if (!cls) throw MismatchedVariant("fuzzing needs a harmonic-class theorem");
  if (config.samples < 0) throw OutOfRange("sample count must be nonnegative");
  const RootResult root = solve_radius(theorem, 1e-12);
  const int trunc = std::max(config.truncation, cls->first_free_index());
  return Campaign{*cls, config.radius_fraction * root.r, majorant_model(*cls, trunc)};
}

SampleOutcome evaluate_sample(const RadiusProblem& theorem, const FuzzConfig& config,
                              const Campaign& campaign, std::size_t i) {
  SampleOutcome out;
  const HarmonicModel model = sample_admissible_model(
      campaign.cls, config.seed + i, campaign.majorant.truncation());
  if (config.membership_filter &&
      membership_spot_check(model, campaign.cls, SpotGrid{16, 64, 0.95}).status != Status::holds) {
    out.filtered = true;
    return out;
  }
  out.verdict = check_theorem(model, campaign.cls, theorem, campaign.r, config.tol);

  const int from = campaign.cls.first_free_index();
  for (int j = 1; j <= config.dominance_points; ++j) {
    const double r = 0.99 * j / config.dominance_points;
    const double bohr = bohr_sum(model, r, from);
    const double bohr_max = bohr_sum(campaign.majorant, r, from);
    const double area = area_ratio(model, r);
    const double area_max = area_ratio(campaign.majorant, r);
    if (bohr > bohr_max * (1.0 + 1e-12)) ++out.dominance_violations;
    if (area > area_max * (1.0 + 1e-12)) ++out.dominance_violations;
  }
  return out;
}

FuzzReport aggregate(const RadiusProblem& theorem, const FuzzConfig& config,
                     const Campaign& campaign, const std::vector<SampleOutcome>& outcomes) {
  FuzzReport report;
  report.problem = theorem.describe();
  report.r = campaign.r;
  report.samples = static_cast<int>(outcomes.size());
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const SampleOutcome& o = outcomes[i];
    if (o.filtered) {
      ++report.filtered;
      continue;
    }
    report.dominance_violations += o.dominance_violations;
    switch (o.verdict.status) {
      case Status::holds: ++report.holds; break;
      case Status::fails: ++report.fails; break;
      case Status::inconclusive: ++report.inconclusive; break;
    }
    if (o.verdict.margin < report.worst_margin) {
      report.worst_margin = o.verdict.margin;
      report.worst_seed = config.seed + i;
      report.witness = o.verdict.details;
    }
  }
  if (report.holds + report.fails + report.inconclusive == 0) report.worst_margin = 0.0;
  return report;
}

}  // namespace

FuzzReport fuzz_campaign(const RadiusProblem& theorem, const FuzzConfig& config) {
  const Campaign campaign = prepare(theorem, config);
  const auto outcomes = kernels::ordered_map(
      static_cast<std::size_t>(config.samples),
      [&](std::size_t i) { return evaluate_sample(theorem, config, campaign, i); });
  return aggregate(theorem, config, campaign, outcomes);
}

FuzzReport fuzz_campaign_serial(const RadiusProblem& theorem, const FuzzConfig& config) {
  const Campaign campaign = prepare(theorem, config);
  const auto outcomes = kernels::ordered_map_serial(
      static_cast<std::size_t>(config.samples),
      [&](std::size_t i) { return evaluate_sample(theorem, config, campaign, i); });
  return aggregate(theorem, config, campaign, outcomes);
}

}  // namespace bohr
