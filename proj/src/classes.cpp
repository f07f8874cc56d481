#include "bohr/classes.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "bohr/errors.hpp"
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

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void require_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw OutOfRange("radius r = " + format_double(r) + " must lie in [0, 1)");
  }
}

}  // namespace

ClassParams::ClassParams(TildeG0H params) : value_(params) {
  if (!(params.beta > 0.0 && params.beta < 1.0)) {
    throw InvalidParameter("beta = " + format_double(params.beta) +
                           " violates 0 < beta < 1");
  }
}

ClassParams::ClassParams(W0H params) : value_(params) {
  if (!(params.alpha >= 0.0 && params.alpha < 1.0)) {
    throw InvalidParameter("alpha = " + format_double(params.alpha) +
                           " violates 0 <= alpha < 1");
  }
}

ClassParams::ClassParams(GkH params) : value_(params) {
  if (params.k < 1) {
    throw InvalidParameter("k = " + std::to_string(params.k) + " violates k >= 1");
  }
  // alpha >= 1/k, written without the division so alpha = 1/k passes exactly.
  if (!std::isfinite(params.alpha) || !(params.alpha * params.k >= 1.0 - 1e-15)) {
    throw InvalidParameter("alpha = " + format_double(params.alpha) +
                           " violates alpha >= 1/k with k = " + std::to_string(params.k));
  }
}

int ClassParams::first_free_index() const {
  if (const auto* g = std::get_if<GkH>(&value_)) return g->k + 1;
  return 2;
}

std::string ClassParams::describe() const {
  return std::visit(
      overloaded{
          [](const TildeG0H& c) { return "TildeG0H(beta=" + format_double(c.beta) + ")"; },
          [](const W0H& c) { return "W0H(alpha=" + format_double(c.alpha) + ")"; },
          [](const GkH& c) {
            return "GkH(k=" + std::to_string(c.k) + ", alpha=" + format_double(c.alpha) + ")";
          },
      },
      value_);
}

HarmonicModel::HarmonicModel(Coeffs a, Coeffs b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() < 2) throw InvalidParameter("analytic part needs at least a_0 and a_1");
  if (a_[0] != 0.0 || a_[1] != 1.0) {
    throw InvalidParameter("normalization requires a_0 = 0 and a_1 = 1");
  }
  if (b_.size() > a_.size()) {
    for (std::size_t n = a_.size(); n < b_.size(); ++n) {
      if (b_[n] != 0.0) throw InvalidParameter("co-analytic part longer than analytic part");
    }
  }
  b_.resize(a_.size());
  if (b_[0] != 0.0 || b_[1] != 0.0) {
    throw InvalidParameter("normalization requires b_0 = b_1 = 0");
  }
  for (std::size_t n = 0; n < a_.size(); ++n) {
    if (!std::isfinite(a_[n].real()) || !std::isfinite(a_[n].imag()) ||
        !std::isfinite(b_[n].real()) || !std::isfinite(b_[n].imag())) {
      throw InvalidParameter("coefficient " + std::to_string(n) + " is not finite");
    }
  }
}

HarmonicModel HarmonicModel::identity(int truncation) {
  if (truncation < 1) throw OutOfRange("truncation must be at least 1");
  Coeffs a(static_cast<std::size_t>(truncation) + 1, 0.0);
  a[1] = 1.0;
  return HarmonicModel(std::move(a), {});
}

HarmonicModel HarmonicModel::scaled(double factor) const {
  Coeffs a = a_;
  Coeffs b = b_;
  for (std::size_t n = 2; n < a.size(); ++n) {
    a[n] *= factor;
    b[n] *= factor;
  }
  return HarmonicModel(std::move(a), std::move(b));
}

bool satisfies_normalization(const HarmonicModel& model, const ClassParams& cls) {
  const int last_zero = std::min(cls.first_free_index() - 1, model.truncation());
  for (int n = 2; n <= last_zero; ++n) {
    if (model.a(n) != 0.0 || model.b(n) != 0.0) return false;
  }
  return true;
}

double coeff_bound_sum(const ClassParams& cls, int n) {
  if (n < 2) throw OutOfRange("coefficient index n = " + std::to_string(n) + " must be >= 2");
  return std::visit(overloaded{
                        [](const TildeG0H& c) { return 2.0 * (1.0 - c.beta); },
                        [n](const W0H& c) { return 2.0 / terms::w0h_denominator(c.alpha, n); },
                        [n](const GkH& c) {
                          return n <= c.k ? 0.0 : 2.0 / terms::gkh_denominator(c.alpha, n);
                        },
                    },
                    cls.variant());
}

namespace {

void require_truncation(const ClassParams& cls, int truncation) {
  if (truncation < 2 || truncation < cls.first_free_index()) {
    throw OutOfRange("truncation " + std::to_string(truncation) + " too small for " +
                     cls.describe());
  }
}

bool extremal_populates(const ClassParams& cls, int n) {
  if (const auto* g = std::get_if<GkH>(&cls.variant())) return (n - 1) % g->k == 0;
  return true;
}

}  // namespace

HarmonicModel extremal_model(const ClassParams& cls, int truncation) {
  require_truncation(cls, truncation);
  HarmonicModel::Coeffs a(static_cast<std::size_t>(truncation) + 1, 0.0);
  a[1] = 1.0;
  for (int n = cls.first_free_index(); n <= truncation; ++n) {
    if (extremal_populates(cls, n)) a[n] = coeff_bound_sum(cls, n);
  }
  return HarmonicModel(std::move(a), {});
}

HarmonicModel majorant_model(const ClassParams& cls, int truncation) {
  require_truncation(cls, truncation);
  HarmonicModel::Coeffs a(static_cast<std::size_t>(truncation) + 1, 0.0);
  a[1] = 1.0;
  for (int n = cls.first_free_index(); n <= truncation; ++n) a[n] = coeff_bound_sum(cls, n);
  return HarmonicModel(std::move(a), {});
}

Enclosure w0h_alternating_constant(double alpha, double eps) {
  return eval_alternating(terms::w0h_alternating(alpha, 1.0), eps);
}

Enclosure gkh_alternating_constant(int k, double alpha, double eps) {
  return eval_alternating(terms::gkh_lattice(k, alpha, 1.0, true), eps);
}

GrowthEnvelope growth_envelope(const ClassParams& cls, double r, double eps) {
  require_radius(r);
  if (r == 0.0) return {Enclosure::point(0.0), Enclosure::point(0.0)};
  return std::visit(
      overloaded{
          [r](const TildeG0H& c) {
            const double b = c.beta;
            const double lower = b * r + (1.0 - b) * (1.0 - r) / (1.0 + r) * r;
            const double upper = b * r + (1.0 - b) * (1.0 + r) / (1.0 - r) * r;
            // Eight roundings on terms bounded by the result.
            return GrowthEnvelope{Enclosure::around(lower, 16 * kUnitRoundoff * lower),
                                  Enclosure::around(upper, 16 * kUnitRoundoff * upper)};
          },
          [r, eps](const W0H& c) {
            const Enclosure alt = eval_alternating(terms::w0h_alternating(c.alpha, r), eps / 2);
            const Enclosure maj = eval_tail_bounded(terms::w0h_majorant(c.alpha, r), eps / 2);
            return GrowthEnvelope{2.0 * alt + r, 2.0 * maj + r};
          },
          [r, eps](const GkH& c) {
            const Enclosure alt = eval_alternating(terms::gkh_lattice(c.k, c.alpha, r, true), eps / 2);
            const Enclosure maj =
                eval_tail_bounded(terms::gkh_lattice(c.k, c.alpha, r, false), eps / 2);
            return GrowthEnvelope{2.0 * alt + r, 2.0 * maj + r};
          },
      },
      cls.variant());
}

Enclosure boundary_distance_lower(const ClassParams& cls, double eps) {
  return std::visit(overloaded{
                        [](const TildeG0H& c) { return Enclosure::point(c.beta); },
                        [eps](const W0H& c) {
                          return 2.0 * w0h_alternating_constant(c.alpha, eps / 2) + 1.0;
                        },
                        [eps](const GkH& c) {
                          return 2.0 * gkh_alternating_constant(c.k, c.alpha, eps / 2) + 1.0;
                        },
                    },
                    cls.variant());
}

}  // namespace bohr
