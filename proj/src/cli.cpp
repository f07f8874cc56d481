#include "bohr/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bohr/errors.hpp"
#include "bohr/kernels.hpp"
#include "bohr/verify.hpp"

namespace bohr::cli {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidParameter("not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw InvalidParameter("not a finite number: '" + text + "'");
  }
  return v;
}

int as_integer(double v, const char* name) {
  if (v != std::floor(v) || std::fabs(v) > 1e9) {
    throw InvalidParameter(std::string("--") + name + " takes integers, got " + std::to_string(v));
  }
  return static_cast<int>(v);
}

const ParamGrid& need(const std::optional<ParamGrid>& grid, const char* name,
                      const std::string& theorem) {
  if (!grid) throw InvalidParameter(theorem + " requires --" + std::string(name));
  return *grid;
}

void forbid(const std::optional<ParamGrid>& grid, const char* name, const std::string& theorem) {
  if (grid) throw InvalidParameter("--" + std::string(name) + " is not a parameter of " + theorem);
}

// Column names holding the theorem parameters.
std::vector<std::string> param_columns(const RadiusProblem& p) {
  return std::visit(overloaded{
                        [](const T31&) { return std::vector<std::string>{"beta"}; },
                        [](const T32&) { return std::vector<std::string>{"beta"}; },
                        [](const T33&) { return std::vector<std::string>{"alpha"}; },
                        [](const T34&) { return std::vector<std::string>{"alpha"}; },
                        [](const T35&) { return std::vector<std::string>{"k", "alpha"}; },
                        [](const T36&) { return std::vector<std::string>{"k", "alpha"}; },
                        [](const TheoremA&) { return std::vector<std::string>{"n"}; },
                    },
                    p.variant());
}

std::vector<report::Cell> param_cells(const RadiusProblem& p) {
  using report::Cell;
  return std::visit(
      overloaded{
          [](const T31& t) { return std::vector<Cell>{t.beta}; },
          [](const T32& t) { return std::vector<Cell>{t.beta}; },
          [](const T33& t) { return std::vector<Cell>{t.alpha}; },
          [](const T34& t) { return std::vector<Cell>{t.alpha}; },
          [](const T35& t) { return std::vector<Cell>{std::int64_t{t.k}, t.alpha}; },
          [](const T36& t) { return std::vector<Cell>{std::int64_t{t.k}, t.alpha}; },
          [](const TheoremA& t) { return std::vector<Cell>{std::int64_t{t.n}}; },
      },
      p.variant());
}

std::vector<std::string> columns_for(const RadiusProblem& p, std::vector<std::string> tail) {
  std::vector<std::string> cols{"theorem"};
  for (auto& c : param_columns(p)) cols.push_back(std::move(c));
  for (auto& c : tail) cols.push_back(std::move(c));
  return cols;
}

std::vector<report::Cell> row_for(const RadiusProblem& p, std::vector<report::Cell> tail) {
  std::vector<report::Cell> row{p.tag()};
  for (auto& c : param_cells(p)) row.push_back(std::move(c));
  for (auto& c : tail) row.push_back(std::move(c));
  return row;
}

report::Table radius_table(const std::vector<RadiusProblem>& problems, double tol, bool detailed) {
  report::Table table;
  std::vector<std::string> tail{"r", "half_width", "iterations"};
  if (detailed) {
    for (const char* c : {"q_lo_lo", "q_lo_hi", "q_hi_lo", "q_hi_hi"}) tail.emplace_back(c);
  }
  table.columns = columns_for(problems.front(), tail);
  const auto roots = kernels::ordered_map(
      problems.size(), [&](std::size_t i) { return solve_radius(problems[i], tol); });
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const RootResult& root = roots[i];
    std::vector<report::Cell> cells{root.r, root.half_width, std::int64_t{root.iterations}};
    if (detailed) {
      for (double v : {root.q_lo.lo, root.q_lo.hi, root.q_hi.lo, root.q_hi.hi}) cells.emplace_back(v);
    }
    table.rows.push_back(row_for(problems[i], std::move(cells)));
  }
  return table;
}

report::Table sharpness_table(const std::vector<RadiusProblem>& problems, double tol) {
  report::Table table;
  table.columns = columns_for(problems.front(), {"r", "truncation", "lhs", "rhs", "gap"});
  const auto reports = kernels::ordered_map(
      problems.size(), [&](std::size_t i) { return sharpness_report(problems[i], tol); });
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const SharpnessReport& s = reports[i];
    table.rows.push_back(row_for(problems[i], {s.root.r, std::int64_t{s.truncation}, s.lhs,
                                               s.rhs, s.gap}));
  }
  return table;
}

report::Table verify_table(const RadiusProblem& problem, const RunConfig& config) {
  FuzzConfig fuzz;
  fuzz.samples = config.samples;
  fuzz.seed = config.seed;
  fuzz.truncation = config.truncation;
  fuzz.membership_filter = config.membership_filter;
  const FuzzReport rep = fuzz_campaign(problem, fuzz);

  report::Table table;
  table.columns = columns_for(problem, {"mode", "r", "samples", "holds", "fails", "inconclusive",
                                        "filtered", "dominance_violations", "worst_margin",
                                        "worst_seed", "witness"});
  const std::string mode = config.membership_filter ? "necessary-condition fuzz + spot filter"
                                                    : "necessary-condition fuzz";
  table.rows.push_back(row_for(
      problem, {mode, rep.r, std::int64_t{rep.samples}, std::int64_t{rep.holds},
                std::int64_t{rep.fails}, std::int64_t{rep.inconclusive}, std::int64_t{rep.filtered},
                std::int64_t{rep.dominance_violations}, rep.worst_margin,
                static_cast<std::int64_t>(rep.worst_seed), rep.witness}));
  return table;
}

constexpr const char* kHelpFooter =
    "Output columns (CSV header / JSON keys):\n"
    "  radius:    theorem, params..., r, half_width, iterations, q_lo_lo, q_lo_hi, q_hi_lo, q_hi_hi\n"
    "  table:     theorem, params..., r, half_width, iterations\n"
    "  verify:    theorem, params..., mode, r, samples, holds, fails, inconclusive, filtered,\n"
    "             dominance_violations, worst_margin, worst_seed, witness\n"
    "  sharpness: theorem, params..., r, truncation, lhs, rhs, gap\n"
    "Parameters: t31/t32 --beta in (0,1); t33/t34 --alpha in [0,1); t35/t36 --k >= 1 and\n"
    "--alpha >= 1/k; ta --n >= 1. Grids are start:stop:step (inclusive).\n"
    "Exit status: 0 ok, 1 invalid input, 2 solver error, 3 a fuzz sample failed.\n"
    "BOHR_LAB_THREADS caps the number of worker threads.";

}  // namespace

ParamGrid ParamGrid::parse(const std::string& text) {
  ParamGrid g;
  const auto first = text.find(':');
  if (first == std::string::npos) {
    g.start = g.stop = parse_number(text);
    return g;
  }
  const auto second = text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw InvalidParameter("grid must look like start:stop:step, got '" + text + "'");
  }
  g.start = parse_number(text.substr(0, first));
  g.stop = parse_number(text.substr(first + 1, second - first - 1));
  g.step = parse_number(text.substr(second + 1));
  if (!(g.step > 0.0)) throw InvalidParameter("grid step must be positive in '" + text + "'");
  if (g.stop < g.start) throw InvalidParameter("grid stop precedes start in '" + text + "'");
  return g;
}

std::vector<double> ParamGrid::values() const {
  if (is_single()) return {start};
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

std::vector<RadiusProblem> expand_problems(const RunConfig& config) {
  const std::string& t = config.theorem;
  std::vector<RadiusProblem> out;
  if (t == "t31" || t == "t32") {
    forbid(config.alpha, "alpha", t);
    forbid(config.k, "k", t);
    forbid(config.n, "n", t);
    for (double b : need(config.beta, "beta", t).values()) {
      if (t == "t31") {
        out.emplace_back(T31{b, config.t31_statement_form ? Q1Form::statement : Q1Form::derived});
      } else {
        out.emplace_back(T32{b});
      }
    }
  } else if (t == "t33" || t == "t34") {
    forbid(config.beta, "beta", t);
    forbid(config.k, "k", t);
    forbid(config.n, "n", t);
    for (double a : need(config.alpha, "alpha", t).values()) {
      if (t == "t33") {
        out.emplace_back(T33{a});
      } else {
        out.emplace_back(T34{a});
      }
    }
  } else if (t == "t35" || t == "t36") {
    forbid(config.beta, "beta", t);
    forbid(config.n, "n", t);
    const auto ks = need(config.k, "k", t).values();
    const auto alphas = need(config.alpha, "alpha", t).values();
    for (double kv : ks) {
      const int k = as_integer(kv, "k");
      for (double a : alphas) {
        if (t == "t35") {
          out.emplace_back(T35{k, a});
        } else {
          out.emplace_back(T36{k, a});
        }
      }
    }
  } else if (t == "ta") {
    forbid(config.beta, "beta", t);
    forbid(config.alpha, "alpha", t);
    forbid(config.k, "k", t);
    for (double nv : need(config.n, "n", t).values()) out.emplace_back(TheoremA{as_integer(nv, "n")});
  } else {
    throw InvalidParameter("unknown theorem '" + t + "'; expected t31..t36 or ta");
  }
  if (config.t31_statement_form && t != "t31") {
    throw InvalidParameter("--t31-statement-form only applies to t31");
  }
  if (!(config.tol > 0.0)) throw InvalidParameter("--tol must be positive");
  if (config.truncation < 2) throw InvalidParameter("--truncation must be at least 2");
  if (config.samples < 0) throw InvalidParameter("--samples must be nonnegative");
  return out;
}

report::Table build_report(const RunConfig& config) {
  const auto problems = expand_problems(config);
  switch (config.command) {
    case Command::radius:
      if (problems.size() != 1) throw InvalidParameter("radius takes single parameter values; use table");
      return radius_table(problems, config.tol, true);
    case Command::table:
      return radius_table(problems, config.tol, false);
    case Command::sharpness:
      return sharpness_table(problems, config.tol);
    case Command::verify:
      if (problems.size() != 1) throw InvalidParameter("verify takes single parameter values");
      if (!problems.front().harmonic_class()) {
        throw InvalidParameter("verify needs a harmonic theorem (t31..t36)");
      }
      return verify_table(problems.front(), config);
  }
  throw InvalidParameter("unknown command");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    // Validation happens inside build_report before any solver runs.
    const report::Table table = build_report(config);
    std::ofstream file;
    std::ostream* sink = &out;
    if (config.out_path) {
      file.open(*config.out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open output file " << *config.out_path << '\n';
        return kExitInvalid;
      }
      sink = &file;
    }
    if (config.format == Format::csv) {
      report::write_csv(table, *sink);
    } else {
      report::write_json(table, *sink);
    }
    sink->flush();

    if (config.command == Command::verify) {
      const auto& row = table.rows.front();
      const auto col = std::find(table.columns.begin(), table.columns.end(), "fails") -
                       table.columns.begin();
      if (std::get<std::int64_t>(row.at(static_cast<std::size_t>(col))) > 0) {
        err << "verify: at least one sample violated the inequality\n";
        return kExitFails;
      }
    }
    return kExitOk;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const OutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const SignAmbiguous& e) {
    err << "solver error: " << e.what() << " (best estimate r=" << e.partial().r
        << ", half_width=" << e.partial().half_width << ")\n";
    return kExitSolver;
  } catch (const Error& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitSolver;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified Bohr-type radii for harmonic mapping classes", "bohr_lab"};
  app.footer(kHelpFooter);
  app.require_subcommand(1);

  RunConfig config;
  std::string beta, alpha, k, n, format = "json", out_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--theorem", config.theorem, "t31, t32, t33, t34, t35, t36 or ta")
        ->required()
        ->check(CLI::IsMember({"t31", "t32", "t33", "t34", "t35", "t36", "ta"}));
    sub->add_option("--beta", beta, "beta value or grid (t31, t32)");
    sub->add_option("--alpha", alpha, "alpha value or grid (t33..t36)");
    sub->add_option("--k", k, "k value or grid (t35, t36)");
    sub->add_option("--n", n, "N value or grid (ta)");
    sub->add_option("--tol", config.tol, "root tolerance (default 1e-10)");
    sub->add_option("--truncation", config.truncation, "model truncation for verify (default 2000)");
    sub->add_option("--format", format, "csv or json (default json)")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "write data to this file instead of stdout");
    sub->add_option("--seed", config.seed, "first fuzz seed (default 1)");
    sub->add_option("--samples", config.samples, "fuzz sample count (default 1000)");
    sub->add_flag("--t31-statement-form", config.t31_statement_form,
                  "use the -1 constant term for t31 instead of -beta");
    sub->add_flag("--membership-filter", config.membership_filter,
                  "drop fuzz samples that fail the membership spot check");
    sub->footer(kHelpFooter);
  };
  auto* radius = app.add_subcommand("radius", "solve one radius with a certified bracket");
  auto* table = app.add_subcommand("table", "solve radii over a parameter grid");
  auto* verify = app.add_subcommand("verify", "fuzz the inequality with admissible coefficients");
  auto* sharp = app.add_subcommand("sharpness", "evaluate the extremal function at the radius");
  for (auto* sub : {radius, table, verify, sharp}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help on the tool or a subcommand arrives here with a success code.
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      const auto subs = app.get_subcommands();
      out << (subs.empty() ? app.help() : subs.front()->help());
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (*radius) config.command = Command::radius;
    if (*table) config.command = Command::table;
    if (*verify) config.command = Command::verify;
    if (*sharp) config.command = Command::sharpness;
    if (!beta.empty()) config.beta = ParamGrid::parse(beta);
    if (!alpha.empty()) config.alpha = ParamGrid::parse(alpha);
    if (!k.empty()) config.k = ParamGrid::parse(k);
    if (!n.empty()) config.n = ParamGrid::parse(n);
    config.format = format == "csv" ? Format::csv : Format::json;
    if (!out_path.empty()) config.out_path = out_path;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return run(config, out, err);
}

}  // namespace bohr::cli
