#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bohr/radii.hpp"
#include "bohr/report.hpp"

namespace bohr::cli {

enum class Command { radius, table, verify, sharpness };
enum class Format { csv, json };

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitSolver = 2;
inline constexpr int kExitFails = 3;

// A single value "v" or an inclusive grid "start:stop:step".
struct ParamGrid {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  // Throws InvalidParameter on malformed text or a non-positive step.
  static ParamGrid parse(const std::string& text);
  std::vector<double> values() const;
  bool is_single() const { return start == stop; }
};

struct RunConfig {
  Command command = Command::radius;
  std::string theorem;
  std::optional<ParamGrid> beta;
  std::optional<ParamGrid> alpha;
  std::optional<ParamGrid> k;
  std::optional<ParamGrid> n;
  bool t31_statement_form = false;
  double tol = 1e-10;
  int truncation = 2000;
  Format format = Format::json;
  std::optional<std::string> out_path;
  std::uint64_t seed = 1;
  int samples = 1000;
  bool membership_filter = false;
};

// Expands the parameter grids into validated problems, in row order
// (k outer, alpha inner for t35/t36). Throws InvalidParameter before any
// computation if a single grid point is inadmissible.
std::vector<RadiusProblem> expand_problems(const RunConfig& config);

// Builds the report for a validated configuration. Throws on solver errors.
report::Table build_report(const RunConfig& config);

// Executes the command: data to `out` (or the --out file), diagnostics to
// `err`. Returns one of the exit statuses above.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (including the program name) and runs. Parse errors exit 1.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bohr::cli
