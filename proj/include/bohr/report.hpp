#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace bohr::report {

using Cell = std::variant<std::int64_t, double, std::string>;

// Rows of typed cells under fixed column names.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// CSV: header line, one line per row, doubles with 12 significant digits.
void write_csv(const Table& table, std::ostream& os);
// JSON: array with one object per row, doubles with 17 significant digits,
// non-finite doubles as null.
void write_json(const Table& table, std::ostream& os);

// Parses what write_csv emits. Integer literals become int64 cells,
// other numeric literals double cells, everything else strings.
Table read_csv(std::istream& is);

}  // namespace bohr::report
