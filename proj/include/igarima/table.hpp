// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace igarima {

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

/// Fixed-point rendering with the given number of decimals.
std::string format_double_fixed(double v, int decimals);

/// Column-ordered table rendered as TSV or JSON. TSV doubles use fixed
/// 4-decimal formatting when `decimals` is set (the table-reproduction
/// convention) and shortest round-trip formatting otherwise; JSON always
/// carries full precision.
struct OutputTable {
  using Cell = std::variant<std::string, double, std::int64_t>;

  enum class Format { Tsv, Json };

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  void write(std::ostream& out, Format format, int decimals = -1) const;
};

OutputTable::Format format_from_string(const std::string& tag);

}  // namespace igarima
