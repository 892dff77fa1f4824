// SPDX-License-Identifier: Apache-2.0

#include "igarima/table.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace igarima {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_double_fixed(double v, int decimals) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::fixed, decimals);
  return std::string(buf, res.ptr);
}

void OutputTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("OutputTable: row width does not match columns");
  }
  rows.push_back(std::move(row));
}

void OutputTable::write(std::ostream& out, Format format, int decimals) const {
  if (format == Format::Tsv) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out << '\t';
      out << columns[c];
    }
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << '\t';
        std::visit(
            [&](const auto& cell) {
              using T = std::decay_t<decltype(cell)>;
              if constexpr (std::is_same_v<T, double>) {
                out << (decimals >= 0 ? format_double_fixed(cell, decimals)
                                      : format_double(cell));
              } else {
                out << cell;
              }
            },
            row[c]);
      }
      out << '\n';
    }
    return;
  }

  nlohmann::json doc;
  doc["columns"] = columns;
  auto& json_rows = doc["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json json_row = nlohmann::json::array();
    for (const auto& cell : row) {
      std::visit([&](const auto& value) { json_row.push_back(value); }, cell);
    }
    json_rows.push_back(std::move(json_row));
  }
  out << doc.dump(2) << '\n';
}

OutputTable::Format format_from_string(const std::string& tag) {
  if (tag == "tsv") return OutputTable::Format::Tsv;
  if (tag == "json") return OutputTable::Format::Json;
  throw std::invalid_argument("unknown output format: '" + tag + "'");
}

}  // namespace igarima
