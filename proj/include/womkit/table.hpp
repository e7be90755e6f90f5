#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace womkit::cli {

using Cell = std::variant<double, std::string>;

/// %.Ng rendering used for every numeric cell, CSV and JSON alike.
std::string format_number(double value, int precision);

/// A rectangular result table. Information-valued columns carry their unit
/// in the column name, so every emitted table records its units.
class OutputTable {
  public:
    explicit OutputTable(std::vector<std::string> columns);

    void add_row(std::vector<Cell> row);

    /// RFC-4180-style CSV: header row, '.' decimal point, fields quoted
    /// only when they contain a comma, quote or newline.
    std::string to_csv(int precision) const;

    /// Array of one object per row, keys in column order.
    std::string to_json(int precision) const;

    std::size_t row_count() const { return rows_.size(); }

  private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

} // namespace womkit::cli
