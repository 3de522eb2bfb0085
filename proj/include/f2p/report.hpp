#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace f2p {

/// Text that must be written verbatim as a number (exact decimals).
struct RawNumber {
  std::string text;
};

using Cell = std::variant<std::string, std::int64_t, double, bool, RawNumber>;

/// Rows of named fields sharing one header. CSV is RFC-4180 with a mandatory
/// header row; JSON is {"schema": ..., "rows": [{...}, ...]} with the same
/// keys in the same order. Doubles are written with 17 significant digits.
class Table {
 public:
  Table(std::string schema, std::vector<std::string> columns);

  void add_row(std::vector<Cell> row);

  const std::string& schema() const noexcept { return schema_; }
  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

  void write_csv(std::ostream& out) const;
  void write_json(std::ostream& out) const;

 private:
  std::string schema_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

std::string format_double(double x);
std::string csv_escape(const std::string& field);

}  // namespace f2p
