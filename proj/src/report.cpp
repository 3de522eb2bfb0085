#include "f2p/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "f2p/errors.hpp"

namespace f2p {

Table::Table(std::string schema, std::vector<std::string> columns)
    : schema_(std::move(schema)), columns_(std::move(columns)) {}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw ContractError("row has " + std::to_string(row.size()) + " fields, header has " +
                        std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(row));
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

struct CsvCell {
  std::string operator()(const std::string& s) const { return csv_escape(s); }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const { return format_double(v); }
  std::string operator()(bool v) const { return v ? "true" : "false"; }
  std::string operator()(const RawNumber& n) const { return n.text; }
};

struct JsonCell {
  std::string operator()(const std::string& s) const { return nlohmann::json(s).dump(); }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const {
    // JSON has no inf/nan literals.
    return std::isfinite(v) ? format_double(v) : nlohmann::json(format_double(v)).dump();
  }
  std::string operator()(bool v) const { return v ? "true" : "false"; }
  std::string operator()(const RawNumber& n) const { return n.text; }
};

}  // namespace

void Table::write_csv(std::ostream& out) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << csv_escape(columns_[i]);
  out << "\r\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
    out << "\r\n";
  }
}

void Table::write_json(std::ostream& out) const {
  out << "{\"schema\":" << nlohmann::json(schema_).dump() << ",\"rows\":[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    out << (r ? ",\n" : "\n") << '{';
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      out << (i ? "," : "") << nlohmann::json(columns_[i]).dump() << ':' << std::visit(JsonCell{}, rows_[r][i]);
    }
    out << '}';
  }
  out << "\n]}\n";
}

}  // namespace f2p
