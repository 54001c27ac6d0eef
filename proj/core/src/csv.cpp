#include "claws/csv.hpp"

#include <charconv>
#include <cmath>

#include "claws/errors.hpp"

namespace claws {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) throw DomainError("csv header is empty");
}

void CsvTable::add_row(const std::vector<double>& row) {
  if (row.size() != header_.size()) throw DomainError("csv row width does not match the header");
  rows_.push_back(row);
}

std::string CsvTable::str() const {
  std::string out;
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i) out += ',';
    out += header_[i];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace claws
