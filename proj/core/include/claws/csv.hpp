#pragma once

#include <string>
#include <vector>

namespace claws {

/// Shortest decimal that parses back to exactly `value` ("nan", "inf" and
/// "-inf" for non-finite values).
std::string format_double(double value);

/// In-memory CSV with a fixed header; every row must match its width.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(const std::vector<double>& row);
  std::size_t rows() const { return rows_.size(); }
  const std::vector<std::string>& header() const { return header_; }

  /// Comma separated, '\n' line endings, trailing newline.
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

}  // namespace claws
