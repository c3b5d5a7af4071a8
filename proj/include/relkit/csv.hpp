#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

namespace relkit {

/// A parsed CSV file: a header row plus data rows, each remembering its
/// 1-based source line for diagnostics.
struct CsvTable {
  std::vector<std::string> header;
  struct Row {
    std::size_t line;
    std::vector<std::string> fields;
  };
  std::vector<Row> rows;
};

/// Strict comma-separated reader: `"`-quoted fields, `""` as the quote
/// escape, no embedded newlines. Throws DataError with <name>:<line>.
CsvTable read_csv(std::istream& in, const std::string& name);

/// Quotes a field when it contains a comma, a quote, or an outer space.
std::string csv_escape(const std::string& field);

}  // namespace relkit
