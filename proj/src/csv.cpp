#include "relkit/csv.hpp"

#include "relkit/error.hpp"

namespace relkit {

namespace {
std::vector<std::string> parse_line(const std::string& line,
                                    const std::string& name, std::size_t lineno) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  std::size_t i = 0;
  const auto fail = [&](const std::string& msg) {
    throw DataError(name + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (i <= line.size()) {
    if (i == line.size()) {
      if (quoted) fail("unterminated quoted field");
      fields.push_back(field);
      break;
    }
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          i += 2;
        } else {
          quoted = false;
          ++i;
        }
      } else {
        field += c;
        ++i;
      }
    } else if (c == '"') {
      if (!field.empty()) fail("quote inside an unquoted field");
      quoted = true;
      ++i;
    } else if (c == ',') {
      fields.push_back(field);
      field.clear();
      ++i;
    } else {
      field += c;
      ++i;
    }
  }
  return fields;
}
}  // namespace

CsvTable read_csv(std::istream& in, const std::string& name) {
  CsvTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = parse_line(line, name, lineno);
    if (table.header.empty()) {
      table.header = std::move(fields);
    } else {
      if (fields.size() != table.header.size())
        throw DataError(name + ":" + std::to_string(lineno) + ": expected " +
                        std::to_string(table.header.size()) + " fields, got " +
                        std::to_string(fields.size()));
      table.rows.push_back({lineno, std::move(fields)});
    }
  }
  if (table.header.empty()) throw DataError(name + ": missing header row");
  return table;
}

std::string csv_escape(const std::string& field) {
  bool needs_quotes = false;
  for (char c : field)
    if (c == ',' || c == '"' || c == '\n') needs_quotes = true;
  if (!field.empty() && (field.front() == ' ' || field.back() == ' '))
    needs_quotes = true;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

}  // namespace relkit
