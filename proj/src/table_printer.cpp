#include "relkit/table_printer.hpp"

#include <algorithm>

#include "relkit/csv.hpp"
#include "relkit/error.hpp"

namespace relkit {

std::optional<OutputFormat> parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "tsv") return OutputFormat::Tsv;
  return std::nullopt;
}

namespace {

std::string cell(const Tuple& t, const Index& i) {
  return payload_string(t.at(i).payload);
}

void print_table(const Relation& r, const std::vector<Index>& columns,
                 std::ostream& out) {
  std::vector<std::string> headers;
  std::vector<std::size_t> widths;
  for (const Index& c : columns) {
    headers.push_back(to_string(c));
    widths.push_back(headers.back().size());
  }
  for (const Tuple& t : r.extent())
    for (std::size_t k = 0; k < columns.size(); ++k)
      widths[k] = std::max(widths[k], cell(t, columns[k]).size());

  const auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k > 0) out << "  ";
      out << std::string(widths[k] - cells[k].size(), ' ') << cells[k];
    }
    out << '\n';
  };

  emit(headers);
  std::vector<std::string> dashes;
  for (std::size_t w : widths) dashes.push_back(std::string(w, '-'));
  emit(dashes);
  for (const Tuple& t : r.extent()) {
    std::vector<std::string> cells;
    for (const Index& c : columns) cells.push_back(cell(t, c));
    emit(cells);
  }
  out << '(' << r.size() << (r.size() == 1 ? " row" : " rows") << ")\n";
}

void print_separated(const Relation& r, const std::vector<Index>& columns,
                     char sep, bool quote, std::ostream& out) {
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (k > 0) out << sep;
    const std::string h = to_string(columns[k]);
    out << (quote ? csv_escape(h) : h);
  }
  out << '\n';
  for (const Tuple& t : r.extent()) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (k > 0) out << sep;
      const std::string c = cell(t, columns[k]);
      out << (quote ? csv_escape(c) : c);
    }
    out << '\n';
  }
}

}  // namespace

void print_relation(const Relation& r, const std::vector<Index>& columns,
                    OutputFormat format, std::ostream& out) {
  for (const Index& c : columns)
    if (!r.signature().has(c))
      throw TypeError("print_relation: no column " + to_string(c));
  switch (format) {
    case OutputFormat::Table:
      print_table(r, columns, out);
      break;
    case OutputFormat::Csv:
      print_separated(r, columns, ',', true, out);
      break;
    case OutputFormat::Tsv:
      print_separated(r, columns, '\t', false, out);
      break;
  }
}

void print_relation(const Relation& r, OutputFormat format, std::ostream& out) {
  print_relation(r, r.indexes(), format, out);
}

}  // namespace relkit
