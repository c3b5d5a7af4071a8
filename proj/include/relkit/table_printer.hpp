#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "relkit/relation.hpp"

namespace relkit {

enum class OutputFormat { Table, Csv, Tsv };

std::optional<OutputFormat> parse_format(const std::string& name);

/// Prints a relation with the given column order; rows always appear in
/// canonical tuple order, so output is a pure function of the relation.
/// The table format left-pads cells to the column width; csv/tsv emit
/// one header row plus data rows.
void print_relation(const Relation& r, const std::vector<Index>& columns,
                    OutputFormat format, std::ostream& out);

/// Canonical column order.
void print_relation(const Relation& r, OutputFormat format, std::ostream& out);

}  // namespace relkit
