#include "relkit/loader.hpp"

#include <algorithm>
#include <fstream>

#include "relkit/csv.hpp"
#include "relkit/error.hpp"
#include "relkit/schema.hpp"

namespace relkit {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty() || s.size() > 18) return false;  // fits in int64
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Atom parse_cell(const std::string& cell, const Domain& domain,
                const std::string& where) {
  if (domain.builtin_kind() == Domain::BuiltinKind::Natural) {
    if (!all_digits(cell))
      throw DataError(where + ": '" + cell + "' is not a natural (domain " +
                      domain.name() + ")");
    return domain.make_atom(static_cast<std::int64_t>(std::stoll(cell)));
  }
  if (domain.builtin_kind() == Domain::BuiltinKind::Text)
    return domain.make_atom(cell);
  // enumerated: digits read as a natural, anything else as text
  Atom atom = domain.make_atom(
      all_digits(cell) ? Payload{static_cast<std::int64_t>(std::stoll(cell))}
                       : Payload{cell});
  if (!domain.contains(atom))
    throw DataError(where + ": '" + cell + "' is not a member of domain " +
                    domain.name());
  return atom;
}

Relation load_relation(const Scheme& scheme, const std::string& rel_name,
                       const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open data file " + path);
  const CsvTable csv = read_csv(in, path);
  const Signature sig = scheme.signature_of(rel_name);

  // header-driven column binding: the header must name each attribute once
  std::vector<Index> columns;
  columns.reserve(csv.header.size());
  for (const std::string& h : csv.header) {
    const Index attr = all_digits(h) ? Index::pos(std::stoull(h)) : Index::name(h);
    if (!sig.has(attr))
      throw DataError(path + ":1: column '" + h + "' is not an attribute of " +
                      rel_name);
    if (std::find(columns.begin(), columns.end(), attr) != columns.end())
      throw DataError(path + ":1: duplicate column '" + h + "'");
    columns.push_back(attr);
  }
  if (columns.size() != sig.size())
    throw DataError(path + ":1: header names " + std::to_string(columns.size()) +
                    " of the " + std::to_string(sig.size()) + " attributes of " +
                    rel_name);

  std::vector<Tuple> tuples;
  tuples.reserve(csv.rows.size());
  for (const auto& row : csv.rows) {
    const std::string where = path + ":" + std::to_string(row.line);
    std::vector<std::pair<Index, Atom>> entries;
    entries.reserve(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
      entries.emplace_back(columns[c],
                           parse_cell(row.fields[c], sig.at(columns[c]), where));
    tuples.emplace_back(std::move(entries));
  }
  return Relation(sig, std::move(tuples));
}

}  // namespace

Instance load_instance(const std::string& schema_path,
                       const std::string& data_dir) {
  Scheme scheme = parse_scheme_file(schema_path);
  std::map<std::string, Relation> extents;
  for (const std::string& name : scheme.relation_names())
    extents.emplace(name, load_relation(scheme, name, data_dir + "/" + name + ".csv"));
  return Instance(std::move(scheme), std::move(extents));
}

}  // namespace relkit
