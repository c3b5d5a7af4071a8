#pragma once

#include <iostream>
#include <optional>
#include <string>

#include "relkit/engine.hpp"
#include "relkit/limits.hpp"
#include "relkit/table_printer.hpp"

namespace relkit {

/// Command-line session state. Commands never mutate a loaded instance
/// except by replacing it entirely on reload.
struct Session {
  std::optional<Instance> instance;
  OutputFormat format = OutputFormat::Table;
  Limits limits;
};

/// Exit codes shared by the batch commands and the REPL dispatcher:
/// 0 success, 1 query error, 2 input/schema error.
int cmd_load(Session& session, const std::string& schema_path,
             const std::string& data_dir, bool check_only, std::ostream& out,
             std::ostream& err);

int cmd_query(Session& session, const std::string& rule_text, std::ostream& out,
              std::ostream& err);

int cmd_explain(Session& session, const std::string& rule_text,
                std::ostream& out, std::ostream& err);

/// Reads rules and dot-commands (.load, .relations, .schema, .format,
/// .help, .quit) until EOF or .quit; diagnostics keep the loop going.
/// The prompt is only written when interactive.
int repl(Session& session, std::istream& in, std::ostream& out,
         std::ostream& err, bool interactive);

}  // namespace relkit
