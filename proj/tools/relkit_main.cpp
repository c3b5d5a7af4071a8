#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <unistd.h>

#include "relkit/session.hpp"

namespace {

relkit::Limits limits_from_env() {
  relkit::Limits limits;
  if (const char* raw = std::getenv("RELKIT_LIMIT")) {
    try {
      const unsigned long long v = std::stoull(raw);
      limits.materialization = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed RELKIT_LIMIT '" << raw << "'\n";
    }
  }
  return limits;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relkit - a small relational query engine"};
  app.require_subcommand(1);

  std::string schema_path, data_dir, rule_text, format_name = "table";

  auto* load = app.add_subcommand("load", "load an instance and report sizes");
  load->add_option("-s,--schema", schema_path, "schema file")->required();
  load->add_option("-d,--data", data_dir, "data directory")->required();
  bool check_only = false;
  load->add_flag("--check", check_only, "validate quietly, exit status only");

  auto* query = app.add_subcommand("query", "evaluate a rule");
  query->add_option("-s,--schema", schema_path, "schema file")->required();
  query->add_option("-d,--data", data_dir, "data directory")->required();
  query->add_option("-e,--rule", rule_text, "rule text")->required();
  query->add_option("--format", format_name, "table|csv|tsv");

  auto* explain = app.add_subcommand("explain", "show a rule's plan");
  explain->add_option("-s,--schema", schema_path, "schema file")->required();
  explain->add_option("-d,--data", data_dir, "data directory")->required();
  explain->add_option("-e,--rule", rule_text, "rule text")->required();

  auto* repl = app.add_subcommand("repl", "interactive shell");
  repl->add_option("-s,--schema", schema_path, "schema file");
  repl->add_option("-d,--data", data_dir, "data directory");

  CLI11_PARSE(app, argc, argv);

  relkit::Session session;
  session.limits = limits_from_env();

  const auto format = relkit::parse_format(format_name);
  if (!format) {
    std::cerr << "error: unknown format '" << format_name << "'\n";
    return 2;
  }
  session.format = *format;

  if (load->parsed())
    return relkit::cmd_load(session, schema_path, data_dir, check_only,
                            std::cout, std::cerr);

  if (query->parsed() || explain->parsed()) {
    const int rc = relkit::cmd_load(session, schema_path, data_dir, true,
                                    std::cout, std::cerr);
    if (rc != 0) return rc;
    return query->parsed()
               ? relkit::cmd_query(session, rule_text, std::cout, std::cerr)
               : relkit::cmd_explain(session, rule_text, std::cout, std::cerr);
  }

  // repl
  if (!schema_path.empty() || !data_dir.empty()) {
    if (schema_path.empty() || data_dir.empty()) {
      std::cerr << "error: repl needs both --schema and --data, or neither\n";
      return 2;
    }
    const int rc = relkit::cmd_load(session, schema_path, data_dir, true,
                                    std::cout, std::cerr);
    if (rc != 0) return rc;
  }
  const bool interactive = isatty(fileno(stdin)) != 0;
  return relkit::repl(session, std::cin, std::cout, std::cerr, interactive);
}
