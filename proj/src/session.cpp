#include "relkit/session.hpp"

#include <algorithm>
#include <sstream>

#include "relkit/error.hpp"
#include "relkit/loader.hpp"
#include "relkit/rule_parser.hpp"

namespace relkit {

int cmd_load(Session& session, const std::string& schema_path,
             const std::string& data_dir, bool check_only, std::ostream& out,
             std::ostream& err) {
  try {
    session.instance = load_instance(schema_path, data_dir);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (!check_only) {
    for (const std::string& name : session.instance->relation_names())
      out << name << ": " << session.instance->relation(name).size()
          << (session.instance->relation(name).size() == 1 ? " tuple" : " tuples")
          << '\n';
  }
  return 0;
}

namespace {

/// Parse, compile, and plan; shared by query and explain.
Plan prepare(const Session& session, const std::string& rule_text) {
  const Rule rule = parse_rule(rule_text);
  const CompiledRule compiled = compile_rule(rule, session.instance->scheme());
  return make_plan(compiled, *session.instance);
}

int run_rule(Session& session, const std::string& rule_text, bool explain_only,
             std::ostream& out, std::ostream& err) {
  if (!session.instance) {
    err << "error: no instance loaded\n";
    return 1;
  }
  try {
    const Plan plan = prepare(session, rule_text);
    if (explain_only) {
      out << explain(plan);
      return 0;
    }
    const Relation result = evaluate(plan, *session.instance, session.limits);
    std::vector<Index> columns;
    columns.reserve(plan.rule.head_vars.size());
    for (const std::string& v : plan.rule.head_vars)
      columns.push_back(Index::name(v));
    print_relation(result, columns, session.format, out);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int cmd_query(Session& session, const std::string& rule_text, std::ostream& out,
              std::ostream& err) {
  return run_rule(session, rule_text, false, out, err);
}

int cmd_explain(Session& session, const std::string& rule_text,
                std::ostream& out, std::ostream& err) {
  return run_rule(session, rule_text, true, out, err);
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::istringstream in(line);
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

void show_relations(const Session& session, std::ostream& out) {
  for (const std::string& name : session.instance->relation_names())
    out << name << '\n';
  std::vector<std::string> builtins;
  for (const IntensionalRelation& b : builtin_relations())
    builtins.push_back(b.name);
  std::sort(builtins.begin(), builtins.end());
  for (const std::string& name : builtins) out << name << " (builtin)\n";
}

void show_schema(const Session& session, const std::string& name,
                 std::ostream& out) {
  if (const IntensionalRelation* b = find_builtin(name)) {
    out << b->name << '(';
    for (std::size_t k = 0; k < b->attributes.size(); ++k) {
      if (k > 0) out << ", ";
      out << to_string(b->attributes[k]);
    }
    out << ") (builtin)\n";
    return;
  }
  const Scheme& scheme = session.instance->scheme();
  const RelationSchema& schema = scheme.relation(name);
  out << name << '(';
  for (std::size_t k = 0; k < schema.attributes.size(); ++k) {
    if (k > 0) out << ", ";
    out << to_string(schema.attributes[k]) << ": "
        << scheme.domain_of(schema.attributes[k]).name();
  }
  out << ')';
  if (!schema.key.empty()) {
    out << " key (";
    for (std::size_t k = 0; k < schema.key.size(); ++k) {
      if (k > 0) out << ", ";
      out << to_string(schema.key[k]);
    }
    out << ')';
  }
  out << '\n';
}

void show_help(std::ostream& out) {
  out << "enter a rule:  name(var, ...) :- atom, ... .\n"
         "commands:\n"
         "  .load SCHEMA DATADIR   load an instance\n"
         "  .relations             list stored and builtin relations\n"
         "  .schema NAME           show a relation's attributes\n"
         "  .format table|csv|tsv  set the output format\n"
         "  .help                  this text\n"
         "  .quit                  leave\n";
}

// returns false to leave the loop
bool dispatch_command(Session& session, const std::vector<std::string>& words,
                      std::ostream& out, std::ostream& err) {
  const std::string& cmd = words[0];
  if (cmd == ".quit" || cmd == ".exit") return false;
  if (cmd == ".help") {
    show_help(out);
  } else if (cmd == ".load") {
    if (words.size() != 3) {
      err << "usage: .load SCHEMA DATADIR\n";
    } else {
      cmd_load(session, words[1], words[2], false, out, err);
    }
  } else if (cmd == ".relations") {
    if (!session.instance) err << "error: no instance loaded\n";
    else show_relations(session, out);
  } else if (cmd == ".schema") {
    if (words.size() != 2) {
      err << "usage: .schema NAME\n";
    } else if (!session.instance) {
      err << "error: no instance loaded\n";
    } else {
      try {
        show_schema(session, words[1], out);
      } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
      }
    }
  } else if (cmd == ".format") {
    std::optional<OutputFormat> f;
    if (words.size() == 2) f = parse_format(words[1]);
    if (!f) err << "usage: .format table|csv|tsv\n";
    else session.format = *f;
  } else {
    err << "unknown command " << cmd << " (try .help)\n";
  }
  return true;
}

}  // namespace

int repl(Session& session, std::istream& in, std::ostream& out,
         std::ostream& err, bool interactive) {
  std::string line;
  while (true) {
    if (interactive) out << "relkit> " << std::flush;
    if (!std::getline(in, line)) break;
    const auto words = split_words(line);
    if (words.empty()) continue;
    if (words[0][0] == '.') {
      if (!dispatch_command(session, words, out, err)) break;
    } else {
      cmd_query(session, line, out, err);  // diagnostics keep the loop going
    }
  }
  return 0;
}

}  // namespace relkit
