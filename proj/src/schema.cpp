#include "relkit/schema.hpp"

#include <fstream>
#include <sstream>

#include "relkit/error.hpp"

namespace relkit {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty() || s.size() > 18) return false;  // fits in int64
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

bool valid_word(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::string token;
  for (char c : line) {
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!token.empty()) tokens.push_back(std::move(token));
      token.clear();
    } else if (c == '{' || c == '}') {
      if (!token.empty()) tokens.push_back(std::move(token));
      token.clear();
      tokens.push_back(std::string(1, c));
    } else {
      token += c;
    }
  }
  if (!token.empty()) tokens.push_back(std::move(token));
  return tokens;
}

Payload token_payload(const std::string& token) {
  if (all_digits(token)) return Payload{static_cast<std::int64_t>(std::stoll(token))};
  return Payload{token};
}

Index token_index(const std::string& token) {
  if (all_digits(token)) return Index::pos(std::stoull(token));
  return Index::name(token);
}

struct LineParser {
  const std::vector<std::string>& tokens;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(msg);  // wrapped with file:line by the caller
  }
  bool done() const { return pos >= tokens.size(); }
  const std::string& peek() const {
    if (done()) fail("unexpected end of line");
    return tokens[pos];
  }
  std::string next() {
    if (done()) fail("unexpected end of line");
    return tokens[pos++];
  }
  void expect(const std::string& t) {
    if (next() != t) fail("expected '" + t + "'");
  }
  std::string word() {
    std::string t = next();
    if (!valid_word(t)) fail("invalid token '" + t + "'");
    return t;
  }
  std::vector<std::string> braced_words() {
    expect("{");
    std::vector<std::string> words;
    while (peek() != "}") words.push_back(word());
    expect("}");
    return words;
  }
};

}  // namespace

Scheme parse_scheme(std::istream& in, const std::string& name) {
  Scheme scheme;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string where = name + ":" + std::to_string(lineno);
    LineParser p{tokens, 0};
    try {
      const std::string directive = p.next();
      if (directive == "domain") {
        const std::string dname = p.word();
        const std::string kind = p.next();
        if (kind == "natural") {
          scheme.add_domain(Domain::natural(dname));
        } else if (kind == "text") {
          scheme.add_domain(Domain::text(dname));
        } else if (kind == "enum") {
          std::vector<Payload> members;
          for (const std::string& m : p.braced_words())
            members.push_back(token_payload(m));
          if (members.empty()) p.fail("enum domain " + dname + " has no members");
          scheme.add_domain(Domain::enumerated(dname, std::move(members)));
        } else {
          p.fail("unknown domain kind '" + kind + "'");
        }
      } else if (directive == "attribute") {
        const Index attr = token_index(p.word());
        scheme.add_attribute(attr, p.word());
      } else if (directive == "relation") {
        RelationSchema schema;
        schema.name = p.word();
        if (find_builtin(schema.name))
          p.fail("relation " + schema.name + " collides with a builtin");
        std::vector<Index> attrs;
        for (const std::string& t : p.braced_words())
          attrs.push_back(token_index(t));
        if (attrs.size() != make_index_set(attrs).size())
          p.fail("relation " + schema.name + " repeats an attribute");
        schema.attributes = make_index_set(std::move(attrs));
        if (!p.done()) {
          p.expect("key");
          std::vector<Index> key;
          for (const std::string& t : p.braced_words())
            key.push_back(token_index(t));
          schema.key = make_index_set(std::move(key));
        }
        scheme.add_relation(std::move(schema));
      } else {
        p.fail("unknown directive '" + directive + "'");
      }
      if (!p.done()) p.fail("trailing tokens after directive");
    } catch (const Error& e) {
      throw SchemaError(where + ": " + e.what());
    }
  }
  return scheme;
}

Scheme parse_scheme_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open schema file " + path);
  return parse_scheme(in, path);
}

}  // namespace relkit
