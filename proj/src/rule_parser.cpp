#include "relkit/rule_parser.hpp"

#include <cctype>

#include "relkit/error.hpp"

namespace relkit {

namespace {

enum class TokKind { Word, LParen, RParen, Comma, Colon, Arrow, Period, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space();
    const std::size_t line = line_, col = col_;
    if (pos_ >= text_.size()) return {TokKind::End, "", line, col};
    const char c = text_[pos_];
    if (c == '(') return advance({TokKind::LParen, "(", line, col});
    if (c == ')') return advance({TokKind::RParen, ")", line, col});
    if (c == ',') return advance({TokKind::Comma, ",", line, col});
    if (c == '.') return advance({TokKind::Period, ".", line, col});
    if (c == ':') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
        advance({});
        advance({});
        return {TokKind::Arrow, ":-", line, col};
      }
      return advance({TokKind::Colon, ":", line, col});
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        word += text_[pos_];
        advance({});
      }
      return {TokKind::Word, word, line, col};
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }

 private:
  Token advance(Token t) {
    if (pos_ < text_.size()) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    return t;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance({});
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { shift(); }

  Rule rule() {
    Rule out;
    expect(TokKind::Word, "rule name");  // the head's name is decorative
    expect(TokKind::LParen, "'('");
    out.head_vars.push_back(head_variable());
    while (current_.kind == TokKind::Comma) {
      shift();
      out.head_vars.push_back(head_variable());
    }
    expect(TokKind::RParen, "')'");
    expect(TokKind::Arrow, "':-'");
    out.body.push_back(atom());
    while (current_.kind == TokKind::Comma) {
      shift();
      out.body.push_back(atom());
    }
    expect(TokKind::Period, "'.'");
    if (current_.kind != TokKind::End)
      fail("trailing input after the final '.'");
    return out;
  }

 private:
  void shift() { current_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(current_.line, current_.col, msg);
  }

  Token expect(TokKind kind, const char* what) {
    if (current_.kind != kind) {
      const std::string got = current_.kind == TokKind::End
                                  ? "end of input"
                                  : "'" + current_.text + "'";
      fail(std::string("expected ") + what + ", got " + got);
    }
    Token t = current_;
    shift();
    return t;
  }

  static bool is_variable(const std::string& word) {
    return !word.empty() && !std::isdigit(static_cast<unsigned char>(word[0]));
  }

  std::string head_variable() {
    Token t = expect(TokKind::Word, "a variable");
    if (t.text == "_")
      throw ParseError(t.line, t.col, "'_' cannot appear in the head");
    if (!is_variable(t.text))
      throw ParseError(t.line, t.col, "'" + t.text + "' is not a variable");
    return t.text;
  }

  std::string body_variable() {
    Token t = expect(TokKind::Word, "a variable");
    if (t.text == "_") return "_" + std::to_string(++anon_);
    if (!is_variable(t.text))
      throw ParseError(t.line, t.col, "'" + t.text + "' is not a variable");
    return t.text;
  }

  Rule::Atom atom() {
    Rule::Atom out;
    Token name = expect(TokKind::Word, "a relation name");
    out.relation = name.text;
    expect(TokKind::LParen, "'('");

    // lookahead decides named vs positional form; no mixing
    bool first = true;
    while (true) {
      Token arg = expect(TokKind::Word, "an argument");
      const bool named = current_.kind == TokKind::Colon;
      if (first) {
        out.positional = !named;
        first = false;
      } else if (named == out.positional) {
        throw ParseError(arg.line, arg.col,
                         "cannot mix named and positional arguments");
      }
      if (named) {
        shift();  // ':'
        out.args.emplace_back(arg.text, body_variable());
      } else {
        if (arg.text == "_") {
          out.args.emplace_back("", "_" + std::to_string(++anon_));
        } else {
          if (!is_variable(arg.text))
            throw ParseError(arg.line, arg.col,
                             "'" + arg.text + "' is not a variable");
          out.args.emplace_back("", arg.text);
        }
      }
      if (current_.kind == TokKind::Comma) {
        shift();
        continue;
      }
      break;
    }
    expect(TokKind::RParen, "')'");
    return out;
  }

  Lexer lexer_;
  Token current_{TokKind::End, "", 1, 1};
  std::size_t anon_ = 0;
};

}  // namespace

Rule parse_rule(const std::string& text) { return Parser(text).rule(); }

}  // namespace relkit
