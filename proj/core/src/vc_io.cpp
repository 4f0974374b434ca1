#include "vcprune/vc_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace vcprune {

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

UnboundVariableError::UnboundVariableError(std::string variable,
                                           std::size_t line, std::size_t column)
    : ParseError("unbound variable '" + variable + "'", line, column),
      variable_(std::move(variable)) {}

DuplicateIdError::DuplicateIdError(std::string id, std::size_t line,
                                   std::size_t column)
    : ParseError("duplicate identifier '" + id + "'", line, column),
      id_(std::move(id)) {}

namespace {

struct Token {
  enum class Kind { LParen, RParen, String, Quoted, Word, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) return tok;
    const char c = text_[pos_];
    if (c == '(' || c == ')') {
      advance();
      tok.kind = c == '(' ? Token::Kind::LParen : Token::Kind::RParen;
      return tok;
    }
    if (c == '"' || c == '|') {
      tok.kind = c == '"' ? Token::Kind::String : Token::Kind::Quoted;
      advance();
      while (true) {
        if (pos_ >= text_.size()) {
          throw ParseError(c == '"' ? "unterminated string"
                                    : "unterminated quoted identifier",
                           tok.line, tok.column);
        }
        char d = text_[pos_];
        advance();
        if (d == c) break;
        if (d == '\\') {
          if (pos_ >= text_.size()) continue;
          d = text_[pos_];
          advance();
        }
        tok.text += d;
      }
      return tok;
    }
    tok.kind = Token::Kind::Word;
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) {
      tok.text += text_[pos_];
      advance();
    }
    return tok;
  }

 private:
  static bool is_delimiter(char c) {
    return c == '(' || c == ')' || c == '"' || c == '|' || c == ';' ||
           c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' ||
                 c == '\f' || c == '\v') {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

bool is_integer_word(std::string_view w) {
  std::size_t k = (!w.empty() && w[0] == '-') ? 1 : 0;
  if (k == w.size()) return false;
  for (; k < w.size(); ++k) {
    if (w[k] < '0' || w[k] > '9') return false;
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  VerificationCondition vc() {
    VerificationCondition out;
    expect_open();
    expect_keyword("vc");
    if (cur_.kind != Token::Kind::String) fail("expected VC name string");
    out.name = cur_.text;
    shift();

    std::set<std::string> ids;
    out.context = section("context", ids);
    out.hypotheses = section("hyps", ids);

    expect_open();
    expect_keyword("goal");
    out.conclusion = formula();
    expect_close();

    expect_close();
    expect_end();
    return out;
  }

  Formula closed_formula() {
    Formula f = formula();
    expect_end();
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, cur_.line, cur_.column);
  }

  void shift() { cur_ = lexer_.next(); }

  bool at_word(std::string_view w) const {
    return cur_.kind == Token::Kind::Word && cur_.text == w;
  }

  void expect_open() {
    if (cur_.kind != Token::Kind::LParen) fail("expected '('");
    shift();
  }

  void expect_close() {
    if (cur_.kind != Token::Kind::RParen) fail("expected ')'");
    shift();
  }

  void expect_end() {
    if (cur_.kind != Token::Kind::End) fail("trailing input");
  }

  void expect_keyword(std::string_view w) {
    if (!at_word(w)) fail("expected '" + std::string(w) + "'");
    shift();
  }

  std::string identifier(const char* what) {
    if (cur_.kind == Token::Kind::Quoted) {
      if (cur_.text.empty()) fail(std::string("empty ") + what);
    } else if (cur_.kind != Token::Kind::Word ||
               !is_plain_identifier(cur_.text)) {
      fail(std::string("expected ") + what);
    }
    std::string out = cur_.text;
    shift();
    return out;
  }

  std::vector<NamedFormula> section(std::string_view keyword,
                                    std::set<std::string>& ids) {
    std::vector<NamedFormula> out;
    expect_open();
    expect_keyword(keyword);
    while (cur_.kind == Token::Kind::LParen) {
      shift();
      const std::size_t line = cur_.line;
      const std::size_t column = cur_.column;
      std::string id = identifier("axiom identifier");
      if (!ids.insert(id).second) throw DuplicateIdError(id, line, column);
      Formula f = formula();
      expect_close();
      out.push_back(NamedFormula{std::move(id), std::move(f)});
    }
    expect_close();
    return out;
  }

  Formula formula() {
    if (at_word("true")) {
      shift();
      return Formula::truth();
    }
    if (at_word("false")) {
      shift();
      return Formula::falsity();
    }
    expect_open();
    if (cur_.kind != Token::Kind::Word) fail("expected formula keyword");
    const std::string head = cur_.text;
    shift();

    Formula out = Formula::truth();
    if (head == "and" || head == "or" || head == "implies" || head == "iff") {
      Formula lhs = formula();
      Formula rhs = formula();
      out = head == "and"       ? Formula::conjunction(std::move(lhs), std::move(rhs))
            : head == "or"      ? Formula::disjunction(std::move(lhs), std::move(rhs))
            : head == "implies" ? Formula::implication(std::move(lhs), std::move(rhs))
                                : Formula::equivalence(std::move(lhs), std::move(rhs));
    } else if (head == "not") {
      out = Formula::negation(formula());
    } else if (head == "forall" || head == "exists") {
      std::vector<Binder> binders;
      expect_open();
      while (cur_.kind == Token::Kind::LParen) {
        shift();
        Binder b;
        b.name = identifier("variable name");
        b.sort = identifier("sort");
        expect_close();
        binders.push_back(std::move(b));
      }
      if (binders.empty()) fail("quantifier needs at least one binder");
      expect_close();
      for (const Binder& b : binders) scope_.push_back(b.name);
      Formula body = formula();
      scope_.resize(scope_.size() - binders.size());
      out = head == "forall" ? Formula::forall(std::move(binders), std::move(body))
                             : Formula::exists(std::move(binders), std::move(body));
    } else if (head == "pred") {
      std::string name = identifier("predicate name");
      std::vector<Term> args;
      while (cur_.kind != Token::Kind::RParen) args.push_back(term());
      out = Formula::atom(std::move(name), std::move(args));
    } else if (auto op = comparison_op(head)) {
      std::string sort = identifier("comparison sort");
      Term lhs = term();
      Term rhs = term();
      out = Formula::comparison(*op, std::move(sort), std::move(lhs),
                                std::move(rhs));
    } else {
      fail("unknown formula keyword '" + head + "'");
    }
    expect_close();
    return out;
  }

  static std::optional<CmpOp> comparison_op(std::string_view w) {
    if (w == "=") return CmpOp::Eq;
    if (w == "distinct") return CmpOp::Ne;
    if (w == "le") return CmpOp::Le;
    if (w == "lt") return CmpOp::Lt;
    if (w == "ge") return CmpOp::Ge;
    if (w == "gt") return CmpOp::Gt;
    return std::nullopt;
  }

  Term term() {
    if (cur_.kind == Token::Kind::Word && is_integer_word(cur_.text)) {
      Term t = Term::integer(BigInt(cur_.text));
      shift();
      return t;
    }
    expect_open();
    if (cur_.kind != Token::Kind::Word) fail("expected term keyword");
    const std::string head = cur_.text;
    shift();
    Term out = Term::integer(0);
    if (head == "var") {
      const std::size_t line = cur_.line;
      const std::size_t column = cur_.column;
      std::string name = identifier("variable name");
      if (std::find(scope_.begin(), scope_.end(), name) == scope_.end()) {
        throw UnboundVariableError(name, line, column);
      }
      out = Term::variable(std::move(name));
    } else if (head == "const") {
      out = Term::constant(identifier("constant name"));
    } else if (head == "app") {
      std::string name = identifier("function name");
      std::vector<Term> args;
      while (cur_.kind != Token::Kind::RParen) args.push_back(term());
      if (args.empty()) fail("application needs at least one argument");
      out = Term::application(std::move(name), std::move(args));
    } else {
      fail("unknown term keyword '" + head + "'");
    }
    expect_close();
    return out;
  }

  Lexer lexer_;
  Token cur_;
  std::vector<std::string> scope_;
};

void write_string(std::ostream& os, std::string_view s) {
  os << '"';
  for (char c : s) {
    if (c == '"' || c == '\\') os << '\\';
    os << c;
  }
  os << '"';
}

void write_section(std::ostream& os, std::string_view keyword,
                   const std::vector<NamedFormula>& items) {
  os << "  (" << keyword;
  for (const NamedFormula& nf : items) {
    os << "\n    (" << format_identifier(nf.id) << ' ' << to_sexpr(nf.formula)
       << ')';
  }
  os << ")\n";
}

}  // namespace

VerificationCondition parse_vc(std::string_view text) {
  return Parser(text).vc();
}

VerificationCondition parse_vc(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_vc(text);
}

VerificationCondition parse_vc_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_vc(in);
}

Formula parse_formula(std::string_view text) {
  return Parser(text).closed_formula();
}

void print_vc(std::ostream& os, const VerificationCondition& vc) {
  os << "(vc ";
  write_string(os, vc.name);
  os << '\n';
  write_section(os, "context", vc.context);
  write_section(os, "hyps", vc.hypotheses);
  os << "  (goal " << to_sexpr(vc.conclusion) << "))\n";
}

std::string print_vc(const VerificationCondition& vc) {
  std::ostringstream os;
  print_vc(os, vc);
  return os.str();
}

}  // namespace vcprune
