#include "vcprune/formula.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace vcprune {

// ---------------------------------------------------------------------------
// Term

Term Term::variable(std::string name) {
  Term t;
  t.kind_ = Kind::Variable;
  t.name_ = std::move(name);
  return t;
}

Term Term::integer(BigInt value) {
  Term t;
  t.kind_ = Kind::Integer;
  t.value_ = std::move(value);
  return t;
}

Term Term::constant(std::string name) {
  Term t;
  t.kind_ = Kind::Constant;
  t.name_ = std::move(name);
  return t;
}

Term Term::application(std::string function, std::vector<Term> arguments) {
  if (arguments.empty()) {
    throw std::invalid_argument("application of '" + function +
                                "' needs at least one argument");
  }
  Term t;
  t.kind_ = Kind::Application;
  t.name_ = std::move(function);
  t.arguments_ = std::move(arguments);
  return t;
}

bool operator==(const Term& a, const Term& b) {
  return a.kind_ == b.kind_ && a.name_ == b.name_ && a.value_ == b.value_ &&
         a.arguments_ == b.arguments_;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  if (a.value_ != b.value_) {
    return a.value_ < b.value_ ? std::strong_ordering::less
                               : std::strong_ordering::greater;
  }
  return std::lexicographical_compare_three_way(
      a.arguments_.begin(), a.arguments_.end(), b.arguments_.begin(),
      b.arguments_.end());
}

// ---------------------------------------------------------------------------
// CmpOp

CmpOp negate(CmpOp op) noexcept {
  switch (op) {
    case CmpOp::Eq: return CmpOp::Ne;
    case CmpOp::Ne: return CmpOp::Eq;
    case CmpOp::Le: return CmpOp::Gt;
    case CmpOp::Lt: return CmpOp::Ge;
    case CmpOp::Ge: return CmpOp::Lt;
    case CmpOp::Gt: return CmpOp::Le;
  }
  return op;
}

std::string_view symbol(CmpOp op) noexcept {
  switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Ne: return "!=";
    case CmpOp::Le: return "<=";
    case CmpOp::Lt: return "<";
    case CmpOp::Ge: return ">=";
    case CmpOp::Gt: return ">";
  }
  return "?";
}

std::string_view keyword(CmpOp op) noexcept {
  switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Ne: return "distinct";
    case CmpOp::Le: return "le";
    case CmpOp::Lt: return "lt";
    case CmpOp::Ge: return "ge";
    case CmpOp::Gt: return "gt";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::atom(std::string predicate, std::vector<Term> arguments) {
  Formula f;
  f.kind_ = Kind::Atom;
  f.symbol_ = std::move(predicate);
  f.terms_ = std::move(arguments);
  return f;
}

Formula Formula::comparison(CmpOp op, std::string sort, Term lhs, Term rhs) {
  Formula f;
  f.kind_ = Kind::Comparison;
  f.op_ = op;
  f.symbol_ = std::move(sort);
  f.terms_.reserve(2);
  f.terms_.push_back(std::move(lhs));
  f.terms_.push_back(std::move(rhs));
  return f;
}

Formula Formula::truth() {
  Formula f;
  f.kind_ = Kind::True;
  return f;
}

Formula Formula::falsity() {
  Formula f;
  f.kind_ = Kind::False;
  return f;
}

Formula Formula::negation(Formula operand) {
  Formula f;
  f.kind_ = Kind::Not;
  f.children_.push_back(std::move(operand));
  return f;
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  Formula f;
  f.kind_ = Kind::And;
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  Formula f;
  f.kind_ = Kind::Or;
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  Formula f;
  f.kind_ = Kind::Implies;
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
  Formula f;
  f.kind_ = Kind::Iff;
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

Formula Formula::forall(std::vector<Binder> binders, Formula body) {
  if (binders.empty()) throw std::invalid_argument("forall without binders");
  Formula f;
  f.kind_ = Kind::Forall;
  f.binders_ = std::move(binders);
  f.children_.push_back(std::move(body));
  return f;
}

Formula Formula::exists(std::vector<Binder> binders, Formula body) {
  if (binders.empty()) throw std::invalid_argument("exists without binders");
  Formula f;
  f.kind_ = Kind::Exists;
  f.binders_ = std::move(binders);
  f.children_.push_back(std::move(body));
  return f;
}

Formula Formula::conjunction(std::vector<Formula> parts) {
  if (parts.empty()) return truth();
  Formula acc = std::move(parts.back());
  for (std::size_t k = parts.size() - 1; k-- > 0;) {
    acc = conjunction(std::move(parts[k]), std::move(acc));
  }
  return acc;
}

Formula Formula::disjunction(std::vector<Formula> parts) {
  if (parts.empty()) return falsity();
  Formula acc = std::move(parts.back());
  for (std::size_t k = parts.size() - 1; k-- > 0;) {
    acc = disjunction(std::move(parts[k]), std::move(acc));
  }
  return acc;
}

const std::string& Formula::predicate() const {
  assert(kind_ == Kind::Atom);
  return symbol_;
}

CmpOp Formula::op() const {
  assert(kind_ == Kind::Comparison);
  return op_;
}

const std::string& Formula::sort() const {
  assert(kind_ == Kind::Comparison);
  return symbol_;
}

const Formula& Formula::operand() const {
  assert(kind_ == Kind::Not);
  return children_[0];
}

const Formula& Formula::lhs() const {
  assert(is_binary());
  return children_[0];
}

const Formula& Formula::rhs() const {
  assert(is_binary());
  return children_[1];
}

const Formula& Formula::body() const {
  assert(is_quantifier());
  return children_[0];
}

bool operator==(const Formula& a, const Formula& b) {
  return a.kind_ == b.kind_ && a.symbol_ == b.symbol_ && a.op_ == b.op_ &&
         a.terms_ == b.terms_ && a.binders_ == b.binders_ &&
         a.children_ == b.children_;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.symbol_ <=> b.symbol_; c != 0) return c;
  if (auto c = a.op_ <=> b.op_; c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(
          a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end());
      c != 0) {
    return c;
  }
  if (auto c = std::lexicographical_compare_three_way(
          a.binders_.begin(), a.binders_.end(), b.binders_.begin(),
          b.binders_.end());
      c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(
      a.children_.begin(), a.children_.end(), b.children_.begin(),
      b.children_.end());
}

// ---------------------------------------------------------------------------
// Literal / Clause

Literal::Literal(bool positive_, Formula atom_)
    : positive(positive_), atom(std::move(atom_)) {
  if (!atom.is_atomic()) {
    throw std::invalid_argument("literal over a non-atomic formula");
  }
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  if (auto c = a.atom <=> b.atom; c != 0) return c;
  return a.positive <=> b.positive;
}

Clause::Clause(std::vector<Literal> lits, ClauseOrigin origin_)
    : literals(std::move(lits)), origin(std::move(origin_)) {
  std::sort(literals.begin(), literals.end());
  literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
}

bool Clause::is_tautology() const {
  // Sorted by atom first, so complementary literals are adjacent.
  for (std::size_t k = 1; k < literals.size(); ++k) {
    if (literals[k - 1].atom == literals[k].atom) return true;
  }
  return false;
}

bool Clause::is_ground() const {
  return std::all_of(literals.begin(), literals.end(), [](const Literal& l) {
    return free_variables(l.atom).empty();
  });
}

// ---------------------------------------------------------------------------
// Queries

namespace {

void collect_term_vars(const Term& t, std::set<std::string>& out) {
  if (t.is_variable()) {
    out.insert(t.name());
    return;
  }
  for (const Term& a : t.arguments()) collect_term_vars(a, out);
}

void collect_free_vars(const Formula& f, std::vector<std::string>& bound,
                       std::set<std::string>& out) {
  if (f.is_atomic()) {
    std::set<std::string> vars;
    for (const Term& t : f.terms()) collect_term_vars(t, vars);
    for (const std::string& v : vars) {
      if (std::find(bound.begin(), bound.end(), v) == bound.end()) {
        out.insert(v);
      }
    }
    return;
  }
  if (f.is_quantifier()) {
    for (const Binder& b : f.binders()) bound.push_back(b.name);
    collect_free_vars(f.body(), bound, out);
    bound.resize(bound.size() - f.binders().size());
    return;
  }
  for (const Formula& c : f.children()) collect_free_vars(c, bound, out);
}

template <typename TermFn>
void for_each_term(const Formula& f, const TermFn& fn) {
  if (f.is_atomic()) {
    for (const Term& t : f.terms()) fn(t);
    return;
  }
  for (const Formula& c : f.children()) for_each_term(c, fn);
}

void collect_constants(const Term& t, std::set<std::string>& out) {
  if (t.is_constant()) out.insert(t.name());
  for (const Term& a : t.arguments()) collect_constants(a, out);
}

void collect_symbols(const Term& t, std::set<std::string>& out) {
  if (t.is_constant() || t.is_application()) out.insert(t.name());
  for (const Term& a : t.arguments()) collect_symbols(a, out);
}

void visit_compound(const Term& t, const std::function<void(const Term&)>& fn) {
  if (!t.is_application()) return;
  fn(t);
  for (const Term& a : t.arguments()) visit_compound(a, fn);
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free_vars(f, bound, out);
  return out;
}

std::set<std::string> free_variables(const Term& t) {
  std::set<std::string> out;
  collect_term_vars(t, out);
  return out;
}

std::set<std::string> constant_names(const Formula& f) {
  std::set<std::string> out;
  for_each_term(f, [&](const Term& t) { collect_constants(t, out); });
  return out;
}

std::set<std::string> symbol_names(const Formula& f) {
  std::set<std::string> out;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (g->kind() == Formula::Kind::Atom) out.insert(g->predicate());
    if (g->is_atomic()) {
      for (const Term& t : g->terms()) collect_symbols(t, out);
    }
    for (const Formula& c : g->children()) stack.push_back(&c);
  }
  return out;
}

bool occurs(const Term& needle, const Term& haystack) {
  if (needle == haystack) return true;
  return std::any_of(haystack.arguments().begin(), haystack.arguments().end(),
                     [&](const Term& a) { return occurs(needle, a); });
}

bool mentions_constant(const Formula& f, std::string_view name) {
  return constant_names(f).count(std::string(name)) > 0;
}

Term substitute_constant(const Term& t, std::string_view name,
                         const Term& replacement) {
  switch (t.kind()) {
    case Term::Kind::Constant:
      return t.name() == name ? replacement : t;
    case Term::Kind::Application: {
      std::vector<Term> args;
      args.reserve(t.arguments().size());
      for (const Term& a : t.arguments()) {
        args.push_back(substitute_constant(a, name, replacement));
      }
      return Term::application(t.name(), std::move(args));
    }
    default:
      return t;
  }
}

Formula substitute_constant(const Formula& f, std::string_view name,
                            const Term& replacement) {
  using K = Formula::Kind;
  auto sub = [&](const Formula& g) {
    return substitute_constant(g, name, replacement);
  };
  switch (f.kind()) {
    case K::Atom: {
      std::vector<Term> args;
      for (const Term& t : f.terms()) {
        args.push_back(substitute_constant(t, name, replacement));
      }
      return Formula::atom(f.predicate(), std::move(args));
    }
    case K::Comparison:
      return Formula::comparison(
          f.op(), f.sort(), substitute_constant(f.terms()[0], name, replacement),
          substitute_constant(f.terms()[1], name, replacement));
    case K::True:
    case K::False:
      return f;
    case K::Not:
      return Formula::negation(sub(f.operand()));
    case K::And:
      return Formula::conjunction(sub(f.lhs()), sub(f.rhs()));
    case K::Or:
      return Formula::disjunction(sub(f.lhs()), sub(f.rhs()));
    case K::Implies:
      return Formula::implication(sub(f.lhs()), sub(f.rhs()));
    case K::Iff:
      return Formula::equivalence(sub(f.lhs()), sub(f.rhs()));
    case K::Forall:
      return Formula::forall(f.binders(), sub(f.body()));
    case K::Exists:
      return Formula::exists(f.binders(), sub(f.body()));
  }
  return f;
}

void for_each_compound_occurrence(const Formula& f,
                                  const std::function<void(const Term&)>& fn) {
  if (f.is_atomic()) {
    for (const Term& t : f.terms()) visit_compound(t, fn);
    return;
  }
  for (const Formula& c : f.children()) for_each_compound_occurrence(c, fn);
}

std::size_t count_compound_occurrences(const Formula& f) {
  std::size_t n = 0;
  for_each_compound_occurrence(f, [&](const Term&) { ++n; });
  return n;
}

Formula to_formula(const Clause& clause) {
  std::vector<Formula> parts;
  parts.reserve(clause.literals.size());
  for (const Literal& l : clause.literals) {
    parts.push_back(l.positive ? l.atom : Formula::negation(l.atom));
  }
  return Formula::disjunction(std::move(parts));
}

// ---------------------------------------------------------------------------
// Rendering

bool is_plain_identifier(std::string_view s) noexcept {
  if (s.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) {
    return alpha(c) || digit(c) || c == '_';
  });
}

std::string format_identifier(std::string_view s) {
  if (is_plain_identifier(s)) return std::string(s);
  std::string out = "|";
  for (char c : s) {
    if (c == '|' || c == '\\') out += '\\';
    out += c;
  }
  out += '|';
  return out;
}

namespace {

void write_term(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      os << "(var " << format_identifier(t.name()) << ')';
      break;
    case Term::Kind::Constant:
      os << "(const " << format_identifier(t.name()) << ')';
      break;
    case Term::Kind::Integer:
      os << t.value();
      break;
    case Term::Kind::Application:
      os << "(app " << format_identifier(t.name());
      for (const Term& a : t.arguments()) {
        os << ' ';
        write_term(os, a);
      }
      os << ')';
      break;
  }
}

void write_formula(std::ostream& os, const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
      os << "(pred " << format_identifier(f.predicate());
      for (const Term& t : f.terms()) {
        os << ' ';
        write_term(os, t);
      }
      os << ')';
      return;
    case K::Comparison:
      os << '(' << keyword(f.op()) << ' ' << format_identifier(f.sort()) << ' ';
      write_term(os, f.terms()[0]);
      os << ' ';
      write_term(os, f.terms()[1]);
      os << ')';
      return;
    case K::True: os << "true"; return;
    case K::False: os << "false"; return;
    case K::Not:
      os << "(not ";
      write_formula(os, f.operand());
      os << ')';
      return;
    case K::And:
    case K::Or:
    case K::Implies:
    case K::Iff: {
      const char* name = f.kind() == K::And       ? "and"
                         : f.kind() == K::Or      ? "or"
                         : f.kind() == K::Implies ? "implies"
                                                  : "iff";
      os << '(' << name << ' ';
      write_formula(os, f.lhs());
      os << ' ';
      write_formula(os, f.rhs());
      os << ')';
      return;
    }
    case K::Forall:
    case K::Exists:
      os << (f.kind() == K::Forall ? "(forall (" : "(exists (");
      for (std::size_t k = 0; k < f.binders().size(); ++k) {
        if (k) os << ' ';
        os << '(' << format_identifier(f.binders()[k].name) << ' '
           << format_identifier(f.binders()[k].sort) << ')';
      }
      os << ") ";
      write_formula(os, f.body());
      os << ')';
      return;
  }
}

}  // namespace

std::string to_sexpr(const Term& t) {
  std::ostringstream os;
  write_term(os, t);
  return os.str();
}

std::string to_sexpr(const Formula& f) {
  std::ostringstream os;
  write_formula(os, f);
  return os.str();
}

}  // namespace vcprune
