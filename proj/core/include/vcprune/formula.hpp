#pragma once

// First-order terms, formulas, literals and clauses.
//
// Terms and formulas are immutable value types. Formulas carry a `Kind` tag
// and the fields relevant to that kind; accessors assert on kind mismatch.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vcprune {

using BigInt = boost::multiprecision::cpp_int;

class Term {
 public:
  enum class Kind { Variable, Integer, Constant, Application };

  static Term variable(std::string name);
  static Term integer(BigInt value);
  static Term constant(std::string name);
  /// Throws std::invalid_argument when `arguments` is empty: nullary symbols
  /// are constants.
  static Term application(std::string function, std::vector<Term> arguments);

  Kind kind() const noexcept { return kind_; }
  bool is_variable() const noexcept { return kind_ == Kind::Variable; }
  bool is_integer() const noexcept { return kind_ == Kind::Integer; }
  bool is_constant() const noexcept { return kind_ == Kind::Constant; }
  bool is_application() const noexcept { return kind_ == Kind::Application; }

  /// Variable, constant or function name. Empty for integers.
  const std::string& name() const noexcept { return name_; }
  const BigInt& value() const noexcept { return value_; }
  const std::vector<Term>& arguments() const noexcept { return arguments_; }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Term() = default;

  Kind kind_ = Kind::Constant;
  std::string name_;
  BigInt value_;
  std::vector<Term> arguments_;
};

enum class CmpOp { Eq, Ne, Le, Lt, Ge, Gt };

/// Logical negation of a comparison: Eq<->Ne, Le<->Gt, Lt<->Ge.
CmpOp negate(CmpOp op) noexcept;
/// Mathematical symbol, e.g. "<=" or "!=".
std::string_view symbol(CmpOp op) noexcept;
/// Keyword of the native VC format, e.g. "le" or "distinct".
std::string_view keyword(CmpOp op) noexcept;

struct Binder {
  std::string name;
  std::string sort;

  friend bool operator==(const Binder&, const Binder&) = default;
  friend auto operator<=>(const Binder&, const Binder&) = default;
};

class Formula {
 public:
  enum class Kind {
    Atom,
    Comparison,
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Forall,
    Exists,
  };

  static Formula atom(std::string predicate, std::vector<Term> arguments = {});
  static Formula comparison(CmpOp op, std::string sort, Term lhs, Term rhs);
  static Formula truth();
  static Formula falsity();
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);
  /// Throws std::invalid_argument if `binders` is empty.
  static Formula forall(std::vector<Binder> binders, Formula body);
  static Formula exists(std::vector<Binder> binders, Formula body);

  /// Right-nested conjunction; `truth()` for an empty list.
  static Formula conjunction(std::vector<Formula> parts);
  /// Right-nested disjunction; `falsity()` for an empty list.
  static Formula disjunction(std::vector<Formula> parts);

  Kind kind() const noexcept { return kind_; }
  bool is_atomic() const noexcept {
    return kind_ == Kind::Atom || kind_ == Kind::Comparison;
  }
  bool is_binary() const noexcept {
    return kind_ == Kind::And || kind_ == Kind::Or || kind_ == Kind::Implies ||
           kind_ == Kind::Iff;
  }
  bool is_quantifier() const noexcept {
    return kind_ == Kind::Forall || kind_ == Kind::Exists;
  }

  /// Predicate name of an Atom.
  const std::string& predicate() const;
  CmpOp op() const;
  /// Operand sort of a Comparison.
  const std::string& sort() const;
  /// Atom arguments, or {lhs, rhs} of a Comparison.
  const std::vector<Term>& terms() const noexcept { return terms_; }

  const Formula& operand() const;  // Not
  const Formula& lhs() const;      // binary connectives
  const Formula& rhs() const;
  const Formula& body() const;     // quantifiers
  const std::vector<Binder>& binders() const noexcept { return binders_; }
  const std::vector<Formula>& children() const noexcept { return children_; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  Formula() = default;

  Kind kind_ = Kind::True;
  std::string symbol_;  // predicate name or comparison sort
  CmpOp op_ = CmpOp::Eq;
  std::vector<Term> terms_;
  std::vector<Formula> children_;
  std::vector<Binder> binders_;
};

/// A possibly negated Atom or Comparison.
struct Literal {
  bool positive = true;
  Formula atom;

  Literal(bool positive_, Formula atom_);

  Literal negated() const { return Literal(!positive, atom); }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);
};

struct ClauseOrigin {
  std::string formula_id;
  std::size_t index = 0;

  friend bool operator==(const ClauseOrigin&, const ClauseOrigin&) = default;
};

/// Disjunction of literals. `literals` is kept sorted and duplicate-free.
struct Clause {
  std::vector<Literal> literals;
  ClauseOrigin origin;

  Clause() = default;
  explicit Clause(std::vector<Literal> lits, ClauseOrigin origin_ = {});

  std::size_t size() const noexcept { return literals.size(); }
  bool empty() const noexcept { return literals.empty(); }
  /// Contains some atom with both polarities.
  bool is_tautology() const;
  bool is_ground() const;
  /// Literal-set equality, ignoring origin.
  bool same_literals(const Clause& other) const {
    return literals == other.literals;
  }
};

// ---------------------------------------------------------------------------
// Queries and rewriting.

/// Free variable names of a formula (or of a term).
std::set<std::string> free_variables(const Formula& f);
std::set<std::string> free_variables(const Term& t);

/// Names of every Constant occurring in the formula, including inside
/// function applications.
std::set<std::string> constant_names(const Formula& f);
/// Names of constants, functions and predicates.
std::set<std::string> symbol_names(const Formula& f);

bool occurs(const Term& needle, const Term& haystack);
bool mentions_constant(const Formula& f, std::string_view name);

/// Replaces every occurrence of Constant `name` by `replacement`.
Term substitute_constant(const Term& t, std::string_view name,
                         const Term& replacement);
Formula substitute_constant(const Formula& f, std::string_view name,
                            const Term& replacement);

/// Visits every compound-term occurrence in pre-order: formula children left
/// to right, atom arguments left to right, each application before its
/// arguments. The constant graph numbers occurrences in this order.
void for_each_compound_occurrence(const Formula& f,
                                  const std::function<void(const Term&)>& fn);
std::size_t count_compound_occurrences(const Formula& f);

/// Disjunction of a clause's literals as a formula (free variables left
/// open).
Formula to_formula(const Clause& clause);

// ---------------------------------------------------------------------------
// Identifier syntax shared by the native format and diagnostics.

/// ASCII letter followed by letters, digits or underscores.
bool is_plain_identifier(std::string_view s) noexcept;
/// Plain identifiers verbatim; anything else as |...| with `|` and `\`
/// escaped by a backslash.
std::string format_identifier(std::string_view s);

/// Native S-expression rendering of a term or formula.
std::string to_sexpr(const Term& t);
std::string to_sexpr(const Formula& f);

}  // namespace vcprune
