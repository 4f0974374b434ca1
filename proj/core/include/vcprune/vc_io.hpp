#pragma once

// Native S-expression format for verification conditions:
//
//   vc      := "(" "vc" string ctx hyps goal ")"
//   ctx     := "(" "context" axiom* ")"    axiom := "(" ident formula ")"
//   hyps    := "(" "hyps" axiom* ")"
//   goal    := "(" "goal" formula ")"
//   formula := "(" ("and"|"or"|"implies"|"iff") formula formula ")"
//            | "(" "not" formula ")"
//            | "(" ("forall"|"exists") "(" binder+ ")" formula ")"
//            | "true" | "false"
//            | "(" "pred" ident term* ")" | "(" cmp ident term term ")"
//   binder  := "(" ident ident ")"           ; name, sort
//   cmp     := "=" | "distinct" | "le" | "lt" | "ge" | "gt"
//   term    := "(" "var" ident ")" | "(" "const" ident ")" | integer
//            | "(" "app" ident term+ ")"
//
// Identifiers are ASCII letters, digits and underscores starting with a
// letter, or |quoted| with `\|` and `\\` escapes. `;` starts a line comment.

#include "vcprune/vc.hpp"

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vcprune {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnboundVariableError : public ParseError {
 public:
  UnboundVariableError(std::string variable, std::size_t line,
                       std::size_t column);
  const std::string& variable() const noexcept { return variable_; }

 private:
  std::string variable_;
};

class DuplicateIdError : public ParseError {
 public:
  DuplicateIdError(std::string id, std::size_t line, std::size_t column);
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

VerificationCondition parse_vc(std::string_view text);
VerificationCondition parse_vc(std::istream& in);
VerificationCondition parse_vc_file(const std::string& path);

/// Canonical rendering; `parse_vc(print_vc(v)) == v`.
std::string print_vc(const VerificationCondition& vc);
void print_vc(std::ostream& out, const VerificationCondition& vc);

/// Parses a single closed formula in the same syntax.
Formula parse_formula(std::string_view text);

}  // namespace vcprune
