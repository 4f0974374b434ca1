#pragma once

// SMT-LIB 2 emission of a VC as a refutation problem in AUFLIA: context and
// hypotheses are asserted, then the negated conclusion.
//
// Terms in the native format are untyped; sorts are inferred by unifying
// argument positions of every function and predicate with comparison sorts,
// binder sorts and integer literals. Positions left unconstrained get the
// uninterpreted sort `U`.

#include "vcprune/vc.hpp"

#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>

namespace vcprune {

class EmitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SmtOptions {
  /// Native sort name mapped to the interpreted `Int`.
  std::string integer_sort = "int";
  /// Non-integer sorts whose ordering comparisons are allowed. They get an
  /// uninterpreted `<=` predicate constrained to be a total order.
  std::set<std::string> ordered_sorts;
};

/// Throws EmitError on ill-sorted input, on a symbol used with two arities or
/// roles, or on an ordering comparison over a sort without a declared total
/// order.
std::string emit_smt(const VerificationCondition& vc,
                     const SmtOptions& options = {});
void emit_smt(std::ostream& out, const VerificationCondition& vc,
              const SmtOptions& options = {});

}  // namespace vcprune
