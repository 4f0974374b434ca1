#pragma once

// Straightforward clausification: no renaming of subformulas, so the output
// can be exponential in the input. Context axioms are short, which keeps this
// tractable.

#include "vcprune/formula.hpp"
#include "vcprune/vc.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace vcprune {

/// Issues witness symbol names for existential variables that do not collide
/// with a set of reserved names or with each other.
class WitnessNamer {
 public:
  explicit WitnessNamer(std::set<std::string> reserved = {},
                        std::string prefix = "sk");

  std::string next();

 private:
  std::set<std::string> reserved_;
  std::string prefix_;
  std::size_t counter_ = 0;
};

/// Converts a closed formula into clauses. Universal variables stay free in
/// the clauses (renamed apart when two binders share a name); existential
/// variables become witness terms over the enclosing universals. Tautologies
/// and duplicate clauses are dropped. Each clause's origin is `origin_id` with
/// its index in the returned list.
std::vector<Clause> to_cnf(const Formula& formula,
                           const std::string& origin_id, WitnessNamer& namer);
/// Same, with a private namer reserving the formula's own symbols.
std::vector<Clause> to_cnf(const Formula& formula,
                           const std::string& origin_id = {});

/// Negation normal form: only And, Or, Forall, Exists, True, False and
/// (negated) atoms remain.
Formula to_nnf(const Formula& formula);

/// Atomic subformulas with the polarity they take in negation normal form.
/// An atom under an Iff contributes both polarities.
std::vector<Literal> polarized_atoms(const Formula& formula);

/// Clauses of the refutation problem: context, hypotheses and the negated
/// conclusion, with witness names unique across the whole VC. The negated
/// conclusion's clauses carry origin id "conclusion".
std::vector<Clause> clausify_refutation(const VerificationCondition& vc);

}  // namespace vcprune
