#pragma once

#include "vcprune/formula.hpp"

#include <string>
#include <vector>

namespace vcprune {

struct NamedFormula {
  std::string id;
  Formula formula;

  friend bool operator==(const NamedFormula&, const NamedFormula&) = default;
};

/// Context => (Hypotheses => Conclusion).
struct VerificationCondition {
  std::string name;
  std::vector<NamedFormula> context;
  std::vector<NamedFormula> hypotheses;
  Formula conclusion = Formula::truth();

  friend bool operator==(const VerificationCondition&,
                         const VerificationCondition&) = default;
};

/// Every constant, function and predicate name used anywhere in the VC.
std::set<std::string> symbol_names(const VerificationCondition& vc);

}  // namespace vcprune
