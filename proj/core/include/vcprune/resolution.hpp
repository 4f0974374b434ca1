#pragma once

// Ground binary resolution with subsumption. Incomplete by design: a step
// budget bounds the search, so a satisfiable or hard set yields Unknown.

#include "vcprune/formula.hpp"

#include <cstddef>
#include <vector>

namespace vcprune {

enum class OracleResult { Unsat, Unknown };

/// Breadth-first saturation; each generated resolvent counts as one step.
/// Atoms are compared syntactically, so equality is uninterpreted. Throws
/// std::invalid_argument if some clause contains a variable.
OracleResult resolution_oracle(const std::vector<Clause>& clauses,
                               std::size_t step_limit);

}  // namespace vcprune
