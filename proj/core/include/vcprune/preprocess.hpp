#pragma once

#include "vcprune/formula.hpp"
#include "vcprune/vc.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace vcprune {

/// Half-open range of compound-term occurrence indices, in the numbering of
/// `for_each_compound_occurrence` over the hypothesis being split.
using OccurrenceRange = std::pair<std::size_t, std::size_t>;

struct SplitPart {
  Formula formula;
  /// Occurrence ranges of the original hypothesis that make up this part, in
  /// the part's own traversal order.
  std::vector<OccurrenceRange> occurrences;
};

/// Splits a conjunctive hypothesis into its conjuncts. Nested conjunctions
/// are flattened, a conjunctive consequent `G => (A /\ B)` yields `G => A`
/// and `G => B`, and each part under a universal prefix is re-wrapped with
/// exactly the quantified variables that occur free in it. Returns a single
/// part equal to `h` when nothing splits.
std::vector<SplitPart> split_conjunctive_hypothesis_traced(const Formula& h);
std::vector<Formula> split_conjunctive_hypothesis(const Formula& h);

/// Eliminates hypotheses of shape `c = t` introduced by flattening: `c` is a
/// constant absent from `t`, defined by exactly one hypothesis and not
/// mentioned by the context. Substitutes `t` for `c` in the remaining
/// hypotheses and the conclusion, drops the definition, and repeats in source
/// order until no such hypothesis remains.
VerificationCondition inline_flattening_hypotheses(
    const VerificationCondition& vc);

}  // namespace vcprune
