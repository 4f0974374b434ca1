#pragma once

// Relevance filtering of hypotheses and context axioms against the reachable
// constant and predicate sets at a selection cursor (i, j).

#include "vcprune/constant_graph.hpp"
#include "vcprune/predicate_graph.hpp"
#include "vcprune/vc.hpp"

#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace vcprune {

struct SelectionCriterion {
  enum class Kind { AnyOverlap, Threshold, FullInclusion };

  Kind kind = Kind::FullInclusion;
  double t_v = 0.0;
  double t_p = 0.0;

  static SelectionCriterion any_overlap() { return {Kind::AnyOverlap}; }
  static SelectionCriterion full_inclusion() { return {Kind::FullInclusion}; }
  /// Throws std::invalid_argument unless both thresholds lie in [0, 1].
  static SelectionCriterion threshold(double t_v, double t_p);
};

/// A hypothesis, or one conjunctive part of it, with its constant set V
/// (vertices of the constant graph) and predicate set P.
struct HypothesisUnit {
  std::string source_id;
  std::size_t part_index = 0;
  std::size_t part_count = 1;
  /// `source_id` for an unsplit hypothesis, otherwise `source_id_partK`
  /// (1-based), made unique against the VC's identifiers.
  std::string unit_id;
  Formula formula = Formula::truth();
  std::set<VertexId> constants;
  std::set<PredicateNode> predicates;
};

/// Units with V and P both empty carry no symbol and are always kept.
bool unit_is_relevant(const std::set<VertexId>& constants,
                      const std::set<PredicateNode>& predicates,
                      const std::set<VertexId>& c_j,
                      const std::set<PredicateNode>& l_i,
                      const SelectionCriterion& criterion);
bool unit_is_relevant(const HypothesisUnit& unit, const std::set<VertexId>& c_j,
                      const std::set<PredicateNode>& l_i,
                      const SelectionCriterion& criterion);

/// Context axioms named by the provenance of the arcs used within
/// `max_weight`; built-in provenance contributes nothing.
std::set<std::string> select_context_axioms(const PredicateReachability& reach,
                                            const PredicateGraph& g,
                                            std::size_t max_weight);

struct PruneOptions {
  SelectionCriterion criterion;
  bool with_comparisons = true;
  bool prune_context = true;
  bool coarse_weights = true;
  /// Take a unit's predicates from its clauses rather than its atoms.
  bool cnf_filter = true;
};

struct UnitVerdict {
  std::string unit_id;
  bool kept = false;
  std::size_t constants_hit = 0;
  std::size_t constants_total = 0;
  std::size_t predicates_hit = 0;
  std::size_t predicates_total = 0;
};

struct SelectionReport {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<UnitVerdict> units;
  /// Kept context axioms in source order.
  std::vector<std::string> axioms;
};

struct ReducedVC {
  VerificationCondition vc;
  SelectionReport report;
};

/// Line-oriented report: a `# i=.. j=..` header, one `id kept|dropped a/b
/// c/d` line per unit (V hits over |V|, P hits over |P|), and a `# context:`
/// line listing the kept axioms.
void write_selection_report(std::ostream& os, const SelectionReport& report);

/// Preprocesses a VC once (definition inlining, splitting, both graphs and
/// both reachability sequences) and answers reductions at any cursor.
class Pruner {
 public:
  explicit Pruner(VerificationCondition vc, PruneOptions options = {});

  const VerificationCondition& original() const noexcept { return original_; }
  /// The VC after definition inlining; reductions are taken from it.
  const VerificationCondition& preprocessed() const noexcept { return vc_; }
  const PruneOptions& options() const noexcept { return options_; }

  const ConstantGraph& constant_graph() const noexcept { return constants_graph_; }
  const PredicateGraph& predicate_graph() const noexcept { return predicate_graph_; }
  const ConstantReachability& constant_reachability() const noexcept {
    return constants_;
  }
  const PredicateReachability& predicate_reachability() const noexcept {
    return predicates_;
  }
  const std::vector<HypothesisUnit>& units() const noexcept { return units_; }

  std::size_t i_max() const noexcept { return predicates_.i_max(); }
  std::size_t j_max() const noexcept { return constants_.j_max(); }

  /// Cursor values at or beyond i_max / j_max select the limit sets.
  ReducedVC reduce(std::size_t i, std::size_t j) const;

 private:
  VerificationCondition original_;
  VerificationCondition vc_;
  PruneOptions options_;
  ConstantGraph constants_graph_;
  PredicateGraph predicate_graph_;
  ConstantReachability constants_;
  PredicateReachability predicates_;
  std::vector<HypothesisUnit> units_;
};

}  // namespace vcprune
