#pragma once

// Weighted directed predicate dependency graph. Nodes are polarized
// predicate symbols and sort-indexed comparison operators; an arc p -> q with
// weight w records that some axiom clause of w + 1 literals lets p contribute
// to deriving q.

#include "vcprune/vc.hpp"

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace vcprune {

class PredicateNode {
 public:
  enum class Kind { Plain, Comparison };

  static PredicateNode plain(std::string name, bool positive = true);
  static PredicateNode comparison(CmpOp op, std::string sort);

  Kind kind() const noexcept { return kind_; }
  bool is_comparison() const noexcept { return kind_ == Kind::Comparison; }
  /// Predicate name, or the operand sort of a comparison.
  const std::string& name() const noexcept { return name_; }
  /// Polarity of a plain node; comparisons are always positive.
  bool positive() const noexcept { return positive_; }
  CmpOp op() const noexcept { return op_; }

  /// Plain nodes flip polarity; comparisons take the complement operator.
  PredicateNode complement() const;

  /// Symbol without polarity: `valid`, or `<=_int`.
  std::string key() const;
  /// Human-readable: `valid+`, `valid-`, `<=_int`.
  std::string label() const;
  /// Shared by a node and its complement. Literals over the same predicate
  /// symbol yield no arcs.
  std::string symbol_key() const;

  friend bool operator==(const PredicateNode&, const PredicateNode&) = default;
  friend std::strong_ordering operator<=>(const PredicateNode&,
                                          const PredicateNode&) = default;

 private:
  PredicateNode() = default;

  Kind kind_ = Kind::Plain;
  std::string name_;
  bool positive_ = true;
  CmpOp op_ = CmpOp::Eq;
};

/// Node of a literal. A negative comparison literal maps to the node of the
/// complement operator.
PredicateNode node_of(const Literal& literal);

using ArcKey = std::pair<PredicateNode, PredicateNode>;

struct Provenance {
  std::set<std::string> axioms;
  /// Generated by the built-in comparison axioms.
  bool builtin = false;

  void merge(const Provenance& other);
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Arc {
  PredicateNode from;
  PredicateNode to;
  std::size_t weight = 1;
  Provenance provenance;

  ArcKey key() const { return {from, to}; }
};

/// Arcs of one clause, one per unordered pair of literals over distinct
/// predicate symbols. A pair {l, l'} denotes the implication ¬l => l'. With
/// mixed polarity the negative literal is the one negated; with equal
/// polarity it is the literal whose node key is lexicographically larger.
/// Weight is the clause size minus one.
std::vector<Arc> clause_to_arcs(const Clause& clause,
                                const Provenance& provenance);
/// Same, with provenance taken from the clause origin.
std::vector<Arc> clause_to_arcs(const Clause& clause);

/// The ten built-in comparison axioms for sort `sort`: antisymmetry of <= and
/// >=, = implies <= and >= both ways, strict implies non-strict, non-strict
/// splits into strict or equal.
std::vector<Formula> comparison_axioms(const std::string& sort);

struct GraphOptions {
  bool with_comparisons = true;
  bool coarse_weights = false;
};

class PredicateGraph {
 public:
  /// Clausifies every axiom and merges the resulting arcs. With
  /// `with_comparisons`, enriches with the built-in axioms of every sort in
  /// `comparison_sorts`.
  static PredicateGraph build(const std::vector<NamedFormula>& context,
                              const GraphOptions& options = {},
                              const std::set<std::string>& comparison_sorts = {});

  /// Adds the node and its complement.
  void add_node(const PredicateNode& node);
  /// Merges with an existing arc on the same key: minimum weight, union of
  /// provenance. Self-loops are ignored.
  void add_arc(const Arc& arc);
  void add_clause(const Clause& clause, const Provenance& provenance);
  void enrich_with_comparison_axioms(const std::set<std::string>& sorts);
  /// Forces every stored weight to 1.
  void coarsen();

  const std::set<PredicateNode>& nodes() const noexcept { return nodes_; }
  const std::map<ArcKey, Arc>& arcs() const noexcept { return arcs_; }
  const Arc* find_arc(const PredicateNode& from, const PredicateNode& to) const;

  /// Deterministic DOT rendering; nodes and arcs in sorted order, arcs
  /// labelled with their weight.
  void write_dot(std::ostream& os) const;

 private:
  std::set<PredicateNode> nodes_;
  std::map<ArcKey, Arc> arcs_;
};

/// Sorts of every comparison in the VC.
std::set<std::string> comparison_sorts(const VerificationCondition& vc);
/// Nodes of every literal of the formula's clauses, in first-seen order.
std::vector<PredicateNode> predicate_nodes(const Formula& f);

class PredicateReachability {
 public:
  static constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

  PredicateReachability() = default;
  PredicateReachability(std::map<PredicateNode, std::size_t> distance,
                        std::map<ArcKey, std::size_t> arc_level);

  /// Minimal weight of a path to L_0, or kUnreachable.
  std::size_t distance(const PredicateNode& n) const;
  const std::map<PredicateNode, std::size_t>& distances() const noexcept {
    return distance_;
  }
  /// Largest finite distance.
  std::size_t depth() const noexcept { return depth_; }
  /// Any i >= i_max denotes L_∞ (every node).
  std::size_t i_max() const noexcept { return depth_ + 1; }

  bool contains(const PredicateNode& n, std::size_t i) const;
  std::set<PredicateNode> level(std::size_t i) const;
  std::set<PredicateNode> limit() const { return level(i_max()); }
  /// L_0, ..., L_depth, then L_∞ when it adds unreachable nodes.
  std::vector<std::set<PredicateNode>> sequence() const;

  /// Stored arcs lying on a minimal path, directly or by contraposition,
  /// whose start is within `max_weight` of L_0.
  std::vector<ArcKey> used_arcs(std::size_t max_weight) const;
  /// Smallest bound at which the arc is used, or kUnreachable.
  std::size_t arc_level(const ArcKey& key) const;

 private:
  std::map<PredicateNode, std::size_t> distance_;
  std::map<ArcKey, std::size_t> arc_level_;
  std::size_t depth_ = 0;
};

/// Backward multi-source shortest paths from `initial`. Every stored arc
/// u -> v is also traversable as complement(v) -> complement(u). Nodes in
/// `initial` absent from the graph are still part of the universe.
PredicateReachability reachable_predicates(
    const PredicateGraph& g, const std::vector<PredicateNode>& initial);
/// L_0 from the literals of the conclusion's clauses.
PredicateReachability reachable_predicates(const PredicateGraph& g,
                                           const Formula& conclusion);

}  // namespace vcprune
