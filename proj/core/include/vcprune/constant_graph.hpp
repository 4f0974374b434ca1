#pragma once

// Undirected constant dependency graph over the goal (hypotheses and
// conclusion). Every compound-term occurrence gets its own fresh vertex
// `f_i`; it is linked to the vertex of each argument that is a constant or a
// compound term. Variables and integer literals contribute nothing.

#include "vcprune/vc.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vcprune {

using VertexId = std::size_t;

/// A named constant (`occurrence == 0`) or the fresh constant of the
/// `occurrence`-th compound term.
struct ConstantLabel {
  std::string name;
  std::size_t occurrence = 0;

  static ConstantLabel named(std::string name) { return {std::move(name), 0}; }
  static ConstantLabel fresh(std::string function, std::size_t index) {
    return {std::move(function), index};
  }

  bool is_fresh() const noexcept { return occurrence != 0; }
  /// `name` or `function_index`.
  std::string to_string() const;

  friend bool operator==(const ConstantLabel&, const ConstantLabel&) = default;
  friend auto operator<=>(const ConstantLabel&, const ConstantLabel&) = default;
};

struct ConstantVertex {
  ConstantLabel label;
  /// Hypothesis id of the first occurrence; empty for the conclusion.
  std::string origin;
};

class ConstantGraph {
 public:
  /// Occurrences are numbered from 1: conclusion first, then hypotheses in
  /// source order, each in `for_each_compound_occurrence` order.
  static ConstantGraph build(const VerificationCondition& vc);

  std::span<const ConstantVertex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  /// Edge multiset; repeated pairs are parallel edges.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const noexcept {
    return edges_;
  }
  /// Neighbours with multiplicity.
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }

  std::optional<VertexId> find(const ConstantLabel& label) const;
  std::optional<VertexId> find_named(const std::string& name) const {
    return find(ConstantLabel::named(name));
  }

  /// Fresh vertices of a goal formula in occurrence order. Use "" for the
  /// conclusion.
  std::span<const VertexId> occurrences_of(const std::string& formula_id) const;

  /// Named-constant vertices of the conclusion, in vertex order.
  const std::vector<VertexId>& conclusion_constants() const noexcept {
    return conclusion_constants_;
  }

  /// Named-constant vertices for the constants of `f`; names missing from the
  /// graph are skipped.
  std::vector<VertexId> named_vertices(const Formula& f) const;

  /// Deterministic DOT rendering; vertices in id order.
  void write_dot(std::ostream& os) const;

 private:
  VertexId intern(const ConstantLabel& label, const std::string& origin);
  void add_edge(VertexId a, VertexId b);

  std::vector<ConstantVertex> vertices_;
  std::map<ConstantLabel, VertexId> index_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::map<std::string, std::vector<VertexId>> occurrences_;
  std::vector<VertexId> conclusion_constants_;
};

/// The increasing sequence C_0 ⊆ C_1 ⊆ ... of relevant constants.
class ConstantReachability {
 public:
  ConstantReachability() = default;
  ConstantReachability(std::vector<std::size_t> level_of, std::size_t depth);

  /// Index of the last reachable level: C_depth is the reachable closure.
  std::size_t depth() const noexcept { return depth_; }
  /// One plus the minimal depth giving every reachable constant; any
  /// j >= j_max denotes the limit set C_∞ (all vertices).
  std::size_t j_max() const noexcept { return depth_ + 1; }

  bool contains(VertexId v, std::size_t j) const;
  /// Level C_j as a sorted vertex set.
  std::set<VertexId> level(std::size_t j) const;
  std::set<VertexId> limit() const { return level(j_max()); }
  /// C_0, ..., C_depth, then C_∞ when it adds unreachable vertices.
  std::vector<std::set<VertexId>> sequence() const;

  /// Level at which `v` enters, or j_max() when only C_∞ holds it.
  std::size_t level_of(VertexId v) const { return level_of_[v]; }

 private:
  std::vector<std::size_t> level_of_;
  std::size_t depth_ = 0;
};

/// Breadth-first growth from `initial`. At each step the frontier is every
/// vertex adjacent to the current set; if some frontier vertex has at least
/// two edge endpoints in the set (counting parallel edges) only those are
/// added, otherwise the whole frontier is. Throws std::invalid_argument on
/// a label absent from the graph.
ConstantReachability reachable_constants(
    const ConstantGraph& g, const std::vector<ConstantLabel>& initial);
ConstantReachability reachable_constants(const ConstantGraph& g,
                                         std::span<const VertexId> initial);
/// Seeds with the conclusion's named constants.
ConstantReachability reachable_constants(const ConstantGraph& g);

}  // namespace vcprune
