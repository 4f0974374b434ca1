#include "vcprune/selection.hpp"

#include "vcprune/cnf.hpp"
#include "vcprune/preprocess.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace vcprune {

SelectionCriterion SelectionCriterion::threshold(double t_v, double t_p) {
  if (!(t_v >= 0.0 && t_v <= 1.0) || !(t_p >= 0.0 && t_p <= 1.0)) {
    throw std::invalid_argument("selection thresholds must lie in [0, 1]");
  }
  return {Kind::Threshold, t_v, t_p};
}

namespace {

template <typename T>
std::size_t intersection_size(const std::set<T>& a, const std::set<T>& b) {
  std::size_t n = 0;
  for (const T& x : a) n += b.count(x);
  return n;
}

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

bool unit_is_relevant(const std::set<VertexId>& constants,
                      const std::set<PredicateNode>& predicates,
                      const std::set<VertexId>& c_j,
                      const std::set<PredicateNode>& l_i,
                      const SelectionCriterion& criterion) {
  if (constants.empty() && predicates.empty()) return true;
  const std::size_t v_hit = intersection_size(constants, c_j);
  const std::size_t p_hit = intersection_size(predicates, l_i);
  switch (criterion.kind) {
    case SelectionCriterion::Kind::AnyOverlap:
      return v_hit > 0 || p_hit > 0;
    case SelectionCriterion::Kind::Threshold:
      return ratio(v_hit, c_j.size()) >= criterion.t_v ||
             ratio(p_hit, l_i.size()) >= criterion.t_p;
    case SelectionCriterion::Kind::FullInclusion:
      return v_hit == constants.size() && p_hit == predicates.size();
  }
  return false;
}

bool unit_is_relevant(const HypothesisUnit& unit, const std::set<VertexId>& c_j,
                      const std::set<PredicateNode>& l_i,
                      const SelectionCriterion& criterion) {
  return unit_is_relevant(unit.constants, unit.predicates, c_j, l_i, criterion);
}

std::set<std::string> select_context_axioms(const PredicateReachability& reach,
                                            const PredicateGraph& g,
                                            std::size_t max_weight) {
  std::set<std::string> out;
  for (const ArcKey& key : reach.used_arcs(max_weight)) {
    const Arc* arc = g.find_arc(key.first, key.second);
    if (arc) out.insert(arc->provenance.axioms.begin(), arc->provenance.axioms.end());
  }
  return out;
}

void write_selection_report(std::ostream& os, const SelectionReport& report) {
  os << "# i=" << report.i << " j=" << report.j << '\n';
  for (const UnitVerdict& u : report.units) {
    os << format_identifier(u.unit_id) << ' ' << (u.kept ? "kept" : "dropped")
       << ' ' << u.constants_hit << '/' << u.constants_total << ' '
       << u.predicates_hit << '/' << u.predicates_total << '\n';
  }
  os << "# context:";
  for (const std::string& id : report.axioms) os << ' ' << format_identifier(id);
  os << '\n';
}

Pruner::Pruner(VerificationCondition vc, PruneOptions options)
    : original_(std::move(vc)), options_(options) {
  vc_ = inline_flattening_hypotheses(original_);
  constants_graph_ = ConstantGraph::build(vc_);

  GraphOptions graph_options;
  graph_options.with_comparisons = options_.with_comparisons;
  graph_options.coarse_weights = options_.coarse_weights;
  predicate_graph_ =
      PredicateGraph::build(vc_.context, graph_options, comparison_sorts(vc_));

  std::set<std::string> taken;
  for (const auto* list : {&vc_.context, &vc_.hypotheses}) {
    for (const NamedFormula& nf : *list) taken.insert(nf.id);
  }

  for (const NamedFormula& h : vc_.hypotheses) {
    const std::vector<SplitPart> parts = split_conjunctive_hypothesis_traced(h.formula);
    const std::span<const VertexId> occurrences = constants_graph_.occurrences_of(h.id);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      HypothesisUnit u;
      u.source_id = h.id;
      u.part_index = k;
      u.part_count = parts.size();
      u.formula = parts[k].formula;
      if (parts.size() == 1) {
        u.unit_id = h.id;
      } else {
        u.unit_id = h.id + "_part" + std::to_string(k + 1);
        while (!taken.insert(u.unit_id).second) u.unit_id += "_";
      }
      for (VertexId v : constants_graph_.named_vertices(u.formula)) u.constants.insert(v);
      for (const auto& [begin, end] : parts[k].occurrences) {
        for (std::size_t o = begin; o < end && o < occurrences.size(); ++o) {
          u.constants.insert(occurrences[o]);
        }
      }
      if (options_.cnf_filter) {
        for (const PredicateNode& n : predicate_nodes(u.formula)) u.predicates.insert(n);
      } else {
        for (const Literal& l : polarized_atoms(u.formula)) u.predicates.insert(node_of(l));
      }
      for (const PredicateNode& n : u.predicates) predicate_graph_.add_node(n);
      units_.push_back(std::move(u));
    }
  }
  for (const PredicateNode& n : predicate_nodes(vc_.conclusion)) {
    predicate_graph_.add_node(n);
  }

  constants_ = reachable_constants(constants_graph_);
  predicates_ = reachable_predicates(predicate_graph_, vc_.conclusion);
}

ReducedVC Pruner::reduce(std::size_t i, std::size_t j) const {
  const std::set<VertexId> c_j = constants_.level(j);
  const std::set<PredicateNode> l_i = predicates_.level(i);

  ReducedVC out;
  out.report.i = i;
  out.report.j = j;
  out.vc.name = vc_.name;
  out.vc.conclusion = vc_.conclusion;

  std::size_t u = 0;
  for (const NamedFormula& h : vc_.hypotheses) {
    std::vector<const HypothesisUnit*> kept;
    std::size_t count = 0;
    for (; u < units_.size() && units_[u].source_id == h.id; ++u, ++count) {
      const HypothesisUnit& unit = units_[u];
      UnitVerdict verdict;
      verdict.unit_id = unit.unit_id;
      verdict.kept = unit_is_relevant(unit, c_j, l_i, options_.criterion);
      verdict.constants_total = unit.constants.size();
      verdict.constants_hit = intersection_size(unit.constants, c_j);
      verdict.predicates_total = unit.predicates.size();
      verdict.predicates_hit = intersection_size(unit.predicates, l_i);
      if (verdict.kept) kept.push_back(&unit);
      out.report.units.push_back(std::move(verdict));
    }
    if (kept.size() == count) {
      out.vc.hypotheses.push_back(h);
    } else {
      for (const HypothesisUnit* unit : kept) {
        out.vc.hypotheses.push_back(NamedFormula{unit->unit_id, unit->formula});
      }
    }
  }

  if (options_.prune_context) {
    const std::set<std::string> axioms = select_context_axioms(predicates_, predicate_graph_, i);
    for (const NamedFormula& ax : vc_.context) {
      if (axioms.count(ax.id)) out.vc.context.push_back(ax);
    }
  } else {
    out.vc.context = vc_.context;
  }
  for (const NamedFormula& ax : out.vc.context) out.report.axioms.push_back(ax.id);
  return out;
}

}  // namespace vcprune
