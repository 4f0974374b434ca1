#include "vcprune/predicate_graph.hpp"

#include "vcprune/cnf.hpp"

#include <algorithm>
#include <ostream>
#include <queue>

namespace vcprune {

PredicateNode PredicateNode::plain(std::string name, bool positive) {
  PredicateNode n;
  n.kind_ = Kind::Plain;
  n.name_ = std::move(name);
  n.positive_ = positive;
  return n;
}

PredicateNode PredicateNode::comparison(CmpOp op, std::string sort) {
  PredicateNode n;
  n.kind_ = Kind::Comparison;
  n.name_ = std::move(sort);
  n.op_ = op;
  return n;
}

PredicateNode PredicateNode::complement() const {
  PredicateNode n = *this;
  if (is_comparison()) {
    n.op_ = negate(op_);
  } else {
    n.positive_ = !positive_;
  }
  return n;
}

std::string PredicateNode::key() const {
  if (!is_comparison()) return name_;
  return std::string(symbol(op_)) + "_" + name_;
}

std::string PredicateNode::label() const {
  if (is_comparison()) return key();
  return name_ + (positive_ ? "+" : "-");
}

std::string PredicateNode::symbol_key() const {
  if (!is_comparison()) return name_;
  // One representative per complementary pair.
  CmpOp rep = op_;
  if (rep == CmpOp::Ne || rep == CmpOp::Gt || rep == CmpOp::Ge) rep = negate(rep);
  return std::string(symbol(rep)) + "_" + name_;
}

PredicateNode node_of(const Literal& literal) {
  const Formula& a = literal.atom;
  if (a.kind() == Formula::Kind::Comparison) {
    return PredicateNode::comparison(literal.positive ? a.op() : negate(a.op()),
                                     a.sort());
  }
  return PredicateNode::plain(a.predicate(), literal.positive);
}

void Provenance::merge(const Provenance& other) {
  axioms.insert(other.axioms.begin(), other.axioms.end());
  builtin = builtin || other.builtin;
}

std::vector<Arc> clause_to_arcs(const Clause& clause,
                                const Provenance& provenance) {
  std::vector<Arc> out;
  const std::size_t n = clause.size();
  if (n < 2) return out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Literal& la = clause.literals[a];
      const Literal& lb = clause.literals[b];
      const PredicateNode na = node_of(la);
      const PredicateNode nb = node_of(lb);
      if (na.symbol_key() == nb.symbol_key()) continue;
      bool negate_a;
      if (la.positive != lb.positive) {
        negate_a = !la.positive;
      } else {
        negate_a = na.key() > nb.key();
      }
      Arc arc = negate_a ? Arc{na.complement(), nb, n - 1, provenance}
                         : Arc{nb.complement(), na, n - 1, provenance};
      out.push_back(std::move(arc));
    }
  }
  return out;
}

std::vector<Arc> clause_to_arcs(const Clause& clause) {
  Provenance p;
  p.axioms.insert(clause.origin.formula_id);
  return clause_to_arcs(clause, p);
}

std::vector<Formula> comparison_axioms(const std::string& sort) {
  const Term x = Term::variable("x");
  const Term y = Term::variable("y");
  auto cmp = [&](CmpOp op, const Term& l, const Term& r) {
    return Formula::comparison(op, sort, l, r);
  };
  auto close = [&](Formula body) {
    return Formula::forall({Binder{"x", sort}, Binder{"y", sort}}, std::move(body));
  };
  std::vector<Formula> out;
  // The (>=, >) family with <= antisymmetry, then its mirror.
  auto family = [&](CmpOp weak, CmpOp strict, CmpOp anti) {
    out.push_back(close(Formula::implication(
        Formula::conjunction(cmp(anti, x, y), cmp(anti, y, x)),
        cmp(CmpOp::Eq, x, y))));
    out.push_back(close(Formula::implication(cmp(CmpOp::Eq, x, y), cmp(weak, x, y))));
    out.push_back(close(Formula::implication(cmp(CmpOp::Eq, x, y), cmp(weak, y, x))));
    out.push_back(close(Formula::implication(cmp(strict, x, y), cmp(weak, x, y))));
    out.push_back(close(Formula::implication(
        cmp(weak, x, y),
        Formula::disjunction(cmp(strict, x, y), cmp(CmpOp::Eq, x, y)))));
  };
  family(CmpOp::Ge, CmpOp::Gt, CmpOp::Le);
  family(CmpOp::Le, CmpOp::Lt, CmpOp::Ge);
  return out;
}

PredicateGraph PredicateGraph::build(const std::vector<NamedFormula>& context,
                                     const GraphOptions& options,
                                     const std::set<std::string>& sorts) {
  PredicateGraph g;
  std::set<std::string> reserved;
  for (const NamedFormula& ax : context) reserved.merge(symbol_names(ax.formula));
  WitnessNamer namer(std::move(reserved));
  for (const NamedFormula& ax : context) {
    Provenance p;
    p.axioms.insert(ax.id);
    for (const Clause& c : to_cnf(ax.formula, ax.id, namer)) g.add_clause(c, p);
  }
  if (options.with_comparisons) g.enrich_with_comparison_axioms(sorts);
  if (options.coarse_weights) g.coarsen();
  return g;
}

void PredicateGraph::add_node(const PredicateNode& node) {
  nodes_.insert(node);
  nodes_.insert(node.complement());
}

void PredicateGraph::add_arc(const Arc& arc) {
  if (arc.from == arc.to) return;
  add_node(arc.from);
  add_node(arc.to);
  auto [it, inserted] = arcs_.try_emplace(arc.key(), arc);
  if (inserted) return;
  it->second.weight = std::min(it->second.weight, arc.weight);
  it->second.provenance.merge(arc.provenance);
}

void PredicateGraph::add_clause(const Clause& clause,
                                const Provenance& provenance) {
  for (const Literal& l : clause.literals) add_node(node_of(l));
  for (const Arc& a : clause_to_arcs(clause, provenance)) add_arc(a);
}

void PredicateGraph::enrich_with_comparison_axioms(
    const std::set<std::string>& sorts) {
  Provenance builtin;
  builtin.builtin = true;
  for (const std::string& sort : sorts) {
    for (const Formula& ax : comparison_axioms(sort)) {
      for (const Clause& c : to_cnf(ax)) add_clause(c, builtin);
    }
  }
}

void PredicateGraph::coarsen() {
  for (auto& [key, arc] : arcs_) arc.weight = 1;
}

const Arc* PredicateGraph::find_arc(const PredicateNode& from,
                                    const PredicateNode& to) const {
  auto it = arcs_.find({from, to});
  return it == arcs_.end() ? nullptr : &it->second;
}

void PredicateGraph::write_dot(std::ostream& os) const {
  auto quoted = [&](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  os << "digraph predicates {\n";
  for (const PredicateNode& n : nodes_) {
    os << "  " << quoted(n.label()) << ";\n";
  }
  for (const auto& [key, arc] : arcs_) {
    os << "  " << quoted(arc.from.label()) << " -> " << quoted(arc.to.label())
       << " [label=\"" << arc.weight << "\"];\n";
  }
  os << "}\n";
}

namespace {

void collect_comparison_sorts(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == Formula::Kind::Comparison) out.insert(f.sort());
  for (const Formula& c : f.children()) collect_comparison_sorts(c, out);
}

}  // namespace

std::set<std::string> comparison_sorts(const VerificationCondition& vc) {
  std::set<std::string> out;
  collect_comparison_sorts(vc.conclusion, out);
  for (const auto* list : {&vc.context, &vc.hypotheses}) {
    for (const NamedFormula& nf : *list) collect_comparison_sorts(nf.formula, out);
  }
  return out;
}

std::vector<PredicateNode> predicate_nodes(const Formula& f) {
  std::vector<PredicateNode> out;
  for (const Clause& c : to_cnf(f)) {
    for (const Literal& l : c.literals) {
      PredicateNode n = node_of(l);
      if (std::find(out.begin(), out.end(), n) == out.end()) {
        out.push_back(std::move(n));
      }
    }
  }
  return out;
}

PredicateReachability::PredicateReachability(
    std::map<PredicateNode, std::size_t> distance,
    std::map<ArcKey, std::size_t> arc_level)
    : distance_(std::move(distance)), arc_level_(std::move(arc_level)) {
  for (const auto& [n, d] : distance_) {
    if (d != kUnreachable) depth_ = std::max(depth_, d);
  }
}

std::size_t PredicateReachability::distance(const PredicateNode& n) const {
  auto it = distance_.find(n);
  return it == distance_.end() ? kUnreachable : it->second;
}

bool PredicateReachability::contains(const PredicateNode& n,
                                     std::size_t i) const {
  auto it = distance_.find(n);
  if (it == distance_.end()) return false;
  return i >= i_max() || it->second <= i;
}

std::set<PredicateNode> PredicateReachability::level(std::size_t i) const {
  std::set<PredicateNode> out;
  for (const auto& [n, d] : distance_) {
    if (i >= i_max() || d <= i) out.insert(n);
  }
  return out;
}

std::vector<std::set<PredicateNode>> PredicateReachability::sequence() const {
  std::vector<std::set<PredicateNode>> out;
  for (std::size_t k = 0; k <= depth_; ++k) out.push_back(level(k));
  std::set<PredicateNode> all = limit();
  if (all != out.back()) out.push_back(std::move(all));
  return out;
}

std::vector<ArcKey> PredicateReachability::used_arcs(
    std::size_t max_weight) const {
  std::vector<ArcKey> out;
  for (const auto& [key, level] : arc_level_) {
    if (level <= max_weight) out.push_back(key);
  }
  return out;
}

std::size_t PredicateReachability::arc_level(const ArcKey& key) const {
  auto it = arc_level_.find(key);
  return it == arc_level_.end() ? kUnreachable : it->second;
}

PredicateReachability reachable_predicates(
    const PredicateGraph& g, const std::vector<PredicateNode>& initial) {
  constexpr std::size_t inf = PredicateReachability::kUnreachable;

  std::set<PredicateNode> universe = g.nodes();
  for (const PredicateNode& n : initial) {
    universe.insert(n);
    universe.insert(n.complement());
  }
  std::vector<PredicateNode> nodes(universe.begin(), universe.end());
  auto index = [&](const PredicateNode& n) {
    return static_cast<std::size_t>(
        std::lower_bound(nodes.begin(), nodes.end(), n) - nodes.begin());
  };

  // Traversable edges u -> v, each tagged with the stored arc it comes from.
  struct Edge {
    std::size_t from, to, weight;
    const Arc* arc;
  };
  std::vector<Edge> edges;
  for (const auto& [key, arc] : g.arcs()) {
    edges.push_back({index(arc.from), index(arc.to), arc.weight, &arc});
    edges.push_back({index(arc.to.complement()), index(arc.from.complement()),
                     arc.weight, &arc});
  }
  std::vector<std::vector<std::size_t>> incoming(nodes.size());
  for (std::size_t e = 0; e < edges.size(); ++e) incoming[edges[e].to].push_back(e);

  std::vector<std::size_t> dist(nodes.size(), inf);
  using Item = std::pair<std::size_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (const PredicateNode& n : initial) {
    const std::size_t k = index(n);
    if (dist[k] != 0) {
      dist[k] = 0;
      queue.emplace(0, k);
    }
  }
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d != dist[v]) continue;
    for (std::size_t e : incoming[v]) {
      const Edge& edge = edges[e];
      const std::size_t nd = d + edge.weight;
      if (nd < dist[edge.from]) {
        dist[edge.from] = nd;
        queue.emplace(nd, edge.from);
      }
    }
  }

  std::map<ArcKey, std::size_t> arc_level;
  for (const Edge& edge : edges) {
    if (dist[edge.to] == inf || dist[edge.from] == inf) continue;
    if (dist[edge.from] != dist[edge.to] + edge.weight) continue;
    auto [it, inserted] = arc_level.try_emplace(edge.arc->key(), dist[edge.from]);
    if (!inserted) it->second = std::min(it->second, dist[edge.from]);
  }

  std::map<PredicateNode, std::size_t> distance;
  for (std::size_t k = 0; k < nodes.size(); ++k) distance.emplace(nodes[k], dist[k]);
  return PredicateReachability(std::move(distance), std::move(arc_level));
}

PredicateReachability reachable_predicates(const PredicateGraph& g,
                                           const Formula& conclusion) {
  return reachable_predicates(g, predicate_nodes(conclusion));
}

}  // namespace vcprune
