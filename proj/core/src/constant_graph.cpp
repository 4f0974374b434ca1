#include "vcprune/constant_graph.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace vcprune {

std::string ConstantLabel::to_string() const {
  if (!is_fresh()) return name;
  return name + "_" + std::to_string(occurrence);
}

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

void write_dot_id(std::ostream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    if (c == '"' || c == '\\') os << '\\';
    os << c;
  }
  os << '"';
}

}  // namespace

VertexId ConstantGraph::intern(const ConstantLabel& label,
                               const std::string& origin) {
  auto [it, inserted] = index_.try_emplace(label, vertices_.size());
  if (inserted) {
    vertices_.push_back(ConstantVertex{label, origin});
    adjacency_.emplace_back();
  }
  return it->second;
}

void ConstantGraph::add_edge(VertexId a, VertexId b) {
  if (a == b) return;
  edges_.emplace_back(std::min(a, b), std::max(a, b));
  adjacency_[a].push_back(b);
  adjacency_[b].push_back(a);
}

ConstantGraph ConstantGraph::build(const VerificationCondition& vc) {
  ConstantGraph g;
  std::size_t counter = 0;

  // Returns the vertex standing for `t`, or nothing for variables and
  // integers. Mirrors the pre-order of for_each_compound_occurrence.
  auto walk_formula = [&](const Formula& root, const std::string& id) {
    std::vector<VertexId>& occ = g.occurrences_[id];
    auto term_vertex = [&](auto&& self, const Term& t) -> std::optional<VertexId> {
      switch (t.kind()) {
        case Term::Kind::Constant:
          return g.intern(ConstantLabel::named(t.name()), id);
        case Term::Kind::Application: {
          const VertexId v = g.intern(ConstantLabel::fresh(t.name(), ++counter), id);
          occ.push_back(v);
          for (const Term& a : t.arguments()) {
            if (auto w = self(self, a)) g.add_edge(v, *w);
          }
          return v;
        }
        default:
          return std::nullopt;
      }
    };
    auto visit = [&](auto&& self, const Formula& f) -> void {
      if (f.is_atomic()) {
        for (const Term& t : f.terms()) term_vertex(term_vertex, t);
        return;
      }
      for (const Formula& c : f.children()) self(self, c);
    };
    visit(visit, root);
  };

  walk_formula(vc.conclusion, "");
  for (const std::string& name : constant_names(vc.conclusion)) {
    g.conclusion_constants_.push_back(*g.find_named(name));
  }
  std::sort(g.conclusion_constants_.begin(), g.conclusion_constants_.end());
  for (const NamedFormula& h : vc.hypotheses) walk_formula(h.formula, h.id);
  return g;
}

std::optional<VertexId> ConstantGraph::find(const ConstantLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const VertexId> ConstantGraph::occurrences_of(
    const std::string& formula_id) const {
  auto it = occurrences_.find(formula_id);
  if (it == occurrences_.end()) return {};
  return it->second;
}

std::vector<VertexId> ConstantGraph::named_vertices(const Formula& f) const {
  std::vector<VertexId> out;
  for (const std::string& name : constant_names(f)) {
    if (auto v = find_named(name)) out.push_back(*v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void ConstantGraph::write_dot(std::ostream& os) const {
  os << "graph constants {\n";
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    os << "  n" << v << " [label=";
    write_dot_id(os, vertices_[v].label.to_string());
    os << "];\n";
  }
  for (const auto& [a, b] : edges_) os << "  n" << a << " -- n" << b << ";\n";
  os << "}\n";
}

ConstantReachability::ConstantReachability(std::vector<std::size_t> level_of,
                                           std::size_t depth)
    : level_of_(std::move(level_of)), depth_(depth) {}

bool ConstantReachability::contains(VertexId v, std::size_t j) const {
  return level_of_.at(v) <= j;
}

std::set<VertexId> ConstantReachability::level(std::size_t j) const {
  std::set<VertexId> out;
  for (VertexId v = 0; v < level_of_.size(); ++v) {
    if (level_of_[v] <= j) out.insert(v);
  }
  return out;
}

std::vector<std::set<VertexId>> ConstantReachability::sequence() const {
  std::vector<std::set<VertexId>> out;
  for (std::size_t k = 0; k <= depth_; ++k) out.push_back(level(k));
  std::set<VertexId> all = limit();
  if (all != out.back()) out.push_back(std::move(all));
  return out;
}

ConstantReachability reachable_constants(const ConstantGraph& g,
                                         std::span<const VertexId> initial) {
  std::vector<std::size_t> level(g.size(), kUnset);
  for (VertexId v : initial) {
    if (v >= g.size()) throw std::invalid_argument("unknown constant vertex");
    level[v] = 0;
  }

  std::size_t depth = 0;
  while (true) {
    // Frontier vertices with their number of edge endpoints in the set.
    std::map<VertexId, std::size_t> frontier;
    for (VertexId v = 0; v < g.size(); ++v) {
      if (level[v] == kUnset) continue;
      for (VertexId w : g.neighbors(v)) {
        if (level[w] == kUnset) ++frontier[w];
      }
    }
    if (frontier.empty()) break;
    const bool multi = std::any_of(frontier.begin(), frontier.end(),
                                   [](const auto& e) { return e.second >= 2; });
    ++depth;
    for (const auto& [w, links] : frontier) {
      if (!multi || links >= 2) level[w] = depth;
    }
  }
  for (std::size_t& l : level) {
    if (l == kUnset) l = depth + 1;
  }
  return ConstantReachability(std::move(level), depth);
}

ConstantReachability reachable_constants(
    const ConstantGraph& g, const std::vector<ConstantLabel>& initial) {
  std::vector<VertexId> ids;
  for (const ConstantLabel& l : initial) {
    auto v = g.find(l);
    if (!v) throw std::invalid_argument("unknown constant '" + l.to_string() + "'");
    ids.push_back(*v);
  }
  return reachable_constants(g, std::span<const VertexId>(ids));
}

ConstantReachability reachable_constants(const ConstantGraph& g) {
  return reachable_constants(g, std::span<const VertexId>(g.conclusion_constants()));
}

}  // namespace vcprune
