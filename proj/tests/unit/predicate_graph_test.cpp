#include "vcprune/cnf.hpp"
#include "vcprune/predicate_graph.hpp"
#include "vcprune/vc_io.hpp"

#include "support/arc_tables.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/path_oracle.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace vcprune {
namespace {

using testing::ArcRow;

PredicateNode P(const std::string& name, bool positive = true) {
  return PredicateNode::plain(name, positive);
}
PredicateNode C(CmpOp op, const std::string& sort = "int") {
  return PredicateNode::comparison(op, sort);
}

Arc arc(PredicateNode from, PredicateNode to, std::size_t w, const std::string& ax) {
  Arc a{std::move(from), std::move(to), w, {}};
  a.provenance.axioms.insert(ax);
  return a;
}

TEST(PredicateNode, Complement) {
  EXPECT_EQ(C(CmpOp::Le).complement(), C(CmpOp::Gt));
  EXPECT_EQ(C(CmpOp::Lt, "real").complement(), C(CmpOp::Ge, "real"));
  EXPECT_EQ(C(CmpOp::Eq).complement(), C(CmpOp::Ne));
  EXPECT_EQ(P("valid").complement(), P("valid", false));
  EXPECT_EQ(P("valid").complement().complement(), P("valid"));
  for (CmpOp op : {CmpOp::Eq, CmpOp::Ne, CmpOp::Le, CmpOp::Lt, CmpOp::Ge, CmpOp::Gt}) {
    EXPECT_EQ(C(op).complement().complement(), C(op));
    EXPECT_EQ(C(op).symbol_key(), C(op).complement().symbol_key());
  }
}

TEST(PredicateNode, Labels) {
  EXPECT_EQ(P("valid").label(), "valid+");
  EXPECT_EQ(P("valid", false).label(), "valid-");
  EXPECT_EQ(C(CmpOp::Le).label(), "<=_int");
}

TEST(PredicateNode, NegativeComparisonLiteralMapsToComplement) {
  const Formula le = Formula::comparison(CmpOp::Le, "int", Term::constant("a"),
                                         Term::constant("b"));
  EXPECT_EQ(node_of(Literal(false, le)), C(CmpOp::Gt));
  EXPECT_EQ(node_of(Literal(true, le)), C(CmpOp::Le));
}

TEST(ClauseToArcs, PairTable) {
  for (const auto& c : testing::pair_table_cases()) {
    EXPECT_EQ(testing::rows_of(clause_to_arcs(c.clause)), c.arcs) << c.name;
    for (const Arc& a : clause_to_arcs(c.clause)) {
      EXPECT_EQ(a.weight, c.clause.size() - 1);
      EXPECT_EQ(a.provenance.axioms, std::set<std::string>{"ax"});
    }
  }
}

TEST(ClauseToArcs, SameSymbolPairsAreSkipped) {
  const Formula pa = Formula::atom("p", {Term::constant("a")});
  const Formula pb = Formula::atom("p", {Term::constant("b")});
  const Clause c({Literal(false, pa), Literal(true, pb)}, {"ax", 0});
  EXPECT_TRUE(clause_to_arcs(c).empty());
}

TEST(ClauseToArcs, UnitClauseHasNoArcs) {
  const Clause c({Literal(true, Formula::atom("p"))}, {"ax", 0});
  EXPECT_TRUE(clause_to_arcs(c).empty());
}

TEST(ClauseToArcs, AntisymmetryClause) {
  const Formula ax = parse_formula(
      "(forall ((x int) (y int)) (implies (and (le int (var x) (var y)) (le int (var y) (var x)))"
      " (= int (var x) (var y))))");
  const auto clauses = to_cnf(ax, "ax");
  ASSERT_EQ(clauses.size(), 1u);
  EXPECT_EQ(testing::rows_of(clause_to_arcs(clauses[0])),
            (std::set<ArcRow>{{"<=_int", "=_int", 2}}));
}

TEST(ClauseToArcs, WeakSplitsClause) {
  const Formula ax = parse_formula(
      "(forall ((x int) (y int)) (implies (ge int (var x) (var y))"
      " (or (gt int (var x) (var y)) (= int (var x) (var y)))))");
  const auto clauses = to_cnf(ax, "ax");
  ASSERT_EQ(clauses.size(), 1u);
  EXPECT_EQ(testing::rows_of(clause_to_arcs(clauses[0])),
            (std::set<ArcRow>{{">=_int", ">_int", 2}, {">=_int", "=_int", 2},
                              {"<=_int", "=_int", 2}}));
}

TEST(Enrichment, IntTable) {
  PredicateGraph g;
  g.enrich_with_comparison_axioms({"int"});
  EXPECT_EQ(testing::rows_of(g), testing::int_comparison_rows());
  for (const auto& [key, a] : g.arcs()) {
    EXPECT_NE(a.from, a.to);
    EXPECT_TRUE(a.provenance.builtin);
    EXPECT_TRUE(a.provenance.axioms.empty());
  }
  EXPECT_EQ(comparison_axioms("int").size(), 10u);
}

TEST(Enrichment, EmptySortsLeaveGraphUnchanged) {
  PredicateGraph g;
  g.enrich_with_comparison_axioms({});
  EXPECT_TRUE(g.arcs().empty());
  EXPECT_TRUE(g.nodes().empty());
}

TEST(Enrichment, NoCrossSortArcs) {
  PredicateGraph g;
  g.enrich_with_comparison_axioms({"int", "real"});
  EXPECT_EQ(g.arcs().size(), 2 * testing::int_comparison_rows().size());
  for (const auto& [key, a] : g.arcs()) EXPECT_EQ(a.from.name(), a.to.name());
}

TEST(Enrichment, CoarseningForcesUnitWeights) {
  PredicateGraph g;
  g.enrich_with_comparison_axioms({"int"});
  g.coarsen();
  for (const auto& [key, a] : g.arcs()) EXPECT_EQ(a.weight, 1u);
}

TEST(PredicateGraph, MergeKeepsMinimumAndUnitesProvenance) {
  PredicateGraph g;
  g.add_arc(arc(P("p"), P("q"), 3, "ax1"));
  g.add_arc(arc(P("p"), P("q"), 1, "ax2"));
  ASSERT_EQ(g.arcs().size(), 1u);
  const Arc* a = g.find_arc(P("p"), P("q"));
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->weight, 1u);
  EXPECT_EQ(a->provenance.axioms, (std::set<std::string>{"ax1", "ax2"}));
}

TEST(PredicateGraph, BuildMergesAcrossAxioms) {
  const VerificationCondition vc = parse_vc(
      "(vc \"t\" (context"
      " (ax1 (forall ((x e)) (implies (pred p (var x)) (pred q (var x)))))"
      " (ax2 (forall ((x e)) (implies (pred p (var x)) (or (pred q (var x)) (pred r (var x)))))))"
      " (hyps) (goal (pred q (const a))))");
  const PredicateGraph g = PredicateGraph::build(vc.context);
  const Arc* a = g.find_arc(P("p"), P("q"));
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->weight, 1u);
  EXPECT_EQ(a->provenance.axioms, (std::set<std::string>{"ax1", "ax2"}));
}

TEST(PredicateGraph, SelfLoopsIgnored) {
  PredicateGraph g;
  g.add_arc(arc(P("p"), P("p"), 1, "ax"));
  EXPECT_TRUE(g.arcs().empty());
}

TEST(PredicateGraph, EmptyContextWithoutComparisons) {
  GraphOptions options;
  options.with_comparisons = false;
  const PredicateGraph g = PredicateGraph::build({}, options, {"int"});
  EXPECT_TRUE(g.arcs().empty());
}

TEST(PredicateGraph, NodesClosedUnderComplement) {
  const VerificationCondition vc = testing::running_example();
  const PredicateGraph g = PredicateGraph::build(vc.context, {}, comparison_sorts(vc));
  for (const PredicateNode& n : g.nodes()) EXPECT_TRUE(g.nodes().count(n.complement()));
}

TEST(PredicateGraph, ComparisonSortsOfRunningExample) {
  EXPECT_EQ(comparison_sorts(testing::running_example()),
            (std::set<std::string>{"int", "memory_int", "pointer"}));
}

TEST(PredicateGraph, MergeIdempotence) {
  testing::Generator gen(21);
  for (int n = 0; n < 100; ++n) {
    const PredicateGraph g = gen.predicate_graph().graph;
    PredicateGraph again;
    for (const PredicateNode& node : g.nodes()) again.add_node(node);
    for (const auto& [key, a] : g.arcs()) again.add_arc(a);
    for (const auto& [key, a] : g.arcs()) again.add_arc(a);
    ASSERT_EQ(again.nodes(), g.nodes());
    ASSERT_EQ(testing::rows_of(again), testing::rows_of(g));
  }
}

TEST(PredicateGraph, DotIsDeterministic) {
  PredicateGraph g;
  g.add_arc(arc(P("valid"), P("not_assigns"), 1, "ax"));
  std::ostringstream a, b;
  g.write_dot(a);
  g.write_dot(b);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().rfind("digraph predicates {", 0), 0u);
  EXPECT_NE(a.str().find("\"valid+\" -> \"not_assigns+\" [label=\"1\"];"), std::string::npos);
}

TEST(Reachability, ConclusionSeeds) {
  const VerificationCondition vc = testing::running_example();
  const PredicateGraph g = PredicateGraph::build(vc.context, {}, comparison_sorts(vc));
  const PredicateReachability r = reachable_predicates(g, vc.conclusion);
  EXPECT_EQ(r.level(0), std::set<PredicateNode>{P("not_assigns")});
}

TEST(Reachability, SingleArcBothDirections) {
  PredicateGraph g;
  g.add_arc(arc(P("valid"), P("not_assigns"), 1, "ax_na_def"));
  const PredicateReachability r = reachable_predicates(g, {P("not_assigns")});
  EXPECT_EQ(r.distance(P("valid")), 1u);
  EXPECT_EQ(r.distance(P("valid", false)), PredicateReachability::kUnreachable);
  const PredicateReachability back = reachable_predicates(g, {P("valid", false)});
  EXPECT_EQ(back.distance(P("not_assigns", false)), 1u);
  EXPECT_EQ(back.used_arcs(1), (std::vector<ArcKey>{{P("valid"), P("not_assigns")}}));
}

TEST(Reachability, EmptyGraph) {
  PredicateGraph g;
  const PredicateReachability r = reachable_predicates(g, {P("goal")});
  const auto seq = r.sequence();
  ASSERT_EQ(seq.size(), 2u);
  EXPECT_EQ(seq[0], std::set<PredicateNode>{P("goal")});
  EXPECT_EQ(seq[1], (std::set<PredicateNode>{P("goal"), P("goal", false)}));
  EXPECT_EQ(r.i_max(), 1u);
}

TEST(Reachability, WeightsAccumulate) {
  PredicateGraph g;
  g.add_arc(arc(P("b"), P("a"), 2, "ax1"));
  g.add_arc(arc(P("c"), P("b"), 1, "ax2"));
  g.add_arc(arc(P("c"), P("a"), 5, "ax3"));
  const PredicateReachability r = reachable_predicates(g, {P("a")});
  EXPECT_EQ(r.distance(P("b")), 2u);
  EXPECT_EQ(r.distance(P("c")), 3u);
  EXPECT_EQ(r.depth(), 3u);
  EXPECT_EQ(r.i_max(), 4u);
  EXPECT_EQ(r.arc_level({P("c"), P("a")}), PredicateReachability::kUnreachable);
  EXPECT_EQ(r.arc_level({P("c"), P("b")}), 3u);
  EXPECT_EQ(r.used_arcs(2).size(), 1u);
  EXPECT_EQ(r.used_arcs(3).size(), 2u);
  EXPECT_EQ(r.level(r.i_max()), g.nodes());
}

TEST(Reachability, MatchesBruteForce) {
  testing::Generator gen(31);
  std::size_t mismatches = 0;
  for (int n = 0; n < 300; ++n) {
    const auto sample = gen.predicate_graph();
    const PredicateReachability r = reachable_predicates(sample.graph, sample.initial);
    const auto expected = testing::brute_force_distances(sample.graph, sample.initial);
    for (const auto& [node, d] : expected) {
      if (r.distance(node) != d) ++mismatches;
    }
    ASSERT_EQ(r.distances().size(), expected.size());
  }
  EXPECT_EQ(mismatches, 0u);
}

TEST(Reachability, ContrapositionSymmetry) {
  testing::Generator gen(32);
  for (int n = 0; n < 200; ++n) {
    const auto sample = gen.predicate_graph();
    const PredicateReachability a = reachable_predicates(sample.graph, sample.initial);
    const PredicateReachability b =
        reachable_predicates(testing::mirrored(sample.graph), sample.initial);
    ASSERT_EQ(a.distances(), b.distances());
  }
}

TEST(Reachability, UsedArcsSuffice) {
  testing::Generator gen(33);
  for (int n = 0; n < 200; ++n) {
    const auto sample = gen.predicate_graph();
    const PredicateReachability r = reachable_predicates(sample.graph, sample.initial);
    for (std::size_t w = 0; w <= r.depth(); ++w) {
      PredicateGraph pruned;
      for (const PredicateNode& node : sample.graph.nodes()) pruned.add_node(node);
      for (const ArcKey& k : r.used_arcs(w)) {
        ASSERT_TRUE(sample.graph.arcs().count(k));
        pruned.add_arc(sample.graph.arcs().at(k));
      }
      const PredicateReachability q = reachable_predicates(pruned, sample.initial);
      for (const auto& [node, d] : r.distances()) {
        if (d <= w) ASSERT_EQ(q.distance(node), d) << node.label() << " at w=" << w;
      }
    }
  }
}

TEST(Reachability, SequenceIsMonotone) {
  testing::Generator gen(34);
  for (int n = 0; n < 100; ++n) {
    const auto sample = gen.predicate_graph();
    const auto seq = reachable_predicates(sample.graph, sample.initial).sequence();
    for (std::size_t k = 1; k < seq.size(); ++k) {
      ASSERT_TRUE(std::includes(seq[k].begin(), seq[k].end(), seq[k - 1].begin(),
                                seq[k - 1].end()));
    }
  }
}

}  // namespace
}  // namespace vcprune
