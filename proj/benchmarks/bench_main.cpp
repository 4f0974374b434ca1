#include "vcprune/cnf.hpp"
#include "vcprune/constant_graph.hpp"
#include "vcprune/predicate_graph.hpp"
#include "vcprune/selection.hpp"
#include "vcprune/vc_io.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace {

using namespace vcprune;

const VerificationCondition& running_example() {
  static const VerificationCondition vc =
      parse_vc_file(std::string(VCPRUNE_FIXTURE_DIR) + "/running_example.vc");
  return vc;
}

// A context of n chained implications p_k => p_{k+1} with a comparison guard.
VerificationCondition chain(std::size_t n) {
  VerificationCondition vc;
  vc.name = "chain";
  const Term x = Term::variable("x");
  for (std::size_t k = 0; k < n; ++k) {
    const Formula guard = Formula::comparison(CmpOp::Le, "int", Term::integer(0), x);
    const Formula body = Formula::implication(
        Formula::conjunction(guard, Formula::atom("p" + std::to_string(k), {x})),
        Formula::atom("p" + std::to_string(k + 1), {x}));
    vc.context.push_back({"ax" + std::to_string(k), Formula::forall({{"x", "int"}}, body)});
  }
  vc.hypotheses.push_back({"h", Formula::atom("p0", {Term::constant("c")})});
  vc.conclusion = Formula::atom("p" + std::to_string(n), {Term::constant("c")});
  return vc;
}

void BM_ParseRunningExample(benchmark::State& state) {
  const std::string text = print_vc(running_example());
  for (auto _ : state) benchmark::DoNotOptimize(parse_vc(text));
}
BENCHMARK(BM_ParseRunningExample);

void BM_ClausifyContext(benchmark::State& state) {
  const VerificationCondition& vc = running_example();
  for (auto _ : state) {
    for (const NamedFormula& a : vc.context) benchmark::DoNotOptimize(to_cnf(a.formula, a.id));
  }
}
BENCHMARK(BM_ClausifyContext);

void BM_ConstantReachability(benchmark::State& state) {
  const ConstantGraph g = ConstantGraph::build(running_example());
  for (auto _ : state) benchmark::DoNotOptimize(reachable_constants(g));
}
BENCHMARK(BM_ConstantReachability);

void BM_PredicateGraphBuild(benchmark::State& state) {
  const VerificationCondition vc = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(PredicateGraph::build(vc.context, {}, {"int"}));
  }
}
BENCHMARK(BM_PredicateGraphBuild)->Range(8, 512);

void BM_PredicateReachability(benchmark::State& state) {
  const VerificationCondition vc = chain(static_cast<std::size_t>(state.range(0)));
  const PredicateGraph g = PredicateGraph::build(vc.context, {}, {"int"});
  for (auto _ : state) benchmark::DoNotOptimize(reachable_predicates(g, vc.conclusion));
}
BENCHMARK(BM_PredicateReachability)->Range(8, 512);

void BM_PrunerFullGrid(benchmark::State& state) {
  const VerificationCondition vc = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const Pruner pruner(vc);
    for (std::size_t i = 0; i <= pruner.i_max(); ++i) {
      for (std::size_t j = 0; j <= pruner.j_max(); ++j) {
        benchmark::DoNotOptimize(pruner.reduce(i, j));
      }
    }
  }
}
BENCHMARK(BM_PrunerFullGrid)->Range(8, 64);

}  // namespace
BENCHMARK_MAIN();
