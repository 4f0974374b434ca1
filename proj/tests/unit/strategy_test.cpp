#include "vcprune/strategy.hpp"
#include "vcprune/vc_io.hpp"

#include "support/fixtures.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace vcprune {
namespace {

using namespace std::chrono_literals;
using Cursor = std::optional<std::pair<std::size_t, std::size_t>>;

std::vector<Cursor> trace(const DischargeReport& r) {
  std::vector<Cursor> out;
  for (const Attempt& a : r.attempts) out.push_back(a.cursor);
  return out;
}

// Grid order from (0, 0) up to and including `last`, j innermost.
std::vector<Cursor> grid_until(std::size_t j_max, std::pair<std::size_t, std::size_t> last) {
  std::vector<Cursor> out{std::nullopt};
  for (std::size_t i = 0;; ++i) {
    for (std::size_t j = 0; j <= j_max; ++j) {
      out.emplace_back(std::make_pair(i, j));
      if (std::make_pair(i, j) == last) return out;
    }
  }
}

TEST(Discharge, FullVcProvedFirst) {
  ScriptedProver p("mock:unsat");
  const DischargeReport r = discharge(testing::load_fixture("chain.vc"), p, 1s);
  ASSERT_EQ(r.attempts.size(), 1u);
  EXPECT_FALSE(r.attempts[0].cursor);
  EXPECT_EQ(r.final.outcome, Outcome::Unsat);
  EXPECT_EQ(r.attempts[0].axioms, 4u);
  EXPECT_EQ(r.attempts[0].hypotheses, 3u);
}

TEST(Discharge, SatOnFullVcStops) {
  ScriptedProver p("mock:sat");
  const DischargeReport r = discharge(testing::load_fixture("chain.vc"), p, 1s);
  EXPECT_EQ(r.attempts.size(), 1u);
  EXPECT_EQ(r.final.outcome, Outcome::Sat);
}

TEST(Discharge, ChainBounds) {
  ScriptedProver p("mock:unsat");
  const DischargeReport r = discharge(testing::load_fixture("chain.vc"), p, 1s);
  EXPECT_EQ(r.j_max, 2u);
  EXPECT_EQ(r.i_max, 4u);
}

TEST(Discharge, GridOrderStopsAtFirstCoveringPoint) {
  // The full VC has 7 formulas and times out; ax_key enters the context once
  // i reaches the distance of p3.
  ScriptedProver p("mock:require=ax_key;limit=6");
  const DischargeReport r = discharge(testing::load_fixture("chain.vc"), p, 1s);
  EXPECT_EQ(trace(r), grid_until(r.j_max, {3, 0}));
  EXPECT_EQ(r.final.outcome, Outcome::Unsat);
  EXPECT_EQ(p.calls(), r.attempts.size());
  EXPECT_EQ(r.attempts.front().verdict.outcome, Outcome::Timeout);
  EXPECT_EQ(r.attempts.back().axioms, 3u);
  EXPECT_EQ(r.attempts.back().hypotheses, 1u);
}

TEST(Discharge, HypothesisRequirementResetsJ) {
  // h_link mentions next(c) and the unreachable predicate link, so it needs
  // L_inf and C_1.
  ScriptedProver p("mock:require=ax_key,h_link;limit=6");
  const DischargeReport r = discharge(testing::load_fixture("chain.vc"), p, 1s);
  EXPECT_EQ(trace(r), grid_until(r.j_max, {4, 1}));
  EXPECT_EQ(r.final.outcome, Outcome::Unsat);
}

TEST(Discharge, ExhaustsGrid) {
  ScriptedProver p("mock:timeout");
  const DischargeReport r = discharge(testing::load_fixture("chain.vc"), p, 1s);
  EXPECT_EQ(r.attempts.size(), 1 + (r.i_max + 1) * (r.j_max + 1));
  EXPECT_EQ(trace(r), grid_until(r.j_max, {r.i_max, r.j_max}));
  EXPECT_EQ(r.final.outcome, Outcome::Timeout);
}

TEST(Discharge, SatOnReducedVcContinues) {
  ScriptedProver p("mock:require=ax_key;limit=6;else=sat");
  const DischargeReport r = discharge(testing::load_fixture("chain.vc"), p, 1s);
  EXPECT_EQ(r.final.outcome, Outcome::Unsat);
  EXPECT_GT(r.attempts.size(), 2u);
}

TEST(Discharge, RejectsNonPositiveTimeout) {
  ScriptedProver p("mock:unsat");
  EXPECT_THROW(discharge(testing::load_fixture("chain.vc"), p, 0ms), std::invalid_argument);
}

TEST(AttemptLog, Format) {
  ScriptedProver p("mock:require=ax_key;limit=6");
  const DischargeReport r = discharge(testing::load_fixture("chain.vc"), p, 1s);
  std::ostringstream os;
  write_attempt_log(os, r);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "chain - - 3 4 timeout 0");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("chain 0 0 ", 0), 0u);
  std::size_t lines = 2;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, r.attempts.size());
}

// A reduced problem is a subset of the original, so a refutation of the
// reduction refutes the original.
TEST(Soundness, ReducedRefutationImpliesOriginal) {
  std::vector<VerificationCondition> corpus;
  for (const VerificationCondition& vc : testing::all_fixtures()) {
    ResolutionProver probe;
    if (probe.prove(vc, 1s).outcome != Outcome::ProverError) corpus.push_back(vc);
  }
  testing::Generator gen(61);
  for (int n = 0; n < 150; ++n) corpus.push_back(gen.ground_vc());

  std::size_t proved_reduced = 0;
  std::size_t violations = 0;
  for (const VerificationCondition& vc : corpus) {
    ResolutionProver prover(20000);
    const Outcome full = prover.prove(vc, 1s).outcome;
    const Pruner pruner(vc);
    for (std::size_t i = 0; i <= pruner.i_max(); ++i) {
      for (std::size_t j = 0; j <= pruner.j_max(); ++j) {
        if (prover.prove(pruner.reduce(i, j).vc, 1s).outcome != Outcome::Unsat) continue;
        ++proved_reduced;
        if (full != Outcome::Unsat) ++violations;
      }
    }
  }
  EXPECT_GT(proved_reduced, 0u);
  EXPECT_EQ(violations, 0u);
}

}  // namespace
}  // namespace vcprune
