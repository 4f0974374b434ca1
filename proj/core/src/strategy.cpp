#include "vcprune/strategy.hpp"

#include <ostream>
#include <stdexcept>

namespace vcprune {

DischargeReport discharge(const VerificationCondition& vc, Prover& prover,
                          std::chrono::milliseconds timeout,
                          const PruneOptions& options) {
  if (timeout.count() <= 0) throw std::invalid_argument("timeout must be positive");

  DischargeReport report;
  report.vc_name = vc.name;

  Attempt full;
  full.hypotheses = vc.hypotheses.size();
  full.axioms = vc.context.size();
  full.verdict = prover.prove(vc, timeout);
  report.attempts.push_back(full);
  report.final = full.verdict;

  const Pruner pruner(vc, options);
  report.i_max = pruner.i_max();
  report.j_max = pruner.j_max();
  if (full.verdict.outcome == Outcome::Unsat || full.verdict.outcome == Outcome::Sat) {
    return report;
  }

  std::size_t i = 0;
  std::size_t j = 0;
  while (report.final.outcome != Outcome::Unsat && i <= report.i_max) {
    const ReducedVC reduced = pruner.reduce(i, j);
    Attempt a;
    a.cursor = std::make_pair(i, j);
    a.hypotheses = reduced.vc.hypotheses.size();
    a.axioms = reduced.vc.context.size();
    a.verdict = prover.prove(reduced.vc, timeout);
    report.final = a.verdict;
    report.attempts.push_back(std::move(a));
    if (++j > report.j_max) {
      ++i;
      j = 0;
    }
  }
  return report;
}

void write_attempt_log(std::ostream& os, const DischargeReport& report) {
  for (const Attempt& a : report.attempts) {
    os << format_identifier(report.vc_name) << ' ';
    if (a.cursor) {
      os << a.cursor->first << ' ' << a.cursor->second;
    } else {
      os << "- -";
    }
    os << ' ' << a.hypotheses << ' ' << a.axioms << ' ' << to_string(a.verdict.outcome)
       << ' ' << a.verdict.elapsed.count() << '\n';
  }
}

}  // namespace vcprune
