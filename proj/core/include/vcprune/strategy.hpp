#pragma once

// Incremental discharge: one call on the full VC, then reduced VCs over the
// (i, j) grid with j as the inner index, until the prover answers unsat or
// i exceeds i_max.

#include "vcprune/prover.hpp"
#include "vcprune/selection.hpp"

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vcprune {

struct Attempt {
  /// Empty for the call on the unreduced VC.
  std::optional<std::pair<std::size_t, std::size_t>> cursor;
  std::size_t hypotheses = 0;
  std::size_t axioms = 0;
  ProverVerdict verdict;
};

struct DischargeReport {
  std::string vc_name;
  ProverVerdict final;
  std::vector<Attempt> attempts;
  std::size_t i_max = 0;
  std::size_t j_max = 0;
};

/// Sat or unsat on the full VC ends the run. Any other answer, including
/// sat on a reduced VC, moves on to the next grid point. Throws
/// std::invalid_argument unless `timeout` is positive.
DischargeReport discharge(const VerificationCondition& vc, Prover& prover,
                          std::chrono::milliseconds timeout,
                          const PruneOptions& options = {});

/// One line per attempt: `vc i j hyps axioms outcome elapsed_ms`, with `-`
/// for the cursor of the unreduced call.
void write_attempt_log(std::ostream& os, const DischargeReport& report);

}  // namespace vcprune
