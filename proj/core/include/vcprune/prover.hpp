#pragma once

// Prover back ends: an external command driver, a scripted mock for tests and
// dry runs, and the ground resolution oracle.

#include "vcprune/smt_emit.hpp"
#include "vcprune/vc.hpp"

#include <chrono>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vcprune {

enum class Outcome { Unsat, Sat, Unknown, Timeout, ProverError };

/// `unsat`, `sat`, `unknown`, `timeout` or `error`.
std::string_view to_string(Outcome outcome) noexcept;

struct ProverVerdict {
  Outcome outcome = Outcome::Unknown;
  std::string message;
  std::chrono::milliseconds elapsed{0};
};

class Prover {
 public:
  virtual ~Prover() = default;
  /// Decides satisfiability of context, hypotheses and negated conclusion.
  virtual ProverVerdict prove(const VerificationCondition& vc,
                              std::chrono::milliseconds timeout) = 0;
};

/// Answers from a script instead of reasoning. Scripts are
/// `mock:unsat|sat|unknown|timeout|error`, or a semicolon-separated list of
/// `require=id1,id2`, `limit=N` and `else=<outcome>`: a VC with more than N
/// axioms and hypotheses times out, one containing every required id is
/// unsat, anything else gets the `else` outcome (default unknown).
class ScriptedProver : public Prover {
 public:
  /// Throws std::invalid_argument on a malformed script.
  explicit ScriptedProver(std::string_view script);

  ProverVerdict prove(const VerificationCondition& vc,
                      std::chrono::milliseconds timeout) override;

  std::size_t calls() const noexcept { return calls_; }

 private:
  Outcome fixed_ = Outcome::Unknown;
  bool scripted_ = false;
  std::set<std::string> required_;
  std::size_t limit_ = static_cast<std::size_t>(-1);
  std::size_t calls_ = 0;
};

/// Clausifies the refutation problem and runs resolution_oracle. Non-ground
/// problems yield ProverError; the timeout is not enforced beyond the step
/// budget.
class ResolutionProver : public Prover {
 public:
  explicit ResolutionProver(std::size_t step_limit = 10000)
      : step_limit_(step_limit) {}

  ProverVerdict prove(const VerificationCondition& vc,
                      std::chrono::milliseconds timeout) override;

 private:
  std::size_t step_limit_;
};

/// Output classification rule: the first rule whose pattern occurs in the
/// prover's output decides the outcome.
struct MatchRule {
  std::string pattern;
  Outcome outcome = Outcome::Unknown;
};

/// unsat, sat, unknown, timeout; `unsat` precedes `sat` since it contains it.
std::vector<MatchRule> default_match_rules();

/// Parses `pattern=outcome` pairs separated by commas.
std::vector<MatchRule> parse_match_rules(std::string_view text);

/// Termination after the deadline takes at most this long on an idle host.
inline constexpr std::chrono::milliseconds kTimeoutSlack{500};

/// Writes `problem` to a temporary file and runs `command` through /bin/sh
/// with `{input}` replaced by the shell-quoted file path and `{timeout_s}` by
/// the timeout in whole seconds, rounded up. The process group is killed at
/// the deadline. Without a matching rule the outcome is Unknown on exit
/// status 0 and ProverError otherwise.
ProverVerdict run_external_prover(const std::string& problem,
                                  const std::string& command,
                                  std::chrono::milliseconds timeout,
                                  const std::vector<MatchRule>& rules =
                                      default_match_rules());

/// Emits SMT-LIB and hands it to run_external_prover.
class ExternalProver : public Prover {
 public:
  ExternalProver(std::string command,
                 std::vector<MatchRule> rules = default_match_rules(),
                 SmtOptions smt = {});

  ProverVerdict prove(const VerificationCondition& vc,
                      std::chrono::milliseconds timeout) override;

 private:
  std::string command_;
  std::vector<MatchRule> rules_;
  SmtOptions smt_;
};

/// `mock:...` gives a ScriptedProver, `resolution` or `resolution:N` a
/// ResolutionProver, anything else an ExternalProver for that command.
std::unique_ptr<Prover> make_prover(const std::string& spec,
                                    std::vector<MatchRule> rules =
                                        default_match_rules(),
                                    SmtOptions smt = {});

}  // namespace vcprune
