#include "vcprune/prover.hpp"

#include "vcprune/cnf.hpp"
#include "vcprune/resolution.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <stdexcept>

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

namespace vcprune {

std::string_view to_string(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::Unsat: return "unsat";
    case Outcome::Sat: return "sat";
    case Outcome::Unknown: return "unknown";
    case Outcome::Timeout: return "timeout";
    case Outcome::ProverError: return "error";
  }
  return "error";
}

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Outcome> outcome_from_string(std::string_view s) {
  for (Outcome o : {Outcome::Unsat, Outcome::Sat, Outcome::Unknown,
                    Outcome::Timeout, Outcome::ProverError}) {
    if (to_string(o) == s) return o;
  }
  return std::nullopt;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const std::size_t k = s.find(sep);
    out.push_back(s.substr(0, k));
    if (k == std::string_view::npos) return out;
    s.remove_prefix(k + 1);
  }
}

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

void replace_all(std::string& s, std::string_view from, const std::string& to) {
  for (std::size_t k = s.find(from); k != std::string::npos;
       k = s.find(from, k + to.size())) {
    s.replace(k, from.size(), to);
  }
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    const char* dir = std::getenv("TMPDIR");
    std::string pattern = std::string(dir && *dir ? dir : "/tmp") + "/vcprune-XXXXXX.smt2";
    std::vector<char> buf(pattern.begin(), pattern.end());
    buf.push_back('\0');
    const int fd = ::mkstemps(buf.data(), 5);
    if (fd < 0) throw std::runtime_error(std::string("mkstemps: ") + std::strerror(errno));
    path_ = buf.data();
    std::size_t done = 0;
    while (done < contents.size()) {
      const ssize_t n = ::write(fd, contents.data() + done, contents.size() - done);
      if (n < 0) {
        if (errno == EINTR) continue;
        ::close(fd);
        throw std::runtime_error(std::string("write: ") + std::strerror(errno));
      }
      done += static_cast<std::size_t>(n);
    }
    ::close(fd);
  }
  ~TempFile() { ::unlink(path_.c_str()); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace

ScriptedProver::ScriptedProver(std::string_view script) {
  constexpr std::string_view prefix = "mock:";
  if (script.substr(0, prefix.size()) != prefix) {
    throw std::invalid_argument("mock script must start with 'mock:'");
  }
  script.remove_prefix(prefix.size());
  if (auto o = outcome_from_string(script)) {
    fixed_ = *o;
    return;
  }
  scripted_ = true;
  for (std::string_view item : split(script, ';')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("bad mock directive '" + std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "require") {
      for (std::string_view id : split(value, ',')) {
        if (!id.empty()) required_.emplace(id);
      }
    } else if (key == "limit") {
      std::size_t n = 0;
      if (value.empty()) throw std::invalid_argument("empty mock limit");
      for (char c : value) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad mock limit");
        n = n * 10 + static_cast<std::size_t>(c - '0');
      }
      limit_ = n;
    } else if (key == "else") {
      auto o = outcome_from_string(value);
      if (!o) throw std::invalid_argument("bad mock outcome '" + std::string(value) + "'");
      fixed_ = *o;
    } else {
      throw std::invalid_argument("unknown mock directive '" + std::string(key) + "'");
    }
  }
}

ProverVerdict ScriptedProver::prove(const VerificationCondition& vc,
                                    std::chrono::milliseconds) {
  ++calls_;
  ProverVerdict v;
  if (!scripted_) {
    v.outcome = fixed_;
    return v;
  }
  if (vc.context.size() + vc.hypotheses.size() > limit_) {
    v.outcome = Outcome::Timeout;
    return v;
  }
  std::set<std::string> present;
  for (const auto* list : {&vc.context, &vc.hypotheses}) {
    for (const NamedFormula& nf : *list) present.insert(nf.id);
  }
  const bool covered = std::all_of(required_.begin(), required_.end(),
                                   [&](const std::string& id) { return present.count(id) > 0; });
  v.outcome = covered ? Outcome::Unsat : fixed_;
  return v;
}

ProverVerdict ResolutionProver::prove(const VerificationCondition& vc,
                                      std::chrono::milliseconds) {
  const Clock::time_point start = Clock::now();
  ProverVerdict v;
  try {
    v.outcome = resolution_oracle(clausify_refutation(vc), step_limit_) == OracleResult::Unsat
                    ? Outcome::Unsat
                    : Outcome::Unknown;
  } catch (const std::invalid_argument& e) {
    v.outcome = Outcome::ProverError;
    v.message = e.what();
  }
  v.elapsed = since(start);
  return v;
}

std::vector<MatchRule> default_match_rules() {
  return {{"unsat", Outcome::Unsat},
          {"sat", Outcome::Sat},
          {"unknown", Outcome::Unknown},
          {"timeout", Outcome::Timeout}};
}

std::vector<MatchRule> parse_match_rules(std::string_view text) {
  std::vector<MatchRule> out;
  for (std::string_view item : split(text, ',')) {
    const std::size_t eq = item.rfind('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw std::invalid_argument("bad match rule '" + std::string(item) + "'");
    }
    auto o = outcome_from_string(item.substr(eq + 1));
    if (!o) throw std::invalid_argument("bad match outcome in '" + std::string(item) + "'");
    out.push_back(MatchRule{std::string(item.substr(0, eq)), *o});
  }
  return out;
}

ProverVerdict run_external_prover(const std::string& problem,
                                  const std::string& command,
                                  std::chrono::milliseconds timeout,
                                  const std::vector<MatchRule>& rules) {
  const Clock::time_point start = Clock::now();
  const Clock::time_point deadline = start + timeout;
  ProverVerdict v;
  auto fail = [&](std::string message) {
    v.outcome = Outcome::ProverError;
    v.message = std::move(message);
    v.elapsed = since(start);
    return v;
  };

  std::optional<TempFile> input;
  try {
    input.emplace(problem);
  } catch (const std::exception& e) {
    return fail(e.what());
  }

  std::string cmd = command;
  replace_all(cmd, "{input}", shell_quote(input->path()));
  const auto seconds = (timeout.count() + 999) / 1000;
  replace_all(cmd, "{timeout_s}", std::to_string(std::max<long long>(1, seconds)));

  int fds[2];
  if (::pipe(fds) != 0) return fail(std::string("pipe: ") + std::strerror(errno));
  const pid_t pid = ::fork();
  if (pid < 0) {
    ::close(fds[0]);
    ::close(fds[1]);
    return fail(std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(fds[1], STDOUT_FILENO);
    ::dup2(fds[1], STDERR_FILENO);
    ::close(fds[0]);
    ::close(fds[1]);
    ::execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  ::close(fds[1]);
  ::fcntl(fds[0], F_SETFL, ::fcntl(fds[0], F_GETFL) | O_NONBLOCK);

  std::string output;
  bool timed_out = false;
  bool eof = false;
  int status = 0;
  bool reaped = false;
  while (true) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - Clock::now());
    if (left.count() <= 0) {
      timed_out = true;
      break;
    }
    if (eof) {
      // Output closed; wait for the exit status.
      const pid_t r = ::waitpid(pid, &status, WNOHANG);
      if (r == pid) {
        reaped = true;
        break;
      }
      ::usleep(std::min<long long>(left.count(), 10) * 1000);
      continue;
    }
    pollfd pfd{fds[0], POLLIN, 0};
    const int ready = ::poll(&pfd, 1, static_cast<int>(std::min<long long>(left.count(), 100)));
    if (ready < 0 && errno != EINTR) break;
    if (ready <= 0) continue;
    char buf[4096];
    while (true) {
      const ssize_t n = ::read(fds[0], buf, sizeof buf);
      if (n > 0) {
        output.append(buf, static_cast<std::size_t>(n));
        continue;
      }
      if (n == 0) eof = true;
      break;
    }
  }
  ::close(fds[0]);
  if (!reaped) {
    ::kill(-pid, SIGKILL);
    ::kill(pid, SIGKILL);
    ::waitpid(pid, &status, 0);
  }
  v.elapsed = since(start);

  if (timed_out) {
    v.outcome = Outcome::Timeout;
    return v;
  }
  if (!reaped) return fail("lost track of prover process");
  // Generated children may outlive the shell.
  ::kill(-pid, SIGKILL);

  for (const MatchRule& rule : rules) {
    if (output.find(rule.pattern) != std::string::npos) {
      v.outcome = rule.outcome;
      return v;
    }
  }
  const bool ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
  if (ok) {
    v.outcome = Outcome::Unknown;
    return v;
  }
  v.outcome = Outcome::ProverError;
  v.message = WIFEXITED(status) ? "exit status " + std::to_string(WEXITSTATUS(status))
                                : "terminated by signal";
  if (!output.empty()) v.message += ": " + output.substr(0, 200);
  return v;
}

ExternalProver::ExternalProver(std::string command, std::vector<MatchRule> rules,
                               SmtOptions smt)
    : command_(std::move(command)), rules_(std::move(rules)), smt_(std::move(smt)) {}

ProverVerdict ExternalProver::prove(const VerificationCondition& vc,
                                    std::chrono::milliseconds timeout) {
  std::string problem;
  try {
    problem = emit_smt(vc, smt_);
  } catch (const EmitError& e) {
    ProverVerdict v;
    v.outcome = Outcome::ProverError;
    v.message = e.what();
    return v;
  }
  return run_external_prover(problem, command_, timeout, rules_);
}

std::unique_ptr<Prover> make_prover(const std::string& spec,
                                    std::vector<MatchRule> rules, SmtOptions smt) {
  if (spec.rfind("mock:", 0) == 0) return std::make_unique<ScriptedProver>(spec);
  if (spec == "resolution") return std::make_unique<ResolutionProver>();
  if (spec.rfind("resolution:", 0) == 0) {
    const std::string n = spec.substr(11);
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad resolution step limit '" + n + "'");
    }
    return std::make_unique<ResolutionProver>(std::stoull(n));
  }
  return std::make_unique<ExternalProver>(spec, std::move(rules), std::move(smt));
}

}  // namespace vcprune
