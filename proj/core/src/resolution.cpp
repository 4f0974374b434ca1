#include "vcprune/resolution.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace vcprune {

namespace {

bool subsumes(const Clause& general, const Clause& specific) {
  return std::includes(specific.literals.begin(), specific.literals.end(),
                       general.literals.begin(), general.literals.end());
}

}  // namespace

OracleResult resolution_oracle(const std::vector<Clause>& clauses,
                               std::size_t step_limit) {
  for (const Clause& c : clauses) {
    if (!c.is_ground()) {
      throw std::invalid_argument("resolution oracle needs ground clauses");
    }
  }

  std::deque<Clause> queue;
  for (const Clause& c : clauses) {
    if (!c.is_tautology()) queue.push_back(c);
  }
  std::vector<Clause> processed;
  std::size_t steps = 0;

  while (!queue.empty()) {
    Clause given = std::move(queue.front());
    queue.pop_front();
    if (given.empty()) return OracleResult::Unsat;
    const bool redundant = std::any_of(
        processed.begin(), processed.end(),
        [&](const Clause& p) { return subsumes(p, given); });
    if (redundant) continue;
    std::erase_if(processed, [&](const Clause& p) { return subsumes(given, p); });

    processed.push_back(given);
    const Clause& g = processed.back();
    for (const Clause& other : processed) {
      for (const Literal& l : g.literals) {
        const Literal complement = l.negated();
        if (!std::binary_search(other.literals.begin(), other.literals.end(),
                                complement)) {
          continue;
        }
        if (++steps > step_limit) return OracleResult::Unknown;
        std::vector<Literal> lits;
        for (const Literal& a : g.literals) {
          if (!(a == l)) lits.push_back(a);
        }
        for (const Literal& b : other.literals) {
          if (!(b == complement)) lits.push_back(b);
        }
        Clause resolvent(std::move(lits));
        if (resolvent.empty()) return OracleResult::Unsat;
        if (!resolvent.is_tautology()) queue.push_back(std::move(resolvent));
      }
    }
  }
  return OracleResult::Unknown;
}

}  // namespace vcprune
