#include "vcprune/preprocess.hpp"

#include <algorithm>
#include <optional>

namespace vcprune {

std::set<std::string> symbol_names(const VerificationCondition& vc) {
  std::set<std::string> out = symbol_names(vc.conclusion);
  for (const auto* list : {&vc.context, &vc.hypotheses}) {
    for (const NamedFormula& nf : *list) out.merge(symbol_names(nf.formula));
  }
  return out;
}

namespace {

using K = Formula::Kind;

void push_range(std::vector<OccurrenceRange>& ranges, std::size_t begin,
                std::size_t end) {
  if (begin < end) ranges.emplace_back(begin, end);
}

std::vector<SplitPart> whole(const Formula& f, std::size_t offset) {
  SplitPart part{f, {}};
  push_range(part.occurrences, offset, offset + count_compound_occurrences(f));
  return {std::move(part)};
}

std::vector<SplitPart> split_body(const Formula& f, std::size_t offset) {
  switch (f.kind()) {
    case K::And: {
      std::vector<SplitPart> parts = split_body(f.lhs(), offset);
      std::vector<SplitPart> rhs = split_body(
          f.rhs(), offset + count_compound_occurrences(f.lhs()));
      parts.insert(parts.end(), std::make_move_iterator(rhs.begin()),
                   std::make_move_iterator(rhs.end()));
      return parts;
    }
    case K::Implies: {
      const std::size_t guard = count_compound_occurrences(f.lhs());
      std::vector<SplitPart> consequents = split_body(f.rhs(), offset + guard);
      if (consequents.size() < 2) return whole(f, offset);
      std::vector<SplitPart> parts;
      for (SplitPart& c : consequents) {
        SplitPart part{Formula::implication(f.lhs(), std::move(c.formula)), {}};
        push_range(part.occurrences, offset, offset + guard);
        part.occurrences.insert(part.occurrences.end(), c.occurrences.begin(),
                                c.occurrences.end());
        parts.push_back(std::move(part));
      }
      return parts;
    }
    case K::Forall: {
      std::vector<SplitPart> inner = split_body(f.body(), offset);
      if (inner.size() < 2) return whole(f, offset);
      for (SplitPart& part : inner) {
        const std::set<std::string> free = free_variables(part.formula);
        std::vector<Binder> kept;
        for (const Binder& b : f.binders()) {
          if (free.count(b.name)) kept.push_back(b);
        }
        if (!kept.empty()) {
          part.formula = Formula::forall(std::move(kept), std::move(part.formula));
        }
      }
      return inner;
    }
    default:
      return whole(f, offset);
  }
}

struct Definition {
  std::string constant;
  Term value;
};

std::optional<Definition> as_definition(const Formula& f) {
  if (f.kind() != K::Comparison || f.op() != CmpOp::Eq) return std::nullopt;
  const Term& lhs = f.terms()[0];
  const Term& rhs = f.terms()[1];
  if (!lhs.is_constant() || occurs(lhs, rhs)) return std::nullopt;
  return Definition{lhs.name(), rhs};
}

}  // namespace

std::vector<SplitPart> split_conjunctive_hypothesis_traced(const Formula& h) {
  return split_body(h, 0);
}

std::vector<Formula> split_conjunctive_hypothesis(const Formula& h) {
  std::vector<Formula> out;
  for (SplitPart& p : split_body(h, 0)) out.push_back(std::move(p.formula));
  return out;
}

VerificationCondition inline_flattening_hypotheses(
    const VerificationCondition& vc) {
  std::set<std::string> context_constants;
  for (const NamedFormula& a : vc.context) {
    context_constants.merge(constant_names(a.formula));
  }

  VerificationCondition out = vc;
  auto& hyps = out.hypotheses;

  // A constant counts as defined by every hypothesis `c = t` with `c` on the
  // left, whether or not `t` mentions `c`.
  auto definition_count = [&](const std::string& c) {
    return std::count_if(hyps.begin(), hyps.end(), [&](const NamedFormula& h) {
      const Formula& f = h.formula;
      return f.kind() == K::Comparison && f.op() == CmpOp::Eq &&
             f.terms()[0].is_constant() && f.terms()[0].name() == c;
    });
  };

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < hyps.size(); ++k) {
      std::optional<Definition> def = as_definition(hyps[k].formula);
      if (!def || context_constants.count(def->constant) ||
          definition_count(def->constant) != 1) {
        continue;
      }
      hyps.erase(hyps.begin() + static_cast<std::ptrdiff_t>(k));
      for (NamedFormula& h : hyps) {
        h.formula = substitute_constant(h.formula, def->constant, def->value);
      }
      out.conclusion =
          substitute_constant(out.conclusion, def->constant, def->value);
      changed = true;
      break;
    }
  }
  return out;
}

}  // namespace vcprune
