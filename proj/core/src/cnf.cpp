#include "vcprune/cnf.hpp"

#include <algorithm>
#include <cassert>

namespace vcprune {

WitnessNamer::WitnessNamer(std::set<std::string> reserved, std::string prefix)
    : reserved_(std::move(reserved)), prefix_(std::move(prefix)) {}

std::string WitnessNamer::next() {
  std::string name;
  do {
    name = prefix_ + "_" + std::to_string(++counter_);
  } while (reserved_.count(name));
  reserved_.insert(name);
  return name;
}

namespace {

using K = Formula::Kind;

Formula nnf(const Formula& f, bool positive) {
  switch (f.kind()) {
    case K::Atom:
    case K::Comparison:
      return positive ? f : Formula::negation(f);
    case K::True:
      return positive ? Formula::truth() : Formula::falsity();
    case K::False:
      return positive ? Formula::falsity() : Formula::truth();
    case K::Not:
      return nnf(f.operand(), !positive);
    case K::And:
      return positive ? Formula::conjunction(nnf(f.lhs(), true),
                                             nnf(f.rhs(), true))
                      : Formula::disjunction(nnf(f.lhs(), false),
                                             nnf(f.rhs(), false));
    case K::Or:
      return positive ? Formula::disjunction(nnf(f.lhs(), true),
                                             nnf(f.rhs(), true))
                      : Formula::conjunction(nnf(f.lhs(), false),
                                             nnf(f.rhs(), false));
    case K::Implies:
      return positive ? Formula::disjunction(nnf(f.lhs(), false),
                                             nnf(f.rhs(), true))
                      : Formula::conjunction(nnf(f.lhs(), true),
                                             nnf(f.rhs(), false));
    case K::Iff:
      if (positive) {
        return Formula::conjunction(
            Formula::disjunction(nnf(f.lhs(), false), nnf(f.rhs(), true)),
            Formula::disjunction(nnf(f.lhs(), true), nnf(f.rhs(), false)));
      }
      return Formula::conjunction(
          Formula::disjunction(nnf(f.lhs(), true), nnf(f.rhs(), true)),
          Formula::disjunction(nnf(f.lhs(), false), nnf(f.rhs(), false)));
    case K::Forall:
      return positive ? Formula::forall(f.binders(), nnf(f.body(), true))
                      : Formula::exists(f.binders(), nnf(f.body(), false));
    case K::Exists:
      return positive ? Formula::exists(f.binders(), nnf(f.body(), true))
                      : Formula::forall(f.binders(), nnf(f.body(), false));
  }
  return f;
}

// Removes quantifiers from an NNF formula. Universal variables are renamed
// apart and left free; existential variables are replaced by witness terms.
class Skolemizer {
 public:
  Skolemizer(WitnessNamer& namer, std::set<std::string> used_vars)
      : namer_(namer), used_vars_(std::move(used_vars)) {}

  Formula run(const Formula& f) {
    switch (f.kind()) {
      case K::Atom: {
        std::vector<Term> args;
        for (const Term& t : f.terms()) args.push_back(rewrite(t));
        return Formula::atom(f.predicate(), std::move(args));
      }
      case K::Comparison:
        return Formula::comparison(f.op(), f.sort(), rewrite(f.terms()[0]),
                                   rewrite(f.terms()[1]));
      case K::True:
      case K::False:
        return f;
      case K::Not:
        return Formula::negation(run(f.operand()));
      case K::And:
        return Formula::conjunction(run(f.lhs()), run(f.rhs()));
      case K::Or:
        return Formula::disjunction(run(f.lhs()), run(f.rhs()));
      case K::Forall: {
        for (const Binder& b : f.binders()) {
          Term v = Term::variable(fresh_variable(b.name));
          env_.emplace_back(b.name, v);
          universals_.push_back(std::move(v));
        }
        Formula out = run(f.body());
        env_.erase(env_.end() - static_cast<std::ptrdiff_t>(f.binders().size()), env_.end());
        universals_.erase(universals_.end() - static_cast<std::ptrdiff_t>(f.binders().size()),
                          universals_.end());
        return out;
      }
      case K::Exists: {
        for (const Binder& b : f.binders()) {
          std::string w = namer_.next();
          env_.emplace_back(b.name,
                            universals_.empty()
                                ? Term::constant(std::move(w))
                                : Term::application(std::move(w), universals_));
        }
        Formula out = run(f.body());
        env_.erase(env_.end() - static_cast<std::ptrdiff_t>(f.binders().size()), env_.end());
        return out;
      }
      case K::Implies:
      case K::Iff:
        break;
    }
    assert(false && "skolemizer expects NNF input");
    return f;
  }

 private:
  Term rewrite(const Term& t) const {
    switch (t.kind()) {
      case Term::Kind::Variable:
        for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
          if (it->first == t.name()) return it->second;
        }
        return t;
      case Term::Kind::Application: {
        std::vector<Term> args;
        args.reserve(t.arguments().size());
        for (const Term& a : t.arguments()) args.push_back(rewrite(a));
        return Term::application(t.name(), std::move(args));
      }
      default:
        return t;
    }
  }

  std::string fresh_variable(const std::string& base) {
    if (used_vars_.insert(base).second) return base;
    for (std::size_t k = 1;; ++k) {
      std::string candidate = base + "_" + std::to_string(k);
      if (used_vars_.insert(candidate).second) return candidate;
    }
  }

  WitnessNamer& namer_;
  std::set<std::string> used_vars_;
  std::vector<std::pair<std::string, Term>> env_;
  std::vector<Term> universals_;
};

using RawClauses = std::vector<std::vector<Literal>>;

RawClauses distribute(const Formula& f) {
  switch (f.kind()) {
    case K::Atom:
    case K::Comparison:
      return {{Literal(true, f)}};
    case K::Not:
      return {{Literal(false, f.operand())}};
    case K::True:
      return {};
    case K::False:
      return {{}};
    case K::And: {
      RawClauses out = distribute(f.lhs());
      RawClauses rhs = distribute(f.rhs());
      out.insert(out.end(), std::make_move_iterator(rhs.begin()),
                 std::make_move_iterator(rhs.end()));
      return out;
    }
    case K::Or: {
      RawClauses lhs = distribute(f.lhs());
      RawClauses rhs = distribute(f.rhs());
      RawClauses out;
      out.reserve(lhs.size() * rhs.size());
      for (const auto& a : lhs) {
        for (const auto& b : rhs) {
          Clause merged(a);
          merged.literals.insert(merged.literals.end(), b.begin(), b.end());
          Clause normal(std::move(merged.literals));
          if (normal.is_tautology()) continue;
          out.push_back(std::move(normal.literals));
        }
      }
      return out;
    }
    default:
      break;
  }
  assert(false && "distribute expects quantifier-free NNF input");
  return {};
}

void collect_polarized(const Formula& f, std::vector<Literal>& out) {
  switch (f.kind()) {
    case K::Atom:
    case K::Comparison:
      out.emplace_back(true, f);
      return;
    case K::Not:
      out.emplace_back(false, f.operand());
      return;
    default:
      for (const Formula& c : f.children()) collect_polarized(c, out);
  }
}

}  // namespace

Formula to_nnf(const Formula& formula) { return nnf(formula, true); }

std::vector<Literal> polarized_atoms(const Formula& formula) {
  std::vector<Literal> all;
  collect_polarized(to_nnf(formula), all);
  std::vector<Literal> out;
  for (Literal& l : all) {
    if (std::find(out.begin(), out.end(), l) == out.end()) {
      out.push_back(std::move(l));
    }
  }
  return out;
}

std::vector<Clause> to_cnf(const Formula& formula,
                           const std::string& origin_id, WitnessNamer& namer) {
  Skolemizer skolem(namer, free_variables(formula));
  Formula matrix = skolem.run(to_nnf(formula));
  std::vector<Clause> out;
  for (auto& raw : distribute(matrix)) {
    Clause c(std::move(raw));
    if (c.is_tautology()) continue;
    bool seen = std::any_of(out.begin(), out.end(), [&](const Clause& d) {
      return d.same_literals(c);
    });
    if (seen) continue;
    c.origin = ClauseOrigin{origin_id, out.size()};
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Clause> to_cnf(const Formula& formula,
                           const std::string& origin_id) {
  WitnessNamer namer(symbol_names(formula));
  return to_cnf(formula, origin_id, namer);
}

std::vector<Clause> clausify_refutation(const VerificationCondition& vc) {
  WitnessNamer namer(symbol_names(vc));
  std::vector<Clause> out;
  auto append = [&](std::vector<Clause> cs) {
    out.insert(out.end(), std::make_move_iterator(cs.begin()),
               std::make_move_iterator(cs.end()));
  };
  for (const NamedFormula& a : vc.context) append(to_cnf(a.formula, a.id, namer));
  for (const NamedFormula& h : vc.hypotheses) {
    append(to_cnf(h.formula, h.id, namer));
  }
  append(to_cnf(Formula::negation(vc.conclusion), "conclusion", namer));
  return out;
}

}  // namespace vcprune
