#include "support/generators.hpp"

#include <algorithm>

namespace vcprune::testing {

namespace {

template <typename T>
const T& pick(Generator& g, const std::vector<T>& items) {
  return items[g.below(items.size())];
}

const std::vector<std::string> kIdentifiers = {
    "a", "b", "m_x", "valid_acc", "x1", "with space", "bar|pipe", "back\\slash", "9lives", "Z"};

}  // namespace

Formula Generator::propositional(std::size_t atoms, std::size_t depth) {
  if (depth == 0 || chance(0.25)) {
    const std::size_t k = below(atoms);
    if (k % 2 == 0) return Formula::atom("p" + std::to_string(k));
    return Formula::comparison(CmpOp::Le, "int", Term::constant("c" + std::to_string(k)),
                               Term::integer(static_cast<long>(k)));
  }
  switch (below(7)) {
    case 0:
      return Formula::negation(propositional(atoms, depth - 1));
    case 1:
      return Formula::conjunction(propositional(atoms, depth - 1), propositional(atoms, depth - 1));
    case 2:
      return Formula::disjunction(propositional(atoms, depth - 1), propositional(atoms, depth - 1));
    case 3:
      return Formula::implication(propositional(atoms, depth - 1), propositional(atoms, depth - 1));
    case 4:
      return Formula::equivalence(propositional(atoms, depth - 1), propositional(atoms, depth - 1));
    case 5:
      return chance(0.5) ? Formula::truth() : Formula::falsity();
    default:
      return propositional(atoms, depth - 1);
  }
}

std::string Generator::identifier() { return pick(*this, kIdentifiers); }

Term Generator::term(const std::vector<std::string>& scope, std::size_t depth) {
  const std::size_t choice = below(depth == 0 ? 3 : 4);
  if (choice == 0 && !scope.empty()) return Term::variable(pick(*this, scope));
  if (choice == 1) {
    static const std::vector<std::string> ints = {"0", "1", "-7", "123456789012345678901234567890",
                                                  "-99999999999999999999"};
    return Term::integer(BigInt(pick(*this, ints)));
  }
  if (choice == 3) {
    std::vector<Term> args;
    const std::size_t n = 1 + below(3);
    for (std::size_t k = 0; k < n; ++k) args.push_back(term(scope, depth - 1));
    return Term::application(identifier(), std::move(args));
  }
  return Term::constant(identifier());
}

Formula Generator::closed_body(std::vector<std::string>& scope, std::size_t depth) {
  const std::size_t choice = depth == 0 ? below(3) : below(10);
  switch (choice) {
    case 0: {
      std::vector<Term> args;
      const std::size_t n = below(3);
      for (std::size_t k = 0; k < n; ++k) args.push_back(term(scope, 2));
      return Formula::atom(identifier(), std::move(args));
    }
    case 1: {
      static const std::vector<CmpOp> ops = {CmpOp::Eq, CmpOp::Ne, CmpOp::Le,
                                             CmpOp::Lt, CmpOp::Ge, CmpOp::Gt};
      return Formula::comparison(pick(*this, ops), chance(0.5) ? "int" : "real",
                                 term(scope, 2), term(scope, 2));
    }
    case 2:
      return chance(0.5) ? Formula::truth() : Formula::falsity();
    case 3:
      return Formula::negation(closed_body(scope, depth - 1));
    case 4:
      return Formula::conjunction(closed_body(scope, depth - 1), closed_body(scope, depth - 1));
    case 5:
      return Formula::disjunction(closed_body(scope, depth - 1), closed_body(scope, depth - 1));
    case 6:
      return Formula::implication(closed_body(scope, depth - 1), closed_body(scope, depth - 1));
    case 7:
      return Formula::equivalence(closed_body(scope, depth - 1), closed_body(scope, depth - 1));
    default: {
      std::vector<Binder> binders;
      const std::size_t n = 1 + below(2);
      static const std::vector<std::string> vars = {"x", "y", "i", "long var"};
      static const std::vector<std::string> sorts = {"int", "real", "pointer"};
      for (std::size_t k = 0; k < n; ++k) {
        binders.push_back(Binder{pick(*this, vars), pick(*this, sorts)});
      }
      for (const Binder& b : binders) scope.push_back(b.name);
      Formula body = closed_body(scope, depth - 1);
      scope.resize(scope.size() - n);
      return choice == 8 ? Formula::forall(std::move(binders), std::move(body))
                         : Formula::exists(std::move(binders), std::move(body));
    }
  }
}

Formula Generator::closed(std::size_t depth) {
  std::vector<std::string> scope;
  return closed_body(scope, depth);
}

VerificationCondition Generator::vc() {
  static const std::vector<std::string> names = {"f", "with \"quotes\"", "back\\slash", ""};
  VerificationCondition out;
  out.name = pick(*this, names);
  std::size_t id = 0;
  const std::size_t axioms = below(4);
  for (std::size_t k = 0; k < axioms; ++k) {
    out.context.push_back({(chance(0.2) ? "ax id " : "ax") + std::to_string(id++), closed(3)});
  }
  const std::size_t hyps = below(4);
  for (std::size_t k = 0; k < hyps; ++k) {
    out.hypotheses.push_back({"h" + std::to_string(id++), closed(3)});
  }
  out.conclusion = closed(3);
  return out;
}

Formula Generator::ground_atom() {
  static const std::vector<std::string> unary = {"p", "q", "r"};
  static const std::vector<std::string> binary = {"s", "t"};
  static const std::vector<std::string> consts = {"a", "b", "c"};
  auto ground_term = [&](bool compound) {
    Term c = Term::constant(pick(*this, consts));
    if (!compound) return c;
    return chance(0.5) ? Term::application("f", {c})
                       : Term::application("g", {c, Term::constant(pick(*this, consts))});
  };
  if (chance(0.6)) {
    return Formula::atom(pick(*this, unary), {ground_term(chance(0.3))});
  }
  return Formula::atom(pick(*this, binary), {ground_term(chance(0.3)), ground_term(false)});
}

Formula Generator::ground_formula(std::size_t depth) {
  if (depth == 0 || chance(0.3)) return ground_atom();
  switch (below(4)) {
    case 0:
      return Formula::implication(ground_formula(depth - 1), ground_formula(depth - 1));
    case 1:
      return Formula::conjunction(ground_formula(depth - 1), ground_formula(depth - 1));
    case 2:
      return Formula::disjunction(ground_formula(depth - 1), ground_formula(depth - 1));
    default:
      return Formula::negation(ground_formula(depth - 1));
  }
}

VerificationCondition Generator::ground_vc() {
  VerificationCondition out;
  out.name = "ground";
  const std::size_t axioms = 1 + below(5);
  for (std::size_t k = 0; k < axioms; ++k) {
    out.context.push_back({"ax" + std::to_string(k), ground_formula(2)});
  }
  const std::size_t hyps = 1 + below(4);
  for (std::size_t k = 0; k < hyps; ++k) {
    out.hypotheses.push_back({"h" + std::to_string(k), ground_formula(2)});
  }
  out.conclusion = ground_atom();
  return out;
}

VerificationCondition Generator::structured_vc() {
  static const std::vector<std::string> preds = {"p", "q", "r", "s"};
  static const std::vector<std::string> consts = {"a", "b", "c", "d", "e"};
  const Term x = Term::variable("x");
  auto cmp_or_pred = [&](const Term& t) {
    if (chance(0.25)) return Formula::comparison(CmpOp::Le, "int", Term::integer(0), t);
    return Formula::atom(pick(*this, preds), {t});
  };
  auto constant_term = [&]() {
    Term c = Term::constant(pick(*this, consts));
    if (chance(0.4)) c = Term::application("f", {c});
    if (chance(0.3)) c = Term::application("g", {c, Term::constant(pick(*this, consts))});
    return c;
  };

  VerificationCondition out;
  out.name = "structured";
  const std::size_t axioms = 1 + below(5);
  for (std::size_t k = 0; k < axioms; ++k) {
    Formula body = Formula::implication(cmp_or_pred(x), cmp_or_pred(chance(0.5) ? x : Term::application("f", {x})));
    if (chance(0.3)) body = Formula::disjunction(body, cmp_or_pred(x));
    out.context.push_back({"ax" + std::to_string(k), Formula::forall({{"x", "int"}}, body)});
  }
  const std::size_t hyps = 1 + below(5);
  for (std::size_t k = 0; k < hyps; ++k) {
    Formula h = cmp_or_pred(constant_term());
    if (chance(0.4)) {
      h = Formula::conjunction(h, cmp_or_pred(constant_term()));
    } else if (chance(0.4)) {
      h = Formula::forall({{"x", "int"}},
                          Formula::implication(cmp_or_pred(x),
                                               Formula::conjunction(cmp_or_pred(x),
                                                                    cmp_or_pred(constant_term()))));
    }
    out.hypotheses.push_back({"h" + std::to_string(k), h});
  }
  out.conclusion = cmp_or_pred(constant_term());
  return out;
}

RandomPredicateGraph Generator::predicate_graph() {
  // Seven families; each contributes a node and its complement.
  std::vector<PredicateNode> families = {
      PredicateNode::plain("p"), PredicateNode::plain("q"), PredicateNode::plain("r"),
      PredicateNode::plain("s"), PredicateNode::comparison(CmpOp::Eq, "int"),
      PredicateNode::comparison(CmpOp::Le, "int"), PredicateNode::comparison(CmpOp::Lt, "int")};
  std::shuffle(families.begin(), families.end(), rng_);
  families.erase(families.begin() + static_cast<std::ptrdiff_t>(1 + below(4)), families.end());
  std::vector<PredicateNode> nodes;
  for (const PredicateNode& n : families) {
    nodes.push_back(n);
    nodes.push_back(n.complement());
  }

  RandomPredicateGraph out;
  for (const PredicateNode& n : nodes) out.graph.add_node(n);
  const std::size_t arcs = below(12);
  for (std::size_t k = 0; k < arcs; ++k) {
    const PredicateNode& from = pick(*this, nodes);
    const PredicateNode& to = pick(*this, nodes);
    Provenance prov;
    prov.axioms.insert("ax" + std::to_string(below(4)));
    out.graph.add_arc(Arc{from, to, 1 + below(4), prov});
  }
  const std::size_t seeds = 1 + below(2);
  for (std::size_t k = 0; k < seeds; ++k) out.initial.push_back(pick(*this, nodes));
  return out;
}

}  // namespace vcprune::testing
