#include "vcprune/smt_emit.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace vcprune {
namespace {

using K = Formula::Kind;

constexpr const char* kDefaultSort = "U";

// Words that may not be declared as user symbols in AUFLIA scripts.
const std::set<std::string>& reserved_smt_symbols() {
  static const std::set<std::string> words = {
      "_",        "!",         "as",          "let",        "exists",
      "forall",   "match",     "par",         "and",        "or",
      "not",      "xor",       "=>",          "ite",        "=",
      "distinct", "true",      "false",       "select",     "store",
      "div",      "mod",       "abs",         "to_real",    "to_int",
      "is_int",   "Int",       "Bool",        "Real",       "Array",
      "assert",   "check-sat", "declare-fun", "define-fun", "declare-sort",
      "exit",     "push",      "pop",         "set-logic",  "set-info",
      "set-option", "NUMERAL", "DECIMAL",     "STRING",     "BINARY",
      "HEXADECIMAL"};
  return words;
}

bool is_simple_smt_symbol(std::string_view s) {
  if (s.empty() || (s[0] >= '0' && s[0] <= '9')) return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') ||
                    std::string_view("~!@$%^&*_-+=<>.?/").find(c) !=
                        std::string_view::npos;
    if (!ok) return false;
  }
  return true;
}

// Injective mapping from native names to SMT-LIB symbols.
class SymbolTable {
 public:
  const std::string& map(const std::string& name) {
    auto it = mapped_.find(name);
    if (it != mapped_.end()) return it->second;
    std::string base = sanitize(name);
    std::string candidate = base;
    for (std::size_t k = 1; taken_.count(candidate) ||
                            reserved_smt_symbols().count(candidate);
         ++k) {
      candidate = base + "_" + std::to_string(k);
    }
    taken_.insert(candidate);
    return mapped_.emplace(name, candidate).first->second;
  }

  void reserve(const std::string& smt_name) { taken_.insert(smt_name); }

 private:
  static std::string sanitize(const std::string& name) {
    if (is_simple_smt_symbol(name)) return name;
    std::string out;
    for (char c : name) out += is_simple_smt_symbol(std::string(1, c)) ? c : '_';
    if (out.empty() || (out[0] >= '0' && out[0] <= '9')) out = "s" + out;
    return out;
  }

  std::map<std::string, std::string> mapped_;
  std::set<std::string> taken_;
};

// Union-find over sort slots; a slot may be pinned to a native sort name.
class SortSolver {
 public:
  std::size_t fresh(std::optional<std::string> fixed = std::nullopt) {
    parent_.push_back(parent_.size());
    fixed_.push_back(std::move(fixed));
    return parent_.size() - 1;
  }

  std::size_t find(std::size_t s) {
    while (parent_[s] != s) {
      parent_[s] = parent_[parent_[s]];
      s = parent_[s];
    }
    return s;
  }

  void unify(std::size_t a, std::size_t b, const std::string& where) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (fixed_[a] && fixed_[b] && *fixed_[a] != *fixed_[b]) {
      throw EmitError("sort conflict in " + where + ": '" + *fixed_[a] +
                      "' vs '" + *fixed_[b] + "'");
    }
    if (!fixed_[a]) std::swap(a, b);
    parent_[b] = a;
  }

  std::string resolve(std::size_t s) {
    const std::size_t r = find(s);
    return fixed_[r] ? *fixed_[r] : kDefaultSort;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::optional<std::string>> fixed_;
};

struct Signature {
  std::vector<std::size_t> arguments;
  std::optional<std::size_t> result;  // empty for predicates
};

class Emitter {
 public:
  Emitter(const VerificationCondition& vc, const SmtOptions& options)
      : vc_(vc), options_(options) {}

  void run(std::ostream& os) {
    for (const NamedFormula& a : vc_.context) infer(a.formula);
    for (const NamedFormula& h : vc_.hypotheses) infer(h.formula);
    infer(vc_.conclusion);

    std::ostringstream body;
    for (const NamedFormula& a : vc_.context) {
      body << "; context " << a.id << "\n(assert " << render(a.formula)
           << ")\n";
    }
    for (const NamedFormula& h : vc_.hypotheses) {
      body << "; hypothesis " << h.id << "\n(assert " << render(h.formula)
           << ")\n";
    }
    body << "; conclusion\n(assert (not " << render(vc_.conclusion) << "))\n";

    os << "; vc " << one_line(vc_.name) << '\n';
    os << "(set-logic AUFLIA)\n";
    declare(os);
    os << body.str();
    os << "(check-sat)\n(exit)\n";
  }

 private:
  static std::string one_line(std::string s) {
    for (char& c : s) {
      if (c == '\n' || c == '\r') c = ' ';
    }
    return s;
  }

  // ---- sort inference ----------------------------------------------------

  std::size_t pinned(const std::string& sort) { return sorts_.fresh(sort); }

  Signature& signature(const std::string& name, std::size_t arity,
                       bool predicate) {
    auto it = signatures_.find(name);
    if (it == signatures_.end()) {
      Signature sig;
      for (std::size_t k = 0; k < arity; ++k) sig.arguments.push_back(sorts_.fresh());
      if (!predicate) sig.result = sorts_.fresh();
      it = signatures_.emplace(name, std::move(sig)).first;
      order_.push_back(name);
    }
    Signature& sig = it->second;
    if (sig.arguments.size() != arity || sig.result.has_value() == predicate) {
      throw EmitError("symbol '" + name +
                      "' is used with different arities or roles");
    }
    return sig;
  }

  std::size_t infer(const Term& t, std::vector<Binder>& scope) {
    switch (t.kind()) {
      case Term::Kind::Variable:
        for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
          if (it->name == t.name()) return pinned(it->sort);
        }
        throw EmitError("free variable '" + t.name() + "'");
      case Term::Kind::Integer:
        return pinned(options_.integer_sort);
      case Term::Kind::Constant:
        return *signature(t.name(), 0, false).result;
      case Term::Kind::Application: {
        std::vector<std::size_t> args;
        for (const Term& a : t.arguments()) args.push_back(infer(a, scope));
        Signature& sig = signature(t.name(), args.size(), false);
        for (std::size_t k = 0; k < args.size(); ++k) {
          sorts_.unify(sig.arguments[k], args[k], "'" + t.name() + "'");
        }
        return *sig.result;
      }
    }
    return sorts_.fresh();
  }

  void infer(const Formula& f, std::vector<Binder>& scope) {
    switch (f.kind()) {
      case K::Atom: {
        std::vector<std::size_t> args;
        for (const Term& a : f.terms()) args.push_back(infer(a, scope));
        Signature& sig = signature(f.predicate(), args.size(), true);
        for (std::size_t k = 0; k < args.size(); ++k) {
          sorts_.unify(sig.arguments[k], args[k], "'" + f.predicate() + "'");
        }
        return;
      }
      case K::Comparison: {
        const std::size_t sort = pinned(f.sort());
        sorts_.unify(sort, infer(f.terms()[0], scope), "comparison");
        sorts_.unify(sort, infer(f.terms()[1], scope), "comparison");
        if (f.op() != CmpOp::Eq && f.op() != CmpOp::Ne &&
            f.sort() != options_.integer_sort) {
          if (!options_.ordered_sorts.count(f.sort())) {
            throw EmitError("ordering comparison over sort '" + f.sort() +
                            "' which has no declared total order");
          }
          ordered_used_.insert(f.sort());
        }
        return;
      }
      case K::Forall:
      case K::Exists:
        scope.insert(scope.end(), f.binders().begin(), f.binders().end());
        infer(f.body(), scope);
        scope.resize(scope.size() - f.binders().size());
        return;
      default:
        for (const Formula& c : f.children()) infer(c, scope);
    }
  }

  void infer(const Formula& f) {
    std::vector<Binder> scope;
    infer(f, scope);
  }

  // ---- rendering ---------------------------------------------------------

  std::string smt_sort(const std::string& native) {
    if (native == options_.integer_sort) return "Int";
    used_sorts_.insert(native);
    return sort_names_.map(native);
  }

  std::string order_predicate(const std::string& sort) {
    return symbols_.map("\x01le_" + sort);
  }

  std::string render(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Variable:
        return variable(t.name());
      case Term::Kind::Integer: {
        std::ostringstream os;
        if (t.value() < 0) {
          os << "(- " << BigInt(-t.value()) << ')';
        } else {
          os << t.value();
        }
        return os.str();
      }
      case Term::Kind::Constant:
        return symbols_.map(t.name());
      case Term::Kind::Application: {
        std::string out = "(" + symbols_.map(t.name());
        for (const Term& a : t.arguments()) out += " " + render(a);
        return out + ")";
      }
    }
    return {};
  }

  std::string variable(const std::string& name) {
    return "?" + variables_.map(name);
  }

  std::string render(const Formula& f) {
    switch (f.kind()) {
      case K::Atom: {
        if (f.terms().empty()) return symbols_.map(f.predicate());
        std::string out = "(" + symbols_.map(f.predicate());
        for (const Term& a : f.terms()) out += " " + render(a);
        return out + ")";
      }
      case K::Comparison: {
        const std::string lhs = render(f.terms()[0]);
        const std::string rhs = render(f.terms()[1]);
        if (f.op() == CmpOp::Eq) return "(= " + lhs + " " + rhs + ")";
        if (f.op() == CmpOp::Ne) return "(distinct " + lhs + " " + rhs + ")";
        if (f.sort() == options_.integer_sort) {
          return "(" + std::string(symbol(f.op())) + " " + lhs + " " + rhs + ")";
        }
        const std::string le = order_predicate(f.sort());
        switch (f.op()) {
          case CmpOp::Le: return "(" + le + " " + lhs + " " + rhs + ")";
          case CmpOp::Ge: return "(" + le + " " + rhs + " " + lhs + ")";
          case CmpOp::Lt:
            return "(and (" + le + " " + lhs + " " + rhs + ") (not (= " + lhs +
                   " " + rhs + ")))";
          case CmpOp::Gt:
            return "(and (" + le + " " + rhs + " " + lhs + ") (not (= " + lhs +
                   " " + rhs + ")))";
          default: break;
        }
        return {};
      }
      case K::True: return "true";
      case K::False: return "false";
      case K::Not: return "(not " + render(f.operand()) + ")";
      case K::And: return "(and " + render(f.lhs()) + " " + render(f.rhs()) + ")";
      case K::Or: return "(or " + render(f.lhs()) + " " + render(f.rhs()) + ")";
      case K::Implies:
        return "(=> " + render(f.lhs()) + " " + render(f.rhs()) + ")";
      case K::Iff: return "(= " + render(f.lhs()) + " " + render(f.rhs()) + ")";
      case K::Forall:
      case K::Exists: {
        std::string out = f.kind() == K::Forall ? "(forall (" : "(exists (";
        for (std::size_t k = 0; k < f.binders().size(); ++k) {
          if (k) out += ' ';
          out += "(" + variable(f.binders()[k].name) + " " +
                 smt_sort(f.binders()[k].sort) + ")";
        }
        return out + ") " + render(f.body()) + ")";
      }
    }
    return {};
  }

  void declare(std::ostream& os) {
    // Resolve every signature first so all used sorts are known.
    struct Decl {
      std::string name;
      std::vector<std::string> args;
      std::string result;
    };
    std::vector<Decl> decls;
    for (const std::string& name : order_) {
      Signature& sig = signatures_.at(name);
      Decl d{symbols_.map(name), {}, "Bool"};
      for (std::size_t s : sig.arguments) d.args.push_back(smt_sort(sorts_.resolve(s)));
      if (sig.result) d.result = smt_sort(sorts_.resolve(*sig.result));
      decls.push_back(std::move(d));
    }
    for (const std::string& s : ordered_used_) smt_sort(s);

    for (const std::string& s : used_sorts_) {
      os << "(declare-sort " << sort_names_.map(s) << " 0)\n";
    }
    for (const Decl& d : decls) {
      os << "(declare-fun " << d.name << " (";
      for (std::size_t k = 0; k < d.args.size(); ++k) {
        if (k) os << ' ';
        os << d.args[k];
      }
      os << ") " << d.result << ")\n";
    }
    for (const std::string& s : ordered_used_) {
      const std::string le = order_predicate(s);
      const std::string sort = smt_sort(s);
      os << "; total order on " << s << '\n';
      os << "(declare-fun " << le << " (" << sort << ' ' << sort << ") Bool)\n";
      os << "(assert (forall ((?x " << sort << ") (?y " << sort << ")) (or ("
         << le << " ?x ?y) (" << le << " ?y ?x))))\n";
      os << "(assert (forall ((?x " << sort << ") (?y " << sort << ")) (=> (and ("
         << le << " ?x ?y) (" << le << " ?y ?x)) (= ?x ?y))))\n";
      os << "(assert (forall ((?x " << sort << ") (?y " << sort << ") (?z "
         << sort << ")) (=> (and (" << le << " ?x ?y) (" << le
         << " ?y ?z)) (" << le << " ?x ?z))))\n";
    }
  }

  const VerificationCondition& vc_;
  const SmtOptions& options_;
  SortSolver sorts_;
  std::map<std::string, Signature> signatures_;
  std::vector<std::string> order_;
  std::set<std::string> ordered_used_;
  std::set<std::string> used_sorts_;
  SymbolTable symbols_;
  SymbolTable sort_names_;
  SymbolTable variables_;
};

}  // namespace

void emit_smt(std::ostream& out, const VerificationCondition& vc,
              const SmtOptions& options) {
  Emitter(vc, options).run(out);
}

std::string emit_smt(const VerificationCondition& vc,
                     const SmtOptions& options) {
  std::ostringstream os;
  emit_smt(os, vc, options);
  return os.str();
}

}  // namespace vcprune
