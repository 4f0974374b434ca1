#include "support/arc_tables.hpp"

namespace vcprune::testing {

namespace {

Literal lit(const char* spec) {
  // "p" or "~p"
  const bool positive = spec[0] != '~';
  const std::string name = positive ? spec : spec + 1;
  return Literal(positive, Formula::atom(name, {Term::constant("c")}));
}

Clause clause(std::initializer_list<const char*> specs) {
  std::vector<Literal> lits;
  for (const char* s : specs) lits.push_back(lit(s));
  return Clause(std::move(lits), {"ax", 0});
}

}  // namespace

std::vector<PairTableCase> pair_table_cases() {
  // Mixed pairs negate the negative literal. Equal-polarity pairs negate the
  // alphabetically later predicate.
  return {
      {"mixed2", clause({"~p", "q"}), {{"p+", "q+", 1}}},
      {"mixed3", clause({"~p", "q", "r"}),
       {{"p+", "q+", 2}, {"p+", "r+", 2}, {"r-", "q+", 2}}},
      {"mixed4", clause({"~p", "q", "r", "~s"}),
       {{"p+", "q+", 3}, {"p+", "r+", 3}, {"s+", "p-", 3},
        {"r-", "q+", 3}, {"s+", "q+", 3}, {"s+", "r+", 3}}},
      {"positive2", clause({"p", "q"}), {{"q-", "p+", 1}}},
      {"positive3", clause({"p", "q", "r"}),
       {{"q-", "p+", 2}, {"r-", "p+", 2}, {"r-", "q+", 2}}},
      {"positive4", clause({"p", "q", "r", "~s"}),
       {{"q-", "p+", 3}, {"r-", "p+", 3}, {"s+", "p+", 3},
        {"r-", "q+", 3}, {"s+", "q+", 3}, {"s+", "r+", 3}}},
      {"negative2", clause({"~p", "~q"}), {{"q+", "p-", 1}}},
      {"negative3", clause({"~p", "~q", "r"}),
       {{"q+", "p-", 2}, {"p+", "r+", 2}, {"q+", "r+", 2}}},
      {"negative4", clause({"~p", "~q", "r", "~s"}),
       {{"q+", "p-", 3}, {"p+", "r+", 3}, {"s+", "p-", 3},
        {"q+", "r+", 3}, {"s+", "q-", 3}, {"s+", "r+", 3}}},
  };
}

std::set<ArcRow> int_comparison_rows() {
  // x<=y & y<=x => x=y        {~<=, ~<=, =}     <= -> =   (w2)
  // x=y => x>=y, x=y => y>=x  {~=, >=}          = -> >=   (w1)
  // x>y => x>=y               {~>, >=}          > -> >=   (w1)
  // x>=y => x>y | x=y         {~>=, >, =}       >= -> >, >= -> =, and the
  //                                             (>, =) pair: ~> is <=, so
  //                                             <= -> =   (all w2)
  // and the mirrored five with <= and < in place of >= and >:
  // x>=y & y>=x => x=y        >= -> =   (w2)
  // x=y => x<=y               = -> <=   (w1)
  // x<y => x<=y               < -> <=   (w1)
  // x<=y => x<y | x=y         <= -> <, <= -> =, and (<, =): ~= is !=, so
  //                           != -> <   (all w2)
  return {
      {"<=_int", "=_int", 2}, {"=_int", ">=_int", 1}, {">_int", ">=_int", 1},
      {">=_int", ">_int", 2}, {">=_int", "=_int", 2}, {"=_int", "<=_int", 1},
      {"<_int", "<=_int", 1}, {"<=_int", "<_int", 2}, {"!=_int", "<_int", 2},
  };
}

std::set<ArcRow> rows_of(const std::vector<Arc>& arcs) {
  std::set<ArcRow> out;
  for (const Arc& a : arcs) out.emplace(a.from.label(), a.to.label(), a.weight);
  return out;
}

std::set<ArcRow> rows_of(const PredicateGraph& g) {
  std::set<ArcRow> out;
  for (const auto& [key, a] : g.arcs()) out.emplace(a.from.label(), a.to.label(), a.weight);
  return out;
}

}  // namespace vcprune::testing
