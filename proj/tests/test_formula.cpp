#include "doctest.h"
#include "gkml/formula.hpp"
#include "gkml/parser.hpp"

using namespace gkml;

TEST_CASE("constants 0 and 1 normalize to bot and top") {
  CHECK(Formula::constant(TruthValue::zero()).kind() == Kind::Bottom);
  CHECK(Formula::constant(TruthValue::one()).kind() == Kind::Top);
  CHECK(Formula::constant(TruthValue::ratio(1, 2)).kind() == Kind::Const);
}

TEST_CASE("structural equality and ordering") {
  Formula a = parse("p -> q");
  Formula b = parse("p -> q");
  Formula c = parse("q -> p");
  CHECK(a == b);
  CHECK(a != c);
  CHECK((a < c || c < a));
}

TEST_CASE("fragment classification") {
  CHECK(fragment_of(parse("p & q")) == Fragment::Propositional);
  CHECK(fragment_of(parse("[]p -> p")) == Fragment::BoxOnly);
  CHECK(fragment_of(parse("<>p")) == Fragment::DiamondOnly);
  CHECK(fragment_of(parse("<>p -> []p")) == Fragment::Bimodal);
}

TEST_CASE("expand_derived rewrites the sugar connectives") {
  Formula p = Formula::atom("p"), q = Formula::atom("q");
  CHECK(expand_derived(Formula::or_(p, q)) ==
        Formula::and_(Formula::implies(Formula::implies(p, q), q),
                      Formula::implies(Formula::implies(q, p), p)));
  CHECK(expand_derived(Formula::not_(p)) == Formula::implies(p, Formula::bottom()));
  CHECK(expand_derived(Formula::top()) == Formula::implies(Formula::bottom(), Formula::bottom()));

  Formula sugar_free = parse("(p -> q) & (bot -> p)");
  CHECK(expand_derived(sugar_free) == sugar_free);
  CHECK(expand_derived(expand_derived(parse("~(p | q) <-> top"))) ==
        expand_derived(parse("~(p | q) <-> top")));
}

TEST_CASE("nesting degree counts the longest modal chain") {
  CHECK(nesting_degree(parse("<>(p & <>q)")) == 2);
  CHECK(nesting_degree(parse("p -> q")) == 0);
  CHECK(nesting_degree(parse("[]p -> [][]p")) == 2);
  CHECK(nesting_degree(parse("<>p & <>q")) == 1);
  CHECK(nesting_degree(parse("~~<>p -> <>~~p")) == 1);
}

TEST_CASE("nesting degree is stable under sugar expansion") {
  for (const char* text : {"~<>(p | q)", "top -> <>~p", "<>(p | <>q) & ~[]p", "p | q | ~r"}) {
    Formula f = parse(text);
    CHECK(nesting_degree(expand_derived(f)) == nesting_degree(f));
  }
}

TEST_CASE("subformulas by rank") {
  Formula f = parse("<><>p");
  auto s1 = subformulas_by_rank(f, 1);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0] == parse("p"));
  CHECK(s1[1] == parse("<>p"));
  auto s2 = subformulas_by_rank(f, 2);
  CHECK(s2.size() == 3);
  // j at least the nesting degree gives the full subformula set
  CHECK(subformulas_by_rank(f, 7) == s2);
}

TEST_CASE("atom and constant collection") {
  Formula f = parse("(p & {1/3}) -> (q | {2/3}) -> p");
  auto atoms = atoms_of(f);
  REQUIRE(atoms.size() == 2);
  CHECK(atoms[0] == "p");
  CHECK(atoms[1] == "q");
  auto consts = constants_of(f);
  REQUIRE(consts.size() == 2);
  CHECK(consts[0] == TruthValue::ratio(1, 3));
  CHECK(consts[1] == TruthValue::ratio(2, 3));
}
