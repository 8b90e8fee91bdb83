#include "doctest.h"
#include "gkml/generators.hpp"
#include "gkml/parser.hpp"

using namespace gkml;

TEST_CASE("grammar and precedence") {
  Formula p = Formula::atom("p"), q = Formula::atom("q"), r = Formula::atom("r");

  CHECK(parse("[](p -> q) -> ([]p -> []q)") ==
        Formula::implies(Formula::box(Formula::implies(p, q)),
                         Formula::implies(Formula::box(p), Formula::box(q))));

  CHECK(parse("~~<>p -> <>~~p") ==
        Formula::implies(Formula::not_(Formula::not_(Formula::diamond(p))),
                         Formula::diamond(Formula::not_(Formula::not_(p)))));

  // right-associative implication
  CHECK(parse("p -> q -> r") == Formula::implies(p, Formula::implies(q, r)));

  // unary binds tighter than &, & tighter than |, | tighter than ->
  CHECK(parse("~p & q | r") == Formula::or_(Formula::and_(Formula::not_(p), q), r));
  CHECK(parse("p | q -> r") == Formula::implies(Formula::or_(p, q), r));

  // left-folded chains
  CHECK(parse("p & q & r") == Formula::and_(Formula::and_(p, q), r));

  // <-> is the defining conjunction
  CHECK(parse("p <-> q") == Formula::and_(Formula::implies(p, q), Formula::implies(q, p)));

  CHECK(parse("{1/2}").kind() == Kind::Const);
  CHECK(parse("{2/4}") == parse("{1/2}"));
  CHECK(parse("{0}") == Formula::bottom());
  CHECK(parse("{1}") == Formula::top());
  CHECK(parse("bot").kind() == Kind::Bottom);
  CHECK(parse("top").kind() == Kind::Top);
  CHECK(parse("p_1 & ab2c") == Formula::and_(Formula::atom("p_1"), Formula::atom("ab2c")));
}

TEST_CASE("parse errors carry position and expectations") {
  CHECK_THROWS_AS(parse("p ->"), ParseError);
  CHECK_THROWS_AS(parse("(p -> q"), ParseError);
  CHECK_THROWS_AS(parse("{3/2}"), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p -> [q"), ParseError);
  try {
    parse("p &\n& q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 1);
    CHECK(!e.expected.empty());
  }
}

TEST_CASE("canonical print examples") {
  CHECK(print(parse("[]p")) == "[]p");
  CHECK(print(Formula::constant(TruthValue::ratio(1, 2))) == "{1/2}");
  CHECK(print(parse("p -> q -> r")) == "p -> q -> r");
  CHECK(print(parse("(p -> q) -> r")) == "(p -> q) -> r");
  CHECK(print(parse("p & (q & r)")) == "p & (q & r)");
  CHECK(print(parse("p & q & r")) == "p & q & r");
  CHECK(print(parse("[](p->q)")) == "[](p -> q)");
  CHECK(print(parse("~(p|q)")) == "~(p | q)");
  PrintOptions uni;
  uni.unicode = true;
  CHECK(print(parse("[]p -> ~q"), uni) == "□p → ¬q");
}

TEST_CASE("parse after print is the identity on random formulas") {
  FormulaGenOptions opts;
  opts.max_depth = 5;
  opts.atoms = {"p", "q", "rain", "x1"};
  opts.constants = {TruthValue::ratio(1, 3), TruthValue::ratio(2, 5)};
  for (int trial = 0; trial < 10000; ++trial) {
    auto rng = trial_rng(7, trial);
    Formula f = random_formula(rng, opts);
    Formula back = parse(print(f));
    REQUIRE(back == f);
  }
}
