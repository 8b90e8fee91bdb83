#include "doctest.h"
#include "gkml/generators.hpp"
#include "gkml/parser.hpp"
#include "gkml/search.hpp"

using namespace gkml;

TEST_CASE("finite-model-property world bounds") {
  CHECK(fmp_world_bound(parse("~~<>p -> <>~~p")) == 3);
  CHECK(fmp_world_bound(parse("<><>p")) == 6);
  CHECK(fmp_world_bound(parse("p -> q")) == 1);
  CHECK(fmp_world_bound(parse("<>(p | p) -> (<>p | <>p)")) == 3);
  CHECK(fmp_world_bound(parse("~<>bot")) == 2);
  CHECK_THROWS_AS(fmp_world_bound(parse("[]p")), Error);
}

TEST_CASE("search finds the crisp-incompleteness countermodel") {
  SearchConfig cfg;
  cfg.max_worlds = 3;
  SearchOutcome out = find_countermodel(parse("~~<>p -> <>~~p"), cfg);
  REQUIRE(out.status == SearchStatus::CountermodelFound);
  REQUIRE(out.countermodel.has_value());
  // a two-world countermodel exists, so the least one found is no bigger
  CHECK((int)out.countermodel->worlds().size() <= 2);
  CHECK(out.witness_value < TruthValue::one());
  // the countermodel is genuinely fuzzy: the formula holds in crisp models
  CHECK(!frame_properties(*out.countermodel).crisp);
  // reported value is reproduced by the exact evaluator
  CHECK(eval(*out.countermodel, out.witness_world, parse("~~<>p -> <>~~p")) == out.witness_value);
}

TEST_CASE("search is honest about the box fragment") {
  SearchConfig cfg;
  cfg.max_worlds = 2;
  cfg.grid_denominator = 4;
  SearchOutcome out = find_countermodel(parse("[](p -> q) -> ([]p -> []q)"), cfg);
  CHECK(out.status == SearchStatus::ExhaustedBounded);  // valid scheme, but no verdict for []
}

TEST_CASE("search certifies diamond-fragment validity at the bound") {
  SearchConfig cfg;
  cfg.max_worlds = 2;
  SearchOutcome out = find_countermodel(parse("~<>bot"), cfg);
  CHECK(out.status == SearchStatus::ExhaustedComplete);

  // max_worlds below the bound: exhaustion is only bounded
  SearchConfig low;
  low.max_worlds = 1;
  CHECK(find_countermodel(parse("~<>bot"), low).status == SearchStatus::ExhaustedBounded);

  // an explicit grid disables the completeness claim
  SearchConfig gridded = cfg;
  gridded.grid_denominator = 3;
  CHECK(find_countermodel(parse("~<>bot"), gridded).status == SearchStatus::ExhaustedBounded);

  // so do truth constants: the sufficiency argument is constant-free
  SearchConfig c2 = cfg;
  c2.max_worlds = 2;
  SearchOutcome constant_out = find_countermodel(parse("<>{1/2} -> {1/2}"), c2);
  CHECK(constant_out.status == SearchStatus::ExhaustedBounded);
  CHECK(!constant_out.countermodel.has_value());
}

TEST_CASE("crisp two-world countermodel for p -> []p") {
  SearchConfig cfg;
  cfg.max_worlds = 2;
  cfg.grid_denominator = 1;  // crisp {0,1} grid
  SearchOutcome out = find_countermodel(parse("p -> []p"), cfg);
  REQUIRE(out.status == SearchStatus::CountermodelFound);
  const GKModel& m = *out.countermodel;
  REQUIRE(m.worlds().size() == 2);
  CHECK(m.access("w0", "w1") == TruthValue::one());
  CHECK(m.access("w0", "w0") == TruthValue::zero());
  CHECK(m.atom_value("w0", "p") == TruthValue::one());
  CHECK(m.atom_value("w1", "p") == TruthValue::zero());
  CHECK(out.witness_value == TruthValue::zero());
  CHECK(frame_properties(m).crisp);
}

TEST_CASE("search refutes constant-bearing formulas with exact witnesses") {
  SearchConfig cfg;
  cfg.max_worlds = 1;
  SearchOutcome out = find_countermodel(parse("{1/2} -> p"), cfg);
  REQUIRE(out.status == SearchStatus::CountermodelFound);
  CHECK(out.witness_value < TruthValue::ratio(1, 2));
  CHECK(eval(*out.countermodel, "w0", parse("{1/2} -> p")) == out.witness_value);
  SearchOutcome ref = find_countermodel_reference(parse("{1/2} -> p"), cfg);
  CHECK(ref.positions_scanned == out.positions_scanned);
  CHECK(ref.witness_value == out.witness_value);
}

TEST_CASE("kernel, reference and parallel searches agree") {
  std::vector<std::string> formulas = {
      "~~<>p -> <>~~p", "p -> []p", "<>p -> p", "[]p -> p", "p | ~p",
      "(p -> q) | (q -> p)", "~<>bot", "<>(p & q) -> <>p",
  };
  for (const auto& text : formulas) {
    Formula f = parse(text);
    SearchConfig cfg;
    cfg.max_worlds = 2;
    SearchOutcome ref = find_countermodel_reference(f, cfg);
    SearchOutcome kern = find_countermodel(f, cfg);
    SearchConfig par = cfg;
    par.jobs = 2;
    SearchOutcome parallel = find_countermodel(f, par);

    CHECK(ref.status == kern.status);
    CHECK(kern.status == parallel.status);
    CHECK(ref.positions_scanned == kern.positions_scanned);
    CHECK(kern.positions_scanned == parallel.positions_scanned);
    if (ref.status == SearchStatus::CountermodelFound) {
      CHECK(ref.witness_value == kern.witness_value);
      CHECK(model_to_json_text(*ref.countermodel) == model_to_json_text(*kern.countermodel));
      CHECK(model_to_json_text(*kern.countermodel) ==
            model_to_json_text(*parallel.countermodel));
    }
  }
}

TEST_CASE("exhaustive validity oracle") {
  // pre-linearity on one world
  ExhaustiveResult pre = exhaustive_validity(parse("(p -> q) | (q -> p)"), 1, 4);
  CHECK(pre.valid);

  // the finite-W theorem instance on two worlds
  ExhaustiveResult z = exhaustive_validity(parse("[]~~p -> ~~[]p"), 2, 3);
  CHECK(z.valid);

  // the crisp-incompleteness scheme fails with minimum value exactly 1/2
  ExhaustiveResult cf = exhaustive_validity(parse("~~<>p -> <>~~p"), 2, 2);
  CHECK(!cf.valid);
  CHECK(cf.min_value == TruthValue::ratio(1, 2));

  // excluded middle is refuted (its maximum shortfall sits at e(p) = 1/2)
  ExhaustiveResult em = exhaustive_validity(parse("p | ~p"), 1, 2);
  CHECK(!em.valid);
  CHECK(em.min_value == TruthValue::ratio(1, 2));

  CHECK_THROWS_AS(exhaustive_validity(parse("p & q & r2"), 4, 30), Error);  // over the cap
}

TEST_CASE("budget exhaustion is reported distinctly") {
  SearchConfig cfg;
  cfg.max_worlds = 4;
  cfg.time_budget_seconds = 0.02;
  // a valid bimodal formula over a deliberately big space
  SearchOutcome out = find_countermodel(parse("[](p -> q) -> (<>p -> <>q)"), cfg);
  CHECK(out.status == SearchStatus::BudgetExceeded);
}

TEST_CASE("canonicalization into the automatic grid preserves verdicts") {
  FormulaGenOptions fopts;
  fopts.max_depth = 4;
  ModelGenOptions mopts;
  mopts.max_worlds = 3;
  mopts.max_denominator = 17;
  for (int trial = 0; trial < 2000; ++trial) {
    auto rng = trial_rng(307, trial);
    GKModel m = random_model(rng, mopts);
    Formula f = random_formula(rng, fopts);
    CanonicalizedModel canon = canonicalize_model(m);
    for (const auto& x : m.worlds()) {
      TruthValue orig = eval(m, x, f);
      TruthValue mapped = eval(canon.model, x, f);
      CHECK(orig.is_one() == mapped.is_one());
      // stronger: the map itself carries the value across
      CHECK(canon.map.apply(orig) == mapped);
    }
  }
}

TEST_CASE("order-map equivariance of evaluation") {
  FormulaGenOptions fopts;
  fopts.max_depth = 4;
  ModelGenOptions mopts;
  mopts.max_worlds = 3;
  for (int trial = 0; trial < 1000; ++trial) {
    auto rng = trial_rng(311, trial);
    GKModel m = random_model(rng, mopts);
    Formula f = random_formula(rng, fopts);
    OrderMap g = build_order_map(m.all_values(), TruthValue::ratio(1, 8), TruthValue::ratio(3, 4));
    GKModel t = transform_model(m, g);
    for (const auto& x : m.worlds()) CHECK(eval(t, x, f) == g.apply(eval(m, x, f)));
  }
}

TEST_CASE("fmp spot check: doubling the grid does not create countermodels") {
  // valid diamond formulas stay countermodel-free on a finer grid
  for (const char* text : {"~<>bot", "<>p -> <>p"}) {
    Formula f = parse(text);
    int bound = fmp_world_bound(f);
    SearchConfig cfg;
    cfg.max_worlds = bound;
    SearchOutcome out = find_countermodel(f, cfg);
    CHECK(out.status == SearchStatus::ExhaustedComplete);
    SearchConfig doubled = cfg;
    int k = bound;
    doubled.grid_denominator = 2 * (k * k + k * (int)atoms_of(f).size() + 1);
    SearchOutcome finer = find_countermodel(f, doubled);
    CHECK(finer.status == SearchStatus::ExhaustedBounded);
    CHECK(!finer.countermodel.has_value());
  }
}
