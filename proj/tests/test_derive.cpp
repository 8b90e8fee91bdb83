#include "doctest.h"
#include "gkml/derive.hpp"
#include "gkml/generators.hpp"
#include "gkml/parser.hpp"

using namespace gkml;

namespace {

const ProofSystem kG = ProofSystem::parse("G");
const ProofSystem kGBox = ProofSystem::parse("GBox");
const ProofSystem kGDia = ProofSystem::parse("GDia");

bool accepts(const ProofSystem& sys, const std::vector<Formula>& assumptions, const Proof& p) {
  return check_proof(sys, assumptions, p).accepted;
}

}  // namespace

TEST_CASE("helper lemmas check from the propositional basis") {
  Formula a = parse("p | ~q"), b = parse("<>p"), c = parse("bot");

  Proof id = prove_identity(a);
  CheckResult rid = check_proof(kG, {}, id);
  REQUIRE(rid.accepted);
  CHECK(rid.final_formula == Formula::implies(a, a));

  Proof weak = prove_weakening(b, a);
  CheckResult rw = check_proof(kGDia, {}, weak);
  REQUIRE(rw.accepted);
  CHECK(rw.final_formula == parse("<>p -> ((p | ~q) -> <>p)"));

  Proof dist = prove_distribution(a, b, c);
  CheckResult rd = check_proof(kGDia, {}, dist);
  REQUIRE(rd.accepted);
  CHECK(rd.final_formula ==
        Formula::implies(Formula::implies(a, Formula::implies(b, c)),
                         Formula::implies(Formula::implies(a, b), Formula::implies(a, c))));
}

TEST_CASE("shipped helper-lemma files match the builders") {
  const std::string dir = std::string(GKML_DATA_DIR) + "/proofs/";
  struct Row {
    const char* file;
    Proof built;
  };
  std::vector<Row> rows;
  rows.push_back({"dt_identity.gkp", prove_identity(parse("a"))});
  rows.push_back({"dt_weakening.gkp", prove_weakening(parse("a"), parse("b"))});
  rows.push_back({"dt_distribution.gkp", prove_distribution(parse("a"), parse("b"), parse("c"))});
  for (const auto& row : rows) {
    INFO(row.file);
    ProofFile pf = load_proof_file(dir + row.file);
    CHECK(check_proof(pf.system, pf.assumptions, pf.proof).accepted);
    REQUIRE(pf.proof.steps.size() == row.built.steps.size());
    CHECK(pf.proof.steps.back().formula == row.built.steps.back().formula);
    CHECK(format_proof_file({pf.system, pf.assumptions, row.built}) == format_proof_file(pf));
  }
}

TEST_CASE("deduction transform discharges a lone assumption") {
  Proof pr;
  pr.steps.push_back({parse("p"), AssumeJust{0}});
  Proof out = deduction_transform(kG, {}, parse("p"), pr);
  CheckResult res = check_proof(kG, {}, out);
  REQUIRE(res.accepted);
  CHECK(res.final_formula == parse("p -> p"));
  CHECK(!res.final_depends_on_assumptions);
}

TEST_CASE("deduction transform weakens axioms") {
  Proof pr;
  Substitution s;
  s.map = {{"phi", parse("q")}};
  pr.steps.push_back({parse("bot -> q"), AxiomJust{SchemeId::G8, s}});
  Proof out = deduction_transform(kG, {}, parse("p"), pr);
  CheckResult res = check_proof(kG, {}, out);
  REQUIRE(res.accepted);
  CHECK(res.final_formula == parse("p -> bot -> q"));
}

TEST_CASE("deduction transform handles MP and kept assumptions") {
  // from assumptions [p -> q, p]: derive q, then discharge p
  Proof pr;
  pr.steps.push_back({parse("p"), AssumeJust{1}});
  pr.steps.push_back({parse("p -> q"), AssumeJust{0}});
  pr.steps.push_back({parse("q"), MPJust{0, 1}});
  Proof out = deduction_transform(kG, {parse("p -> q")}, parse("p"), pr);
  CheckResult res = check_proof(kG, {parse("p -> q")}, out);
  REQUIRE(res.accepted);
  CHECK(res.final_formula == parse("p -> q"));

  // and discharge the remaining assumption too
  Proof out2 = deduction_transform(kG, {}, parse("p -> q"), out);
  CheckResult res2 = check_proof(kG, {}, out2);
  REQUIRE(res2.accepted);
  CHECK(res2.final_formula == parse("(p -> q) -> p -> q"));
}

TEST_CASE("deduction transform keeps theorem-only rule uses intact") {
  // independent necessitation inside a proof with an unrelated assumption
  Proof pr;
  Substitution s;
  s.map = {{"phi", parse("p")}, {"psi", parse("p")}};
  pr.steps.push_back({parse("(p & p) -> p"), AxiomJust{SchemeId::G2, s}});
  pr.steps.push_back({parse("[]((p & p) -> p)"), NecJust{0}});
  pr.steps.push_back({parse("q"), AssumeJust{0}});
  Proof out = deduction_transform(kGBox, {}, parse("q"), pr);
  CheckResult res = check_proof(kGBox, {}, out);
  REQUIRE(res.accepted);
  CHECK(res.final_formula == parse("q -> q"));

  // the boxed theorem is still available verbatim inside the output
  bool found = false;
  for (const auto& st : out.steps) found = found || st.formula == parse("[]((p & p) -> p)");
  CHECK(found);
}

TEST_CASE("deduction transform rejects bad input") {
  Proof pr;
  pr.steps.push_back({parse("q"), AssumeJust{0}});  // formula differs from assumption p
  CHECK_THROWS_AS(deduction_transform(kG, {}, parse("p"), pr), Error);
}

TEST_CASE("lift_box carries assumptions under the box") {
  // p |- p  becomes  []p |- []p
  Proof pr;
  pr.steps.push_back({parse("p"), AssumeJust{0}});
  LiftedProof lifted = lift_box(kGBox, {parse("p")}, pr);
  REQUIRE(lifted.assumptions.size() == 1);
  CHECK(lifted.assumptions[0] == parse("[]p"));
  CheckResult res = check_proof(kGBox, lifted.assumptions, lifted.proof);
  REQUIRE(res.accepted);
  CHECK(res.final_formula == parse("[]p"));

  // two assumptions: p, q |- p & q ... via G-level pairing is long; use MP chain instead:
  // p, p -> q |- q  becomes  []p, [](p -> q) |- []q
  Proof mp2;
  mp2.steps.push_back({parse("p"), AssumeJust{0}});
  mp2.steps.push_back({parse("p -> q"), AssumeJust{1}});
  mp2.steps.push_back({parse("q"), MPJust{0, 1}});
  LiftedProof lifted2 = lift_box(kGBox, {parse("p"), parse("p -> q")}, mp2);
  CHECK(lifted2.assumptions ==
        std::vector<Formula>{parse("[]p"), parse("[](p -> q)")});
  CheckResult res2 = check_proof(kGBox, lifted2.assumptions, lifted2.proof);
  REQUIRE(res2.accepted);
  CHECK(res2.final_formula == parse("[]q"));

  // theorem case: no assumptions, ends in a plain necessitation
  Proof theo;
  Substitution s;
  s.map = {{"phi", parse("p")}};
  theo.steps.push_back({parse("bot -> p"), AxiomJust{SchemeId::G8, s}});
  LiftedProof lifted3 = lift_box(kGBox, {}, theo);
  CHECK(lifted3.assumptions.empty());
  CheckResult res3 = check_proof(kGBox, lifted3.assumptions, lifted3.proof);
  REQUIRE(res3.accepted);
  CHECK(res3.final_formula == parse("[](bot -> p)"));

  CHECK_THROWS_AS(lift_box(kGDia, {}, theo), Error);
}

TEST_CASE("lift_diamond carries one assumption under the diamond") {
  // p |- p  becomes  <>p |- <>p
  Proof pr;
  pr.steps.push_back({parse("p"), AssumeJust{0}});
  LiftedProof lifted = lift_diamond(kGDia, {parse("p")}, pr);
  CHECK(lifted.assumptions == std::vector<Formula>{parse("<>p")});
  CheckResult res = check_proof(kGDia, lifted.assumptions, lifted.proof);
  REQUIRE(res.accepted);
  CHECK(res.final_formula == parse("<>p"));

  // p & q |- p  becomes  <>(p & q) |- <>p
  Proof proj;
  proj.steps.push_back({parse("p & q"), AssumeJust{0}});
  Substitution s;
  s.map = {{"phi", parse("p")}, {"psi", parse("q")}};
  proj.steps.push_back({parse("(p & q) -> p"), AxiomJust{SchemeId::G2, s}});
  proj.steps.push_back({parse("p"), MPJust{0, 1}});
  LiftedProof lifted2 = lift_diamond(kGDia, {parse("p & q")}, proj);
  CHECK(lifted2.assumptions == std::vector<Formula>{parse("<>(p & q)")});
  CheckResult res2 = check_proof(kGDia, lifted2.assumptions, lifted2.proof);
  REQUIRE(res2.accepted);
  CHECK(res2.final_formula == parse("<>p"));

  Proof two;
  two.steps.push_back({parse("p"), AssumeJust{0}});
  CHECK_THROWS_AS(lift_diamond(kGDia, {parse("p"), parse("q")}, two), Error);
  CHECK_THROWS_AS(lift_diamond(kGBox, {parse("p")}, pr), Error);
}

namespace {

// Random small proofs: axiom instances over a fixed pool, assumptions, MP
// where shapes allow, and theorem-only rules on independent steps.
Proof random_proof(std::mt19937_64& rng, const ProofSystem& sys,
                   const std::vector<Formula>& assumptions) {
  FormulaGenOptions fopts;
  fopts.max_depth = 2;
  fopts.atoms = {"p", "q"};
  fopts.allow_box = sys.admits_nec();
  fopts.allow_diamond = sys.admits_mon();

  std::vector<SchemeId> pool = {SchemeId::G1, SchemeId::G2, SchemeId::G6, SchemeId::G8};
  if (sys.admits_nec()) pool.push_back(SchemeId::KBox);
  if (sys.admits_mon()) pool.push_back(SchemeId::DDia);

  Proof pr;
  std::vector<bool> depends;
  int len = 2 + (int)(rng() % 6);
  for (int i = 0; i < len; ++i) {
    int what = (int)(rng() % 4);
    if (what == 0 && !assumptions.empty()) {
      int k = (int)(rng() % assumptions.size());
      pr.steps.push_back({assumptions[k], AssumeJust{k}});
      depends.push_back(true);
      continue;
    }
    if (what == 1 && !pr.steps.empty()) {
      // try MP: find an implication whose antecedent appears earlier
      bool made = false;
      for (size_t j = 0; j < pr.steps.size() && !made; ++j) {
        const Formula& imp = pr.steps[j].formula;
        if (imp.kind() != Kind::Implies) continue;
        for (size_t k = 0; k < pr.steps.size() && !made; ++k) {
          if (pr.steps[k].formula == imp.left()) {
            pr.steps.push_back({imp.right(), MPJust{(int)k, (int)j}});
            depends.push_back(depends[j] || depends[k]);
            made = true;
          }
        }
      }
      if (made) continue;
    }
    if (what == 2 && sys.admits_nec() && !pr.steps.empty()) {
      size_t j = rng() % pr.steps.size();
      if (!depends[j]) {
        pr.steps.push_back({Formula::box(pr.steps[j].formula), NecJust{(int)j}});
        depends.push_back(false);
        continue;
      }
    }
    // default: a fresh axiom instance
    SchemeId id = pool[rng() % pool.size()];
    Substitution s;
    for (const auto& mv : scheme_metavars(id)) s.map[mv] = random_formula(rng, fopts);
    pr.steps.push_back({instantiate_scheme(id, s), AxiomJust{id, s}});
    depends.push_back(false);
  }
  return pr;
}

}  // namespace

TEST_CASE("transform-then-check over random small proofs") {
  std::vector<Formula> assumptions{parse("p -> q"), parse("q")};
  Formula alpha = parse("p");
  for (int trial = 0; trial < 100; ++trial) {
    auto rng = trial_rng(101, trial);
    const ProofSystem& sys = trial % 2 == 0 ? kGBox : kGDia;
    std::vector<Formula> extended = assumptions;
    extended.push_back(alpha);
    Proof pr = random_proof(rng, sys, extended);
    REQUIRE(accepts(sys, extended, pr));
    Proof out = deduction_transform(sys, assumptions, alpha, pr);
    CheckResult res = check_proof(sys, assumptions, out);
    REQUIRE(res.accepted);
    CHECK(res.final_formula == Formula::implies(alpha, pr.steps.back().formula));
  }
}

TEST_CASE("lift_box and lift_diamond outputs always re-check") {
  for (int trial = 0; trial < 60; ++trial) {
    auto rng = trial_rng(103, trial);
    std::vector<Formula> assumptions{parse("p"), parse("p -> q")};
    Proof pr = random_proof(rng, kGBox, assumptions);
    REQUIRE(accepts(kGBox, assumptions, pr));
    LiftedProof lifted = lift_box(kGBox, assumptions, pr);
    CheckResult res = check_proof(kGBox, lifted.assumptions, lifted.proof);
    REQUIRE(res.accepted);
    CHECK(res.final_formula == Formula::box(pr.steps.back().formula));
  }
  for (int trial = 0; trial < 60; ++trial) {
    auto rng = trial_rng(107, trial);
    std::vector<Formula> assumptions{parse("p & q")};
    Proof pr = random_proof(rng, kGDia, assumptions);
    REQUIRE(accepts(kGDia, assumptions, pr));
    LiftedProof lifted = lift_diamond(kGDia, assumptions, pr);
    CheckResult res = check_proof(kGDia, lifted.assumptions, lifted.proof);
    REQUIRE(res.accepted);
    CHECK(res.final_formula == Formula::diamond(pr.steps.back().formula));
  }
}
