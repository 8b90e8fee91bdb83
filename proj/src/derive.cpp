#include "gkml/derive.hpp"

#include "gkml/parser.hpp"

namespace gkml {

namespace {

// Incremental proof assembly.  Indices are 0-based positions in the step
// list; every emitted axiom step carries its explicit substitution.
class Builder {
 public:
  int axiom(SchemeId id, Substitution subst) {
    Formula f = instantiate_scheme(id, subst);
    steps_.push_back({std::move(f), AxiomJust{id, std::move(subst)}});
    return last();
  }

  int assume(int k, Formula f) {
    steps_.push_back({std::move(f), AssumeJust{k}});
    return last();
  }

  int mp(int antecedent, int implication) {
    if (antecedent < 0 || implication < 0 || antecedent >= (int)steps_.size() ||
        implication >= (int)steps_.size())
      throw Error("internal: MP reference out of range while assembling a derived proof");
    const Formula& imp = steps_[implication].formula;
    if (imp.kind() != Kind::Implies || imp.left() != steps_[antecedent].formula)
      throw Error("internal: malformed MP while assembling a derived proof: have '" +
                  print(steps_[antecedent].formula) + "' against '" + print(imp) + "'");
    steps_.push_back({imp.right(), MPJust{antecedent, implication}});
    return last();
  }

  int nec(int premise) {
    steps_.push_back({Formula::box(steps_[premise].formula), NecJust{premise}});
    return last();
  }

  int mon(int premise) {
    const Formula& imp = steps_[premise].formula;
    if (imp.kind() != Kind::Implies)
      throw Error("internal: monotonicity premise is not an implication");
    steps_.push_back({Formula::implies(Formula::diamond(imp.left()), Formula::diamond(imp.right())),
                      MonJust{premise}});
    return last();
  }

  /// Appends a whole proof, shifting its internal references.
  int splice(const Proof& p) {
    int base = (int)steps_.size();
    for (const auto& st : p.steps) {
      ProofStep copy = st;
      if (auto* mp = std::get_if<MPJust>(&copy.just)) {
        mp->antecedent += base;
        mp->implication += base;
      } else if (auto* nec = std::get_if<NecJust>(&copy.just)) {
        nec->premise += base;
      } else if (auto* mon = std::get_if<MonJust>(&copy.just)) {
        mon->premise += base;
      }
      steps_.push_back(std::move(copy));
    }
    return last();
  }

  const Formula& formula(int i) const { return steps_[i].formula; }
  int last() const { return (int)steps_.size() - 1; }
  Proof take() { return Proof{std::move(steps_)}; }

  // ── Derived combinators (propositional basis only) ────────────────────

  /// From X->Y at i and Y->Z at j, proves X->Z via G1.
  int compose(int i, int j) {
    // Copies, not references: pushing steps reallocates the vector.
    Formula xy = formula(i);
    Formula yz = formula(j);
    Substitution s;
    s.map = {{"phi", xy.left()}, {"psi", xy.right()}, {"chi", yz.right()}};
    int g1 = axiom(SchemeId::G1, std::move(s));
    int t = mp(i, g1);
    return mp(j, t);
  }

  /// (phi -> (psi -> chi)) -> ((phi & psi) -> chi) when forward, the
  /// converse otherwise; both are halves of the G4 biconditional.
  int curry_half(Formula phi, Formula psi, Formula chi, bool forward) {
    Formula a = Formula::implies(phi, Formula::implies(psi, chi));
    Formula b = Formula::implies(Formula::and_(phi, psi), chi);
    Substitution s4;
    s4.map = {{"phi", phi}, {"psi", psi}, {"chi", chi}};
    int g4 = axiom(SchemeId::G4, std::move(s4));
    Formula ab = Formula::implies(a, b), ba = Formula::implies(b, a);
    if (forward) {
      Substitution s2;
      s2.map = {{"phi", ab}, {"psi", ba}};
      int g2 = axiom(SchemeId::G2, std::move(s2));
      return mp(g4, g2);
    }
    Substitution s3;
    s3.map = {{"phi", ab}, {"psi", ba}};
    int g3 = axiom(SchemeId::G3, std::move(s3));
    int swapped = mp(g4, g3);
    Substitution s2;
    s2.map = {{"phi", ba}, {"psi", ab}};
    int g2 = axiom(SchemeId::G2, std::move(s2));
    return mp(swapped, g2);
  }

  /// alpha -> alpha.
  int identity(Formula alpha) {
    Substitution s6;
    s6.map = {{"phi", alpha}};
    int g6 = axiom(SchemeId::G6, std::move(s6));  // alpha -> alpha & alpha
    Substitution s2;
    s2.map = {{"phi", alpha}, {"psi", alpha}};
    int g2 = axiom(SchemeId::G2, std::move(s2));  // alpha & alpha -> alpha
    return compose(g6, g2);
  }

  /// psi -> (alpha -> psi).
  int weakening(Formula psi, Formula alpha) {
    Substitution s2;
    s2.map = {{"phi", psi}, {"psi", alpha}};
    int proj = axiom(SchemeId::G2, std::move(s2));  // psi & alpha -> psi
    int half = curry_half(psi, alpha, psi, /*forward=*/false);
    return mp(proj, half);
  }

  /// (t1 -> (t2 -> t3)) -> (t2 -> (t1 -> t3)).
  int exchange(Formula t1, Formula t2, Formula t3) {
    int fwd = curry_half(t1, t2, t3, /*forward=*/true);
    Substitution s3;
    s3.map = {{"phi", t2}, {"psi", t1}};
    int comm = axiom(SchemeId::G3, std::move(s3));  // t2 & t1 -> t1 & t2
    Substitution s1;
    s1.map = {{"phi", Formula::and_(t2, t1)}, {"psi", Formula::and_(t1, t2)}, {"chi", t3}};
    int g1 = axiom(SchemeId::G1, std::move(s1));
    int swap = mp(comm, g1);  // ((t1 & t2) -> t3) -> ((t2 & t1) -> t3)
    int c = compose(fwd, swap);
    int back = curry_half(t2, t1, t3, /*forward=*/false);
    return compose(c, back);
  }

  /// From a theorem X->Y at index thm, proves (alpha->X) -> (alpha->Y).
  int prefix(int thm, Formula alpha) {
    Formula xy = formula(thm);
    Formula x = xy.left();
    Formula y = xy.right();
    Substitution s1;
    s1.map = {{"phi", alpha}, {"psi", x}, {"chi", y}};
    int g1 = axiom(SchemeId::G1, std::move(s1));  // (a->X) -> ((X->Y) -> (a->Y))
    int ex = exchange(Formula::implies(alpha, x), xy, Formula::implies(alpha, y));
    int t = mp(g1, ex);  // (X->Y) -> ((a->X) -> (a->Y))
    return mp(thm, t);
  }

  /// (alpha -> (alpha -> chi)) -> (alpha -> chi).
  int contraction(Formula alpha, Formula chi) {
    int fwd = curry_half(alpha, alpha, chi, /*forward=*/true);
    Substitution s6;
    s6.map = {{"phi", alpha}};
    int g6 = axiom(SchemeId::G6, std::move(s6));
    Substitution s1;
    s1.map = {{"phi", alpha}, {"psi", Formula::and_(alpha, alpha)}, {"chi", chi}};
    int g1 = axiom(SchemeId::G1, std::move(s1));
    int t = mp(g6, g1);  // ((a & a) -> chi) -> (a -> chi)
    return compose(fwd, t);
  }

  /// (alpha -> (psi -> chi)) -> ((alpha -> psi) -> (alpha -> chi)).
  int distribution(Formula alpha, Formula psi, Formula chi) {
    Formula a_psi = Formula::implies(alpha, psi);
    Formula a_chi = Formula::implies(alpha, chi);
    Formula psi_chi = Formula::implies(psi, chi);
    Substitution s1;
    s1.map = {{"phi", alpha}, {"psi", psi}, {"chi", chi}};
    int g1 = axiom(SchemeId::G1, std::move(s1));  // (a->psi) -> ((psi->chi) -> (a->chi))
    int ex = exchange(a_psi, psi_chi, a_chi);
    int u = mp(g1, ex);  // (psi->chi) -> ((a->psi) -> (a->chi))
    int pre = prefix(u, alpha);  // (a->(psi->chi)) -> (a->((a->psi)->(a->chi)))
    int ex2 = exchange(alpha, a_psi, a_chi);
    int con = contraction(alpha, chi);
    int pre2 = prefix(con, a_psi);  // ((a->psi)->(a->(a->chi))) -> ((a->psi)->(a->chi))
    int c1 = compose(pre, ex2);     // (a->(psi->chi)) -> ((a->psi)->(a->(a->chi)))
    return compose(c1, pre2);
  }

 private:
  std::vector<ProofStep> steps_;
};

}  // namespace

Proof prove_identity(const Formula& alpha) {
  Builder b;
  b.identity(alpha);
  return b.take();
}

Proof prove_weakening(const Formula& psi, const Formula& alpha) {
  Builder b;
  b.weakening(psi, alpha);
  return b.take();
}

Proof prove_distribution(const Formula& alpha, const Formula& psi, const Formula& chi) {
  Builder b;
  b.distribution(alpha, psi, chi);
  return b.take();
}

Proof deduction_transform(const ProofSystem& system, const std::vector<Formula>& assumptions,
                          const Formula& alpha, const Proof& proof) {
  std::vector<Formula> extended = assumptions;
  extended.push_back(alpha);
  CheckResult input = check_proof(system, extended, proof);
  if (!input.accepted) throw Error("deduction_transform: input proof rejected");

  const int alpha_index = (int)assumptions.size();
  Builder b;
  std::vector<int> alpha_imp(proof.steps.size(), -1);  // index of alpha -> f_i
  std::vector<int> verbatim(proof.steps.size(), -1);   // assumption-free replay

  for (size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& st = proof.steps[i];
    const Formula& f = st.formula;

    if (!input.steps[i].depends_on_assumptions) {
      // Replay the step verbatim (its references are assumption-free too),
      // then weaken to alpha -> f.
      if (const auto* ax = std::get_if<AxiomJust>(&st.just)) {
        Substitution subst = ax->subst;
        if (subst.map.empty()) subst = *match_scheme(ax->scheme, f).substitution;
        verbatim[i] = b.axiom(ax->scheme, std::move(subst));
      } else if (const auto* mp = std::get_if<MPJust>(&st.just)) {
        verbatim[i] = b.mp(verbatim[mp->antecedent], verbatim[mp->implication]);
      } else if (const auto* nec = std::get_if<NecJust>(&st.just)) {
        verbatim[i] = b.nec(verbatim[nec->premise]);
      } else if (const auto* mon = std::get_if<MonJust>(&st.just)) {
        verbatim[i] = b.mon(verbatim[mon->premise]);
      } else {
        throw Error("internal: assumption step marked independent");
      }
      int weak = b.weakening(f, alpha);
      alpha_imp[i] = b.mp(verbatim[i], weak);
      continue;
    }

    if (const auto* as = std::get_if<AssumeJust>(&st.just)) {
      if (as->index == alpha_index) {
        alpha_imp[i] = b.identity(alpha);
      } else {
        int kept = b.assume(as->index, f);
        int weak = b.weakening(f, alpha);
        alpha_imp[i] = b.mp(kept, weak);
      }
      continue;
    }
    if (const auto* mp = std::get_if<MPJust>(&st.just)) {
      const Formula& antecedent = proof.steps[mp->antecedent].formula;
      int dist = b.distribution(alpha, antecedent, f);
      int t = b.mp(alpha_imp[mp->implication], dist);
      alpha_imp[i] = b.mp(alpha_imp[mp->antecedent], t);
      continue;
    }
    throw Error("internal: dependent step with a theorem-only rule");
  }

  return b.take();
}

LiftedProof lift_box(const ProofSystem& system, const std::vector<Formula>& assumptions,
                     const Proof& proof) {
  if (!system.admits_nec()) throw Error("lift_box: system has no necessitation rule");
  CheckResult input = check_proof(system, assumptions, proof);
  if (!input.accepted) throw Error("lift_box: input proof rejected");

  // Discharge the assumptions right to left: |- mu_1 -> (... -> phi).
  Proof curried = proof;
  std::vector<Formula> remaining = assumptions;
  while (!remaining.empty()) {
    Formula alpha = remaining.back();
    remaining.pop_back();
    curried = deduction_transform(system, remaining, alpha, curried);
  }

  Builder b;
  int chain = b.splice(curried);
  int boxed = b.nec(chain);
  Formula inner = b.formula(chain);  // mu_1 -> (mu_2 -> ... -> phi)
  for (size_t i = 0; i < assumptions.size(); ++i) {
    Substitution s;
    s.map = {{"phi", inner.left()}, {"psi", inner.right()}};
    int k = b.axiom(SchemeId::KBox, std::move(s));
    int dist = b.mp(boxed, k);  // []mu_i -> [](rest)
    int asm_step = b.assume((int)i, Formula::box(assumptions[i]));
    boxed = b.mp(asm_step, dist);
    if (i + 1 < assumptions.size()) inner = inner.right();
  }

  LiftedProof out;
  for (const auto& mu : assumptions) out.assumptions.push_back(Formula::box(mu));
  out.proof = b.take();
  return out;
}

LiftedProof lift_diamond(const ProofSystem& system, const std::vector<Formula>& assumptions,
                         const Proof& proof) {
  if (!system.admits_mon()) throw Error("lift_diamond: system has no diamond rule");
  if (assumptions.size() != 1) throw Error("lift_diamond: exactly one assumption required");
  CheckResult input = check_proof(system, assumptions, proof);
  if (!input.accepted) throw Error("lift_diamond: input proof rejected");

  Proof curried = deduction_transform(system, {}, assumptions[0], proof);
  Builder b;
  int imp = b.splice(curried);       // phi -> psi
  int lifted = b.mon(imp);           // <>phi -> <>psi
  int asm_step = b.assume(0, Formula::diamond(assumptions[0]));
  b.mp(asm_step, lifted);            // <>psi
  LiftedProof out;
  out.assumptions = {Formula::diamond(assumptions[0])};
  out.proof = b.take();
  return out;
}

}  // namespace gkml
