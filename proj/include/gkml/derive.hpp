#ifndef GKML_DERIVE_HPP
#define GKML_DERIVE_HPP

#include "gkml/proof.hpp"

namespace gkml {

// Derived-proof constructors.  Every function returns a proof object that
// check_proof accepts; axiom steps always carry explicit substitutions.

/// alpha -> alpha from the propositional basis (G6, G2, G1 and MP).
Proof prove_identity(const Formula& alpha);

/// psi -> (alpha -> psi) from G2 and a curried G4 half.
Proof prove_weakening(const Formula& psi, const Formula& alpha);

/// (alpha -> (psi -> chi)) -> ((alpha -> psi) -> (alpha -> chi)).
Proof prove_distribution(const Formula& alpha, const Formula& psi, const Formula& chi);

/// Deduction theorem, constructively: given a proof of phi from
/// assumptions + [alpha], builds a proof of alpha -> phi from assumptions
/// alone.  Throws if the input proof is not accepted.
Proof deduction_transform(const ProofSystem& system, const std::vector<Formula>& assumptions,
                          const Formula& alpha, const Proof& proof);

/// From mu_1,...,mu_k |- phi builds []mu_1,...,[]mu_k |- []phi by DT,
/// necessitation, KBox and MP.  Returns the new proof and its assumption
/// list.  Requires a system with the necessitation rule.
struct LiftedProof {
  std::vector<Formula> assumptions;
  Proof proof;
};
LiftedProof lift_box(const ProofSystem& system, const std::vector<Formula>& assumptions,
                     const Proof& proof);

/// From phi |- psi builds <>phi |- <>psi (DT, then the monotonicity rule,
/// then MP with the new assumption).  The input must have exactly one
/// assumption and the system must admit the rule.
LiftedProof lift_diamond(const ProofSystem& system, const std::vector<Formula>& assumptions,
                         const Proof& proof);

}  // namespace gkml

#endif  // GKML_DERIVE_HPP
