#ifndef GKML_GENERATORS_HPP
#define GKML_GENERATORS_HPP

#include <cstdint>
#include <random>

#include "gkml/eval.hpp"
#include "gkml/proof.hpp"

namespace gkml {

// Deterministic generation for fuzz suites.  Each trial derives its own
// engine from (seed, trial), so results do not depend on scheduling.

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

struct FormulaGenOptions {
  int max_depth = 4;
  std::vector<std::string> atoms = {"p", "q"};
  bool allow_box = true;
  bool allow_diamond = true;
  std::vector<TruthValue> constants;  // candidate Const values (may be empty)
};

Formula random_formula(std::mt19937_64& rng, const FormulaGenOptions& opts);

struct FrameClass {
  bool crisp = false;
  bool reflexive = false;
  bool transitive = false;
  bool symmetric = false;
};

struct ModelGenOptions {
  int max_worlds = 4;
  int max_denominator = 6;  // per-model grid 1/d with d in [1, max]
  std::vector<std::string> atoms = {"p", "q"};
  FrameClass frame;
  std::optional<std::set<TruthValue>> constants;
};

/// Random model; frame properties are enforced by repair (crisp rounding,
/// symmetrizing, unit diagonal, min-transitive closure, in that order —
/// each step preserves the earlier ones).
GKModel random_model(std::mt19937_64& rng, const ModelGenOptions& opts);

// ── Soundness fuzzing ───────────────────────────────────────────────────────

struct FuzzReport {
  int trials = 0;
  int violations = 0;
  std::string first_violation;  // human-readable description
};

/// Checks min over assumption values <= conclusion value on random models
/// of the frame class matching the system's extensions (reflexive for T,
/// min-transitive for 4, symmetric for B), at every world.  The proof must
/// be accepted; a violation would witness a checker bug.
FuzzReport soundness_fuzz(const ProofSystem& system, const std::vector<Formula>& assumptions,
                          const Proof& proof, int trials, std::uint64_t seed = 1);

}  // namespace gkml

#endif  // GKML_GENERATORS_HPP
