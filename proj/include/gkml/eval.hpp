#ifndef GKML_EVAL_HPP
#define GKML_EVAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "gkml/formula.hpp"
#include "gkml/model.hpp"

namespace gkml {

// Evaluation over a finite model: conjunction is min, implication the
// residuum, bot is 0, top is 1, constants denote themselves, and
//   e(x, []f) = min over y of S(x,y) => e(y,f)
//   e(x, <>f) = max over y of S(x,y) .  e(y,f)
// Or and Not evaluate through max and the pseudo-complement.
//
// Preconditions: x is a world of m; when m declares a constants set Q,
// every constant of f must lie in Q.

TruthValue eval(const GKModel& m, const std::string& x, const Formula& f);

// ── EvalTrace ───────────────────────────────────────────────────────────────
// Full recomputation tree.  For modal nodes the children are the per-world
// subformula traces and `modal_rows` carries the matching (S(x,y), value)
// pairs, in world order.

struct EvalTrace {
  Formula formula;
  std::string world;
  TruthValue value;
  std::vector<EvalTrace> children;
  struct ModalRow {
    std::string world;
    TruthValue access;     // S(x,y)
    TruthValue sub_value;  // e(y, sub)
  };
  std::vector<ModalRow> modal_rows;  // nonempty exactly for Box/Diamond nodes
};

EvalTrace eval_trace(const GKModel& m, const std::string& x, const Formula& f);

// ── Validity and consequence ────────────────────────────────────────────────

struct ValidityResult {
  bool valid;
  // For invalid formulas: a world of minimal value, and that value.
  std::string witness_world;
  TruthValue witness_value;
};

/// True iff eval = 1 at every world of m.
ValidityResult valid_in_model(const GKModel& m, const Formula& f);

/// Def. 3 at one world: false exactly when every premise evaluates to 1 at
/// x while f evaluates below 1 (x is a counterexample to T |=GK f).
bool consequence_gk(const GKModel& m, const std::string& x, const std::vector<Formula>& premises,
                    const Formula& f);

/// Def. 4 at one world: min over premise values (1 for empty T) <= eval(f).
bool consequence_leq(const GKModel& m, const std::string& x, const std::vector<Formula>& premises,
                     const Formula& f);

}  // namespace gkml

#endif  // GKML_EVAL_HPP
