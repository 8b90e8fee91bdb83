#ifndef GKML_SEARCH_HPP
#define GKML_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "gkml/eval.hpp"

namespace gkml {

// ── Configuration ───────────────────────────────────────────────────────────

struct SearchConfig {
  int max_worlds = 2;
  /// Grid denominator for the S/e slots; unset means automatic: one more
  /// than the number of value slots of the size being enumerated, which
  /// realizes every order type of slot values within the grid.
  std::optional<int> grid_denominator;
  /// Fragment handled by the search; unset derives it from the formula.
  /// Only the diamond fragment (which includes propositional formulas)
  /// can yield a completeness verdict.
  std::optional<Fragment> fragment_mode;
  double time_budget_seconds = 0;  // 0 = unlimited
  std::uint64_t seed = 0;          // reserved; enumeration order is canonical
  int jobs = 1;
};

enum class SearchStatus {
  CountermodelFound,
  ExhaustedComplete,  // searched a provably sufficient space: the formula is valid
  ExhaustedBounded,   // bound hit, no verdict
  BudgetExceeded,
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedBounded;
  std::optional<GKModel> countermodel;
  std::string witness_world;
  TruthValue witness_value;
  /// Canonical enumeration positions scanned (identical for any jobs
  /// count): the hit position + 1, or the full space size on exhaustion.
  unsigned long long positions_scanned = 0;
};

// ── Operations ──────────────────────────────────────────────────────────────

/// World bound from the finite-model-property construction for the
/// diamond fragment: with n the nesting degree and c_j the number of
/// distinct <>-subformulas of rank <= j, returns b_n where b_0 = 1 and
/// b_{i+1} = b_i * (1 + c_{n-i}).  Propositional formulas get bound 1;
/// formulas containing [] are an error.
int fmp_world_bound(const Formula& f);

/// Enumerates models with 1..max_worlds worlds and S/e values drawn from
/// the grid (plus the formula's constants), in deterministic order: world
/// counts ascending, then lexicographic slot assignment.  The formula is
/// evaluated at the first world; renaming symmetry makes that complete.
/// Every reported countermodel is re-checked by the exact evaluator.
SearchOutcome find_countermodel(const Formula& f, const SearchConfig& cfg);

/// Same enumeration evaluated with the exact rational evaluator, single
/// threaded.  Kept as the reference implementation; must agree with
/// find_countermodel on every input.
SearchOutcome find_countermodel_reference(const Formula& f, const SearchConfig& cfg);

struct ExhaustiveResult {
  bool valid = false;
  unsigned long long models = 0;
  TruthValue min_value;
  std::string min_world;
};

/// Brute-force validity oracle: enumerates every model with 1..max_worlds
/// worlds over the given grid and evaluates f at every world with the
/// exact evaluator.  No pruning, no masking.  Errors when the search space
/// exceeds eval_cap evaluations.
ExhaustiveResult exhaustive_validity(const Formula& f, int max_worlds, int grid_denominator,
                                     unsigned long long eval_cap = 100000000ULL);

/// Rank-remaps a model's values into the automatic grid (order-preserving,
/// endpoint-fixing).  Evaluation verdicts (value = 1 versus < 1) are
/// preserved at every world.  Models with declared constants are not
/// canonicalizable this way and are rejected.
struct CanonicalizedModel {
  GKModel model;
  OrderMap map;
};
CanonicalizedModel canonicalize_model(const GKModel& m);

}  // namespace gkml

#endif  // GKML_SEARCH_HPP
