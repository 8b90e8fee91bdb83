#ifndef GKML_SCHEMES_HPP
#define GKML_SCHEMES_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gkml/formula.hpp"

namespace gkml {

// ── Scheme catalog ──────────────────────────────────────────────────────────
// The axiom schemes of the Goedel propositional calculus (G1..G8), the
// box and diamond modal systems, the T/4/B extensions, the truth-constant
// book-keeping schemes R1..R7 and the bimodal connecting schemes FS1/FS2.
// Formula metavariables range over {phi, psi, chi, theta}; the R-schemes
// additionally use constant metavariables r, s with ordering side
// conditions.

enum class SchemeId {
  G1, G2, G3, G4, G5, G6, G7, G8,
  KBox, ZBox,
  DDia, ZDia, FDia,
  TBox, TDia, FourBox, FourDia, BBox, BDia,
  R1a, R1b, R2, R3, R4, R5, R6, R7,
  FS1, FS2,
};

const std::vector<SchemeId>& all_schemes();
std::string scheme_name(SchemeId id);
std::optional<SchemeId> scheme_by_name(const std::string& name);

/// The template formula, with metavariables represented as atoms named
/// "phi", "psi", "chi", "theta" and constant metavariables as atoms named
/// "r", "s".
const Formula& scheme_template(SchemeId id);

/// Formula metavariables of the scheme, in template order.
const std::vector<std::string>& scheme_metavars(SchemeId id);
/// Constant metavariables ("r", "s") of the scheme, if any.
const std::vector<std::string>& scheme_const_metavars(SchemeId id);

struct Substitution {
  std::map<std::string, Formula> map;  // metavariable -> formula

  bool operator==(const Substitution& o) const { return map == o.map; }
};

struct MatchFailure {
  std::string position;  // path from the root, e.g. "left.right"
  std::string reason;
};

struct MatchResult {
  std::optional<Substitution> substitution;  // set on success
  MatchFailure failure;                      // set on failure
  bool ok() const { return substitution.has_value(); }
};

/// Deterministic structural matching of f against the scheme template.
/// Sugar nodes (|, ~, top) in templates match the same nodes in f, never
/// their expansions.  Constant metavariables match bot, top or constant
/// nodes; the R1 side conditions (r <= s, s < r) are enforced.
MatchResult match_scheme(SchemeId id, const Formula& f);

/// Raw structural matching of f against an arbitrary template whose atoms
/// are metavariables ("r"/"s" constant-valued).  No side conditions.
MatchResult match_template(const Formula& tmpl, const Formula& f);

/// Raw substitution into an arbitrary template.
Formula substitute_template(const Formula& tmpl, const Substitution& subst);

/// The R1 ordering side conditions; true for every other scheme.
bool scheme_side_conditions(SchemeId id, const Substitution& subst, std::string& why);

/// Replaces metavariables by their images.  Throws if a metavariable of
/// the template is missing from the substitution, if a constant
/// metavariable is bound to a non-constant formula, or if a side condition
/// fails.
Formula instantiate_scheme(SchemeId id, const Substitution& subst);

/// Values bound to constant metavariables (for Q-membership checks).
std::vector<TruthValue> scheme_constant_values(SchemeId id, const Substitution& subst);

}  // namespace gkml

#endif  // GKML_SCHEMES_HPP
