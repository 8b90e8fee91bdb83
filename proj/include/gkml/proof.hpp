#ifndef GKML_PROOF_HPP
#define GKML_PROOF_HPP

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "gkml/schemes.hpp"

namespace gkml {

// ── ProofSystem ─────────────────────────────────────────────────────────────
// G is the propositional Goedel calculus (G1..G8, MP).  GBox adds KBox,
// ZBox and the necessitation rule; GDia adds DDia, ZDia, FDia and the
// monotonicity rule; GBoxDia is the union plus FS1/FS2.  Extensions T, 4
// and B admit the matching axiom of each modal operator present.  An
// optional constants set Q admits the book-keeping schemes (R1a/R1b plus
// R2..R4 for box bases, R5..R7 for diamond bases) and truth constants
// drawn from Q.

enum class SystemBase { G, GBox, GDia, GBoxDia };

struct ProofSystem {
  SystemBase base = SystemBase::G;
  bool ext_t = false;
  bool ext_4 = false;
  bool ext_b = false;
  std::optional<std::set<TruthValue>> constants;

  bool admits_scheme(SchemeId id) const;
  bool admits_nec() const { return base == SystemBase::GBox || base == SystemBase::GBoxDia; }
  bool admits_mon() const { return base == SystemBase::GDia || base == SystemBase::GBoxDia; }
  /// True when f stays inside the system's language fragment.
  bool admits_formula(const Formula& f, std::string* why = nullptr) const;

  /// "GBox+T+4", "GDia", "G", ... and back.
  static ProofSystem parse(const std::string& text);
  std::string str() const;
};

// ── Proof ───────────────────────────────────────────────────────────────────
// A Hilbert-style proof: a list of steps, each carrying its formula and a
// justification.  References are 0-based indices of earlier steps.

struct AxiomJust {
  SchemeId scheme;
  Substitution subst;  // empty map means: infer by matching
};
struct AssumeJust {
  int index;  // into the declared assumption list
};
struct MPJust {
  int antecedent;   // step proving phi
  int implication;  // step proving phi -> conclusion
};
struct NecJust {
  int premise;  // theorem step; conclusion is [] premise
};
struct MonJust {
  int premise;  // theorem step phi -> psi; conclusion is <>phi -> <>psi
};

using Justification = std::variant<AxiomJust, AssumeJust, MPJust, NecJust, MonJust>;

struct ProofStep {
  Formula formula;
  Justification just;
};

struct Proof {
  std::vector<ProofStep> steps;
};

// ── Checking ────────────────────────────────────────────────────────────────

struct StepDiagnostic {
  bool ok = true;
  bool depends_on_assumptions = false;
  std::string message;  // set when !ok
};

struct CheckResult {
  bool accepted = false;
  std::vector<StepDiagnostic> steps;
  Formula final_formula;               // last step, when the proof is nonempty
  bool final_depends_on_assumptions = false;

  /// Indices (0-based) of rejected steps.
  std::vector<int> rejected_steps() const;
};

struct CheckOptions {
  /// Match against sugar-expanded scheme templates instead of the sugared
  /// ones (for proofs written with |, ~, top spelled out).
  bool expand_templates = false;
};

/// Validates every step; rejection is a verdict, not an error.
CheckResult check_proof(const ProofSystem& system, const std::vector<Formula>& assumptions,
                        const Proof& proof, const CheckOptions& options = {});

// ── Proof files ─────────────────────────────────────────────────────────────
// Line-oriented UTF-8.  '#' starts a comment.  Header lines:
//   system: GBox+T
//   constants: 1/4 1/2          (optional; enables the R-schemes)
//   assume: <formula>           (repeatable)
// Step lines:  <index>. <formula> ; <just>
// with 1-based indices and just one of
//   ax <SchemeId> [<metavar>=<formula>, ...]     (substitution optional)
//   asm <k>                                      (1-based assumption index)
//   mp <i> <j>       nec <i>       mon <i>

struct ProofFile {
  ProofSystem system;
  std::vector<Formula> assumptions;
  Proof proof;
};

ProofFile parse_proof_file(const std::string& text);
ProofFile load_proof_file(const std::string& path);
std::string format_proof_file(const ProofFile& pf);

}  // namespace gkml

#endif  // GKML_PROOF_HPP
