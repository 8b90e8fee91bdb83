#ifndef GKML_FORMULA_HPP
#define GKML_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

#include "gkml/truth_value.hpp"

namespace gkml {

// ── Formula ─────────────────────────────────────────────────────────────────
// Immutable tree over atoms, bot, top, truth constants, &, |, ~, ->, [] and
// <>.  Or, Not and Top are kept as first-class nodes: the axiom schemes are
// stated with them and scheme matching is structural.  "<->" is concrete
// syntax only; the parser expands it to the defining conjunction.  Constant
// nodes never carry 0 or 1 (those are bot and top).

enum class Kind : unsigned char {
  Atom,
  Bottom,
  Top,
  Const,
  And,
  Or,
  Implies,
  Not,
  Box,
  Diamond,
};

class Formula {
 public:
  Formula() = default;  // empty handle; only comparison and bool test are valid

  static Formula atom(std::string name);
  static Formula bottom();
  static Formula top();
  /// Const(0) and Const(1) normalize to bottom() / top().
  static Formula constant(TruthValue v);
  static Formula and_(Formula l, Formula r);
  static Formula or_(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  /// (l -> r) & (r -> l)
  static Formula iff(Formula l, Formula r);
  static Formula not_(Formula f);
  static Formula box(Formula f);
  static Formula diamond(Formula f);

  Kind kind() const;
  const std::string& name() const;   // Atom
  const TruthValue& value() const;   // Const
  const Formula& left() const;       // binary
  const Formula& right() const;      // binary
  const Formula& sub() const;        // unary

  bool is_binary() const;
  bool is_unary() const;

  explicit operator bool() const { return node_ != nullptr; }

  /// Stable identity of the underlying node (for evaluation memo tables);
  /// distinct occurrences of equal subtrees may have distinct identities.
  const void* node_id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Formula& a, const Formula& b) { return compare(a, b) != 0; }
  friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

  /// Total structural order (kind, then payload, then children).
  static int compare(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  std::string name;
  TruthValue value;
  Formula left, right;
};

inline Kind Formula::kind() const { return node_->kind; }
inline const std::string& Formula::name() const { return node_->name; }
inline const TruthValue& Formula::value() const { return node_->value; }
inline const Formula& Formula::left() const { return node_->left; }
inline const Formula& Formula::right() const { return node_->right; }
inline const Formula& Formula::sub() const { return node_->left; }

enum class Fragment { Propositional, BoxOnly, DiamondOnly, Bimodal };

std::string to_string(Fragment f);

/// Classifies by which modal operators occur in the tree.
Fragment fragment_of(const Formula& f);

/// Rewrites |, ~, top into the defining connectives; the result uses only
/// Atom, Bottom, Const, And, Implies, Box, Diamond.  Idempotent and
/// evaluation-preserving.
Formula expand_derived(const Formula& f);

/// Length of a longest chain of modal operators ([] and <>) in the tree.
int nesting_degree(const Formula& f);

/// Subformulas of the sugar-free form of f with nesting degree <= j,
/// deduplicated and in structural order.
std::vector<Formula> subformulas_by_rank(const Formula& f, int j);

/// All atom names occurring in f, sorted and deduplicated.
std::vector<std::string> atoms_of(const Formula& f);

/// All constant values occurring in f (bot / top excluded), sorted.
std::vector<TruthValue> constants_of(const Formula& f);

}  // namespace gkml

#endif  // GKML_FORMULA_HPP
