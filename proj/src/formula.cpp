#include "gkml/formula.hpp"

#include <algorithm>
#include <set>

namespace gkml {

Formula Formula::atom(std::string name) {
  if (name.empty()) throw Error("atom name must be nonempty");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::bottom() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bottom;
  return Formula(std::move(n));
}

Formula Formula::top() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Top;
  return Formula(std::move(n));
}

Formula Formula::constant(TruthValue v) {
  if (v.is_zero()) return bottom();
  if (v.is_one()) return top();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = std::move(v);
  return Formula(std::move(n));
}

Formula Formula::and_(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->left = std::move(l);
  n->right = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::or_(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->left = std::move(l);
  n->right = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::implies(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Implies;
  n->left = std::move(l);
  n->right = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::iff(Formula l, Formula r) {
  return and_(implies(l, r), implies(r, l));
}

Formula Formula::not_(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->left = std::move(f);
  return Formula(std::move(n));
}

Formula Formula::box(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Box;
  n->left = std::move(f);
  return Formula(std::move(n));
}

Formula Formula::diamond(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Diamond;
  n->left = std::move(f);
  return Formula(std::move(n));
}

bool Formula::is_binary() const {
  switch (kind()) {
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      return true;
    default:
      return false;
  }
}

bool Formula::is_unary() const {
  switch (kind()) {
    case Kind::Not:
    case Kind::Box:
    case Kind::Diamond:
      return true;
    default:
      return false;
  }
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (!a.node_) return -1;
  if (!b.node_) return 1;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Kind::Atom:
      return a.name().compare(b.name());
    case Kind::Bottom:
    case Kind::Top:
      return 0;
    case Kind::Const:
      if (a.value() == b.value()) return 0;
      return a.value() < b.value() ? -1 : 1;
    case Kind::Not:
    case Kind::Box:
    case Kind::Diamond:
      return compare(a.sub(), b.sub());
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: {
      int c = compare(a.left(), b.left());
      return c != 0 ? c : compare(a.right(), b.right());
    }
  }
  return 0;
}

std::string to_string(Fragment f) {
  switch (f) {
    case Fragment::Propositional: return "propositional";
    case Fragment::BoxOnly: return "box-only";
    case Fragment::DiamondOnly: return "diamond-only";
    case Fragment::Bimodal: return "bimodal";
  }
  return "?";
}

namespace {

void scan_modalities(const Formula& f, bool& has_box, bool& has_dia) {
  switch (f.kind()) {
    case Kind::Box:
      has_box = true;
      scan_modalities(f.sub(), has_box, has_dia);
      return;
    case Kind::Diamond:
      has_dia = true;
      scan_modalities(f.sub(), has_box, has_dia);
      return;
    case Kind::Not:
      scan_modalities(f.sub(), has_box, has_dia);
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      scan_modalities(f.left(), has_box, has_dia);
      scan_modalities(f.right(), has_box, has_dia);
      return;
    default:
      return;
  }
}

}  // namespace

Fragment fragment_of(const Formula& f) {
  bool has_box = false, has_dia = false;
  scan_modalities(f, has_box, has_dia);
  if (has_box && has_dia) return Fragment::Bimodal;
  if (has_box) return Fragment::BoxOnly;
  if (has_dia) return Fragment::DiamondOnly;
  return Fragment::Propositional;
}

Formula expand_derived(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bottom:
    case Kind::Const:
      return f;
    case Kind::Top:
      return Formula::implies(Formula::bottom(), Formula::bottom());
    case Kind::Not:
      return Formula::implies(expand_derived(f.sub()), Formula::bottom());
    case Kind::Or: {
      Formula a = expand_derived(f.left()), b = expand_derived(f.right());
      return Formula::and_(Formula::implies(Formula::implies(a, b), b),
                           Formula::implies(Formula::implies(b, a), a));
    }
    case Kind::And:
      return Formula::and_(expand_derived(f.left()), expand_derived(f.right()));
    case Kind::Implies:
      return Formula::implies(expand_derived(f.left()), expand_derived(f.right()));
    case Kind::Box:
      return Formula::box(expand_derived(f.sub()));
    case Kind::Diamond:
      return Formula::diamond(expand_derived(f.sub()));
  }
  return f;
}

int nesting_degree(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Bottom:
    case Kind::Top:
    case Kind::Const:
      return 0;
    case Kind::Not:
      return nesting_degree(f.sub());
    case Kind::Box:
    case Kind::Diamond:
      return 1 + nesting_degree(f.sub());
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      return std::max(nesting_degree(f.left()), nesting_degree(f.right()));
  }
  return 0;
}

namespace {

void collect_subformulas(const Formula& f, std::set<Formula>& out) {
  out.insert(f);
  switch (f.kind()) {
    case Kind::Not:
    case Kind::Box:
    case Kind::Diamond:
      collect_subformulas(f.sub(), out);
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      collect_subformulas(f.left(), out);
      collect_subformulas(f.right(), out);
      return;
    default:
      return;
  }
}

}  // namespace

std::vector<Formula> subformulas_by_rank(const Formula& f, int j) {
  std::set<Formula> all;
  collect_subformulas(expand_derived(f), all);
  std::vector<Formula> out;
  for (const auto& g : all)
    if (nesting_degree(g) <= j) out.push_back(g);
  return out;
}

std::vector<std::string> atoms_of(const Formula& f) {
  std::set<std::string> names;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (g.kind() == Kind::Atom) names.insert(g.name());
    else if (g.is_unary()) stack.push_back(g.sub());
    else if (g.is_binary()) {
      stack.push_back(g.left());
      stack.push_back(g.right());
    }
  }
  return {names.begin(), names.end()};
}

std::vector<TruthValue> constants_of(const Formula& f) {
  std::set<TruthValue> vals;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (g.kind() == Kind::Const) vals.insert(g.value());
    else if (g.is_unary()) stack.push_back(g.sub());
    else if (g.is_binary()) {
      stack.push_back(g.left());
      stack.push_back(g.right());
    }
  }
  return {vals.begin(), vals.end()};
}

}  // namespace gkml
