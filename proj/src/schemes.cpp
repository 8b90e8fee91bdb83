#include "gkml/schemes.hpp"

#include <array>

namespace gkml {

namespace {

struct SchemeDef {
  SchemeId id;
  const char* name;
  Formula tmpl;
  std::vector<std::string> metavars;
  std::vector<std::string> const_metavars;
};

Formula mv(const char* name) { return Formula::atom(name); }

std::vector<SchemeDef> make_catalog() {
  Formula phi = mv("phi"), psi = mv("psi"), chi = mv("chi"), theta = mv("theta");
  Formula r = mv("r"), s = mv("s");
  auto I = [](Formula a, Formula b) { return Formula::implies(std::move(a), std::move(b)); };
  auto A = [](Formula a, Formula b) { return Formula::and_(std::move(a), std::move(b)); };
  auto N = [](Formula a) { return Formula::not_(std::move(a)); };
  auto B = [](Formula a) { return Formula::box(std::move(a)); };
  auto D = [](Formula a) { return Formula::diamond(std::move(a)); };

  std::vector<SchemeDef> defs;
  auto add = [&](SchemeId id, const char* name, Formula tmpl, std::vector<std::string> mvs,
                 std::vector<std::string> cmvs = {}) {
    defs.push_back({id, name, std::move(tmpl), std::move(mvs), std::move(cmvs)});
  };

  // Hajek's axioms for Goedel logic, in the listed order.
  add(SchemeId::G1, "G1", I(I(phi, psi), I(I(psi, chi), I(phi, chi))), {"phi", "psi", "chi"});
  add(SchemeId::G2, "G2", I(A(phi, psi), phi), {"phi", "psi"});
  add(SchemeId::G3, "G3", I(A(phi, psi), A(psi, phi)), {"phi", "psi"});
  add(SchemeId::G4, "G4", Formula::iff(I(phi, I(psi, chi)), I(A(phi, psi), chi)),
      {"phi", "psi", "chi"});
  add(SchemeId::G5, "G5", Formula::iff(I(A(phi, psi), chi), I(phi, I(psi, chi))),
      {"phi", "psi", "chi"});
  add(SchemeId::G6, "G6", I(phi, A(phi, phi)), {"phi"});
  add(SchemeId::G7, "G7", I(I(I(phi, psi), chi), I(I(I(psi, phi), chi), chi)),
      {"phi", "psi", "chi"});
  add(SchemeId::G8, "G8", I(Formula::bottom(), phi), {"phi"});

  // Box fragment.
  add(SchemeId::KBox, "KBox", I(B(I(phi, psi)), I(B(phi), B(psi))), {"phi", "psi"});
  add(SchemeId::ZBox, "ZBox", I(N(N(B(theta))), B(N(N(theta)))), {"theta"});

  // Diamond fragment.
  add(SchemeId::DDia, "DDia", I(D(Formula::or_(phi, psi)), Formula::or_(D(phi), D(psi))),
      {"phi", "psi"});
  add(SchemeId::ZDia, "ZDia", I(D(N(N(phi))), N(N(D(phi)))), {"phi"});
  add(SchemeId::FDia, "FDia", N(D(Formula::bottom())), {});

  // T / 4 / B extensions.
  add(SchemeId::TBox, "TBox", I(B(phi), phi), {"phi"});
  add(SchemeId::TDia, "TDia", I(phi, D(phi)), {"phi"});
  add(SchemeId::FourBox, "FourBox", I(B(phi), B(B(phi))), {"phi"});
  add(SchemeId::FourDia, "FourDia", I(D(D(phi)), D(phi)), {"phi"});
  add(SchemeId::BBox, "BBox", I(phi, B(N(B(N(phi))))), {"phi"});
  add(SchemeId::BDia, "BDia", I(phi, N(D(N(D(phi))))), {"phi"});

  // Truth-constant book-keeping.
  add(SchemeId::R1a, "R1a", I(r, s), {}, {"r", "s"});
  add(SchemeId::R1b, "R1b", I(I(r, s), s), {}, {"r", "s"});
  add(SchemeId::R2, "R2", I(r, B(r)), {}, {"r"});
  add(SchemeId::R3, "R3", I(I(r, B(theta)), B(I(r, theta))), {"theta"}, {"r"});
  add(SchemeId::R4, "R4", I(I(I(B(theta), r), r), B(I(I(theta, r), r))), {"theta"}, {"r"});
  add(SchemeId::R5, "R5", I(D(r), r), {}, {"r"});
  add(SchemeId::R6, "R6", I(D(I(r, phi)), I(r, D(phi))), {"phi"}, {"r"});
  add(SchemeId::R7, "R7", I(D(I(I(phi, r), r)), I(I(D(phi), r), r)), {"phi"}, {"r"});

  // Fischer Servi connecting schemes.
  add(SchemeId::FS1, "FS1", I(D(I(phi, psi)), I(B(phi), D(psi))), {"phi", "psi"});
  add(SchemeId::FS2, "FS2", I(I(D(phi), B(psi)), B(I(phi, psi))), {"phi", "psi"});

  return defs;
}

const std::vector<SchemeDef>& catalog() {
  static const std::vector<SchemeDef> defs = make_catalog();
  return defs;
}

const SchemeDef& def_of(SchemeId id) {
  for (const auto& d : catalog())
    if (d.id == id) return d;
  throw Error("unknown scheme id");
}

bool is_const_metavar(const std::string& name) { return name == "r" || name == "s"; }

std::optional<TruthValue> constant_value_of(const Formula& f) {
  switch (f.kind()) {
    case Kind::Bottom: return TruthValue::zero();
    case Kind::Top: return TruthValue::one();
    case Kind::Const: return f.value();
    default: return std::nullopt;
  }
}

bool match_rec(const Formula& tmpl, const Formula& f, Substitution& subst, std::string path,
               MatchFailure& fail) {
  if (tmpl.kind() == Kind::Atom) {
    const std::string& name = tmpl.name();
    if (is_const_metavar(name) && !constant_value_of(f)) {
      fail = {path.empty() ? "root" : path, "expected a truth constant"};
      return false;
    }
    auto [it, inserted] = subst.map.emplace(name, f);
    if (!inserted && it->second != f) {
      fail = {path.empty() ? "root" : path,
              "metavariable " + name + " already bound to a different formula"};
      return false;
    }
    return true;
  }
  if (tmpl.kind() != f.kind()) {
    fail = {path.empty() ? "root" : path, "node kind mismatch"};
    return false;
  }
  std::string prefix = path.empty() ? "" : path + ".";
  switch (tmpl.kind()) {
    case Kind::Bottom:
    case Kind::Top:
      return true;
    case Kind::Const:
      if (tmpl.value() != f.value()) {
        fail = {path.empty() ? "root" : path, "constant mismatch"};
        return false;
      }
      return true;
    case Kind::Not:
    case Kind::Box:
    case Kind::Diamond:
      return match_rec(tmpl.sub(), f.sub(), subst, prefix + "sub", fail);
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      return match_rec(tmpl.left(), f.left(), subst, prefix + "left", fail) &&
             match_rec(tmpl.right(), f.right(), subst, prefix + "right", fail);
    case Kind::Atom:
      break;
  }
  return false;
}

// Constant metavariables must be bound to truth constants; R1a requires
// r <= s and R1b requires s < r.
bool side_condition_ok(SchemeId id, const Substitution& subst, std::string& why) {
  std::map<std::string, TruthValue> bound;
  for (const auto& cmv : def_of(id).const_metavars) {
    auto it = subst.map.find(cmv);
    if (it == subst.map.end()) {
      why = "substitution missing constant metavariable " + cmv;
      return false;
    }
    auto v = constant_value_of(it->second);
    if (!v) {
      why = "metavariable " + cmv + " of " + def_of(id).name + " must be a truth constant";
      return false;
    }
    bound.emplace(cmv, *v);
  }
  if (id != SchemeId::R1a && id != SchemeId::R1b) return true;
  const TruthValue& r = bound.at("r");
  const TruthValue& s = bound.at("s");
  if (id == SchemeId::R1a && !(r <= s)) {
    why = "R1a requires r <= s, got r = " + r.str() + ", s = " + s.str();
    return false;
  }
  if (id == SchemeId::R1b && !(s < r)) {
    why = "R1b requires s < r, got r = " + r.str() + ", s = " + s.str();
    return false;
  }
  return true;
}

Formula substitute(const Formula& tmpl, const Substitution& subst) {
  switch (tmpl.kind()) {
    case Kind::Atom: {
      auto it = subst.map.find(tmpl.name());
      if (it == subst.map.end())
        throw Error("substitution missing metavariable " + tmpl.name());
      return it->second;
    }
    case Kind::Bottom:
    case Kind::Top:
    case Kind::Const:
      return tmpl;
    case Kind::Not:
      return Formula::not_(substitute(tmpl.sub(), subst));
    case Kind::Box:
      return Formula::box(substitute(tmpl.sub(), subst));
    case Kind::Diamond:
      return Formula::diamond(substitute(tmpl.sub(), subst));
    case Kind::And:
      return Formula::and_(substitute(tmpl.left(), subst), substitute(tmpl.right(), subst));
    case Kind::Or:
      return Formula::or_(substitute(tmpl.left(), subst), substitute(tmpl.right(), subst));
    case Kind::Implies:
      return Formula::implies(substitute(tmpl.left(), subst), substitute(tmpl.right(), subst));
  }
  throw Error("bad template node");
}

}  // namespace

const std::vector<SchemeId>& all_schemes() {
  static const std::vector<SchemeId> ids = [] {
    std::vector<SchemeId> v;
    for (const auto& d : catalog()) v.push_back(d.id);
    return v;
  }();
  return ids;
}

std::string scheme_name(SchemeId id) { return def_of(id).name; }

std::optional<SchemeId> scheme_by_name(const std::string& name) {
  for (const auto& d : catalog())
    if (name == d.name) return d.id;
  return std::nullopt;
}

const Formula& scheme_template(SchemeId id) { return def_of(id).tmpl; }

const std::vector<std::string>& scheme_metavars(SchemeId id) { return def_of(id).metavars; }

const std::vector<std::string>& scheme_const_metavars(SchemeId id) {
  return def_of(id).const_metavars;
}

MatchResult match_template(const Formula& tmpl, const Formula& f) {
  MatchResult res;
  Substitution subst;
  MatchFailure fail;
  if (!match_rec(tmpl, f, subst, "", fail)) {
    res.failure = fail;
    return res;
  }
  res.substitution = std::move(subst);
  return res;
}

Formula substitute_template(const Formula& tmpl, const Substitution& subst) {
  return substitute(tmpl, subst);
}

bool scheme_side_conditions(SchemeId id, const Substitution& subst, std::string& why) {
  return side_condition_ok(id, subst, why);
}

MatchResult match_scheme(SchemeId id, const Formula& f) {
  MatchResult res = match_template(scheme_template(id), f);
  if (!res.ok()) return res;
  std::string why;
  if (!side_condition_ok(id, *res.substitution, why)) {
    res.substitution.reset();
    res.failure = {"root", why};
  }
  return res;
}

Formula instantiate_scheme(SchemeId id, const Substitution& subst) {
  std::string why;
  if (!side_condition_ok(id, subst, why)) throw Error(why);
  return substitute(def_of(id).tmpl, subst);
}

std::vector<TruthValue> scheme_constant_values(SchemeId id, const Substitution& subst) {
  std::vector<TruthValue> out;
  for (const auto& cmv : scheme_const_metavars(id)) {
    auto it = subst.map.find(cmv);
    if (it != subst.map.end())
      if (auto v = constant_value_of(it->second)) out.push_back(*v);
  }
  return out;
}

}  // namespace gkml
