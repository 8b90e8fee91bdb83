#include "gkml/proof.hpp"

#include <fstream>
#include <sstream>

#include "gkml/parser.hpp"

namespace gkml {

bool ProofSystem::admits_scheme(SchemeId id) const {
  const bool has_box = base == SystemBase::GBox || base == SystemBase::GBoxDia;
  const bool has_dia = base == SystemBase::GDia || base == SystemBase::GBoxDia;
  switch (id) {
    case SchemeId::G1: case SchemeId::G2: case SchemeId::G3: case SchemeId::G4:
    case SchemeId::G5: case SchemeId::G6: case SchemeId::G7: case SchemeId::G8:
      return true;
    case SchemeId::KBox: case SchemeId::ZBox:
      return has_box;
    case SchemeId::DDia: case SchemeId::ZDia: case SchemeId::FDia:
      return has_dia;
    case SchemeId::FS1: case SchemeId::FS2:
      return base == SystemBase::GBoxDia;
    case SchemeId::TBox: return ext_t && has_box;
    case SchemeId::TDia: return ext_t && has_dia;
    case SchemeId::FourBox: return ext_4 && has_box;
    case SchemeId::FourDia: return ext_4 && has_dia;
    case SchemeId::BBox: return ext_b && has_box;
    case SchemeId::BDia: return ext_b && has_dia;
    case SchemeId::R1a: case SchemeId::R1b:
      return constants.has_value();
    case SchemeId::R2: case SchemeId::R3: case SchemeId::R4:
      return constants.has_value() && has_box;
    case SchemeId::R5: case SchemeId::R6: case SchemeId::R7:
      return constants.has_value() && has_dia;
  }
  return false;
}

bool ProofSystem::admits_formula(const Formula& f, std::string* why) const {
  Fragment frag = fragment_of(f);
  const bool box_ok = base == SystemBase::GBox || base == SystemBase::GBoxDia;
  const bool dia_ok = base == SystemBase::GDia || base == SystemBase::GBoxDia;
  if ((frag == Fragment::BoxOnly || frag == Fragment::Bimodal) && !box_ok) {
    if (why) *why = "formula uses [] outside the " + str() + " language";
    return false;
  }
  if ((frag == Fragment::DiamondOnly || frag == Fragment::Bimodal) && !dia_ok) {
    if (why) *why = "formula uses <> outside the " + str() + " language";
    return false;
  }
  for (const auto& v : constants_of(f)) {
    if (!constants) {
      if (why) *why = "truth constant {" + v.str() + "} used but the system declares no constants";
      return false;
    }
    if (!constants->count(v)) {
      if (why) *why = "truth constant {" + v.str() + "} is not in the system's constants set";
      return false;
    }
  }
  return true;
}

ProofSystem ProofSystem::parse(const std::string& text) {
  ProofSystem sys;
  std::string rest = text;
  auto plus = rest.find('+');
  std::string base = rest.substr(0, plus);
  if (base == "G") sys.base = SystemBase::G;
  else if (base == "GBox") sys.base = SystemBase::GBox;
  else if (base == "GDia") sys.base = SystemBase::GDia;
  else if (base == "GBoxDia") sys.base = SystemBase::GBoxDia;
  else throw Error("unknown system base '" + base + "' (expected G, GBox, GDia, GBoxDia)");
  while (plus != std::string::npos) {
    auto next = rest.find('+', plus + 1);
    std::string ext = rest.substr(plus + 1, next == std::string::npos ? next : next - plus - 1);
    if (ext == "T") sys.ext_t = true;
    else if (ext == "4" || ext == "Four") sys.ext_4 = true;
    else if (ext == "B") sys.ext_b = true;
    else throw Error("unknown system extension '+" + ext + "' (expected T, 4, B)");
    plus = next;
  }
  if (sys.base == SystemBase::G && (sys.ext_t || sys.ext_4 || sys.ext_b))
    throw Error("extensions T/4/B require a modal base system");
  return sys;
}

std::string ProofSystem::str() const {
  std::string s;
  switch (base) {
    case SystemBase::G: s = "G"; break;
    case SystemBase::GBox: s = "GBox"; break;
    case SystemBase::GDia: s = "GDia"; break;
    case SystemBase::GBoxDia: s = "GBoxDia"; break;
  }
  if (ext_t) s += "+T";
  if (ext_4) s += "+4";
  if (ext_b) s += "+B";
  return s;
}

std::vector<int> CheckResult::rejected_steps() const {
  std::vector<int> out;
  for (size_t i = 0; i < steps.size(); ++i)
    if (!steps[i].ok) out.push_back((int)i);
  return out;
}

namespace {

std::string step_label(int i) { return "step " + std::to_string(i + 1); }

}  // namespace

CheckResult check_proof(const ProofSystem& system, const std::vector<Formula>& assumptions,
                        const Proof& proof, const CheckOptions& options) {
  CheckResult res;
  res.steps.resize(proof.steps.size());

  std::string why;
  for (const auto& a : assumptions)
    if (!system.admits_formula(a, &why)) {
      // an inadmissible assumption rejects the whole proof; the
      // diagnostic lands on step 1
      if (!res.steps.empty()) {
        res.steps[0].ok = false;
        res.steps[0].message = "assumption '" + print(a) + "': " + why;
      }
      res.accepted = false;
      return res;
    }

  for (size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& st = proof.steps[i];
    StepDiagnostic& diag = res.steps[i];
    auto reject = [&](std::string msg) {
      diag.ok = false;
      diag.message = std::move(msg);
    };

    if (!st.formula) {
      reject("missing formula");
      continue;
    }
    if (!system.admits_formula(st.formula, &why)) {
      reject(why);
      continue;
    }

    auto ref_error = [&](int k) -> std::optional<std::string> {
      if (k < 0 || k >= (int)proof.steps.size())
        return "reference to nonexistent step " + std::to_string(k + 1);
      if (k >= (int)i) return "reference to step " + std::to_string(k + 1) + " which is not earlier";
      if (!res.steps[k].ok) return "reference to rejected " + step_label(k);
      return std::nullopt;
    };

    if (const auto* ax = std::get_if<AxiomJust>(&st.just)) {
      if (!system.admits_scheme(ax->scheme)) {
        reject("scheme " + scheme_name(ax->scheme) + " is not admitted by " + system.str());
        continue;
      }
      Formula tmpl = scheme_template(ax->scheme);
      if (options.expand_templates) tmpl = expand_derived(tmpl);
      Substitution subst;
      if (!ax->subst.map.empty()) {
        subst = ax->subst;
        Formula expected;
        try {
          expected = substitute_template(tmpl, subst);
          std::string cond_why;
          if (!scheme_side_conditions(ax->scheme, subst, cond_why)) throw Error(cond_why);
        } catch (const Error& e) {
          reject(std::string("bad substitution for ") + scheme_name(ax->scheme) + ": " + e.what());
          continue;
        }
        if (expected != st.formula) {
          reject("formula is not the " + scheme_name(ax->scheme) +
                 " instance given by the substitution (wrong instance)");
          continue;
        }
      } else {
        // No substitution given: infer one by matching.
        MatchResult mr = match_template(tmpl, st.formula);
        if (mr.ok()) {
          std::string cond_why;
          if (!scheme_side_conditions(ax->scheme, *mr.substitution, cond_why)) {
            mr.substitution.reset();
            mr.failure = {"root", cond_why};
          }
        }
        if (!mr.ok()) {
          reject("formula does not match scheme " + scheme_name(ax->scheme) + " (wrong scheme): " +
                 mr.failure.reason + " at " + mr.failure.position);
          continue;
        }
        subst = *mr.substitution;
      }
      // Constants used by R-schemes must come from Q.
      for (const auto& v : scheme_constant_values(ax->scheme, subst)) {
        if (!system.constants || !system.constants->count(v)) {
          reject("scheme constant " + v.str() + " is not in the system's constants set");
          break;
        }
      }
      if (!diag.ok) continue;
      diag.depends_on_assumptions = false;
    } else if (const auto* as = std::get_if<AssumeJust>(&st.just)) {
      if (as->index < 0 || as->index >= (int)assumptions.size()) {
        reject("assumption index " + std::to_string(as->index + 1) + " out of range");
        continue;
      }
      if (st.formula != assumptions[as->index]) {
        reject("formula differs from declared assumption " + std::to_string(as->index + 1));
        continue;
      }
      diag.depends_on_assumptions = true;
    } else if (const auto* mp = std::get_if<MPJust>(&st.just)) {
      if (auto err = ref_error(mp->antecedent)) { reject(*err); continue; }
      if (auto err = ref_error(mp->implication)) { reject(*err); continue; }
      const Formula& imp = proof.steps[mp->implication].formula;
      if (imp.kind() != Kind::Implies) {
        reject(step_label(mp->implication) + " is not an implication");
        continue;
      }
      if (imp.left() != proof.steps[mp->antecedent].formula) {
        reject("antecedent of " + step_label(mp->implication) + " differs from " +
               step_label(mp->antecedent));
        continue;
      }
      if (imp.right() != st.formula) {
        reject("formula differs from the consequent of " + step_label(mp->implication));
        continue;
      }
      diag.depends_on_assumptions = res.steps[mp->antecedent].depends_on_assumptions ||
                                    res.steps[mp->implication].depends_on_assumptions;
    } else if (const auto* nec = std::get_if<NecJust>(&st.just)) {
      if (!system.admits_nec()) {
        reject("necessitation is not a rule of " + system.str());
        continue;
      }
      if (auto err = ref_error(nec->premise)) { reject(*err); continue; }
      if (res.steps[nec->premise].depends_on_assumptions) {
        reject("rule restricted to theorems: " + step_label(nec->premise) +
               " depends on assumptions");
        continue;
      }
      if (st.formula != Formula::box(proof.steps[nec->premise].formula)) {
        reject("formula is not [] applied to " + step_label(nec->premise));
        continue;
      }
      diag.depends_on_assumptions = false;
    } else if (const auto* mon = std::get_if<MonJust>(&st.just)) {
      if (!system.admits_mon()) {
        reject("diamond monotonicity is not a rule of " + system.str());
        continue;
      }
      if (auto err = ref_error(mon->premise)) { reject(*err); continue; }
      if (res.steps[mon->premise].depends_on_assumptions) {
        reject("rule restricted to theorems: " + step_label(mon->premise) +
               " depends on assumptions");
        continue;
      }
      const Formula& prem = proof.steps[mon->premise].formula;
      if (prem.kind() != Kind::Implies) {
        reject(step_label(mon->premise) + " is not an implication");
        continue;
      }
      Formula expected = Formula::implies(Formula::diamond(prem.left()),
                                          Formula::diamond(prem.right()));
      if (st.formula != expected) {
        reject("formula is not <> monotonicity applied to " + step_label(mon->premise));
        continue;
      }
      diag.depends_on_assumptions = false;
    }
  }

  res.accepted = !proof.steps.empty();
  for (const auto& d : res.steps)
    if (!d.ok) res.accepted = false;
  if (!proof.steps.empty()) {
    res.final_formula = proof.steps.back().formula;
    res.final_depends_on_assumptions = res.steps.back().depends_on_assumptions;
  }
  return res;
}

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_index(const std::string& tok, int line_no) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 1) throw std::invalid_argument("");
    return v - 1;
  } catch (...) {
    throw Error("proof line " + std::to_string(line_no) + ": bad step index '" + tok + "'");
  }
}

// "[phi=p & q, psi=r]" — commas inside formulas are impossible, since the
// grammar has no comma tokens, so splitting on top-level commas is safe.
Substitution parse_subst(const std::string& text, int line_no) {
  Substitution subst;
  std::string body = trim(text);
  if (body.empty()) return subst;
  size_t pos = 0;
  while (pos < body.size()) {
    size_t comma = body.find(',', pos);
    std::string item = trim(body.substr(pos, comma == std::string::npos ? comma : comma - pos));
    pos = comma == std::string::npos ? body.size() : comma + 1;
    if (item.empty()) continue;
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw Error("proof line " + std::to_string(line_no) + ": bad substitution item '" + item + "'");
    std::string name = trim(item.substr(0, eq));
    std::string rhs = trim(item.substr(eq + 1));
    try {
      subst.map.emplace(name, parse(rhs));
    } catch (const Error& e) {
      throw Error("proof line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return subst;
}

Justification parse_just(const std::string& text, int line_no) {
  std::string just = trim(text);
  if (just.rfind("ax", 0) == 0) {
    std::string rest = trim(just.substr(2));
    std::string name = rest;
    std::string subst_text;
    size_t br = rest.find('[');
    if (br != std::string::npos) {
      name = trim(rest.substr(0, br));
      size_t close = rest.rfind(']');
      if (close == std::string::npos || close < br)
        throw Error("proof line " + std::to_string(line_no) + ": unterminated substitution");
      subst_text = rest.substr(br + 1, close - br - 1);
    }
    auto id = scheme_by_name(name);
    if (!id) throw Error("proof line " + std::to_string(line_no) + ": unknown scheme '" + name + "'");
    return AxiomJust{*id, parse_subst(subst_text, line_no)};
  }
  auto toks = split_ws(just);
  if (toks.empty()) throw Error("proof line " + std::to_string(line_no) + ": missing justification");
  if (toks[0] == "asm" && toks.size() == 2) return AssumeJust{parse_index(toks[1], line_no)};
  if (toks[0] == "mp" && toks.size() == 3)
    return MPJust{parse_index(toks[1], line_no), parse_index(toks[2], line_no)};
  if (toks[0] == "nec" && toks.size() == 2) return NecJust{parse_index(toks[1], line_no)};
  if (toks[0] == "mon" && toks.size() == 2) return MonJust{parse_index(toks[1], line_no)};
  throw Error("proof line " + std::to_string(line_no) + ": bad justification '" + just + "'");
}

}  // namespace

ProofFile parse_proof_file(const std::string& text) {
  ProofFile pf;
  bool saw_system = false;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int expected_index = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.rfind("system:", 0) == 0) {
      pf.system = ProofSystem::parse(trim(line.substr(7)));
      saw_system = true;
      continue;
    }
    if (line.rfind("constants:", 0) == 0) {
      std::set<TruthValue> q;
      for (const auto& tok : split_ws(trim(line.substr(10)))) q.insert(TruthValue::parse(tok));
      q.insert(TruthValue::zero());
      q.insert(TruthValue::one());
      pf.system.constants = std::move(q);
      continue;
    }
    if (line.rfind("assume:", 0) == 0) {
      try {
        pf.assumptions.push_back(parse(trim(line.substr(7))));
      } catch (const Error& e) {
        throw Error("proof line " + std::to_string(line_no) + ": " + e.what());
      }
      continue;
    }

    size_t dot = line.find('.');
    if (dot == std::string::npos)
      throw Error("proof line " + std::to_string(line_no) + ": expected '<index>. <formula> ; <just>'");
    int index = parse_index(trim(line.substr(0, dot)), line_no);
    if (index != expected_index)
      throw Error("proof line " + std::to_string(line_no) + ": step index " +
                  std::to_string(index + 1) + " out of order (expected " +
                  std::to_string(expected_index + 1) + ")");
    ++expected_index;
    std::string rest = line.substr(dot + 1);
    size_t semi = rest.rfind(';');
    if (semi == std::string::npos)
      throw Error("proof line " + std::to_string(line_no) + ": missing ';' before justification");
    Formula f;
    try {
      f = parse(trim(rest.substr(0, semi)));
    } catch (const Error& e) {
      throw Error("proof line " + std::to_string(line_no) + ": " + e.what());
    }
    Justification just = parse_just(rest.substr(semi + 1), line_no);
    pf.proof.steps.push_back({std::move(f), std::move(just)});
  }
  if (!saw_system) throw Error("proof file missing 'system:' header");
  return pf;
}

ProofFile load_proof_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open proof file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_proof_file(buf.str());
}

std::string format_proof_file(const ProofFile& pf) {
  std::ostringstream out;
  out << "system: " << pf.system.str() << "\n";
  if (pf.system.constants) {
    out << "constants:";
    for (const auto& v : *pf.system.constants)
      if (!v.is_zero() && !v.is_one()) out << " " << v.str();
    out << "\n";
  }
  for (const auto& a : pf.assumptions) out << "assume: " << print(a) << "\n";
  for (size_t i = 0; i < pf.proof.steps.size(); ++i) {
    const ProofStep& st = pf.proof.steps[i];
    out << (i + 1) << ". " << print(st.formula) << " ; ";
    if (const auto* ax = std::get_if<AxiomJust>(&st.just)) {
      out << "ax " << scheme_name(ax->scheme);
      if (!ax->subst.map.empty()) {
        out << " [";
        bool first = true;
        for (const auto& [name, f] : ax->subst.map) {
          if (!first) out << ", ";
          first = false;
          out << name << "=" << print(f);
        }
        out << "]";
      }
    } else if (const auto* as = std::get_if<AssumeJust>(&st.just)) {
      out << "asm " << (as->index + 1);
    } else if (const auto* mp = std::get_if<MPJust>(&st.just)) {
      out << "mp " << (mp->antecedent + 1) << " " << (mp->implication + 1);
    } else if (const auto* nec = std::get_if<NecJust>(&st.just)) {
      out << "nec " << (nec->premise + 1);
    } else if (const auto* mon = std::get_if<MonJust>(&st.just)) {
      out << "mon " << (mon->premise + 1);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace gkml
