#include "gkml/generators.hpp"

#include <algorithm>

#include "gkml/parser.hpp"

namespace gkml {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{seed, trial, (std::uint64_t)0x9e3779b97f4a7c15ULL};
  return std::mt19937_64(seq);
}

Formula random_formula(std::mt19937_64& rng, const FormulaGenOptions& opts) {
  auto pick = [&](int n) { return (int)(rng() % (std::uint64_t)n); };
  auto leaf = [&]() -> Formula {
    int choices = (int)opts.atoms.size() + 2 + (int)opts.constants.size();
    int c = pick(choices);
    if (c < (int)opts.atoms.size()) return Formula::atom(opts.atoms[c]);
    c -= (int)opts.atoms.size();
    if (c == 0) return Formula::bottom();
    if (c == 1) return Formula::top();
    return Formula::constant(opts.constants[c - 2]);
  };
  if (opts.max_depth <= 0) return leaf();

  enum { kLeaf, kAnd, kOr, kImp, kNot, kBox, kDia };
  std::vector<int> menu = {kLeaf, kAnd, kOr, kImp, kImp, kNot};
  if (opts.allow_box) menu.push_back(kBox);
  if (opts.allow_diamond) menu.push_back(kDia);
  FormulaGenOptions sub = opts;
  sub.max_depth = opts.max_depth - 1;
  switch (menu[pick((int)menu.size())]) {
    case kLeaf: return leaf();
    case kAnd: return Formula::and_(random_formula(rng, sub), random_formula(rng, sub));
    case kOr: return Formula::or_(random_formula(rng, sub), random_formula(rng, sub));
    case kImp: return Formula::implies(random_formula(rng, sub), random_formula(rng, sub));
    case kNot: return Formula::not_(random_formula(rng, sub));
    case kBox: return Formula::box(random_formula(rng, sub));
    case kDia: return Formula::diamond(random_formula(rng, sub));
  }
  return leaf();
}

GKModel random_model(std::mt19937_64& rng, const ModelGenOptions& opts) {
  auto pick = [&](int n) { return (int)(rng() % (std::uint64_t)n); };
  int k = 1 + pick(opts.max_worlds);
  int d = 1 + pick(opts.max_denominator);

  std::vector<std::string> worlds;
  for (int i = 0; i < k; ++i) worlds.push_back("w" + std::to_string(i));

  std::vector<std::vector<TruthValue>> s(k, std::vector<TruthValue>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) s[i][j] = TruthValue::ratio(pick(d + 1), d);

  if (opts.frame.crisp)
    for (auto& row : s)
      for (auto& v : row) v = v.is_zero() ? TruthValue::zero() : TruthValue::one();
  if (opts.frame.symmetric)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < i; ++j) s[i][j] = s[j][i] = join(s[i][j], s[j][i]);
  if (opts.frame.reflexive)
    for (int i = 0; i < k; ++i) s[i][i] = TruthValue::one();
  if (opts.frame.transitive) {
    // min-transitive closure; terminates because values only move up
    // within a finite set.
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          for (int l = 0; l < k; ++l) {
            TruthValue via = tnorm(s[i][j], s[j][l]);
            if (via > s[i][l]) {
              s[i][l] = via;
              changed = true;
            }
          }
    }
  }

  std::map<std::pair<std::string, std::string>, TruthValue> smap;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (!s[i][j].is_zero()) smap.emplace(std::pair{worlds[i], worlds[j]}, s[i][j]);

  std::map<std::string, std::map<std::string, TruthValue>> e;
  for (int i = 0; i < k; ++i)
    for (const auto& atom : opts.atoms) {
      TruthValue v = TruthValue::ratio(pick(d + 1), d);
      if (!v.is_zero()) e[worlds[i]][atom] = v;
    }

  return GKModel(std::move(worlds), std::move(smap), std::move(e), opts.constants);
}

FuzzReport soundness_fuzz(const ProofSystem& system, const std::vector<Formula>& assumptions,
                          const Proof& proof, int trials, std::uint64_t seed) {
  CheckResult check = check_proof(system, assumptions, proof);
  if (!check.accepted) throw Error("soundness_fuzz: proof rejected");

  ModelGenOptions mopts;
  mopts.frame.reflexive = system.ext_t;
  mopts.frame.transitive = system.ext_4;
  mopts.frame.symmetric = system.ext_b;
  mopts.constants = system.constants;

  std::set<std::string> atom_set;
  auto add_atoms = [&](const Formula& f) {
    for (auto& a : atoms_of(f)) atom_set.insert(a);
  };
  for (const auto& a : assumptions) add_atoms(a);
  for (const auto& st : proof.steps) add_atoms(st.formula);
  mopts.atoms.assign(atom_set.begin(), atom_set.end());
  if (mopts.atoms.empty()) mopts.atoms = {"p"};

  FuzzReport report;
  report.trials = trials;
  const Formula& conclusion = check.final_formula;
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, (std::uint64_t)t);
    GKModel m = random_model(rng, mopts);
    for (const auto& x : m.worlds()) {
      TruthValue inf = TruthValue::one();
      for (const auto& a : assumptions) inf = tnorm(inf, eval(m, x, a));
      TruthValue concl = eval(m, x, conclusion);
      if (!(inf <= concl)) {
        ++report.violations;
        if (report.first_violation.empty()) {
          report.first_violation = "trial " + std::to_string(t) + ", world " + x +
                                   ": min assumptions = " + inf.str() + " > conclusion " +
                                   print(conclusion) + " = " + concl.str() + "\nmodel:\n" +
                                   model_to_json_text(m);
        }
      }
    }
  }
  return report;
}

}  // namespace gkml
