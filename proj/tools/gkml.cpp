// gkml — evaluate, check and search Goedel modal logic over fuzzy Kripke
// models.  Exit codes: 0 affirmative verdict, 1 negative verdict
// (countermodel found / proof rejected / consequence fails), 2 usage or
// input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gkml/derive.hpp"
#include "gkml/generators.hpp"
#include "gkml/parser.hpp"
#include "gkml/search.hpp"

#include "json.hpp"

namespace {

using namespace gkml;

std::string render(const TruthValue& v, int decimals) {
  if (decimals <= 0) return v.str();
  return v.str() + " (~" + v.decimal(decimals) + ")";
}

std::vector<Formula> load_theory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open theory file '" + path + "'");
  std::vector<Formula> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r\n");
    try {
      out.push_back(parse(line.substr(first, last - first + 1)));
    } catch (const Error& e) {
      throw Error("theory file line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

void print_trace(const EvalTrace& t, int depth, int decimals) {
  std::string indent(2 * depth, ' ');
  std::cout << indent << print(t.formula) << " @ " << t.world << " = "
            << render(t.value, decimals) << "\n";
  if (!t.modal_rows.empty()) {
    for (size_t i = 0; i < t.modal_rows.size(); ++i) {
      const auto& row = t.modal_rows[i];
      std::cout << indent << "  S(" << t.world << "," << row.world << ") = "
                << render(row.access, decimals) << ", value at " << row.world << " = "
                << render(row.sub_value, decimals) << "\n";
    }
    return;
  }
  for (const auto& c : t.children) print_trace(c, depth + 1, decimals);
}

int cmd_eval(const std::string& model_path, const std::string& world, const std::string& formula,
             bool trace, int decimals) {
  GKModel m = load_model(model_path);
  Formula f = parse(formula);
  if (trace) {
    EvalTrace t = eval_trace(m, world, f);
    print_trace(t, 0, decimals);
  } else {
    std::cout << render(eval(m, world, f), decimals) << "\n";
  }
  return 0;
}

int cmd_valid(const std::string& model_path, const std::string& formula) {
  GKModel m = load_model(model_path);
  Formula f = parse(formula);
  ValidityResult r = valid_in_model(m, f);
  if (r.valid) {
    std::cout << "valid in model: value 1 at every world\n";
    return 0;
  }
  std::cout << "not valid in model: world " << r.witness_world << " has value "
            << r.witness_value.str() << "\n";
  return 1;
}

int cmd_conseq(const std::string& model_path, const std::string& world,
               const std::string& theory_path, const std::string& formula,
               const std::string& mode) {
  GKModel m = load_model(model_path);
  std::vector<Formula> premises = load_theory(theory_path);
  Formula f = parse(formula);
  bool ok;
  if (mode == "gk") ok = consequence_gk(m, world, premises, f);
  else if (mode == "leq") ok = consequence_leq(m, world, premises, f);
  else throw Error("unknown consequence mode '" + mode + "' (expected gk or leq)");
  std::cout << "consequence (" << mode << ") at world " << world << ": "
            << (ok ? "holds" : "fails") << " on this model"
            << (ok ? " (per-model check, not a general claim)" : "") << "\n";
  return ok ? 0 : 1;
}

int cmd_prove(const std::string& proof_path, int fuzz_trials, std::uint64_t seed,
              bool expand_schemes) {
  ProofFile pf = load_proof_file(proof_path);
  CheckOptions opts;
  opts.expand_templates = expand_schemes;
  CheckResult res = check_proof(pf.system, pf.assumptions, pf.proof, opts);
  for (size_t i = 0; i < res.steps.size(); ++i) {
    const auto& d = res.steps[i];
    std::cout << (d.ok ? "  ok" : "FAIL") << "  " << (i + 1) << ". "
              << print(pf.proof.steps[i].formula);
    if (!d.ok) std::cout << "\n      " << d.message;
    std::cout << "\n";
  }
  if (!res.accepted) {
    std::cout << "proof rejected\n";
    return 1;
  }
  std::cout << "proof accepted: " << print(res.final_formula)
            << (res.final_depends_on_assumptions ? " (from assumptions)" : " (theorem)") << "\n";
  if (fuzz_trials > 0) {
    FuzzReport report = soundness_fuzz(pf.system, pf.assumptions, pf.proof, fuzz_trials, seed);
    std::cout << "soundness fuzz: " << report.trials << " trials, " << report.violations
              << " violations\n";
    if (report.violations > 0) {
      std::cout << report.first_violation << "\n";
      return 1;
    }
  }
  return 0;
}

int cmd_search(const std::string& formula, int max_worlds, const std::string& grid, double budget,
               int jobs) {
  Formula f = parse(formula);
  SearchConfig cfg;
  cfg.max_worlds = max_worlds;
  cfg.time_budget_seconds = budget;
  cfg.jobs = jobs;
  if (grid != "auto") {
    try {
      size_t used = 0;
      cfg.grid_denominator = std::stoi(grid, &used);
      if (used != grid.size()) throw std::invalid_argument(grid);
    } catch (const std::exception&) {
      throw Error("--grid expects a positive integer denominator or 'auto', got '" + grid + "'");
    }
  }
  SearchOutcome out = find_countermodel(f, cfg);
  switch (out.status) {
    case SearchStatus::CountermodelFound: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::parse(model_to_json_text(*out.countermodel));
      doc["witness"] = {{"world", out.witness_world}, {"value", out.witness_value.str()}};
      std::cout << doc.dump(2) << "\n";
      std::cout << "countermodel found: value " << out.witness_value.str() << " at world "
                << out.witness_world << "\n";
      return 1;
    }
    case SearchStatus::ExhaustedComplete:
      std::cout << "valid: exhausted a provably sufficient space (" << out.positions_scanned
                << " positions, diamond-fragment bound " << fmp_world_bound(f) << ")\n";
      return 0;
    case SearchStatus::ExhaustedBounded:
      std::cout << "no countermodel within bounds (" << out.positions_scanned
                << " positions); no validity verdict for this fragment/bound\n";
      return 0;
    case SearchStatus::BudgetExceeded:
      std::cout << "time budget exceeded before the space was exhausted; no verdict\n";
      return 2;
  }
  return 2;
}

int cmd_frames(const std::string& model_path) {
  GKModel m = load_model(model_path);
  FrameReport r = frame_properties(m);
  auto line = [](const char* name, bool ok, const std::string& witness) {
    std::cout << name << ": " << (ok ? "yes" : "no");
    if (!ok) std::cout << "  (" << witness << ")";
    std::cout << "\n";
  };
  line("crisp", r.crisp, r.crisp_witness);
  line("reflexive", r.reflexive, r.reflexive_witness);
  line("transitive", r.transitive, r.transitive_witness);
  line("symmetric", r.symmetric, r.symmetric_witness);
  return 0;
}

// Replays the worked examples; exits 0 only when every reproduced value
// matches its expected exact rational.
int demo_sec6(bool& all_ok) {
  GKModel m = builtin_model("sec6-crisp-fail");
  Formula nn_dia = parse("~~<>p");
  Formula dia_nn = parse("<>~~p");
  Formula scheme = parse("~~<>p -> <>~~p");
  TruthValue a = eval(m, "x", nn_dia);
  TruthValue b = eval(m, "x", dia_nn);
  ValidityResult v = valid_in_model(m, scheme);
  bool ok = a == TruthValue::one() && b == TruthValue::ratio(1, 2) && !v.valid &&
            v.witness_world == "x" && v.witness_value == TruthValue::ratio(1, 2);
  std::cout << "[sec6] two-world fuzzy model, S(x,y) = 1/2, e(.,p) = 1\n";
  std::cout << "  e(x, ~~<>p)        = " << a.str() << "   (expected 1)\n";
  std::cout << "  e(x, <>~~p)        = " << b.str() << "   (expected 1/2)\n";
  std::cout << "  ~~<>p -> <>~~p     : " << (v.valid ? "valid" : "fails") << " at world "
            << v.witness_world << " with value " << v.witness_value.str() << " (expected 1/2)\n";
  std::cout << "  => the diamond fragment is not complete for crisp models\n";
  all_ok = all_ok && ok;
  return ok ? 0 : 1;
}

int demo_sec5(bool& all_ok) {
  std::cout << "[sec5] truncations of the infinite model S == 1, e(n,p) = 1/(n+1)\n";
  bool ok = true;
  Formula box_p = parse("[]p");
  Formula box_nn_p = parse("[]~~p");
  for (int n : {2, 5, 10, 100}) {
    GKModel m = builtin_model("sec5-truncated", n);
    TruthValue a = eval(m, "0", box_p);
    TruthValue b = eval(m, "0", box_nn_p);
    ok = ok && a == TruthValue::ratio(1, n) && b == TruthValue::one();
    std::cout << "  N = " << n << ": e(0, []p) = " << a.str() << " (expected 1/" << n
              << "), e(0, []~~p) = " << b.str() << " (expected 1)\n";
  }
  std::cout << "  e(0, []p) decreases toward the infinite-model value 0, so []~~p -> ~~[]p\n"
            << "  has no finite countermodel even though it fails in the infinite model\n";
  all_ok = all_ok && ok;
  return ok ? 0 : 1;
}

int demo_sec3(bool& all_ok) {
  const int n = 6;
  GKModel m = builtin_model("sec3-slice", n);
  std::cout << "[sec3] one-world slice of the uncountable theory, v(q) = 1/2\n";
  bool ok = true;
  std::vector<Formula> premises;
  for (int i = 1; i < n; ++i) {
    Formula prem = parse("(p" + std::to_string(i + 1) + " -> p" + std::to_string(i) + ") -> q");
    premises.push_back(prem);
    TruthValue v = eval(m, "w", prem);
    ok = ok && v == TruthValue::one();
    std::cout << "  premise " << print(prem) << " = " << v.str() << " (expected 1)\n";
  }
  TruthValue q = eval(m, "w", parse("q"));
  bool gk = consequence_gk(m, "w", premises, parse("q"));
  bool leq = consequence_leq(m, "w", premises, parse("q"));
  ok = ok && q == TruthValue::ratio(1, 2) && !gk && !leq;
  std::cout << "  q = " << q.str() << " (expected 1/2)\n";
  std::cout << "  consequence |=GK  at w: " << (gk ? "holds" : "fails") << " (expected fails)\n";
  std::cout << "  consequence |=GK<= at w: " << (leq ? "holds" : "fails") << " (expected fails)\n";
  all_ok = all_ok && ok;
  return ok ? 0 : 1;
}

int cmd_demo(const std::string& name) {
  bool all_ok = true;
  if (name == "sec3") demo_sec3(all_ok);
  else if (name == "sec5") demo_sec5(all_ok);
  else if (name == "sec6") demo_sec6(all_ok);
  else if (name == "all") {
    demo_sec3(all_ok);
    demo_sec5(all_ok);
    demo_sec6(all_ok);
  } else {
    throw Error("unknown demo '" + name + "' (expected sec3, sec5, sec6, all)");
  }
  std::cout << (all_ok ? "all reproduced values match\n" : "MISMATCH against expected values\n");
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goedel modal logic toolkit: fuzzy Kripke evaluation, Hilbert proof checking, "
               "bounded countermodel search"};
  app.require_subcommand(1);

  std::string model_path, world, formula, theory_path, proof_path, demo_name;
  std::string grid = "auto", mode = "gk";
  bool trace = false, expand_schemes = false;
  int decimals = 0, max_worlds = 2, fuzz_trials = 0, jobs = 1;
  double budget = 0;
  std::uint64_t seed = 1;

  auto* c_eval = app.add_subcommand("eval", "evaluate a formula at a world");
  c_eval->add_option("--model", model_path)->required();
  c_eval->add_option("--world", world)->required();
  c_eval->add_option("--formula", formula)->required();
  c_eval->add_flag("--trace", trace, "print the full recomputation tree");
  c_eval->add_option("--decimal", decimals, "append a k-digit decimal rendering");

  auto* c_valid = app.add_subcommand("valid", "check validity in one model");
  c_valid->add_option("--model", model_path)->required();
  c_valid->add_option("--formula", formula)->required();

  auto* c_conseq = app.add_subcommand("conseq", "check a consequence at a world of one model");
  c_conseq->add_option("--model", model_path)->required();
  c_conseq->add_option("--world", world)->required();
  c_conseq->add_option("--theory", theory_path)->required();
  c_conseq->add_option("--formula", formula)->required();
  c_conseq->add_option("--mode", mode, "gk (truth preservation) or leq (degree preservation)");

  auto* c_prove = app.add_subcommand("prove", "check a Hilbert proof file");
  c_prove->add_option("--proof", proof_path)->required();
  c_prove->add_option("--fuzz", fuzz_trials, "run soundness fuzzing with this many trials");
  c_prove->add_option("--seed", seed, "fuzzing seed");
  c_prove->add_flag("--expand-schemes", expand_schemes,
                    "match sugar-expanded axiom templates (for proofs written without |, ~, top)");

  auto* c_search = app.add_subcommand("search", "bounded countermodel search");
  c_search->add_option("--formula", formula)->required();
  c_search->add_option("--max-worlds", max_worlds);
  c_search->add_option("--grid", grid, "denominator D, or auto");
  c_search->add_option("--budget", budget, "time budget in seconds");
  c_search->add_option("--jobs", jobs, "parallel workers");

  auto* c_frames = app.add_subcommand("frames", "report frame properties of a model");
  c_frames->add_option("--model", model_path)->required();

  auto* c_demo = app.add_subcommand("demo", "replay a worked example (sec3, sec5, sec6, all)");
  c_demo->add_option("name", demo_name)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(c_eval)) return cmd_eval(model_path, world, formula, trace, decimals);
    if (app.got_subcommand(c_valid)) return cmd_valid(model_path, formula);
    if (app.got_subcommand(c_conseq))
      return cmd_conseq(model_path, world, theory_path, formula, mode);
    if (app.got_subcommand(c_prove)) return cmd_prove(proof_path, fuzz_trials, seed, expand_schemes);
    if (app.got_subcommand(c_search)) return cmd_search(formula, max_worlds, grid, budget, jobs);
    if (app.got_subcommand(c_frames)) return cmd_frames(model_path);
    if (app.got_subcommand(c_demo)) return cmd_demo(demo_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
