#ifndef GKML_MODEL_HPP
#define GKML_MODEL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gkml/truth_value.hpp"

namespace gkml {

// ── GKModel ─────────────────────────────────────────────────────────────────
// A finite Goedel-Kripke model <W, S, e>: named worlds, fuzzy accessibility
// S : W x W -> [0,1] and fuzzy atomic valuation e : W x Var -> [0,1].
// S and e are stored sparsely; absent entries read as 0.  An optional
// constants set Q lists the truth constants admitted by formulas evaluated
// against this model (always containing 0 and 1).

class GKModel {
 public:
  GKModel(std::vector<std::string> worlds, std::map<std::pair<std::string, std::string>, TruthValue> s,
          std::map<std::string, std::map<std::string, TruthValue>> e,
          std::optional<std::set<TruthValue>> constants = std::nullopt);

  const std::vector<std::string>& worlds() const { return worlds_; }
  bool has_world(const std::string& w) const { return world_index_.count(w) != 0; }
  int world_index(const std::string& w) const;

  /// S(x,y); 0 for unlisted pairs.
  const TruthValue& access(const std::string& x, const std::string& y) const;
  /// e(x,p); 0 for unlisted atoms.
  const TruthValue& atom_value(const std::string& x, const std::string& atom) const;

  const std::map<std::pair<std::string, std::string>, TruthValue>& access_map() const { return s_; }
  const std::map<std::string, std::map<std::string, TruthValue>>& valuation_map() const { return e_; }
  const std::optional<std::set<TruthValue>>& constants() const { return constants_; }

  /// Atom names mentioned anywhere in the valuation, sorted.
  std::vector<std::string> atoms() const;

  /// Every value of S and e (not deduplicated against {0,1}).
  std::vector<TruthValue> all_values() const;

 private:
  std::vector<std::string> worlds_;
  std::map<std::string, int> world_index_;
  std::map<std::pair<std::string, std::string>, TruthValue> s_;
  std::map<std::string, std::map<std::string, TruthValue>> e_;
  std::optional<std::set<TruthValue>> constants_;
};

// ── FrameReport ─────────────────────────────────────────────────────────────

struct FrameReport {
  bool crisp = true;
  bool reflexive = true;
  bool transitive = true;  // min-transitive: S(x,y) . S(y,z) <= S(x,z)
  bool symmetric = true;
  // One witness per failed property, with the offending values.
  std::string crisp_witness;       // "S(x,y) = v"
  std::string reflexive_witness;   // "S(x,x) = v"
  std::string transitive_witness;  // "S(x,y).S(y,z) = v > S(x,z) = w"
  std::string symmetric_witness;   // "S(x,y) = v but S(y,x) = w"
};

FrameReport frame_properties(const GKModel& m);

// ── File I/O ────────────────────────────────────────────────────────────────
// JSON object with fields:
//   "worlds":    array of strings
//   "S":         object, "w1,w2" -> rational string (absent means "0")
//   "e":         object, world -> { atom -> rational string }
//   "constants": optional array of rational strings
GKModel load_model(const std::string& path);
GKModel model_from_json_text(const std::string& text);

/// Canonical serialization: sorted keys, lowest-terms rationals, zero
/// entries omitted.  load(save(m)) round-trips bit-exactly.
std::string model_to_json_text(const GKModel& m);
void save_model(const GKModel& m, const std::string& path);

// ── Transforms and builtins ─────────────────────────────────────────────────

/// Applies g pointwise to every S and e value; worlds and constants are
/// unchanged.  Errors if g's domain misses a value of the model.
GKModel transform_model(const GKModel& m, const OrderMap& g);

/// Named models used by the demos:
///   "sec5-truncated" n : worlds 0..n-1, S == 1, e(k,p) = 1/(k+1)
///   "sec6-crisp-fail"  : worlds x,y; S(x,y) = 1/2, e(x,p) = e(y,p) = 1
///   "sec3-slice" n     : world w, S(w,w) = 0, e(q) = 1/2,
///                        e(p_i) = (1/2)(1 - 1/(i+1)) for i = 1..n
GKModel builtin_model(const std::string& name, int n = 1);

}  // namespace gkml

#endif  // GKML_MODEL_HPP
