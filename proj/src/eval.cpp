#include "gkml/eval.hpp"

#include <unordered_map>

namespace gkml {

namespace {

void check_constants(const GKModel& m, const Formula& f) {
  if (!m.constants()) return;
  for (const auto& v : constants_of(f))
    if (!m.constants()->count(v))
      throw Error("constant {" + v.str() + "} is not in the model's constants set");
}

// Values are memoized per (node occurrence, world).  Without the memo the
// modal clauses re-evaluate shared subtrees once per world along every
// modal path, which is exponential in the nesting degree.
class Evaluator {
 public:
  explicit Evaluator(const GKModel& m) : m_(m) {}

  TruthValue at(const std::string& world, const Formula& f) {
    return run(m_.world_index(world), f);
  }

 private:
  TruthValue run(int x, const Formula& f) {
    switch (f.kind()) {
      case Kind::Atom:
        return m_.atom_value(m_.worlds()[x], f.name());
      case Kind::Bottom:
        return TruthValue::zero();
      case Kind::Top:
        return TruthValue::one();
      case Kind::Const:
        return f.value();
      default:
        break;
    }
    auto& slots = memo_[f.node_id()];
    if (slots.empty()) slots.resize(m_.worlds().size());
    if (slots[x]) return *slots[x];
    TruthValue v = compute(x, f);
    slots[x] = v;
    return v;
  }

  TruthValue compute(int x, const Formula& f) {
    const auto& worlds = m_.worlds();
    switch (f.kind()) {
      case Kind::And:
        return tnorm(run(x, f.left()), run(x, f.right()));
      case Kind::Or:
        return join(run(x, f.left()), run(x, f.right()));
      case Kind::Implies:
        return residuum(run(x, f.left()), run(x, f.right()));
      case Kind::Not:
        return neg(run(x, f.sub()));
      case Kind::Box: {
        TruthValue acc = TruthValue::one();
        for (size_t y = 0; y < worlds.size(); ++y)
          acc = tnorm(acc, residuum(m_.access(worlds[x], worlds[y]), run((int)y, f.sub())));
        return acc;
      }
      case Kind::Diamond: {
        TruthValue acc = TruthValue::zero();
        for (size_t y = 0; y < worlds.size(); ++y)
          acc = join(acc, tnorm(m_.access(worlds[x], worlds[y]), run((int)y, f.sub())));
        return acc;
      }
      default:
        throw Error("eval: bad formula node");
    }
  }

  const GKModel& m_;
  std::unordered_map<const void*, std::vector<std::optional<TruthValue>>> memo_;
};

TruthValue eval_rec(const GKModel& m, const std::string& x, const Formula& f) {
  Evaluator ev(m);
  return ev.at(x, f);
}

EvalTrace trace_rec(const GKModel& m, const std::string& x, const Formula& f) {
  EvalTrace t;
  t.formula = f;
  t.world = x;
  switch (f.kind()) {
    case Kind::Atom:
      t.value = m.atom_value(x, f.name());
      break;
    case Kind::Bottom:
      t.value = TruthValue::zero();
      break;
    case Kind::Top:
      t.value = TruthValue::one();
      break;
    case Kind::Const:
      t.value = f.value();
      break;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: {
      t.children.push_back(trace_rec(m, x, f.left()));
      t.children.push_back(trace_rec(m, x, f.right()));
      const TruthValue& a = t.children[0].value;
      const TruthValue& b = t.children[1].value;
      t.value = f.kind() == Kind::And   ? tnorm(a, b)
                : f.kind() == Kind::Or  ? join(a, b)
                                        : residuum(a, b);
      break;
    }
    case Kind::Not:
      t.children.push_back(trace_rec(m, x, f.sub()));
      t.value = neg(t.children[0].value);
      break;
    case Kind::Box:
    case Kind::Diamond: {
      bool is_box = f.kind() == Kind::Box;
      TruthValue acc = is_box ? TruthValue::one() : TruthValue::zero();
      for (const auto& y : m.worlds()) {
        EvalTrace child = trace_rec(m, y, f.sub());
        const TruthValue& s = m.access(x, y);
        t.modal_rows.push_back({y, s, child.value});
        acc = is_box ? tnorm(acc, residuum(s, child.value)) : join(acc, tnorm(s, child.value));
        t.children.push_back(std::move(child));
      }
      t.value = acc;
      break;
    }
  }
  return t;
}

}  // namespace

TruthValue eval(const GKModel& m, const std::string& x, const Formula& f) {
  m.world_index(x);  // unknown-world check
  check_constants(m, f);
  return eval_rec(m, x, f);
}

EvalTrace eval_trace(const GKModel& m, const std::string& x, const Formula& f) {
  m.world_index(x);
  check_constants(m, f);
  return trace_rec(m, x, f);
}

ValidityResult valid_in_model(const GKModel& m, const Formula& f) {
  check_constants(m, f);
  Evaluator ev(m);
  ValidityResult r{true, "", TruthValue::one()};
  for (const auto& x : m.worlds()) {
    TruthValue v = ev.at(x, f);
    if (v < r.witness_value) {
      r.witness_value = v;
      r.witness_world = x;
    }
  }
  r.valid = r.witness_value.is_one();
  if (r.valid) r.witness_world.clear();
  return r;
}

bool consequence_gk(const GKModel& m, const std::string& x, const std::vector<Formula>& premises,
                    const Formula& f) {
  m.world_index(x);
  check_constants(m, f);
  Evaluator ev(m);
  for (const auto& p : premises) {
    check_constants(m, p);
    if (!ev.at(x, p).is_one()) return true;  // x satisfies T vacuously or not at all
  }
  return ev.at(x, f).is_one();
}

bool consequence_leq(const GKModel& m, const std::string& x, const std::vector<Formula>& premises,
                     const Formula& f) {
  m.world_index(x);
  check_constants(m, f);
  Evaluator ev(m);
  TruthValue inf = TruthValue::one();
  for (const auto& p : premises) {
    check_constants(m, p);
    inf = tnorm(inf, ev.at(x, p));
  }
  return inf <= ev.at(x, f);
}

}  // namespace gkml
