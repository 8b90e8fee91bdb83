#include "gkml/search.hpp"

#include <atomic>
#include <chrono>
#include <limits>

namespace gkml {

int fmp_world_bound(const Formula& f) {
  Fragment frag = fragment_of(f);
  if (frag == Fragment::BoxOnly || frag == Fragment::Bimodal)
    throw Error("fmp_world_bound: formula contains []");
  if (frag == Fragment::Propositional) return 1;
  const int n = nesting_degree(f);
  long long bound = 1;
  for (int i = 0; i < n; ++i) {
    int j = n - i;
    long long c = 0;
    for (const auto& g : subformulas_by_rank(f, j))
      if (g.kind() == Kind::Diamond) ++c;
    bound *= 1 + c;
    if (bound > std::numeric_limits<int>::max())
      throw Error("fmp_world_bound: bound overflows int");
  }
  return (int)bound;
}

namespace {

// ── Rank kernel ─────────────────────────────────────────────────────────────
// Evaluation over grid ranks 0..top instead of rationals.  The Goedel
// operations are order-determined and closed on any finite chain, so the
// kernel verdict (rank < top versus = top) coincides with the exact
// evaluator applied to the corresponding rational values.

struct KernelNode {
  Kind kind;
  int arg = -1;  // atom index or constant rank
  int left = -1, right = -1;
};

class Kernel {
 public:
  Kernel(const Formula& f, const std::vector<std::string>& atoms,
         const std::vector<TruthValue>& values) {
    atom_index_.clear();
    for (size_t i = 0; i < atoms.size(); ++i) atom_index_[atoms[i]] = (int)i;
    values_ = &values;
    root_ = compile(f);
  }

  /// e is k*atoms ranks (world-major), s is k*k ranks (row-major).
  int eval(int x, const int* s, const int* e, int k, int atoms, int top) const {
    return eval_node(root_, x, s, e, k, atoms, top);
  }

 private:
  int compile(const Formula& f) {
    KernelNode n;
    n.kind = f.kind();
    switch (f.kind()) {
      case Kind::Atom:
        n.arg = atom_index_.at(f.name());
        break;
      case Kind::Const: {
        n.arg = -1;
        for (size_t i = 0; i < values_->size(); ++i)
          if ((*values_)[i] == f.value()) n.arg = (int)i;
        if (n.arg < 0) throw Error("internal: constant missing from kernel value set");
        break;
      }
      case Kind::Bottom:
      case Kind::Top:
        break;
      case Kind::Not:
      case Kind::Box:
      case Kind::Diamond:
        n.left = compile(f.sub());
        break;
      case Kind::And:
      case Kind::Or:
      case Kind::Implies:
        n.left = compile(f.left());
        n.right = compile(f.right());
        break;
    }
    nodes_.push_back(n);
    return (int)nodes_.size() - 1;
  }

  int eval_node(int idx, int x, const int* s, const int* e, int k, int atoms, int top) const {
    const KernelNode& n = nodes_[idx];
    switch (n.kind) {
      case Kind::Atom:
        return e[x * atoms + n.arg];
      case Kind::Bottom:
        return 0;
      case Kind::Top:
        return top;
      case Kind::Const:
        return n.arg;
      case Kind::And: {
        int a = eval_node(n.left, x, s, e, k, atoms, top);
        int b = eval_node(n.right, x, s, e, k, atoms, top);
        return a < b ? a : b;
      }
      case Kind::Or: {
        int a = eval_node(n.left, x, s, e, k, atoms, top);
        int b = eval_node(n.right, x, s, e, k, atoms, top);
        return a > b ? a : b;
      }
      case Kind::Implies: {
        int a = eval_node(n.left, x, s, e, k, atoms, top);
        int b = eval_node(n.right, x, s, e, k, atoms, top);
        return a <= b ? top : b;
      }
      case Kind::Not:
        return eval_node(n.left, x, s, e, k, atoms, top) == 0 ? top : 0;
      case Kind::Box: {
        int acc = top;
        for (int y = 0; y < k; ++y) {
          int sv = s[x * k + y];
          int v = eval_node(n.left, y, s, e, k, atoms, top);
          int r = sv <= v ? top : v;
          if (r < acc) acc = r;
        }
        return acc;
      }
      case Kind::Diamond: {
        int acc = 0;
        for (int y = 0; y < k; ++y) {
          int sv = s[x * k + y];
          int v = eval_node(n.left, y, s, e, k, atoms, top);
          int r = sv < v ? sv : v;
          if (r > acc) acc = r;
        }
        return acc;
      }
    }
    return 0;
  }

  std::map<std::string, int> atom_index_;
  const std::vector<TruthValue>* values_;
  std::vector<KernelNode> nodes_;
  int root_ = -1;
};

// ── Enumeration space ───────────────────────────────────────────────────────
// Free slots in canonical order: relevant S entries (row-major), then e
// entries (world-major, atoms in sorted order).  For formulas of nesting
// degree <= 1 only the first S row can influence the value at world 0;
// for degree 0 only world 0's e row can.  Masked slots stay 0.

struct Space {
  int k = 1;                        // world count
  int denominator = 1;
  std::vector<TruthValue> values;   // grid plus formula constants, sorted
  int top = 0;                      // rank of 1
  std::vector<std::string> atoms;   // sorted
  int nesting = 0;
  // slot -> position in the s / e rank arrays
  struct Slot {
    bool in_s;
    int index;  // x*k+y or x*atoms+a
  };
  std::vector<Slot> slots;
  unsigned __int128 size = 1;  // product of |values| over slots
};

Space build_space(const Formula& f, int k, const std::optional<int>& denom_override) {
  Space sp;
  sp.k = k;
  sp.atoms = atoms_of(f);
  sp.nesting = nesting_degree(f);
  const int a = (int)sp.atoms.size();
  std::vector<TruthValue> consts = constants_of(f);

  const int slot_budget = k * k + k * a + (int)consts.size();
  sp.denominator = denom_override ? *denom_override : slot_budget + 1;
  if (sp.denominator < 1) throw Error("grid denominator must be >= 1");

  std::set<TruthValue> vals;
  for (int i = 0; i <= sp.denominator; ++i) vals.insert(TruthValue::ratio(i, sp.denominator));
  for (const auto& c : consts) vals.insert(c);
  sp.values.assign(vals.begin(), vals.end());
  sp.top = (int)sp.values.size() - 1;

  if (sp.nesting >= 2) {
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) sp.slots.push_back({true, x * k + y});
  } else if (sp.nesting == 1) {
    for (int y = 0; y < k; ++y) sp.slots.push_back({true, 0 * k + y});
  }
  const int e_worlds = sp.nesting == 0 ? 1 : k;
  for (int x = 0; x < e_worlds; ++x)
    for (int i = 0; i < a; ++i) sp.slots.push_back({false, x * a + i});

  sp.size = 1;
  const unsigned __int128 radix = (unsigned __int128)sp.values.size();
  for (size_t i = 0; i < sp.slots.size(); ++i) sp.size *= radix;
  return sp;
}

// World-renaming symmetry: worlds 1..k-1 must appear with non-decreasing
// key vectors (their e row, then their S(0,.) entry when S is masked to
// row 0; just the e row otherwise).  Every model has a renaming in
// canonical order, and renaming non-evaluation worlds does not change the
// value at world 0, so skipping non-canonical assignments is verdict
// preserving.
bool canonical_order_ok(const Space& sp, const int* s, const int* e) {
  const int a = (int)sp.atoms.size();
  auto key_less = [&](int y, int z) {
    for (int i = 0; i < a; ++i)
      if (e[y * a + i] != e[z * a + i]) return e[y * a + i] < e[z * a + i] ? -1 : 1;
    if (sp.nesting == 1 && s[y] != s[z]) return s[y] < s[z] ? -1 : 1;  // row-0 entries
    return 0;
  };
  for (int y = 1; y + 1 < sp.k; ++y)
    if (key_less(y, y + 1) > 0) return false;
  return true;
}

GKModel model_from_ranks(const Space& sp, const int* s, const int* e) {
  std::vector<std::string> worlds;
  for (int i = 0; i < sp.k; ++i) worlds.push_back("w" + std::to_string(i));
  std::map<std::pair<std::string, std::string>, TruthValue> smap;
  for (const auto& slot : sp.slots) {
    if (!slot.in_s) continue;
    int x = slot.index / sp.k, y = slot.index % sp.k;
    if (s[slot.index] != 0)
      smap.emplace(std::pair{worlds[x], worlds[y]}, sp.values[s[slot.index]]);
  }
  std::map<std::string, std::map<std::string, TruthValue>> emap;
  for (const auto& slot : sp.slots) {
    if (slot.in_s) continue;
    int a = (int)sp.atoms.size();
    int x = slot.index / a, i = slot.index % a;
    if (e[slot.index] != 0) emap[worlds[x]][sp.atoms[i]] = sp.values[e[slot.index]];
  }
  return GKModel(std::move(worlds), std::move(smap), std::move(emap));
}

void decode_position(const Space& sp, unsigned __int128 pos, int* s, int* e) {
  const unsigned __int128 radix = (unsigned __int128)sp.values.size();
  for (size_t i = sp.slots.size(); i-- > 0;) {
    int digit = (int)(pos % radix);
    pos /= radix;
    const auto& slot = sp.slots[i];
    (slot.in_s ? s : e)[slot.index] = digit;
  }
}

struct Deadline {
  std::chrono::steady_clock::time_point at;
  bool enabled = false;
  bool expired() const { return enabled && std::chrono::steady_clock::now() >= at; }
};

constexpr unsigned __int128 kNoHit = ~(unsigned __int128)0;

// Scans positions [from, to) of the space; returns the first hit position
// or kNoHit.  `should_abort` lets a worker stop early when its whole range
// is already past a known hit.
template <typename Evaluator, typename AbortFn>
unsigned __int128 scan_range(const Space& sp, unsigned __int128 from, unsigned __int128 to,
                             const Deadline& deadline, bool& out_of_time, AbortFn&& should_abort,
                             Evaluator&& hit) {
  const int a = (int)sp.atoms.size();
  std::vector<int> s(sp.k * sp.k, 0), e(std::max(1, sp.k * a), 0);
  std::vector<int> digits(sp.slots.size(), 0);
  decode_position(sp, from, s.data(), e.data());
  {
    unsigned __int128 pos = from;
    const unsigned __int128 radix = (unsigned __int128)sp.values.size();
    for (size_t i = sp.slots.size(); i-- > 0;) {
      digits[i] = (int)(pos % radix);
      pos /= radix;
    }
  }
  const int radix = (int)sp.values.size();
  unsigned long long tick = 0;
  for (unsigned __int128 pos = from; pos < to; ++pos) {
    if ((++tick & 0xfff) == 0) {
      if (deadline.expired()) {
        out_of_time = true;
        return kNoHit;
      }
      if (should_abort()) return kNoHit;
    }
    if (canonical_order_ok(sp, s.data(), e.data()) && hit(s.data(), e.data())) return pos;
    // odometer increment, least-significant slot last
    for (size_t i = sp.slots.size(); i-- > 0;) {
      const auto& slot = sp.slots[i];
      int* arr = slot.in_s ? s.data() : e.data();
      if (++digits[i] < radix) {
        arr[slot.index] = digits[i];
        break;
      }
      digits[i] = 0;
      arr[slot.index] = 0;
    }
  }
  return kNoHit;
}

SearchOutcome run_search(const Formula& f, const SearchConfig& cfg, bool use_kernel) {
  if (cfg.max_worlds < 1) throw Error("max_worlds must be >= 1");
  if (cfg.jobs < 1) throw Error("jobs must be >= 1");

  Deadline deadline;
  if (cfg.time_budget_seconds > 0) {
    deadline.enabled = true;
    deadline.at = std::chrono::steady_clock::now() +
                  std::chrono::microseconds((long long)(cfg.time_budget_seconds * 1e6));
  }

  Fragment frag = cfg.fragment_mode.value_or(fragment_of(f));
  const bool box_free =
      fragment_of(f) == Fragment::DiamondOnly || fragment_of(f) == Fragment::Propositional;
  const bool diamond_mode =
      (frag == Fragment::DiamondOnly || frag == Fragment::Propositional) && box_free;

  SearchOutcome out;
  unsigned long long scanned = 0;
  bool out_of_time = false;

  for (int k = 1; k <= cfg.max_worlds && !out_of_time; ++k) {
    Space sp = build_space(f, k, cfg.grid_denominator);
    Kernel kernel(f, sp.atoms, sp.values);

    unsigned __int128 found = kNoHit;
    auto exact_check = [&](const int* s, const int* e) {
      GKModel m = model_from_ranks(sp, s, e);
      return eval(m, m.worlds()[0], f) < TruthValue::one();
    };

    auto no_abort = [] { return false; };
    if (!use_kernel) {
      auto hit = [&](const int* s, const int* e) { return exact_check(s, e); };
      found = scan_range(sp, 0, sp.size, deadline, out_of_time, no_abort, hit);
    } else if (cfg.jobs == 1) {
      auto hit = [&](const int* s, const int* e) {
        return kernel.eval(0, s, e, sp.k, (int)sp.atoms.size(), sp.top) < sp.top;
      };
      found = scan_range(sp, 0, sp.size, deadline, out_of_time, no_abort, hit);
    } else {
      // Partition the space into chunks over the leading slots and scan
      // them in parallel.  The reported hit is the least position found;
      // a chunk aborts only when a strictly earlier chunk already holds a
      // hit, so the outcome is identical for any worker count.
      const unsigned __int128 radix = (unsigned __int128)sp.values.size();
      unsigned __int128 chunks = 1;
      while (chunks < (unsigned __int128)(64 * cfg.jobs) && chunks * radix <= sp.size)
        chunks *= radix;
      unsigned __int128 chunk_len = sp.size / chunks;
      std::atomic<unsigned long long> best_chunk{~0ULL};
      std::atomic<unsigned long long> first_timeout_chunk{~0ULL};
      std::vector<unsigned __int128> chunk_hits((size_t)chunks, kNoHit);
      const long long nchunks = (long long)chunks;
      auto atomic_min = [](std::atomic<unsigned long long>& a, unsigned long long v) {
        unsigned long long cur = a.load();
        while (v < cur && !a.compare_exchange_weak(cur, v)) {
        }
      };
#pragma omp parallel for num_threads(cfg.jobs) schedule(dynamic, 1)
      for (long long c = 0; c < nchunks; ++c) {
        if ((unsigned long long)c > best_chunk.load(std::memory_order_relaxed)) continue;
        bool local_timeout = false;
        auto hit = [&](const int* s, const int* e) {
          return kernel.eval(0, s, e, sp.k, (int)sp.atoms.size(), sp.top) < sp.top;
        };
        auto give_up = [&] {
          return best_chunk.load(std::memory_order_relaxed) < (unsigned long long)c;
        };
        unsigned __int128 from = (unsigned __int128)c * chunk_len;
        unsigned __int128 to = c + 1 == nchunks ? sp.size : from + chunk_len;
        unsigned __int128 h = scan_range(sp, from, to, deadline, local_timeout, give_up, hit);
        if (local_timeout) atomic_min(first_timeout_chunk, (unsigned long long)c);
        if (h != kNoHit) {
          chunk_hits[(size_t)c] = h;
          atomic_min(best_chunk, (unsigned long long)c);
        }
      }
      unsigned long long bc = best_chunk.load();
      unsigned long long tc = first_timeout_chunk.load();
      if (bc != ~0ULL && bc <= tc) {
        // Every chunk before the hit completed, so it is the least hit.
        found = chunk_hits[bc];
        out_of_time = false;
      } else {
        out_of_time = tc != ~0ULL;
      }
    }

    if (found != kNoHit) {
      std::vector<int> s(sp.k * sp.k, 0), e(std::max(1, sp.k * (int)sp.atoms.size()), 0);
      decode_position(sp, found, s.data(), e.data());
      GKModel m = model_from_ranks(sp, s.data(), e.data());
      TruthValue v = eval(m, m.worlds()[0], f);
      if (!(v < TruthValue::one()))
        throw Error("internal: kernel hit not confirmed by the exact evaluator");
      out.status = SearchStatus::CountermodelFound;
      out.countermodel = std::move(m);
      out.witness_world = "w0";
      out.witness_value = v;
      out.positions_scanned = scanned + (unsigned long long)(found + 1);
      return out;
    }
    scanned += (unsigned long long)sp.size;
  }

  if (out_of_time) {
    out.status = SearchStatus::BudgetExceeded;
    out.positions_scanned = scanned;
    return out;
  }
  // Validity verdicts need the finite-model-property argument, which covers
  // the constant-free diamond fragment (propositional formulas included)
  // on the automatic grid only.
  bool complete = diamond_mode && !cfg.grid_denominator && constants_of(f).empty() &&
                  cfg.max_worlds >= fmp_world_bound(f);
  out.status = complete ? SearchStatus::ExhaustedComplete : SearchStatus::ExhaustedBounded;
  out.positions_scanned = scanned;
  return out;
}

}  // namespace

SearchOutcome find_countermodel(const Formula& f, const SearchConfig& cfg) {
  return run_search(f, cfg, /*use_kernel=*/true);
}

SearchOutcome find_countermodel_reference(const Formula& f, const SearchConfig& cfg) {
  SearchConfig serial = cfg;
  serial.jobs = 1;
  return run_search(f, serial, /*use_kernel=*/false);
}

ExhaustiveResult exhaustive_validity(const Formula& f, int max_worlds, int grid_denominator,
                                     unsigned long long eval_cap) {
  if (max_worlds < 1) throw Error("max_worlds must be >= 1");
  if (grid_denominator < 1) throw Error("grid denominator must be >= 1");

  // Space size check up front.
  const std::vector<std::string> atoms = atoms_of(f);
  std::set<TruthValue> vals;
  for (int i = 0; i <= grid_denominator; ++i) vals.insert(TruthValue::ratio(i, grid_denominator));
  for (const auto& c : constants_of(f)) vals.insert(c);
  std::vector<TruthValue> values(vals.begin(), vals.end());
  const unsigned __int128 radix = (unsigned __int128)values.size();
  unsigned __int128 total_evals = 0;
  for (int k = 1; k <= max_worlds; ++k) {
    unsigned __int128 models = 1;
    const int slots = k * k + k * (int)atoms.size();
    for (int i = 0; i < slots; ++i) {
      models *= radix;
      if (models > (unsigned __int128)eval_cap * 4) break;
    }
    total_evals += models * (unsigned __int128)k;
  }
  if (total_evals > (unsigned __int128)eval_cap)
    throw Error("exhaustive_validity: search space exceeds the evaluation cap");

  ExhaustiveResult res;
  res.valid = true;
  res.min_value = TruthValue::one();

  for (int k = 1; k <= max_worlds; ++k) {
    std::vector<std::string> worlds;
    for (int i = 0; i < k; ++i) worlds.push_back("w" + std::to_string(i));
    const int a = (int)atoms.size();
    const int slots = k * k + k * a;
    std::vector<int> digits(slots, 0);
    bool done = false;
    while (!done) {
      std::map<std::pair<std::string, std::string>, TruthValue> smap;
      for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
          int d = digits[x * k + y];
          if (d != 0) smap.emplace(std::pair{worlds[x], worlds[y]}, values[d]);
        }
      std::map<std::string, std::map<std::string, TruthValue>> emap;
      for (int x = 0; x < k; ++x)
        for (int i = 0; i < a; ++i) {
          int d = digits[k * k + x * a + i];
          if (d != 0) emap[worlds[x]][atoms[i]] = values[d];
        }
      GKModel m(worlds, std::move(smap), std::move(emap));
      ++res.models;
      for (const auto& x : worlds) {
        TruthValue v = eval(m, x, f);
        if (v < res.min_value) {
          res.min_value = v;
          res.min_world = x;
          res.valid = res.min_value.is_one();
        }
      }

      done = true;
      for (int i = slots; i-- > 0;) {
        if (++digits[i] < (int)values.size()) {
          done = false;
          break;
        }
        digits[i] = 0;
      }
    }
  }
  res.valid = res.min_value.is_one();
  return res;
}

CanonicalizedModel canonicalize_model(const GKModel& m) {
  if (m.constants())
    throw Error("canonicalize_model: models with declared constants are not canonicalizable");
  std::set<TruthValue> vals{TruthValue::zero(), TruthValue::one()};
  for (const auto& v : m.all_values()) vals.insert(v);
  const int k = (int)m.worlds().size();
  const int a = (int)m.atoms().size();
  const int denominator = k * k + k * a + 1;

  std::vector<std::pair<TruthValue, TruthValue>> pairs;
  int rank = 0;
  const int last = (int)vals.size() - 1;
  for (const auto& v : vals) {
    if (rank == 0) pairs.emplace_back(v, TruthValue::zero());
    else if (rank == last) pairs.emplace_back(v, TruthValue::one());
    else pairs.emplace_back(v, TruthValue::ratio(rank, denominator));
    ++rank;
  }
  // A one-value set {0} cannot happen: 0 and 1 are always inserted.
  OrderMap map(std::move(pairs));
  GKModel transformed = transform_model(m, map);
  return {std::move(transformed), std::move(map)};
}

}  // namespace gkml
