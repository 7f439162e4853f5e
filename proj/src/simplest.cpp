#include "misere/simplest.hpp"

#include <unordered_map>

namespace misere {

namespace {

struct SimplestEntry {
  AugId result;
  std::vector<ReductionStep> steps;
  bool exact = true;
  int bound = 0;
};

struct SimplestCache {
  std::unordered_map<Engine::Key2, SimplestEntry, Engine::Key2Hash> memo;
};

SimplestCache& cache(Engine& eng) { return eng.cache_slot<SimplestCache>(Engine::SimplestCacheSlot); }

struct StepSink {
  ReductionTrace* trace;
  void mark(const TriVerdict& v) {
    if (trace && v.kind == TriVerdict::Kind::BoundedTrue) {
      trace->exact = false;
      trace->bound = std::max(trace->bound, v.bound);
    }
  }
  void push(ReductionStep s) {
    if (trace) trace->steps.push_back(s);
  }
};

bool justified(const TriVerdict& v, ReduceMode mode) {
  if (mode == ReduceMode::Exact) return v.proven_true();
  return v.non_false();
}

AugId rebuild(Engine& eng, const FormNode& n, std::vector<AugId> lefts, std::vector<AugId> rights,
              bool lt, bool rt) {
  (void)n;
  return eng.intern(std::move(lefts), std::move(rights), lt, rt);
}

// One domination pass over one side. Keeps a maximal antichain, preferring
// earlier options in canonical order among equivalents.
AugId dominated_pass(Engine& eng, const UniverseSpec& u, AugId a, Side side, ReduceMode mode,
                     StepSink& sink) {
  AugId cur = a;
  while (true) {
    const FormNode& n = eng.node(cur);
    const std::vector<AugId>& opts = side == Side::Left ? n.lefts : n.rights;
    AugId victim{}, dominator{};
    bool found = false;
    for (std::size_t i = 0; i < opts.size() && !found; ++i) {
      for (std::size_t j = 0; j < opts.size() && !found; ++j) {
        if (i == j) continue;
        // Left prefers larger options, Right smaller.
        TriVerdict v = side == Side::Left ? geq(eng, u, opts[j], opts[i])
                                          : geq(eng, u, opts[i], opts[j]);
        if (!justified(v, mode)) continue;
        // among mutually equivalent options keep the canonically first
        if (j > i) {
          TriVerdict back = side == Side::Left ? geq(eng, u, opts[i], opts[j])
                                               : geq(eng, u, opts[j], opts[i]);
          if (justified(back, mode)) continue;
        }
        sink.mark(v);
        victim = opts[i];
        dominator = opts[j];
        found = true;
      }
    }
    if (!found) return cur;
    std::vector<AugId> nl = n.lefts, nr = n.rights;
    auto& list = side == Side::Left ? nl : nr;
    std::erase(list, victim);
    AugId next = rebuild(eng, n, std::move(nl), std::move(nr), n.left_tomb, n.right_tomb);
    sink.push({ReductionStep::Kind::RemoveDominated, side, cur, next, victim, dominator});
    cur = next;
  }
}

// One reversibility pass over one side. A Left option l is reversible
// through the first ordinary Right option t of l with cur >= t; if t is
// Left end-like the option end-reverses to a tombstone, otherwise l is
// replaced by t's ordinary Left options. Mirror for the Right.
AugId bypass_pass(Engine& eng, const UniverseSpec& u, AugId a, Side side, ReduceMode mode,
                  StepSink& sink) {
  AugId cur = a;
  bool changed = true;
  while (changed) {
    changed = false;
    const FormNode& n = eng.node(cur);
    const std::vector<AugId>& opts = side == Side::Left ? n.lefts : n.rights;
    for (AugId opt : opts) {
      const FormNode& on = eng.node(opt);
      const std::vector<AugId>& throughs = side == Side::Left ? on.rights : on.lefts;
      for (AugId t : throughs) {
        TriVerdict v = side == Side::Left ? geq(eng, u, cur, t) : geq(eng, u, t, cur);
        if (!justified(v, mode)) continue;
        sink.mark(v);
        const FormNode& tn = eng.node(t);
        bool t_end_like = side == Side::Left ? eng.end_like(t).left : eng.end_like(t).right;
        std::vector<AugId> nl = n.lefts, nr = n.rights;
        bool lt = n.left_tomb, rt = n.right_tomb;
        auto& list = side == Side::Left ? nl : nr;
        std::erase(list, opt);
        if (t_end_like) {
          (side == Side::Left ? lt : rt) = true;
        } else {
          const std::vector<AugId>& repl = side == Side::Left ? tn.lefts : tn.rights;
          list.insert(list.end(), repl.begin(), repl.end());
        }
        AugId next = rebuild(eng, n, std::move(nl), std::move(nr), lt, rt);
        if (next != cur) {
          sink.push({t_end_like ? ReductionStep::Kind::EndReverse : ReductionStep::Kind::Bypass,
                     side, cur, next, opt, t});
          cur = next;
          changed = true;
        }
        break;  // first witness in canonical order decides this option
      }
      if (changed) break;  // rescan the rebuilt node
    }
  }
  return cur;
}

AugId tombstone_pass(Engine& eng, const UniverseSpec& u, AugId a, Side side, ReduceMode mode,
                     StepSink& sink) {
  const FormNode& n = eng.node(a);
  bool tomb = side == Side::Left ? n.left_tomb : n.right_tomb;
  if (!tomb) return a;
  bool lt = n.left_tomb, rt = n.right_tomb;
  (side == Side::Left ? lt : rt) = false;
  AugId candidate = rebuild(eng, n, std::vector<AugId>(n.lefts), std::vector<AugId>(n.rights), lt, rt);
  TriVerdict v = equiv(eng, u, a, candidate);
  if (!justified(v, mode)) return a;
  sink.mark(v);
  sink.push({ReductionStep::Kind::DropTombstone, side, a, candidate});
  return candidate;
}

AugId simplest_rec(Engine& eng, const UniverseSpec& u, AugId a, ReduceMode mode,
                   ReductionTrace& trace, std::uint32_t fp_mode);

AugId simplify_children(Engine& eng, const UniverseSpec& u, AugId a, ReduceMode mode,
                        ReductionTrace& trace, std::uint32_t fp_mode) {
  const FormNode& n = eng.node(a);
  std::vector<AugId> nl, nr;
  nl.reserve(n.lefts.size());
  nr.reserve(n.rights.size());
  bool same = true;
  for (AugId l : n.lefts) {
    AugId s = simplest_rec(eng, u, l, mode, trace, fp_mode);
    same = same && s == l;
    nl.push_back(s);
  }
  for (AugId r : n.rights) {
    AugId s = simplest_rec(eng, u, r, mode, trace, fp_mode);
    same = same && s == r;
    nr.push_back(s);
  }
  if (same) return a;
  return rebuild(eng, eng.node(a), std::move(nl), std::move(nr), n.left_tomb, n.right_tomb);
}

AugId simplest_rec(Engine& eng, const UniverseSpec& u, AugId a, ReduceMode mode,
                   ReductionTrace& trace, std::uint32_t fp_mode) {
  auto& c = cache(eng);
  Engine::Key2 key{fp_mode, a.raw};
  if (auto it = c.memo.find(key); it != c.memo.end()) {
    const SimplestEntry& e = it->second;
    trace.steps.insert(trace.steps.end(), e.steps.begin(), e.steps.end());
    trace.exact = trace.exact && e.exact;
    trace.bound = std::max(trace.bound, e.bound);
    return e.result;
  }

  ReductionTrace local;
  StepSink sink{&local};
  AugId cur = simplify_children(eng, u, a, mode, local, fp_mode);
  while (true) {
    AugId before = cur;
    cur = dominated_pass(eng, u, cur, Side::Left, mode, sink);
    cur = dominated_pass(eng, u, cur, Side::Right, mode, sink);
    cur = bypass_pass(eng, u, cur, Side::Left, mode, sink);
    cur = bypass_pass(eng, u, cur, Side::Right, mode, sink);
    cur = tombstone_pass(eng, u, cur, Side::Left, mode, sink);
    cur = tombstone_pass(eng, u, cur, Side::Right, mode, sink);
    if (cur == before) break;
  }

  c.memo.emplace(key, SimplestEntry{cur, local.steps, local.exact, local.bound});
  trace.steps.insert(trace.steps.end(), local.steps.begin(), local.steps.end());
  trace.exact = trace.exact && local.exact;
  trace.bound = std::max(trace.bound, local.bound);
  return cur;
}

}  // namespace

AugId remove_dominated(Engine& eng, const UniverseSpec& u, AugId a, ReduceMode mode,
                       ReductionTrace* trace) {
  ReductionTrace scratch;
  StepSink sink{trace ? trace : &scratch};
  AugId cur = dominated_pass(eng, u, a, Side::Left, mode, sink);
  return dominated_pass(eng, u, cur, Side::Right, mode, sink);
}

AugId bypass_reversible(Engine& eng, const UniverseSpec& u, AugId a, ReduceMode mode,
                        ReductionTrace* trace) {
  ReductionTrace scratch;
  StepSink sink{trace ? trace : &scratch};
  AugId cur = bypass_pass(eng, u, a, Side::Left, mode, sink);
  return bypass_pass(eng, u, cur, Side::Right, mode, sink);
}

AugId prune_tombstones(Engine& eng, const UniverseSpec& u, AugId a, ReduceMode mode,
                       ReductionTrace* trace) {
  ReductionTrace scratch;
  StepSink sink{trace ? trace : &scratch};
  AugId cur = tombstone_pass(eng, u, a, Side::Left, mode, sink);
  return tombstone_pass(eng, u, cur, Side::Right, mode, sink);
}

SimplestResult simplest_form(Engine& eng, const UniverseSpec& u, AugId a, ReduceMode mode) {
  BudgetScope scope(eng, u.node_budget);
  std::uint32_t fp = eng.fingerprint_index(fingerprint(eng, u));
  std::uint32_t fp_mode = fp * 2 + (mode == ReduceMode::BoundedAssumed ? 1 : 0);
  SimplestResult res;
  res.form = simplest_rec(eng, u, a, mode, res.trace, fp_mode);
  if (equiv(eng, u, a, res.form).proven_false())
    throw std::logic_error("simplest form failed to preserve equivalence");
  return res;
}

AugId replay_trace(Engine& eng, AugId input, const ReductionTrace& trace) {
  auto substitute = [&](AugId root, AugId from, AugId to) {
    std::unordered_map<std::uint32_t, AugId> memo;
    auto rec = [&](auto&& self, AugId x) -> AugId {
      if (x == from) return to;
      if (auto it = memo.find(x.raw); it != memo.end()) return it->second;
      const FormNode& n = eng.node(x);
      std::vector<AugId> nl, nr;
      nl.reserve(n.lefts.size());
      nr.reserve(n.rights.size());
      bool same = true;
      for (AugId l : n.lefts) {
        AugId s = self(self, l);
        same = same && s == l;
        nl.push_back(s);
      }
      for (AugId r : n.rights) {
        AugId s = self(self, r);
        same = same && s == r;
        nr.push_back(s);
      }
      AugId out = same ? x : eng.intern(std::move(nl), std::move(nr), n.left_tomb, n.right_tomb);
      memo.emplace(x.raw, out);
      return out;
    };
    return rec(rec, root);
  };
  AugId cur = input;
  for (const ReductionStep& s : trace.steps) cur = substitute(cur, s.at, s.result);
  return cur;
}

const char* step_name(ReductionStep::Kind k) {
  switch (k) {
    case ReductionStep::Kind::RemoveDominated: return "remove-dominated";
    case ReductionStep::Kind::Bypass: return "bypass";
    case ReductionStep::Kind::EndReverse: return "end-reverse";
    case ReductionStep::Kind::DropTombstone: return "drop-tombstone";
  }
  return "?";
}

}  // namespace misere
