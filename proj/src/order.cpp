#include "misere/order.hpp"

#include <unordered_map>

namespace misere {

namespace {

struct OrderCache {
  std::unordered_map<Engine::Key3, TriVerdict, Engine::Key3Hash> geq;
};

OrderCache& cache(Engine& eng) { return eng.cache_slot<OrderCache>(Engine::OrderCacheSlot); }

// Disjunction: ProvenTrue wins, else best BoundedTrue, else ProvenFalse.
void fold_or(TriVerdict& best, const TriVerdict& v) {
  if (v.kind == TriVerdict::Kind::ProvenTrue) {
    best = v;
  } else if (v.kind == TriVerdict::Kind::BoundedTrue &&
             best.kind == TriVerdict::Kind::ProvenFalse) {
    best = v;
  } else if (v.kind == TriVerdict::Kind::BoundedTrue &&
             best.kind == TriVerdict::Kind::BoundedTrue) {
    best.bound = std::max(best.bound, v.bound);
  }
}

}  // namespace

std::string verdict_text(const TriVerdict& v) {
  switch (v.kind) {
    case TriVerdict::Kind::ProvenTrue: return "proven-true";
    case TriVerdict::Kind::BoundedTrue: return "bounded-true(" + std::to_string(v.bound) + ")";
    case TriVerdict::Kind::ProvenFalse:
      return std::string("proven-false(") + (v.condition ? v.condition : '?') + ")";
  }
  return "?";
}

TriVerdict geq(Engine& eng, const UniverseSpec& u, AugId g, AugId h) {
  std::uint32_t fp = eng.fingerprint_index(fingerprint(eng, u));
  auto& c = cache(eng);
  Engine::Key3 key{fp, g.raw, h.raw};
  if (auto it = c.geq.find(key); it != c.geq.end()) return it->second;

  bool bounded = false;
  int bound = 0;
  TriVerdict result{TriVerdict::Kind::ProvenTrue};

  const FormNode& gn = eng.node(g);
  const FormNode& hn = eng.node(h);

  // (a)
  for (AugId gR : gn.rights) {
    TriVerdict best{TriVerdict::Kind::ProvenFalse};
    for (AugId hR : hn.rights) {
      fold_or(best, geq(eng, u, gR, hR));
      if (best.proven_true()) break;
    }
    if (!best.proven_true()) {
      for (AugId gRL : eng.node(gR).lefts) {
        fold_or(best, geq(eng, u, gRL, h));
        if (best.proven_true()) break;
      }
    }
    if (best.proven_false()) {
      result = {TriVerdict::Kind::ProvenFalse, 0, 'a', gR};
      c.geq.emplace(key, result);
      return result;
    }
    if (best.kind == TriVerdict::Kind::BoundedTrue) {
      bounded = true;
      bound = std::max(bound, best.bound);
    }
  }

  // (b)
  for (AugId hL : hn.lefts) {
    TriVerdict best{TriVerdict::Kind::ProvenFalse};
    for (AugId gL : gn.lefts) {
      fold_or(best, geq(eng, u, gL, hL));
      if (best.proven_true()) break;
    }
    if (!best.proven_true()) {
      for (AugId hLR : eng.node(hL).rights) {
        fold_or(best, geq(eng, u, g, hLR));
        if (best.proven_true()) break;
      }
    }
    if (best.proven_false()) {
      result = {TriVerdict::Kind::ProvenFalse, 0, 'b', hL};
      c.geq.emplace(key, result);
      return result;
    }
    if (best.kind == TriVerdict::Kind::BoundedTrue) {
      bounded = true;
      bound = std::max(bound, best.bound);
    }
  }

  // (c)
  if (eng.end_like(h).left) {
    StrongVerdict sv = is_left_strong(eng, u, g);
    if (sv.kind == StrongVerdict::Kind::ProvenNotStrong) {
      result = {TriVerdict::Kind::ProvenFalse, 0, 'c', sv.witness};
      c.geq.emplace(key, result);
      return result;
    }
    if (sv.kind == StrongVerdict::Kind::BoundedStrong) {
      bounded = true;
      bound = std::max(bound, sv.bound);
    }
  }

  // (d)
  if (eng.end_like(g).right) {
    StrongVerdict sv = is_right_strong(eng, u, h);
    if (sv.kind == StrongVerdict::Kind::ProvenNotStrong) {
      result = {TriVerdict::Kind::ProvenFalse, 0, 'd', sv.witness};
      c.geq.emplace(key, result);
      return result;
    }
    if (sv.kind == StrongVerdict::Kind::BoundedStrong) {
      bounded = true;
      bound = std::max(bound, sv.bound);
    }
  }

  if (bounded) result = {TriVerdict::Kind::BoundedTrue, bound};
  c.geq.emplace(key, result);
  return result;
}

TriVerdict equiv(Engine& eng, const UniverseSpec& u, AugId g, AugId h) {
  TriVerdict ab = geq(eng, u, g, h);
  if (ab.proven_false()) return ab;
  TriVerdict ba = geq(eng, u, h, g);
  if (ba.proven_false()) return ba;
  if (ab.proven_true() && ba.proven_true()) return {TriVerdict::Kind::ProvenTrue};
  return {TriVerdict::Kind::BoundedTrue, std::max(ab.bound, ba.bound)};
}

TriVerdict strictly_greater(Engine& eng, const UniverseSpec& u, AugId g, AugId h) {
  TriVerdict ab = geq(eng, u, g, h);
  if (ab.proven_false()) return ab;
  TriVerdict ba = geq(eng, u, h, g);
  if (ba.proven_true()) return {TriVerdict::Kind::ProvenFalse, 0, '=', h};
  if (ab.proven_true() && ba.proven_false()) return {TriVerdict::Kind::ProvenTrue};
  return {TriVerdict::Kind::BoundedTrue, std::max(ab.bound, ba.bound)};
}

TriVerdict comparable(Engine& eng, const UniverseSpec& u, AugId g, AugId h) {
  TriVerdict ab = geq(eng, u, g, h);
  if (ab.proven_true()) return ab;
  TriVerdict ba = geq(eng, u, h, g);
  if (ba.proven_true()) return ba;
  if (ab.non_false() || ba.non_false())
    return {TriVerdict::Kind::BoundedTrue, std::max(ab.bound, ba.bound)};
  return {TriVerdict::Kind::ProvenFalse, 0, 'i', h};
}

OracleResult oracle_geq(Engine& eng, const std::vector<GameId>& domain, AugId g, AugId h,
                        std::size_t max_items) {
  OracleResult res;
  for (GameId x : domain) {
    if (res.checked >= max_items) break;
    ++res.checked;
    OutcomePair og = eng.outcome(eng.sum(g, x));
    OutcomePair oh = eng.outcome(eng.sum(h, x));
    if (!outcome_geq(og, oh)) {
      res.holds = false;
      res.witness = x;
      return res;
    }
  }
  return res;
}

bool maintenance_holds(Engine& eng, const std::vector<GameId>& domain, AugId g, AugId h,
                       std::size_t max_items) {
  const FormNode& gn = eng.node(g);
  const FormNode& hn = eng.node(h);
  auto holds = [&](AugId x, AugId y) { return oracle_geq(eng, domain, x, y, max_items).holds; };
  for (AugId gR : gn.rights) {
    bool ok = false;
    for (AugId hR : hn.rights)
      if (holds(gR, hR)) {
        ok = true;
        break;
      }
    if (!ok)
      for (AugId gRL : eng.node(gR).lefts)
        if (holds(gRL, h)) {
          ok = true;
          break;
        }
    if (!ok) return false;
  }
  for (AugId hL : hn.lefts) {
    bool ok = false;
    for (AugId gL : gn.lefts)
      if (holds(gL, hL)) {
        ok = true;
        break;
      }
    if (!ok)
      for (AugId hLR : eng.node(hL).rights)
        if (holds(g, hLR)) {
          ok = true;
          break;
        }
    if (!ok) return false;
  }
  return true;
}

TriVerdict proviso_holds(Engine& eng, const UniverseSpec& u, AugId g, AugId h) {
  bool bounded = false;
  int bound = 0;
  if (eng.end_like(h).left) {
    StrongVerdict sv = is_left_strong(eng, u, g);
    if (sv.kind == StrongVerdict::Kind::ProvenNotStrong)
      return {TriVerdict::Kind::ProvenFalse, 0, 'c', sv.witness};
    if (sv.kind == StrongVerdict::Kind::BoundedStrong) {
      bounded = true;
      bound = std::max(bound, sv.bound);
    }
  }
  if (eng.end_like(g).right) {
    StrongVerdict sv = is_right_strong(eng, u, h);
    if (sv.kind == StrongVerdict::Kind::ProvenNotStrong)
      return {TriVerdict::Kind::ProvenFalse, 0, 'd', sv.witness};
    if (sv.kind == StrongVerdict::Kind::BoundedStrong) {
      bounded = true;
      bound = std::max(bound, sv.bound);
    }
  }
  if (bounded) return {TriVerdict::Kind::BoundedTrue, bound};
  return {TriVerdict::Kind::ProvenTrue};
}

bool reverify_failure(Engine& eng, const UniverseSpec& u, AugId g, AugId h, const TriVerdict& v) {
  if (!v.proven_false()) return false;
  switch (v.condition) {
    case 'a': {
      const FormNode& hn = eng.node(h);
      for (AugId hR : hn.rights)
        if (geq(eng, u, v.witness, hR).non_false()) return false;
      for (AugId gRL : eng.node(v.witness).lefts)
        if (geq(eng, u, gRL, h).non_false()) return false;
      return true;
    }
    case 'b': {
      const FormNode& gn = eng.node(g);
      for (AugId gL : gn.lefts)
        if (geq(eng, u, gL, v.witness).non_false()) return false;
      for (AugId hLR : eng.node(v.witness).rights)
        if (geq(eng, u, g, hLR).non_false()) return false;
      return true;
    }
    case 'c':
      return eng.end_like(h).left &&
             eng.outcome(eng.sum(g, v.witness)).left_start == Player::Right;
    case 'd':
      return eng.end_like(g).right &&
             eng.outcome(eng.sum(h, v.witness)).right_start == Player::Left;
    default:
      return false;
  }
}

}  // namespace misere
