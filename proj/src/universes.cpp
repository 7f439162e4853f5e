#include "misere/universes.hpp"

#include "misere/enumerate.hpp"
#include "misere/notation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace misere {

namespace {

struct UniverseCache {
  std::unordered_map<std::uint64_t, std::vector<GameId>> ends;  // fp << 8 | bound
  std::unordered_map<std::uint32_t, WeakCertificate> weakening;
  std::unordered_map<Engine::Key2, StrongVerdict, Engine::Key2Hash> strong_left;
};

UniverseCache& cache(Engine& eng) { return eng.cache_slot<UniverseCache>(Engine::UniverseCacheSlot); }

void collect_subpositions(const Engine& eng, AugId a, std::unordered_set<std::uint32_t>& seen) {
  if (!seen.insert(a.raw).second) return;
  const FormNode& n = eng.node(a);
  for (AugId l : n.lefts) collect_subpositions(eng, l, seen);
  for (AugId r : n.rights) collect_subpositions(eng, r, seen);
}

std::vector<GameId> sort_by_birthday(Engine& eng, std::set<GameId> forms) {
  std::vector<GameId> out(forms.begin(), forms.end());
  std::sort(out.begin(), out.end(), [&](GameId a, GameId b) {
    int ba = birthday(eng, a), bb = birthday(eng, b);
    if (ba != bb) return ba < bb;
    return a.raw < b.raw;
  });
  return out;
}

// Multiset sums of atoms with total birthday <= bound.
std::vector<GameId> additive_closure(Engine& eng, const std::vector<GameId>& atoms, int bound) {
  std::set<GameId> out;
  out.insert(eng.zero());
  auto rec = [&](auto&& self, std::size_t i, GameId acc, int budget) -> void {
    for (std::size_t k = i; k < atoms.size(); ++k) {
      int bd = birthday(eng, atoms[k]);
      if (bd <= 0 || bd > budget) continue;
      GameId next = sum(eng, acc, atoms[k]);
      out.insert(next);
      self(self, k, next, budget - bd);
    }
  };
  rec(rec, 0, eng.zero(), bound);
  return sort_by_birthday(eng, std::move(out));
}

// Left-end subpositions of the generators and of their conjugates.
std::vector<GameId> end_closure_atoms(Engine& eng, const UniverseSpec& u) {
  std::unordered_set<std::uint32_t> seen;
  for (GameId g : u.generators) {
    collect_subpositions(eng, g, seen);
    collect_subpositions(eng, eng.conjugate(g), seen);
  }
  std::set<GameId> atoms;
  for (std::uint32_t raw : seen) {
    const FormNode& n = eng.node(AugId{raw});
    if (n.plain && n.lefts.empty() && raw != 0) atoms.insert(GameId{raw});
  }
  return {atoms.begin(), atoms.end()};
}

}  // namespace

std::vector<GameId> additive_closure_members(Engine& eng, const std::vector<GameId>& atoms,
                                             int max_birthday) {
  return additive_closure(eng, atoms, max_birthday);
}

UniverseSpec UniverseSpec::end_closure(Engine& eng, std::vector<GameId> gens) {
  UniverseSpec u;
  u.kind = UniverseKind::EndClosure;
  for (GameId g : gens) {
    const FormNode& n = eng.node(g);
    if (!n.plain || !n.lefts.empty())
      throw std::invalid_argument("end-closure generators must be plain Left ends");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  u.generators = std::move(gens);
  return u;
}

std::string universe_name(const Engine& eng, const UniverseSpec& u) {
  switch (u.kind) {
    case UniverseKind::Dicot: return "D";
    case UniverseKind::DeadEnding: return "E";
    case UniverseKind::FullMisere: return "M";
    case UniverseKind::EndClosure: {
      std::vector<std::string> gens;
      gens.reserve(u.generators.size());
      for (GameId g : u.generators) gens.push_back(print(eng, g));
      std::sort(gens.begin(), gens.end());  // text order is stable across runs
      std::string s = "cl(";
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ';';
        s += gens[i];
      }
      s += ')';
      return s;
    }
  }
  return "?";
}

std::string fingerprint(const Engine& eng, const UniverseSpec& u) {
  return universe_name(eng, u) + "|b" + std::to_string(u.end_birthday_bound) + "|w" +
         std::to_string(u.enum_width);
}

UniverseSpec parse_universe(Engine& eng, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "D") return UniverseSpec::dicot();
  if (s == "E") return UniverseSpec::dead_ending();
  if (s == "M") return UniverseSpec::full_misere();
  if (s.rfind("cl(", 0) == 0 && s.back() == ')') {
    std::string body = s.substr(3, s.size() - 4);
    std::vector<GameId> gens;
    int depth = 0;
    std::string part;
    auto flush = [&]() {
      if (part.empty()) throw std::invalid_argument("empty generator in cl(...)");
      gens.push_back(read_plain(eng, part));
      part.clear();
    };
    for (char c : body) {
      if (c == '{' || c == '(') ++depth;
      if (c == '}' || c == ')') --depth;
      if (c == ';' && depth == 0) {
        flush();
        continue;
      }
      part += c;
    }
    if (!part.empty()) flush();
    if (gens.empty()) throw std::invalid_argument("cl(...) needs at least one generator");
    return UniverseSpec::end_closure(eng, std::move(gens));
  }
  throw std::invalid_argument("unknown universe '" + text + "' (expected D, E, M, or cl(...))");
}

std::vector<GameId> left_ends_up_to(Engine& eng, const UniverseSpec& u, int b) {
  std::uint32_t fp = eng.fingerprint_index(fingerprint(eng, u));
  std::uint64_t key = std::uint64_t(fp) << 8 | std::uint8_t(b);
  auto& c = cache(eng);
  if (auto it = c.ends.find(key); it != c.ends.end()) return it->second;

  BudgetScope scope(eng, u.node_budget);
  std::vector<GameId> out;
  switch (u.kind) {
    case UniverseKind::Dicot:
      out = {eng.zero()};
      break;
    case UniverseKind::DeadEnding:
      out = dead_left_ends(eng, b);
      break;
    case UniverseKind::FullMisere: {
      std::vector<GameId> pool = b >= 1 ? all_forms(eng, b - 1, u.enum_width) : std::vector<GameId>{};
      std::set<GameId> ends;
      ends.insert(eng.zero());
      for (const auto& rs : option_subsets(pool, u.enum_width, false))
        ends.insert(mk_game(eng, {}, rs));
      out = sort_by_birthday(eng, std::move(ends));
      break;
    }
    case UniverseKind::EndClosure:
      out = additive_closure(eng, end_closure_atoms(eng, u), b);
      break;
  }
  c.ends.emplace(key, out);
  return out;
}

bool left_end_enumeration_complete(const UniverseSpec& u) {
  return u.kind == UniverseKind::Dicot;  // complete at every bound, not just up to it
}

std::vector<GameId> members_up_to(Engine& eng, const UniverseSpec& u, int b, int width) {
  BudgetScope scope(eng, u.node_budget);
  switch (u.kind) {
    case UniverseKind::Dicot:
      return dicot_forms(eng, b, width);
    case UniverseKind::FullMisere:
      return all_forms(eng, b, width);
    case UniverseKind::DeadEnding: {
      std::vector<GameId> out;
      for (GameId g : all_forms(eng, b, width))
        if (eng.node(g).dead_ending) out.push_back(g);
      return out;
    }
    case UniverseKind::EndClosure: {
      // closure iteration under sum, conjugation, heredity and dicotic
      // construction, capped by birthday and width
      std::set<GameId> pool;
      std::unordered_set<std::uint32_t> seen;
      for (GameId g : u.generators) {
        collect_subpositions(eng, g, seen);
        collect_subpositions(eng, eng.conjugate(g), seen);
      }
      for (std::uint32_t raw : seen)
        if (eng.node(AugId{raw}).birthday <= b) pool.insert(GameId{raw});
      pool.insert(eng.zero());
      bool changed = true;
      while (changed) {
        changed = false;
        std::vector<GameId> cur(pool.begin(), pool.end());
        auto add = [&](GameId g) {
          if (birthday(eng, g) <= b && pool.insert(g).second) changed = true;
        };
        for (GameId g : cur) add(conjugate(eng, g));
        for (GameId g : cur)
          for (GameId h : cur)
            if (birthday(eng, g) + birthday(eng, h) <= b) add(sum(eng, g, h));
        auto sides = option_subsets(cur, width, false);
        for (const auto& ls : sides) {
          int bl = 0;
          for (GameId g : ls) bl = std::max(bl, birthday(eng, g));
          if (bl + 1 > b) continue;
          for (const auto& rs : sides) {
            int br = bl;
            for (GameId g : rs) br = std::max(br, birthday(eng, g));
            if (br + 1 <= b) add(mk_game(eng, ls, rs));
          }
        }
      }
      return sort_by_birthday(eng, std::move(pool));
    }
  }
  return {};
}

bool member(Engine& eng, const UniverseSpec& u, GameId g) {
  switch (u.kind) {
    case UniverseKind::Dicot:
      return eng.node(g).dicot;
    case UniverseKind::DeadEnding:
      return eng.node(g).dead_ending;
    case UniverseKind::FullMisere:
      return true;
    case UniverseKind::EndClosure: {
      // Universes are characterised by their Left ends: g belongs iff every
      // Left-end subposition lies in the end closure and every Right-end
      // subposition conjugates into it. The closure enumeration is complete
      // up to g's birthday.
      UniverseSpec probe = u;
      probe.end_birthday_bound = birthday(eng, g);
      std::vector<GameId> ends = left_ends_up_to(eng, probe, probe.end_birthday_bound);
      std::unordered_set<std::uint32_t> end_set;
      for (GameId e : ends) end_set.insert(e.raw);
      std::unordered_set<std::uint32_t> subs;
      collect_subpositions(eng, g, subs);
      for (std::uint32_t raw : subs) {
        const FormNode& n = eng.node(AugId{raw});
        if (n.lefts.empty() && !end_set.count(raw)) return false;
        if (n.rights.empty() && !end_set.count(eng.conjugate(AugId{raw}).raw)) return false;
      }
      return true;
    }
  }
  return false;
}

WeakCertificate contains_weakening_end(Engine& eng, const UniverseSpec& u) {
  std::uint32_t fp = eng.fingerprint_index(fingerprint(eng, u));
  auto& c = cache(eng);
  if (auto it = c.weakening.find(fp); it != c.weakening.end()) return it->second;

  WeakCertificate cert{WeakCertificate::Kind::Unknown, {}, {}, u.end_birthday_bound};
  if (u.kind == UniverseKind::FullMisere) {
    cert = {WeakCertificate::Kind::FullMisereRule, {}, {}, 0};
  } else {
    // A Left end with a Right option to an integer n >= 2 lets Right give
    // back more moves than Left can answer, which forces weakness. Scan the
    // generator atoms first: they are ends of the universe whatever their
    // birthday, so the bound cannot hide them.
    std::vector<GameId> candidates;
    if (u.kind == UniverseKind::EndClosure) candidates = end_closure_atoms(eng, u);
    for (GameId x : left_ends_up_to(eng, u, u.end_birthday_bound)) candidates.push_back(x);
    for (GameId x : candidates) {
      for (AugId r : eng.node(x).rights) {
        auto v = as_integer(eng, r);
        if (v && *v >= 2) {
          cert = {WeakCertificate::Kind::WeakeningEnd, x, {}, 0};
          break;
        }
      }
      if (cert.kind == WeakCertificate::Kind::WeakeningEnd) break;
    }
  }
  c.weakening.emplace(fp, cert);
  return cert;
}

StrongRegime strong_regime(Engine& eng, const UniverseSpec& u) {
  if (u.kind == UniverseKind::FullMisere) return StrongRegime::ExactWeak;
  if (u.kind == UniverseKind::Dicot) return StrongRegime::ExactDicot;
  WeakCertificate cert = contains_weakening_end(eng, u);
  return cert.kind == WeakCertificate::Kind::WeakeningEnd ? StrongRegime::ExactWeak
                                                          : StrongRegime::Bounded;
}

namespace {

// Witness for the exact-weak regime: n copies of the weakening end (or
// {.|n} in full misere) beat any form that is not Left end-like.
GameId weak_witness(Engine& eng, const UniverseSpec& u, AugId a) {
  int n = std::max(1, eng.node(a).birthday);
  GameId x{};
  if (u.kind == UniverseKind::FullMisere) {
    x = mk_game(eng, {}, {integer(eng, n)});
  } else {
    GameId w = contains_weakening_end(eng, u).end;
    x = eng.zero();
    for (int i = 0; i < n; ++i) x = sum(eng, x, w);
  }
  if (eng.outcome(eng.sum(a, x)).left_start != Player::Right)
    throw std::logic_error("weak-regime witness failed to verify");
  return x;
}

}  // namespace

StrongVerdict is_left_strong(Engine& eng, const UniverseSpec& u, AugId a) {
  std::uint32_t fp = eng.fingerprint_index(fingerprint(eng, u));
  auto& c = cache(eng);
  Engine::Key2 key{fp, a.raw};
  if (auto it = c.strong_left.find(key); it != c.strong_left.end()) return it->second;

  BudgetScope scope(eng, u.node_budget);
  StrongVerdict v{StrongVerdict::Kind::BoundedStrong, {}, u.end_birthday_bound};
  switch (strong_regime(eng, u)) {
    case StrongRegime::ExactWeak:
      if (eng.end_like(a).left)
        v = {StrongVerdict::Kind::ProvenStrong, {}, 0};
      else
        v = {StrongVerdict::Kind::ProvenNotStrong, weak_witness(eng, u, a), 0};
      break;
    case StrongRegime::ExactDicot:
      if (eng.outcome(a).left_start == Player::Left)
        v = {StrongVerdict::Kind::ProvenStrong, {}, 0};
      else
        v = {StrongVerdict::Kind::ProvenNotStrong, eng.zero(), 0};
      break;
    case StrongRegime::Bounded: {
      for (GameId x : left_ends_up_to(eng, u, u.end_birthday_bound)) {
        if (eng.outcome(eng.sum(a, x)).left_start == Player::Right) {
          v = {StrongVerdict::Kind::ProvenNotStrong, x, 0};
          break;
        }
      }
      break;
    }
  }
  c.strong_left.emplace(key, v);
  return v;
}

StrongVerdict is_right_strong(Engine& eng, const UniverseSpec& u, AugId a) {
  StrongVerdict v = is_left_strong(eng, u, eng.conjugate(a));
  if (v.kind == StrongVerdict::Kind::ProvenNotStrong)
    v.witness = conjugate(eng, v.witness);  // a Right end of the universe
  return v;
}

WeakCertificate is_weak(Engine& eng, const UniverseSpec& u) {
  WeakCertificate cert = contains_weakening_end(eng, u);
  if (cert.kind != WeakCertificate::Kind::Unknown) return cert;
  if (strong_regime(eng, u) == StrongRegime::Bounded)
    return {WeakCertificate::Kind::Unknown, {}, {}, u.end_birthday_bound};
  for (GameId g : members_up_to(eng, u, 2, 2)) {
    if (eng.end_like(g).left) continue;
    if (is_left_strong(eng, u, g).kind == StrongVerdict::Kind::ProvenStrong)
      return {WeakCertificate::Kind::NotWeak, {}, g, 0};
  }
  return {WeakCertificate::Kind::Unknown, {}, {}, u.end_birthday_bound};
}

}  // namespace misere
