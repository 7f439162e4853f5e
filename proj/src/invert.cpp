#include "misere/invert.hpp"

#include <algorithm>
#include <unordered_map>

namespace misere {

namespace {

struct InvertCache {
  std::unordered_map<std::uint32_t, bool> disint, stark, super;
  std::unordered_map<Engine::Key2, TriVerdict, Engine::Key2Hash> invertible;
};

InvertCache& cache(Engine& eng) { return eng.cache_slot<InvertCache>(Engine::InvertCacheSlot); }

bool pred_rec(Engine& eng, EndPredicate p, GameId g,
              std::unordered_map<std::uint32_t, bool>& memo) {
  if (auto it = memo.find(g.raw); it != memo.end()) return it->second;
  const FormNode& n = eng.node(g);
  bool res = false;
  for (AugId r : n.rights) {
    const FormNode& rn = eng.node(r);
    if (p != EndPredicate::Starkiller && rn.lefts.empty()) continue;  // needs a non-Left-end option
    if (p != EndPredicate::Disintegrator && eng.outcome(r).right_start != Player::Right) continue;
    bool all = true;
    for (AugId rl : rn.lefts) {
      GameId grl{rl.raw};
      if (eng.outcome(rl).left_start == Player::Right) continue;
      if (!pred_rec(eng, p, grl, memo)) {
        all = false;
        break;
      }
    }
    if (all) {
      res = true;
      break;
    }
  }
  memo.emplace(g.raw, res);
  return res;
}

AugId companion_form(Engine& eng, EndPredicate p) {
  switch (p) {
    case EndPredicate::Disintegrator: return integer(eng, -1);
    case EndPredicate::Starkiller: return mk_game(eng, {eng.zero()}, {eng.zero()});
    case EndPredicate::SuperStarkiller:
      return mk_aug(eng, {eng.zero()}, {eng.zero()}, true, false);
  }
  throw std::logic_error("unreachable predicate kind");
}

}  // namespace

bool end_predicate(Engine& eng, EndPredicate p, GameId g) {
  if (!eng.node(g).plain) throw std::invalid_argument("end predicates are defined on plain forms");
  auto& c = cache(eng);
  switch (p) {
    case EndPredicate::Disintegrator: return pred_rec(eng, p, g, c.disint);
    case EndPredicate::Starkiller: return pred_rec(eng, p, g, c.stark);
    case EndPredicate::SuperStarkiller: return pred_rec(eng, p, g, c.super);
  }
  return false;
}

bool is_disintegrator(Engine& eng, GameId g) { return end_predicate(eng, EndPredicate::Disintegrator, g); }
bool is_starkiller(Engine& eng, GameId g) { return end_predicate(eng, EndPredicate::Starkiller, g); }
bool is_super_starkiller(Engine& eng, GameId g) {
  return end_predicate(eng, EndPredicate::SuperStarkiller, g);
}

bool predicate_lemma_oracle(Engine& eng, EndPredicate p, GameId x) {
  AugId companion = companion_form(eng, p);
  bool pred = end_predicate(eng, p, x);
  OutcomePair o = eng.outcome(eng.sum(companion, x));
  if (pred) return o.right_start == Player::Right;
  if (eng.outcome(x).left_start == Player::Left) return o.right_start == Player::Left;
  throw std::invalid_argument("lemma oracle needs predicate(x) or o^L(x) = L");
}

EndSearchResult search_end_with(Engine& eng, const UniverseSpec& u, EndPredicate p, int bound) {
  EndSearchResult res;
  res.bound = bound;
  res.complete = left_end_enumeration_complete(u);
  for (GameId x : left_ends_up_to(eng, u, bound)) {
    if (end_predicate(eng, p, x)) {
      if (!predicate_lemma_oracle(eng, p, x))
        throw std::logic_error("end-search witness failed its lemma oracle");
      res.witness = x;
      return res;
    }
  }
  return res;
}

namespace {

TriVerdict invertible_rec(Engine& eng, const UniverseSpec& u, AugId s, ReduceMode mode,
                          std::uint32_t fp_mode) {
  auto& c = cache(eng);
  Engine::Key2 key{fp_mode, s.raw};
  if (auto it = c.invertible.find(key); it != c.invertible.end()) return it->second;

  TriVerdict v{TriVerdict::Kind::ProvenTrue};
  StrongVerdict sv = is_left_strong(eng, u, eng.sum(s, eng.conjugate(s)));
  if (sv.kind == StrongVerdict::Kind::ProvenNotStrong) {
    v = {TriVerdict::Kind::ProvenFalse, 0, 's', sv.witness};
  } else {
    if (sv.kind == StrongVerdict::Kind::BoundedStrong) v = {TriVerdict::Kind::BoundedTrue, sv.bound};
    const FormNode& n = eng.node(s);
    for (const auto* side : {&n.lefts, &n.rights}) {
      for (AugId o : *side) {
        TriVerdict sub = invertible_rec(eng, u, o, mode, fp_mode);
        if (sub.proven_false()) {
          v = {TriVerdict::Kind::ProvenFalse, 0, 'o', o};
          break;
        }
        if (sub.kind == TriVerdict::Kind::BoundedTrue && v.kind == TriVerdict::Kind::ProvenTrue)
          v = {TriVerdict::Kind::BoundedTrue, sub.bound};
        else if (sub.kind == TriVerdict::Kind::BoundedTrue)
          v.bound = std::max(v.bound, sub.bound);
      }
      if (v.proven_false()) break;
    }
  }
  c.invertible.emplace(key, v);
  return v;
}

InvertVerdict::Node build_tree(Engine& eng, const UniverseSpec& u, AugId s, ReduceMode mode,
                               std::uint32_t fp_mode, int depth) {
  InvertVerdict::Node node{s, invertible_rec(eng, u, s, mode, fp_mode), {}};
  if (depth <= 0) return node;
  const FormNode& n = eng.node(s);
  for (const auto* side : {&n.lefts, &n.rights})
    for (AugId o : *side) node.kids.push_back(build_tree(eng, u, o, mode, fp_mode, depth - 1));
  return node;
}

}  // namespace

InvertVerdict is_invertible(Engine& eng, const UniverseSpec& u, AugId a, ReduceMode mode) {
  BudgetScope scope(eng, u.node_budget);
  std::uint32_t fp = eng.fingerprint_index(fingerprint(eng, u));
  std::uint32_t fp_mode = fp * 2 + (mode == ReduceMode::BoundedAssumed ? 1 : 0);
  InvertVerdict out;
  out.simplest = simplest_form(eng, u, a, mode).form;
  out.verdict = invertible_rec(eng, u, out.simplest, mode, fp_mode);
  if (out.verdict.non_false()) out.inverse = eng.conjugate(a);
  out.tree = build_tree(eng, u, out.simplest, mode, fp_mode, 8);
  return out;
}

std::vector<AugId> day1_forms(Engine& eng) {
  std::vector<AugId> out;
  GameId z = eng.zero();
  for (int lo = 0; lo < 2; ++lo)
    for (int lt = 0; lt < 2; ++lt)
      for (int ro = 0; ro < 2; ++ro)
        for (int rt = 0; rt < 2; ++rt) {
          std::vector<AugId> ls, rs;
          if (lo) ls.push_back(z);
          if (ro) rs.push_back(z);
          out.push_back(mk_aug(eng, ls, rs, lt, rt));
        }
  return out;
}

std::vector<CensusClass> day1_census(Engine& eng, const UniverseSpec& u) {
  if (strong_regime(eng, u) == StrongRegime::Bounded)
    throw std::invalid_argument("census needs an exact comparison regime (dicot or weak universe)");
  std::vector<AugId> forms = day1_forms(eng);
  const std::size_t n = forms.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (equiv(eng, u, forms[i], forms[j]).proven_true()) unite(i, j);
  for (std::size_t i = 0; i < n; ++i) {
    AugId cj = eng.conjugate(forms[i]);
    for (std::size_t j = 0; j < n; ++j)
      if (forms[j] == cj) unite(i, j);
  }

  std::unordered_map<std::size_t, CensusClass> classes;
  for (std::size_t i = 0; i < n; ++i) classes[find(i)].members.push_back(forms[i]);

  auto rep_key = [&](AugId a) {
    const FormNode& fn = eng.node(a);
    int complexity = static_cast<int>(fn.lefts.size() + fn.rights.size()) + fn.left_tomb + fn.right_tomb;
    int left_bias = static_cast<int>(fn.lefts.size()) + fn.left_tomb -
                    static_cast<int>(fn.rights.size()) - fn.right_tomb;
    return std::tuple<int, int, std::uint32_t>(complexity, -left_bias, a.raw);
  };
  std::vector<CensusClass> out;
  for (auto& [root, cls] : classes) {
    cls.representative = *std::min_element(cls.members.begin(), cls.members.end(),
                                           [&](AugId a, AugId b) { return rep_key(a) < rep_key(b); });
    std::sort(cls.members.begin(), cls.members.end());
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [&](const CensusClass& a, const CensusClass& b) {
    return rep_key(a.representative) < rep_key(b.representative);
  });
  return out;
}

UhatAssertions::Status UhatAssertions::status(Engine& eng, const UniverseSpec& u, AugId a) const {
  for (AugId x : asserted_not_in)
    if (x == a) return Status::NotIn;
  for (AugId x : asserted_in)
    if (x == a) return Status::In;
  if (auto g = eng.as_plain(a); g && member(eng, u, *g)) return Status::In;  // U is inside U-hat
  return Status::Unknown;
}

std::vector<Day1Row> day1_invertibles(Engine& eng, const UniverseSpec& u,
                                      const UhatAssertions& assertions) {
  GameId z = eng.zero();
  GameId one = integer(eng, 1);
  GameId star = mk_game(eng, {z}, {z});
  AugId t0_ = mk_aug(eng, {z}, {}, true, false);        // {#,0|.}
  AugId t00 = mk_aug(eng, {z}, {z}, true, false);       // {#,0|0}
  AugId t00t = mk_aug(eng, {z}, {z}, true, true);       // {#,0|0,#}

  std::vector<Day1Row> rows;
  auto push_search_row = [&](AugId form, EndPredicate p, bool needs_premise) {
    Day1Row row{form, assertions.status(eng, u, form), std::nullopt, std::nullopt, {}};
    if (!needs_premise) row.premise = UhatAssertions::Status::In;
    if (row.premise == UhatAssertions::Status::NotIn) {
      rows.push_back(row);
      return;
    }
    EndSearchResult sr = search_end_with(eng, u, p, u.end_birthday_bound);
    if (sr.witness) {
      row.verdict = TriVerdict{TriVerdict::Kind::ProvenFalse, 0, 'e', *sr.witness};
      row.witness_end = sr.witness;
    } else if (row.premise == UhatAssertions::Status::Unknown) {
      row.verdict = std::nullopt;  // premise unresolved: unknown, never false
    } else if (sr.complete) {
      row.verdict = TriVerdict{TriVerdict::Kind::ProvenTrue};
      row.inverse = eng.conjugate(form);
    } else {
      row.verdict = TriVerdict{TriVerdict::Kind::BoundedTrue, sr.bound};
      row.inverse = eng.conjugate(form);
    }
    rows.push_back(row);
  };

  rows.push_back({embed(z), UhatAssertions::Status::In,
                  TriVerdict{TriVerdict::Kind::ProvenTrue}, std::nullopt, embed(z)});
  push_search_row(one, EndPredicate::Disintegrator, true);
  push_search_row(star, EndPredicate::Starkiller, false);
  push_search_row(t00, EndPredicate::SuperStarkiller, true);
  for (AugId form : {t0_, t00t}) {
    Day1Row row{form, assertions.status(eng, u, form), std::nullopt, std::nullopt, {}};
    if (row.premise == UhatAssertions::Status::In) {
      row.verdict = TriVerdict{TriVerdict::Kind::ProvenTrue};
      row.inverse = eng.conjugate(form);
    }
    rows.push_back(row);
  }
  return rows;
}

ReducedReport is_reduced(Engine& eng, const UniverseSpec& u, const UhatAssertions& assertions) {
  GameId z = eng.zero();
  GameId one = integer(eng, 1);
  GameId star = mk_game(eng, {z}, {z});
  AugId t0_ = mk_aug(eng, {z}, {}, true, false);
  AugId t00 = mk_aug(eng, {z}, {z}, true, false);
  AugId t00t = mk_aug(eng, {z}, {z}, true, true);

  ReducedReport rep;
  using Item = ReducedReport::Item;
  using St = ReducedReport::ItemStatus;
  using Why = ReducedReport::UnknownReason;

  auto conditional_item = [&](const std::string& desc, AugId form, EndPredicate p) {
    UhatAssertions::Status pr = assertions.status(eng, u, form);
    EndSearchResult sr = search_end_with(eng, u, p, u.end_birthday_bound);
    Item item{desc, St::Unknown, Why::None, sr.witness};
    if (sr.witness) {
      item.status = St::Satisfied;
    } else if (pr == UhatAssertions::Status::NotIn) {
      item.status = St::Satisfied;  // vacuous
    } else if (pr == UhatAssertions::Status::Unknown) {
      item.reason = Why::UhatUnresolved;
    } else if (sr.complete) {
      item.status = St::Violated;
    } else {
      item.reason = Why::BoundedSearchExhausted;
    }
    return item;
  };

  rep.items.push_back(conditional_item("if 1 in U-hat: some Left end is a disintegrator", one,
                                       EndPredicate::Disintegrator));
  {
    EndSearchResult sr = search_end_with(eng, u, EndPredicate::Starkiller, u.end_birthday_bound);
    Item item{"some Left end is a starkiller", St::Unknown, Why::None, sr.witness};
    if (sr.witness)
      item.status = St::Satisfied;
    else if (sr.complete)
      item.status = St::Violated;
    else
      item.reason = Why::BoundedSearchExhausted;
    rep.items.push_back(item);
  }
  rep.items.push_back(conditional_item("if {#,0|0} in U-hat: some Left end is a super starkiller",
                                       t00, EndPredicate::SuperStarkiller));
  for (auto [form, desc] : {std::pair<AugId, const char*>{t0_, "{#,0|.} is not in U-hat"},
                            std::pair<AugId, const char*>{t00t, "{#,0|0,#} is not in U-hat"}}) {
    UhatAssertions::Status pr = assertions.status(eng, u, form);
    Item item{desc, St::Unknown, Why::None, std::nullopt};
    if (pr == UhatAssertions::Status::NotIn)
      item.status = St::Satisfied;
    else if (pr == UhatAssertions::Status::In)
      item.status = St::Violated;
    else
      item.reason = Why::UhatUnresolved;
    rep.items.push_back(item);
  }

  WeakCertificate weak = is_weak(eng, u);
  if (weak.kind == WeakCertificate::Kind::FullMisereRule ||
      weak.kind == WeakCertificate::Kind::WeakeningEnd) {
    rep.overall = ReducedReport::Overall::Reduced;  // weak implies reduced
    rep.weakness_shortcut = true;
    return rep;
  }

  const AugId violation_witness[5] = {embed(one), embed(star), t00, t0_, t00t};
  for (std::size_t i = 0; i < rep.items.size(); ++i) {
    if (rep.items[i].status == St::Violated) {
      rep.overall = ReducedReport::Overall::NotReduced;
      rep.invertible_witness = violation_witness[i];
      return rep;
    }
  }
  bool all_satisfied = std::all_of(rep.items.begin(), rep.items.end(),
                                   [](const Item& it) { return it.status == St::Satisfied; });
  rep.overall = all_satisfied ? ReducedReport::Overall::Reduced : ReducedReport::Overall::Inconclusive;
  return rep;
}

bool group_closure_check(Engine& eng, const UniverseSpec& u, AugId g, AugId h) {
  if (is_invertible(eng, u, g).verdict.proven_false() ||
      is_invertible(eng, u, h).verdict.proven_false())
    throw std::invalid_argument("group_closure_check needs invertible inputs");
  InvertVerdict sum_v = is_invertible(eng, u, eng.sum(g, h));
  if (sum_v.verdict.proven_false()) return false;
  return sum_v.inverse == eng.sum(eng.conjugate(g), eng.conjugate(h));
}

}  // namespace misere
