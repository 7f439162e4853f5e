#include "misere/engine.hpp"

#include <algorithm>
#include <cassert>

namespace misere {

namespace {

inline std::uint64_t smix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t structural_hash(const Engine& eng, const std::vector<AugId>& lefts,
                              const std::vector<AugId>& rights, bool lt, bool rt) {
  std::uint64_t h = 0x8F1BBCDCBFA53E0Bull;
  for (AugId l : lefts) h = smix(h ^ eng.node(l).shash);
  h = smix(h ^ 0xA5A5A5A5A5A5A5A5ull);
  for (AugId r : rights) h = smix(h ^ eng.node(r).shash);
  h = smix(h ^ (std::uint64_t(lt) << 1 | std::uint64_t(rt)));
  return h;
}

}  // namespace

Engine::Engine() {
  // id 0 is {.|.}
  FormNode z;
  z.shash = smix(0xD1B54A32D192ED03ull);
  z.birthday = 0;
  z.plain = true;
  z.dicot = true;
  z.dead_left_end = true;
  z.dead_right_end = true;
  z.dead_ending = true;
  nodes_.push_back(std::move(z));
  bucket_[nodes_[0].shash].push_back(0);
  conj_memo_.push_back(AugId{0});
}

std::size_t Engine::size() const {
  std::lock_guard<std::mutex> lk(mu_);
  return nodes_.size();
}

void Engine::canonicalise(std::vector<AugId>& opts) const {
  std::sort(opts.begin(), opts.end(), [this](AugId a, AugId b) {
    const FormNode& na = nodes_[a.raw];
    const FormNode& nb = nodes_[b.raw];
    if (na.shash != nb.shash) return na.shash < nb.shash;
    return a.raw < b.raw;
  });
  opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
}

AugId Engine::intern(std::vector<AugId> lefts, std::vector<AugId> rights, bool lt, bool rt) {
  std::lock_guard<std::mutex> lk(mu_);
  for ([[maybe_unused]] AugId x : lefts) assert(x.raw < nodes_.size());
  for ([[maybe_unused]] AugId x : rights) assert(x.raw < nodes_.size());
  canonicalise(lefts);
  canonicalise(rights);
  return intern_locked(std::move(lefts), std::move(rights), lt, rt);
}

AugId Engine::intern_locked(std::vector<AugId>&& lefts, std::vector<AugId>&& rights, bool lt, bool rt) {
  std::uint64_t h = structural_hash(*this, lefts, rights, lt, rt);
  auto it = bucket_.find(h);
  if (it != bucket_.end()) {
    for (std::uint32_t idx : it->second) {
      const FormNode& n = nodes_[idx];
      if (n.left_tomb == lt && n.right_tomb == rt && n.lefts == lefts && n.rights == rights)
        return AugId{idx};
    }
  }
  if (++created_ > node_limit_) throw BudgetExceeded(created_, node_limit_);

  FormNode n;
  n.lefts = std::move(lefts);
  n.rights = std::move(rights);
  n.left_tomb = lt;
  n.right_tomb = rt;
  n.shash = h;

  int bd = 0;
  bool plain = !lt && !rt;
  bool kids_dicot = true;
  bool rights_dead_left = true, lefts_dead_right = true;
  bool kids_dead_ending = true;
  for (const auto* side : {&n.lefts, &n.rights}) {
    for (AugId c : *side) {
      const FormNode& cn = nodes_[c.raw];
      bd = std::max(bd, cn.birthday + 1);
      plain = plain && cn.plain;
      kids_dicot = kids_dicot && cn.dicot;
      kids_dead_ending = kids_dead_ending && cn.dead_ending;
    }
  }
  for (AugId c : n.rights) rights_dead_left = rights_dead_left && nodes_[c.raw].dead_left_end;
  for (AugId c : n.lefts) lefts_dead_right = lefts_dead_right && nodes_[c.raw].dead_right_end;

  n.birthday = bd;
  n.plain = plain;
  bool le = n.lefts.empty(), re = n.rights.empty();
  n.dicot = plain && ((le && re) || (!le && !re && kids_dicot));
  n.dead_left_end = plain && le && rights_dead_left;
  n.dead_right_end = plain && re && lefts_dead_right;
  n.dead_ending = plain && kids_dead_ending && (!le || n.dead_left_end) && (!re || n.dead_right_end);

  std::uint32_t idx = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(std::move(n));
  bucket_[h].push_back(idx);
  conj_memo_.push_back(AugId{UINT32_MAX});
  return AugId{idx};
}

AugId Engine::conjugate(AugId a) {
  {
    std::lock_guard<std::mutex> lk(mu_);
    AugId memo = conj_memo_[a.raw];
    if (memo.raw != UINT32_MAX) return memo;
  }
  const FormNode& n = node(a);
  std::vector<AugId> nl, nr;
  nl.reserve(n.rights.size());
  nr.reserve(n.lefts.size());
  for (AugId r : n.rights) nl.push_back(conjugate(r));
  for (AugId l : n.lefts) nr.push_back(conjugate(l));
  AugId res = intern(std::move(nl), std::move(nr), n.right_tomb, n.left_tomb);
  std::lock_guard<std::mutex> lk(mu_);
  conj_memo_[a.raw] = res;
  if (conj_memo_[res.raw].raw == UINT32_MAX) conj_memo_[res.raw] = a;
  return res;
}

AugId Engine::sum(AugId a, AugId b) {
  if (a.raw == 0) return b;
  if (b.raw == 0) return a;
  if (b.raw < a.raw) std::swap(a, b);
  std::uint64_t key = std::uint64_t(a.raw) << 32 | b.raw;
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = sum_memo_.find(key);
    if (it != sum_memo_.end()) return it->second;
  }
  const FormNode& na = node(a);
  const FormNode& nb = node(b);
  std::vector<AugId> nl, nr;
  nl.reserve(na.lefts.size() + nb.lefts.size());
  nr.reserve(na.rights.size() + nb.rights.size());
  for (AugId l : na.lefts) nl.push_back(sum(l, b));
  for (AugId l : nb.lefts) nl.push_back(sum(a, l));
  for (AugId r : na.rights) nr.push_back(sum(r, b));
  for (AugId r : nb.rights) nr.push_back(sum(a, r));
  // A sum carries a tombstone only while both components are end-like on
  // that side and at least one records it with an actual tombstone.
  EndLike ea = end_like(a), eb = end_like(b);
  bool lt = ea.left && eb.left && (na.left_tomb || nb.left_tomb);
  bool rt = ea.right && eb.right && (na.right_tomb || nb.right_tomb);
  AugId res = intern(std::move(nl), std::move(nr), lt, rt);
  std::lock_guard<std::mutex> lk(mu_);
  sum_memo_.emplace(key, res);
  return res;
}

OutcomePair Engine::outcome(AugId a) { return outcome_rec(a); }

OutcomePair Engine::outcome_rec(AugId a) {
  const FormNode& n = node(a);
  std::uint8_t memo = n.outcome_memo.load(std::memory_order_acquire);
  if (memo & 1) {
    return {memo & 2 ? Player::Right : Player::Left, memo & 4 ? Player::Right : Player::Left};
  }
  // A player who cannot move wins; an end-like side counts as unable to
  // move for outcome purposes (the tombstone stands in for a removed
  // end-reversible option).
  Player ls, rs;
  if (n.lefts.empty() || n.left_tomb) {
    ls = Player::Left;
  } else {
    ls = Player::Right;
    for (AugId l : n.lefts) {
      if (outcome_rec(l).right_start == Player::Left) {
        ls = Player::Left;
        break;
      }
    }
  }
  if (n.rights.empty() || n.right_tomb) {
    rs = Player::Right;
  } else {
    rs = Player::Left;
    for (AugId r : n.rights) {
      if (outcome_rec(r).left_start == Player::Right) {
        rs = Player::Right;
        break;
      }
    }
  }
  std::uint8_t enc = 1 | (ls == Player::Right ? 2 : 0) | (rs == Player::Right ? 4 : 0);
  n.outcome_memo.store(enc, std::memory_order_release);
  return {ls, rs};
}

std::uint32_t Engine::fingerprint_index(const std::string& fp) {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = fp_index_.find(fp);
  if (it != fp_index_.end()) return it->second;
  std::uint32_t idx = static_cast<std::uint32_t>(fp_names_.size());
  fp_names_.push_back(fp);
  fp_index_.emplace(fp, idx);
  return idx;
}

}  // namespace misere
