#pragma once

#include <atomic>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

// Core representation: one interning table holds every form, plain or
// augmented. A plain game is an augmented form with no tombstone anywhere;
// GameId is a checked view of AugId so plain-only operations stay typed.

namespace misere {

class Engine;

enum class Player : std::uint8_t { Left, Right };

inline Player flip(Player p) { return p == Player::Left ? Player::Right : Player::Left; }

// Misere outcome classes. Partial order: R < N < L and R < P < L; N and P
// are incomparable. "outcome >= N" holds exactly when Left wins moving first.
enum class Outcome : std::uint8_t { L, N, P, R };

struct OutcomePair {
  Player left_start;   // winner when Left moves first
  Player right_start;  // winner when Right moves first
  friend bool operator==(const OutcomePair&, const OutcomePair&) = default;
};

inline Outcome outcome_class(OutcomePair o) {
  if (o.left_start == Player::Left)
    return o.right_start == Player::Left ? Outcome::L : Outcome::N;
  return o.right_start == Player::Left ? Outcome::P : Outcome::R;
}

// Component-wise order on (left_start, right_start) with Left > Right in
// each slot; this induces exactly the lattice above.
inline bool outcome_geq(OutcomePair a, OutcomePair b) {
  bool ls = a.left_start == Player::Left || b.left_start == Player::Right;
  bool rs = a.right_start == Player::Left || b.right_start == Player::Right;
  return ls && rs;
}

inline char outcome_letter(Outcome o) {
  switch (o) {
    case Outcome::L: return 'L';
    case Outcome::N: return 'N';
    case Outcome::P: return 'P';
    case Outcome::R: return 'R';
  }
  return '?';
}

struct AugId {
  std::uint32_t raw = 0;
  friend bool operator==(AugId, AugId) = default;
  friend auto operator<=>(AugId, AugId) = default;
};

struct GameId {
  std::uint32_t raw = 0;
  constexpr operator AugId() const { return AugId{raw}; }  // every plain game is an augmented form
  friend bool operator==(GameId, GameId) = default;
  friend auto operator<=>(GameId, GameId) = default;
};

struct AugIdHash {
  std::size_t operator()(AugId a) const { return a.raw * 0x9E3779B97F4A7C15ull >> 32; }
};

class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::size_t used, std::size_t limit)
      : std::runtime_error("node budget exceeded: " + std::to_string(used) + "/" + std::to_string(limit)),
        used(used), limit(limit) {}
  std::size_t used, limit;
};

struct ClassifyFlags {
  bool is_left_end = false;
  bool is_right_end = false;
  bool is_dead_left_end = false;
  bool is_dead_right_end = false;
  bool is_dicot = false;
};

struct EndLike {
  bool left = false;
  bool right = false;
};

// One interned node. Option lists are deduplicated and sorted by
// (structural hash, id), so isomorphic forms always intern to the same id.
// Derived flags are computed once at intern time from the children.
struct FormNode {
  std::vector<AugId> lefts;
  std::vector<AugId> rights;
  bool left_tomb = false;
  bool right_tomb = false;

  std::uint64_t shash = 0;
  std::int32_t birthday = 0;  // height of the ordinary-option tree
  bool plain = false;         // no tombstone in any subposition
  bool dicot = false;
  bool dead_left_end = false;
  bool dead_right_end = false;
  bool dead_ending = false;

  // outcome memo: bit0 = computed, bit1 = left_start is Right, bit2 = right_start is Right
  mutable std::atomic<std::uint8_t> outcome_memo{0};

  FormNode() = default;
  FormNode(FormNode&& o) noexcept
      : lefts(std::move(o.lefts)), rights(std::move(o.rights)),
        left_tomb(o.left_tomb), right_tomb(o.right_tomb), shash(o.shash),
        birthday(o.birthday), plain(o.plain), dicot(o.dicot),
        dead_left_end(o.dead_left_end), dead_right_end(o.dead_right_end),
        dead_ending(o.dead_ending), outcome_memo(o.outcome_memo.load()) {}
};

// Shared engine context: the interning table, memo tables for the
// structural operations, and the node budget. All results are pure
// functions of the interned structure; insertion is serialized, interned
// nodes are immutable afterwards, so concurrent readers are safe.
class Engine {
public:
  Engine();

  GameId zero() const { return GameId{0}; }

  // Interns the canonicalised form (options deduplicated + sorted).
  AugId intern(std::vector<AugId> lefts, std::vector<AugId> rights, bool left_tomb, bool right_tomb);

  const FormNode& node(AugId a) const { return nodes_.at(a.raw); }
  std::size_t size() const;
  bool valid(AugId a) const { return a.raw < size(); }

  bool is_plain(AugId a) const { return node(a).plain; }
  std::optional<GameId> as_plain(AugId a) const {
    if (is_plain(a)) return GameId{a.raw};
    return std::nullopt;
  }

  AugId conjugate(AugId a);
  AugId sum(AugId a, AugId b);
  OutcomePair outcome(AugId a);
  int birthday(AugId a) const { return node(a).birthday; }

  EndLike end_like(AugId a) const {
    const FormNode& n = node(a);
    return {n.lefts.empty() || n.left_tomb, n.rights.empty() || n.right_tomb};
  }

  // Budget. nodes_created counts interned nodes beyond whatever a cache
  // preload supplied; the limit applies to that counter.
  void set_node_limit(std::size_t limit) { node_limit_ = limit; }
  std::size_t node_limit() const { return node_limit_; }
  std::size_t nodes_created() const { return created_; }
  void mark_preloaded() { created_ = 0; }

  // Universe fingerprints are interned to small indices for memo keys.
  std::uint32_t fingerprint_index(const std::string& fp);
  const std::vector<std::string>& fingerprints() const { return fp_names_; }

  int max_integer_magnitude = 4096;

  // Per-module memo storage. Each analysis module installs its own cache
  // struct in a dedicated slot so derived state shares the engine's
  // lifetime: same engine, same verdicts.
  enum CacheSlot { UniverseCacheSlot, OrderCacheSlot, SimplestCacheSlot, InvertCacheSlot, SlotCount };
  template <typename T>
  T& cache_slot(CacheSlot slot) {
    std::lock_guard<std::mutex> lk(mu_);
    auto& p = module_caches_[slot];
    if (!p) p = std::shared_ptr<void>(new T(), [](void* q) { delete static_cast<T*>(q); });
    return *static_cast<T*>(p.get());
  }

  // Memo keys: (fingerprint index, id) and (fingerprint index, id, id).
  struct Key2 {
    std::uint32_t fp;
    std::uint32_t a;
    friend bool operator==(const Key2&, const Key2&) = default;
  };
  struct Key2Hash {
    std::size_t operator()(const Key2& k) const {
      return (std::uint64_t(k.fp) << 40 ^ k.a) * 0x9E3779B97F4A7C15ull >> 29;
    }
  };
  struct Key3 {
    std::uint32_t fp;
    std::uint32_t a;
    std::uint32_t b;
    friend bool operator==(const Key3&, const Key3&) = default;
  };
  struct Key3Hash {
    std::size_t operator()(const Key3& k) const {
      std::uint64_t h = k.fp;
      h = (h ^ k.a) * 0x9E3779B97F4A7C15ull;
      h = (h ^ (h >> 29) ^ k.b) * 0xBF58476D1CE4E5B9ull;
      return h ^ (h >> 32);
    }
  };

private:
  AugId intern_locked(std::vector<AugId>&& lefts, std::vector<AugId>&& rights, bool lt, bool rt);
  void canonicalise(std::vector<AugId>& opts) const;

  std::deque<FormNode> nodes_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> bucket_;  // shash -> candidate ids
  mutable std::mutex mu_;

  std::unordered_map<std::uint64_t, AugId> sum_memo_;   // packed (min,max) pair
  std::vector<AugId> conj_memo_;                        // indexed by id, raw==invalid sentinel

  std::vector<std::string> fp_names_;
  std::unordered_map<std::string, std::uint32_t> fp_index_;
  std::shared_ptr<void> module_caches_[SlotCount];

  std::size_t node_limit_ = 50'000'000;
  std::size_t created_ = 0;

  OutcomePair outcome_rec(AugId a);
};

// Temporarily tightens the engine budget (used to honor a UniverseSpec's
// node_budget for the duration of an operation).
class BudgetScope {
public:
  BudgetScope(Engine& e, std::size_t extra_nodes) : eng_(e), saved_(e.node_limit()) {
    std::size_t cap = e.nodes_created() + extra_nodes;
    if (cap < saved_) e.set_node_limit(cap);
  }
  ~BudgetScope() { eng_.set_node_limit(saved_); }

private:
  Engine& eng_;
  std::size_t saved_;
};

}  // namespace misere
