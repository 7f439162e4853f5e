#pragma once

#include "misere/augmented.hpp"
#include "misere/games.hpp"

#include <variant>

// Universe descriptors, Left-end enumeration, and the Left/Right strong
// decision service. A form G is Left U-strong when o^L(G+X) = L for every
// Left end X of U. Three regimes:
//   exact-weak : the universe is weak (full misere, or a weakening end was
//                found), so Left strong <=> Left end-like;
//   exact-dicot: 0 is the only Left end, so Left strong <=> o^L(G) = L;
//   bounded    : test against every enumerated Left end up to the bound.
// Bounded verdicts are first-class and never silently treated as proven.

namespace misere {

enum class UniverseKind { Dicot, DeadEnding, FullMisere, EndClosure };

struct UniverseSpec {
  UniverseKind kind = UniverseKind::Dicot;
  std::vector<GameId> generators;  // EndClosure only; each must be a Left end
  int end_birthday_bound = 3;
  std::size_t node_budget = 1'000'000;
  int enum_width = 2;  // per-side option cap for structural enumerations

  static UniverseSpec of(UniverseKind k) {
    UniverseSpec u;
    u.kind = k;
    return u;
  }
  static UniverseSpec dicot() { return of(UniverseKind::Dicot); }
  static UniverseSpec dead_ending() { return of(UniverseKind::DeadEnding); }
  static UniverseSpec full_misere() { return of(UniverseKind::FullMisere); }
  static UniverseSpec end_closure(Engine& eng, std::vector<GameId> gens);
};

// Canonical text for kind + generators + bounds; memo tables key on this,
// so changing a bound or width never reuses stale verdicts.
std::string fingerprint(const Engine& eng, const UniverseSpec& u);
std::string universe_name(const Engine& eng, const UniverseSpec& u);

// Universe text syntax shared with the CLI: D, E, M, cl(<expr>;<expr>;...).
UniverseSpec parse_universe(Engine& eng, const std::string& text);

struct StrongVerdict {
  enum class Kind { ProvenStrong, ProvenNotStrong, BoundedStrong };
  Kind kind;
  GameId witness{};  // ProvenNotStrong: an end of the universe beating the form
  int bound = 0;     // BoundedStrong
  bool strong_or_unknown() const { return kind != Kind::ProvenNotStrong; }
};

struct WeakCertificate {
  enum class Kind { WeakeningEnd, FullMisereRule, NotWeak, Unknown };
  Kind kind;
  GameId end{};     // WeakeningEnd
  AugId witness{};  // NotWeak: Left-strong but not left end-like
  int bound = 0;    // Unknown
};

// Left ends of u with birthday <= b, duplicate-free, sorted by birthday.
// Dicot is complete ({0}); DeadEnding and EndClosure are complete up to the
// bound; FullMisere is width-capped by u.enum_width.
std::vector<GameId> left_ends_up_to(Engine& eng, const UniverseSpec& u, int b);

// True when left_ends_up_to(u, b) is the whole Left-end set of u.
bool left_end_enumeration_complete(const UniverseSpec& u);

// Bounded member enumeration (width-capped for D/E/M; closure iteration for
// EndClosure). Used for oracle domains.
std::vector<GameId> members_up_to(Engine& eng, const UniverseSpec& u, int b, int width);

// Additive closure of the given forms up to a birthday bound, 0 included.
// Covers non-universe monoids such as J = <~1, {.|2}>.
std::vector<GameId> additive_closure_members(Engine& eng, const std::vector<GameId>& atoms,
                                             int max_birthday);

bool member(Engine& eng, const UniverseSpec& u, GameId g);

WeakCertificate contains_weakening_end(Engine& eng, const UniverseSpec& u);

StrongVerdict is_left_strong(Engine& eng, const UniverseSpec& u, AugId a);
StrongVerdict is_right_strong(Engine& eng, const UniverseSpec& u, AugId a);

WeakCertificate is_weak(Engine& eng, const UniverseSpec& u);

// Exact-regime resolution (memoized per fingerprint).
enum class StrongRegime { ExactWeak, ExactDicot, Bounded };
StrongRegime strong_regime(Engine& eng, const UniverseSpec& u);

}  // namespace misere
