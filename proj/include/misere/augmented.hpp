#pragma once

#include "misere/engine.hpp"

// Augmented forms: game forms whose subpositions may carry Left/Right
// tombstones. A tombstone is a flag, not an option: nothing ever moves to
// it. A form is Left end-like when it is a Left end or carries a Left
// tombstone, and end-like sides win immediately for their owner under the
// extended misere outcome.

namespace misere {

AugId mk_aug(Engine& eng, const std::vector<AugId>& lefts, const std::vector<AugId>& rights,
             bool left_tomb, bool right_tomb);

inline AugId embed(GameId g) { return g; }

inline std::optional<GameId> as_plain(const Engine& eng, AugId a) { return eng.as_plain(a); }

inline EndLike end_like(const Engine& eng, AugId a) { return eng.end_like(a); }

inline AugId aug_conjugate(Engine& eng, AugId a) { return eng.conjugate(a); }

// Ordinary options of the sum are the usual disjunctive-sum options; the
// sum carries a Left tombstone iff both summands are Left end-like and at
// least one of them has a Left tombstone (mirror on the Right).
inline AugId aug_sum(Engine& eng, AugId a, AugId b) { return eng.sum(a, b); }

inline OutcomePair aug_outcome(Engine& eng, AugId a) { return eng.outcome(a); }

inline int aug_birthday(const Engine& eng, AugId a) { return eng.node(a).birthday; }

}  // namespace misere
