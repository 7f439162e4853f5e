#pragma once

#include "misere/engine.hpp"

// Plain (tombstone-free) short partizan forms under misere play.

namespace misere {

GameId mk_game(Engine& eng, const std::vector<GameId>& lefts, const std::vector<GameId>& rights);

// Game integers: 0 = {.|.}, n = {n-1|.}, -n = conjugate(n).
GameId integer(Engine& eng, long n);

// Recognizes game integers; returns the value when the form is one.
std::optional<long> as_integer(const Engine& eng, AugId a);

GameId conjugate(Engine& eng, GameId g);
GameId sum(Engine& eng, GameId g, GameId h);
int birthday(const Engine& eng, GameId g);
ClassifyFlags classify(const Engine& eng, GameId g);
OutcomePair outcome(Engine& eng, GameId g);

inline Outcome outcome_of(Engine& eng, GameId g) { return outcome_class(outcome(eng, g)); }

}  // namespace misere
