#pragma once

#include "misere/games.hpp"

#include <random>

// Structural form families used by universe enumeration and by tests.
// Families are generated in a deterministic order and deduplicate through
// the interning table. Widths cap the option count per side at every level;
// without a cap the day-3 layer is already astronomically large.

namespace misere {

// All plain forms of birthday <= b whose option sets have at most `width`
// elements per side at every level.
std::vector<GameId> all_forms(Engine& eng, int b, int width);

// Dicots (every subposition has both options or none) of birthday <= b.
std::vector<GameId> dicot_forms(Engine& eng, int b, int width);

// Dead Left ends of birthday <= b. This family is complete: the options of
// a dead Left end are exactly the dead Left ends of smaller birthday.
std::vector<GameId> dead_left_ends(Engine& eng, int b);

// All subsets of `pool` of size <= width (the empty set included when
// allow_empty), mapped through `make`.
std::vector<std::vector<GameId>> option_subsets(const std::vector<GameId>& pool, int width,
                                                bool allow_empty);

struct RandomFormConfig {
  int max_birthday = 3;
  int max_width = 2;
  double tombstone_prob = 0.0;  // per side, per node
  double stop_prob = 0.3;       // chance a side is empty before the depth limit
};

AugId random_form(Engine& eng, std::mt19937_64& rng, const RandomFormConfig& cfg);
GameId random_plain_form(Engine& eng, std::mt19937_64& rng, int max_birthday, int max_width);

}  // namespace misere
