#include "misere/games.hpp"

namespace misere {

GameId mk_game(Engine& eng, const std::vector<GameId>& lefts, const std::vector<GameId>& rights) {
  std::vector<AugId> ls(lefts.begin(), lefts.end());
  std::vector<AugId> rs(rights.begin(), rights.end());
  AugId a = eng.intern(std::move(ls), std::move(rs), false, false);
  return GameId{a.raw};
}

GameId integer(Engine& eng, long n) {
  if (n < 0) return conjugate(eng, integer(eng, -n));
  if (n > eng.max_integer_magnitude)
    throw std::invalid_argument("integer exceeds configured depth limit");
  GameId g = eng.zero();
  for (long i = 0; i < n; ++i) g = mk_game(eng, {g}, {});
  return g;
}

std::optional<long> as_integer(const Engine& eng, AugId a) {
  const FormNode& n = eng.node(a);
  if (!n.plain) return std::nullopt;
  if (n.lefts.empty() && n.rights.empty()) return 0;
  if (n.rights.empty() && n.lefts.size() == 1) {
    auto v = as_integer(eng, n.lefts[0]);
    if (v && *v >= 0) return *v + 1;
    return std::nullopt;
  }
  if (n.lefts.empty() && n.rights.size() == 1) {
    auto v = as_integer(eng, n.rights[0]);
    if (v && *v <= 0) return *v - 1;
    return std::nullopt;
  }
  return std::nullopt;
}

GameId conjugate(Engine& eng, GameId g) { return GameId{eng.conjugate(g).raw}; }

GameId sum(Engine& eng, GameId g, GameId h) { return GameId{eng.sum(g, h).raw}; }

int birthday(const Engine& eng, GameId g) { return eng.node(g).birthday; }

ClassifyFlags classify(const Engine& eng, GameId g) {
  const FormNode& n = eng.node(g);
  return {n.lefts.empty(), n.rights.empty(), n.dead_left_end, n.dead_right_end, n.dicot};
}

OutcomePair outcome(Engine& eng, GameId g) { return eng.outcome(g); }

}  // namespace misere
