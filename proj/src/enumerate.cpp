#include "misere/enumerate.hpp"

#include <algorithm>
#include <set>

namespace misere {

std::vector<std::vector<GameId>> option_subsets(const std::vector<GameId>& pool, int width,
                                                bool allow_empty) {
  std::vector<std::vector<GameId>> out;
  if (allow_empty) out.push_back({});
  std::vector<GameId> cur;
  // depth-first subset enumeration in pool order, size-capped
  auto rec = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t i = start; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      out.push_back(cur);
      if (static_cast<int>(cur.size()) < width) self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<GameId> all_forms(Engine& eng, int b, int width) {
  std::vector<GameId> layer{eng.zero()};
  for (int day = 1; day <= b; ++day) {
    auto sides = option_subsets(layer, width, true);
    std::set<GameId> next(layer.begin(), layer.end());
    for (const auto& ls : sides)
      for (const auto& rs : sides) next.insert(mk_game(eng, ls, rs));
    layer.assign(next.begin(), next.end());
  }
  std::sort(layer.begin(), layer.end(), [&](GameId a, GameId b2) {
    int ba = birthday(eng, a), bb = birthday(eng, b2);
    if (ba != bb) return ba < bb;
    return a.raw < b2.raw;
  });
  return layer;
}

std::vector<GameId> dicot_forms(Engine& eng, int b, int width) {
  std::vector<GameId> layer{eng.zero()};
  for (int day = 1; day <= b; ++day) {
    auto sides = option_subsets(layer, width, false);
    std::set<GameId> next(layer.begin(), layer.end());
    for (const auto& ls : sides)
      for (const auto& rs : sides) next.insert(mk_game(eng, ls, rs));
    layer.assign(next.begin(), next.end());
  }
  std::sort(layer.begin(), layer.end(), [&](GameId a, GameId b2) {
    int ba = birthday(eng, a), bb = birthday(eng, b2);
    if (ba != bb) return ba < bb;
    return a.raw < b2.raw;
  });
  return layer;
}

std::vector<GameId> dead_left_ends(Engine& eng, int b) {
  std::vector<GameId> layer{eng.zero()};
  for (int day = 1; day <= b; ++day) {
    if (layer.size() > 20)
      throw BudgetExceeded(std::size_t(1) << layer.size(), std::size_t(1) << 20);
    auto sides = option_subsets(layer, static_cast<int>(layer.size()), true);
    std::set<GameId> next(layer.begin(), layer.end());
    for (const auto& rs : sides) next.insert(mk_game(eng, {}, rs));
    layer.assign(next.begin(), next.end());
  }
  std::sort(layer.begin(), layer.end(), [&](GameId a, GameId b2) {
    int ba = birthday(eng, a), bb = birthday(eng, b2);
    if (ba != bb) return ba < bb;
    return a.raw < b2.raw;
  });
  return layer;
}

AugId random_form(Engine& eng, std::mt19937_64& rng, const RandomFormConfig& cfg) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> width_dist(1, cfg.max_width);
  auto rec = [&](auto&& self, int depth) -> AugId {
    bool lt = coin(rng) < cfg.tombstone_prob;
    bool rt = coin(rng) < cfg.tombstone_prob;
    std::vector<AugId> ls, rs;
    if (depth > 0) {
      if (coin(rng) >= cfg.stop_prob) {
        int w = width_dist(rng);
        for (int i = 0; i < w; ++i) ls.push_back(self(self, depth - 1));
      }
      if (coin(rng) >= cfg.stop_prob) {
        int w = width_dist(rng);
        for (int i = 0; i < w; ++i) rs.push_back(self(self, depth - 1));
      }
    }
    return eng.intern(std::move(ls), std::move(rs), lt, rt);
  };
  return rec(rec, cfg.max_birthday);
}

GameId random_plain_form(Engine& eng, std::mt19937_64& rng, int max_birthday, int max_width) {
  RandomFormConfig cfg;
  cfg.max_birthday = max_birthday;
  cfg.max_width = max_width;
  cfg.tombstone_prob = 0.0;
  AugId a = random_form(eng, rng, cfg);
  return *eng.as_plain(a);
}

}  // namespace misere
