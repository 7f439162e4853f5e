#include "doctest.h"

#include "oracle_utils.hpp"

#include "misere/universes.hpp"

#include <set>

using namespace misere;
using namespace misere::testing;

TEST_CASE("left end enumerations") {
  Engine eng;
  UniverseSpec d = UniverseSpec::dicot();
  CHECK(left_ends_up_to(eng, d, 5) == std::vector<GameId>{eng.zero()});
  CHECK(left_end_enumeration_complete(d));

  UniverseSpec e = UniverseSpec::dead_ending();
  GameId z = eng.zero();
  GameId mone = integer(eng, -1);
  auto as_set = [](std::vector<GameId> v) { return std::set<GameId>(v.begin(), v.end()); };
  std::set<GameId> expect = {z, mone, mk_game(eng, {}, {mone}), mk_game(eng, {}, {z, mone})};
  CHECK(as_set(left_ends_up_to(eng, e, 2)) == expect);
  CHECK(left_ends_up_to(eng, e, 3).size() == 16);
  CHECK_FALSE(left_end_enumeration_complete(e));

  UniverseSpec cl = UniverseSpec::end_closure(eng, {giveback_two(eng)});
  std::vector<GameId> ends3 = left_ends_up_to(eng, cl, 3);
  // atoms are 0, ~1 (from the conjugate's subpositions), ~2, {.|2};
  // sums with total birthday <= 3 collapse to the integers plus {.|2}
  std::set<GameId> expect_cl = {z, mone, integer(eng, -2), integer(eng, -3), giveback_two(eng)};
  CHECK(as_set(ends3) == expect_cl);
  for (GameId x : ends3) CHECK(classify(eng, x).is_left_end);
  for (std::size_t i = 1; i < ends3.size(); ++i)
    CHECK(birthday(eng, ends3[i - 1]) <= birthday(eng, ends3[i]));
}

TEST_CASE("membership") {
  Engine eng;
  UniverseSpec d = UniverseSpec::dicot();
  UniverseSpec e = UniverseSpec::dead_ending();
  GameId st = star(eng);
  GameId one = integer(eng, 1);
  CHECK(member(eng, d, st));
  CHECK_FALSE(member(eng, d, one));
  CHECK(member(eng, e, one));
  CHECK(member(eng, e, sum(eng, one, integer(eng, -1))));
  // {.|2} is itself a Left end whose subposition 2 is not a Left end, so it
  // is not dead-ending
  CHECK_FALSE(member(eng, e, giveback_two(eng)));

  UniverseSpec cl = UniverseSpec::end_closure(eng, {giveback_two(eng)});
  CHECK(member(eng, cl, sum(eng, giveback_two(eng), giveback_two(eng))));
  CHECK(member(eng, cl, st));   // every universe contains the dicots
  CHECK(member(eng, cl, one));  // conjugate + heredity closure
  CHECK_FALSE(member(eng, cl, mk_game(eng, {}, {integer(eng, 3)})));
}

TEST_CASE("members_up_to basics") {
  Engine eng;
  UniverseSpec d = UniverseSpec::dicot();
  std::vector<GameId> d2 = members_up_to(eng, d, 2, 2);
  CHECK(d2.size() == 11);
  for (GameId g : d2) CHECK(classify(eng, g).is_dicot);
  UniverseSpec m = UniverseSpec::full_misere();
  CHECK(members_up_to(eng, m, 2, 4).size() == 256);
  UniverseSpec e = UniverseSpec::dead_ending();
  for (GameId g : members_up_to(eng, e, 2, 2)) CHECK(member(eng, e, g));
}

TEST_CASE("weakening ends") {
  Engine eng;
  UniverseSpec cl2 = UniverseSpec::end_closure(eng, {giveback_two(eng)});
  WeakCertificate c = contains_weakening_end(eng, cl2);
  REQUIRE(c.kind == WeakCertificate::Kind::WeakeningEnd);
  CHECK(c.end == giveback_two(eng));

  // an end with options to 2 and 5 weakens even though its birthday is
  // beyond the enumeration bound: it is a generator atom
  GameId w25 = mk_game(eng, {}, {integer(eng, 2), integer(eng, 5)});
  UniverseSpec cl25 = UniverseSpec::end_closure(eng, {w25});
  WeakCertificate c25 = contains_weakening_end(eng, cl25);
  REQUIRE(c25.kind == WeakCertificate::Kind::WeakeningEnd);
  CHECK(c25.end == w25);

  CHECK(contains_weakening_end(eng, UniverseSpec::dicot()).kind == WeakCertificate::Kind::Unknown);
  CHECK(contains_weakening_end(eng, UniverseSpec::dead_ending()).kind ==
        WeakCertificate::Kind::Unknown);
  CHECK(contains_weakening_end(eng, UniverseSpec::full_misere()).kind ==
        WeakCertificate::Kind::FullMisereRule);
}

TEST_CASE("strong verdicts across the regimes") {
  Engine eng;
  UniverseSpec d = UniverseSpec::dicot();
  UniverseSpec e = UniverseSpec::dead_ending();
  UniverseSpec m = UniverseSpec::full_misere();
  UniverseSpec cl2 = UniverseSpec::end_closure(eng, {giveback_two(eng)});
  GameId st = star(eng);
  GameId one = integer(eng, 1);
  GameId one_pair = sum(eng, one, integer(eng, -1));

  CHECK(strong_regime(eng, d) == StrongRegime::ExactDicot);
  CHECK(strong_regime(eng, m) == StrongRegime::ExactWeak);
  CHECK(strong_regime(eng, cl2) == StrongRegime::ExactWeak);
  CHECK(strong_regime(eng, e) == StrongRegime::Bounded);

  CHECK(is_left_strong(eng, d, embed(sum(eng, st, st))).kind == StrongVerdict::Kind::ProvenStrong);

  StrongVerdict v1 = is_left_strong(eng, d, embed(one));
  REQUIRE(v1.kind == StrongVerdict::Kind::ProvenNotStrong);
  CHECK(v1.witness == eng.zero());

  StrongVerdict v2 = is_left_strong(eng, cl2, embed(one_pair));
  REQUIRE(v2.kind == StrongVerdict::Kind::ProvenNotStrong);
  CHECK(eng.outcome(eng.sum(one_pair, v2.witness)).left_start == Player::Right);

  AugId t00 = mk_aug(eng, {eng.zero()}, {eng.zero()}, true, false);
  CHECK(is_left_strong(eng, m, t00).kind == StrongVerdict::Kind::ProvenStrong);
  CHECK(is_right_strong(eng, m, aug_conjugate(eng, t00)).kind ==
        StrongVerdict::Kind::ProvenStrong);

  StrongVerdict v3 = is_left_strong(eng, e, embed(one_pair));
  CHECK(v3.kind == StrongVerdict::Kind::BoundedStrong);
  CHECK(v3.bound == 3);

  StrongVerdict v4 = is_left_strong(eng, e, embed(st));
  REQUIRE(v4.kind == StrongVerdict::Kind::ProvenNotStrong);  // o^L(*) = R already
  CHECK(eng.outcome(eng.sum(st, v4.witness)).left_start == Player::Right);
}

TEST_CASE("proven-not-strong witnesses re-verify") {
  Engine eng;
  UniverseSpec cl2 = UniverseSpec::end_closure(eng, {giveback_two(eng)});
  UniverseSpec m = UniverseSpec::full_misere();
  std::mt19937_64 rng(41);
  RandomFormConfig cfg;
  cfg.max_birthday = 3;
  cfg.tombstone_prob = 0.2;
  for (int i = 0; i < 60; ++i) {
    AugId a = random_form(eng, rng, cfg);
    for (const UniverseSpec* u : {&cl2, &m}) {
      StrongVerdict v = is_left_strong(eng, *u, a);
      if (v.kind == StrongVerdict::Kind::ProvenNotStrong) {
        CHECK(eng.outcome(eng.sum(a, v.witness)).left_start == Player::Right);
        CHECK(classify(eng, v.witness).is_left_end);
        CHECK(member(eng, *u, v.witness));
      } else {
        CHECK(v.kind == StrongVerdict::Kind::ProvenStrong);
        CHECK(end_like(eng, a).left);
      }
    }
  }
}

TEST_CASE("exact weak witness identities") {
  Engine eng;
  GameId gb = giveback_two(eng);
  std::mt19937_64 rng(42);
  int tested = 0;
  while (tested < 40) {
    GameId g = random_plain_form(eng, rng, 3, 2);
    if (classify(eng, g).is_left_end) continue;
    ++tested;
    GameId x = n_copies(eng, gb, birthday(eng, g));
    CHECK(outcome(eng, sum(eng, g, x)).left_start == Player::Right);
  }
  // full-misere witness {.|birth(G)} for augmented non-end-like forms
  RandomFormConfig cfg;
  cfg.max_birthday = 3;
  cfg.tombstone_prob = 0.25;
  tested = 0;
  while (tested < 40) {
    AugId a = random_form(eng, rng, cfg);
    if (end_like(eng, a).left) continue;
    ++tested;
    GameId x = mk_game(eng, {}, {integer(eng, aug_birthday(eng, a))});
    CHECK(aug_outcome(eng, aug_sum(eng, a, x)).left_start == Player::Right);
  }
}

TEST_CASE("weakness certificates") {
  Engine eng;
  CHECK(is_weak(eng, UniverseSpec::full_misere()).kind == WeakCertificate::Kind::FullMisereRule);
  CHECK(is_weak(eng, UniverseSpec::end_closure(eng, {giveback_two(eng)})).kind ==
        WeakCertificate::Kind::WeakeningEnd);
  CHECK(is_weak(eng, UniverseSpec::dead_ending()).kind == WeakCertificate::Kind::Unknown);

  UniverseSpec d = UniverseSpec::dicot();
  WeakCertificate c = is_weak(eng, d);
  REQUIRE(c.kind == WeakCertificate::Kind::NotWeak);
  CHECK_FALSE(end_like(eng, c.witness).left);
  CHECK(is_left_strong(eng, d, c.witness).kind == StrongVerdict::Kind::ProvenStrong);
  // * + * also witnesses that D is not weak
  GameId ss = sum(eng, star(eng), star(eng));
  CHECK(is_left_strong(eng, d, embed(ss)).kind == StrongVerdict::Kind::ProvenStrong);
  CHECK_FALSE(end_like(eng, embed(ss)).left);
}
