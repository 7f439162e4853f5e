#include "doctest.h"

#include "oracle_utils.hpp"

using namespace misere;
using namespace misere::testing;

namespace {

struct Day1Fixture {
  Engine eng;
  GameId z = eng.zero();
  AugId t00 = mk_aug(eng, {z}, {z}, true, false);    // {#,0|0}
  AugId t00c = mk_aug(eng, {z}, {z}, false, true);   // {0|0,#}
  AugId t0_ = mk_aug(eng, {z}, {}, true, false);     // {#,0|.}
  AugId t0_c = mk_aug(eng, {}, {z}, false, true);    // {.|0,#}
  AugId t00t = mk_aug(eng, {z}, {z}, true, true);    // {#,0|0,#}
  AugId tt = mk_aug(eng, {}, {}, true, true);        // {#|#}
};

}  // namespace

TEST_CASE("mk_aug interns augmented forms") {
  Day1Fixture f;
  CHECK(mk_aug(f.eng, {}, {}, false, false) == AugId(f.z));
  CHECK(f.eng.node(f.t00).left_tomb);
  CHECK_FALSE(f.eng.node(f.t00).right_tomb);
  CHECK_FALSE(f.eng.node(f.t00).plain);
  CHECK(f.eng.node(f.tt).lefts.empty());
}

TEST_CASE("end-like predicates") {
  Day1Fixture f;
  CHECK(end_like(f.eng, f.t00).left);        // tombstone despite ordinary option
  CHECK_FALSE(end_like(f.eng, f.t00).right);
  CHECK(end_like(f.eng, integer(f.eng, -1)).left);  // plain Left end
  EndLike s = end_like(f.eng, star(f.eng));
  CHECK_FALSE(s.left);
  CHECK_FALSE(s.right);
}

TEST_CASE("augmented conjugation") {
  Day1Fixture f;
  CHECK(aug_conjugate(f.eng, f.t00) == f.t00c);
  CHECK(aug_conjugate(f.eng, f.t00t) == f.t00t);  // self-conjugate
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    GameId g = random_plain_form(f.eng, rng, 3, 2);
    CHECK(aug_conjugate(f.eng, embed(g)) == AugId(conjugate(f.eng, g)));
  }
}

TEST_CASE("the displayed tombstone sums reproduce exactly") {
  Day1Fixture f;
  Engine& eng = f.eng;

  // {#,0|0} + {0|0,#} = {G,~G | G,~G} with no tombstones
  AugId s1 = aug_sum(eng, f.t00, f.t00c);
  CHECK(s1 == mk_aug(eng, {f.t00, f.t00c}, {f.t00, f.t00c}, false, false));

  // {#,0|.} + {.|0,#} = {#,~G | G,#}
  AugId s2 = aug_sum(eng, f.t0_, f.t0_c);
  CHECK(s2 == mk_aug(eng, {f.t0_c}, {f.t0_}, true, true));

  // {#,0|0,#} + itself = {#,G | G,#}
  AugId s3 = aug_sum(eng, f.t00t, f.t00t);
  CHECK(s3 == mk_aug(eng, {f.t00t}, {f.t00t}, true, true));

  // a both-tombstoned G with options on both sides keeps both tombstones in
  // G + ~G, with the usual component options alongside
  AugId g = mk_aug(eng, {f.z}, {integer(eng, -1)}, true, true);
  AugId gc = aug_conjugate(eng, g);
  AugId s4 = aug_sum(eng, g, gc);
  std::vector<AugId> lefts = {aug_sum(eng, f.z, gc), aug_sum(eng, g, integer(eng, 1))};
  std::vector<AugId> rights = {aug_sum(eng, integer(eng, -1), gc), aug_sum(eng, g, f.z)};
  CHECK(s4 == mk_aug(eng, lefts, rights, true, true));
}

TEST_CASE("tombstones survive a sum only when both sides are end-like") {
  Day1Fixture f;
  Engine& eng = f.eng;
  // X a plain Left end with Right options: the tombstone stays
  GameId x = giveback_two(eng);
  AugId s = aug_sum(eng, f.t00, x);
  CHECK(eng.node(s).left_tomb);
  CHECK(end_like(eng, s).left);
  // X not a Left end: the tombstone contributes nothing
  AugId s2 = aug_sum(eng, f.t00, star(eng));
  CHECK_FALSE(eng.node(s2).left_tomb);
  CHECK_FALSE(end_like(eng, s2).left);
}

TEST_CASE("augmented outcomes") {
  Day1Fixture f;
  Engine& eng = f.eng;
  CHECK(aug_outcome(eng, f.t00).left_start == Player::Left);  // end-like wins
  CHECK(outcome_class(aug_outcome(eng, embed(star(eng)))) == Outcome::P);
  // with a non-end companion the tombstone is inert and the recursion runs
  // over ordinary options only
  AugId s = aug_sum(eng, f.t00, star(eng));
  CHECK(aug_outcome(eng, s) == slow_outcome(eng, s));
}

TEST_CASE("embedding is a homomorphism") {
  Day1Fixture f;
  Engine& eng = f.eng;
  std::mt19937_64 rng(22);
  for (int i = 0; i < 40; ++i) {
    GameId g = random_plain_form(eng, rng, 2, 2);
    GameId h = random_plain_form(eng, rng, 2, 2);
    CHECK(aug_sum(eng, embed(g), embed(h)) == AugId(sum(eng, g, h)));
    CHECK(aug_outcome(eng, embed(g)) == outcome(eng, g));
  }
}

TEST_CASE("end-like of a sum iff both summands end-like") {
  Engine eng;
  std::mt19937_64 rng(23);
  RandomFormConfig cfg;
  cfg.max_birthday = 2;
  cfg.tombstone_prob = 0.3;
  for (int i = 0; i < 120; ++i) {
    AugId a = random_form(eng, rng, cfg);
    AugId b = random_form(eng, rng, cfg);
    AugId s = aug_sum(eng, a, b);
    CHECK(end_like(eng, s).left == (end_like(eng, a).left && end_like(eng, b).left));
    CHECK(end_like(eng, s).right == (end_like(eng, a).right && end_like(eng, b).right));
  }
}

TEST_CASE("conjugation distributes over sums") {
  Engine eng;
  std::mt19937_64 rng(24);
  RandomFormConfig cfg;
  cfg.max_birthday = 2;
  cfg.tombstone_prob = 0.25;
  for (int i = 0; i < 80; ++i) {
    AugId a = random_form(eng, rng, cfg);
    AugId b = random_form(eng, rng, cfg);
    CHECK(aug_conjugate(eng, aug_sum(eng, a, b)) ==
          aug_sum(eng, aug_conjugate(eng, a), aug_conjugate(eng, b)));
  }
}

TEST_CASE("augmented outcome agrees with the unmemoized search") {
  Engine eng;
  std::mt19937_64 rng(25);
  RandomFormConfig cfg;
  cfg.max_birthday = 3;
  cfg.tombstone_prob = 0.25;
  for (int i = 0; i < 150; ++i) {
    AugId a = random_form(eng, rng, cfg);
    CHECK(aug_outcome(eng, a) == slow_outcome(eng, a));
  }
}
