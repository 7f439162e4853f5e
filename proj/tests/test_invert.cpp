#include "doctest.h"

#include "oracle_utils.hpp"

#include "misere/invert.hpp"

#include <set>

using namespace misere;
using namespace misere::testing;

namespace {

GameId gce(Engine& eng) {
  return read_plain(eng, "{.|{1|0,~1}+{~1,1|.}}");
}

}  // namespace

TEST_CASE("the end predicate table") {
  Engine eng;
  GameId mone = integer(eng, -1);
  GameId star_zero_end = read_plain(eng, "{.|{*|0}}");
  GameId star_one_end = read_plain(eng, "{.|{*|1}}");
  GameId star_mone_end = read_plain(eng, "{.|{*|~1}}");

  CHECK(is_disintegrator(eng, star_zero_end));
  CHECK_FALSE(is_starkiller(eng, star_zero_end));
  CHECK_FALSE(is_super_starkiller(eng, star_zero_end));

  CHECK_FALSE(is_disintegrator(eng, mone));
  CHECK(is_starkiller(eng, mone));
  CHECK_FALSE(is_super_starkiller(eng, mone));

  CHECK(is_disintegrator(eng, star_one_end));
  CHECK(is_starkiller(eng, star_one_end));
  CHECK(is_super_starkiller(eng, star_one_end));

  // the {.|{*|~1}} variant is a disintegrator only: o^R({*|~1}) = L because
  // the move to ~1 strands Left with no reply, which wins for her
  CHECK(is_disintegrator(eng, star_mone_end));
  CHECK_FALSE(is_starkiller(eng, star_mone_end));
  CHECK_FALSE(is_super_starkiller(eng, star_mone_end));
  for (EndPredicate p :
       {EndPredicate::Disintegrator, EndPredicate::Starkiller, EndPredicate::SuperStarkiller}) {
    CHECK(predicate_lemma_oracle(eng, p, star_mone_end));
    CHECK(predicate_lemma_oracle(eng, p, star_one_end));
    CHECK(predicate_lemma_oracle(eng, p, mone));
    CHECK(predicate_lemma_oracle(eng, p, star_zero_end));
  }
}

TEST_CASE("the counterexample end flips under addition") {
  Engine eng;
  GameId g = gce(eng);
  GameId gg = sum(eng, g, g);
  CHECK_FALSE(is_disintegrator(eng, g));
  CHECK_FALSE(is_starkiller(eng, g));
  CHECK_FALSE(is_super_starkiller(eng, g));
  CHECK(is_disintegrator(eng, gg));
  CHECK(is_starkiller(eng, gg));
  CHECK(is_super_starkiller(eng, gg));
}

TEST_CASE("a Right option of shape {*|X} forces a disintegrator") {
  Engine eng;
  std::mt19937_64 rng(71);
  for (int i = 0; i < 40; ++i) {
    GameId x = random_plain_form(eng, rng, 2, 2);
    GameId starx = mk_game(eng, {star(eng)}, {x});
    GameId probe = mk_game(eng, {}, {starx});
    CHECK(is_disintegrator(eng, probe));
  }
}

TEST_CASE("lemma oracle spot checks") {
  Engine eng;
  GameId mone = integer(eng, -1);
  // ~1 is a starkiller and Right wins * + ~1 moving first
  CHECK(is_starkiller(eng, mone));
  CHECK(outcome(eng, sum(eng, star(eng), mone)).right_start == Player::Right);
  // a terminable Left end (Right option to 0) is a starkiller
  std::mt19937_64 rng(72);
  for (int i = 0; i < 20; ++i) {
    GameId x = random_plain_form(eng, rng, 2, 2);
    GameId end = mk_game(eng, {}, {eng.zero(), x});
    CHECK(is_starkiller(eng, end));
  }
  // a non-starkiller Left end gives Left the win on * + x
  GameId z = eng.zero();
  CHECK_FALSE(is_starkiller(eng, z));
  CHECK(outcome(eng, sum(eng, star(eng), z)).right_start == Player::Left);
  CHECK_THROWS_AS(predicate_lemma_oracle(eng, EndPredicate::Starkiller, integer(eng, 1)),
                  std::invalid_argument);
}

TEST_CASE("appendix lemma biconditionals over the small end census") {
  Engine eng;
  UniverseSpec m = UniverseSpec::full_misere();
  GameId mone = integer(eng, -1);
  GameId st = star(eng);
  AugId t00 = mk_aug(eng, {eng.zero()}, {eng.zero()}, true, false);
  for (GameId x : left_ends_up_to(eng, m, 2)) {
    CHECK(is_disintegrator(eng, x) ==
          (eng.outcome(eng.sum(mone, x)).right_start == Player::Right));
    CHECK(is_starkiller(eng, x) == (eng.outcome(eng.sum(st, x)).right_start == Player::Right));
    CHECK(is_super_starkiller(eng, x) ==
          (eng.outcome(eng.sum(t00, x)).right_start == Player::Right));
  }
}

TEST_CASE("end searches") {
  Engine eng;
  UniverseSpec e = UniverseSpec::dead_ending();
  EndSearchResult r = search_end_with(eng, e, EndPredicate::Starkiller, 2);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == integer(eng, -1));

  UniverseSpec d = UniverseSpec::dicot();
  EndSearchResult r2 = search_end_with(eng, d, EndPredicate::Starkiller, 4);
  CHECK_FALSE(r2.witness.has_value());
  CHECK(r2.complete);

  UniverseSpec m = UniverseSpec::full_misere();
  EndSearchResult r3 = search_end_with(eng, m, EndPredicate::SuperStarkiller, 3);
  REQUIRE(r3.witness.has_value());
  CHECK(birthday(eng, *r3.witness) == 3);  // no super-starkiller end is born earlier
  CHECK(is_super_starkiller(eng, *r3.witness));
}

TEST_CASE("invertibility of the small forms") {
  Engine eng;
  UniverseSpec d = UniverseSpec::dicot();
  UniverseSpec e = UniverseSpec::dead_ending();
  UniverseSpec m = UniverseSpec::full_misere();
  UniverseSpec cl2 = UniverseSpec::end_closure(eng, {giveback_two(eng)});

  for (const UniverseSpec* u : {&d, &e, &m, &cl2}) {
    InvertVerdict v = is_invertible(eng, *u, embed(eng.zero()));
    CHECK(v.verdict.proven_true());
    CHECK(v.inverse == embed(eng.zero()));
  }

  InvertVerdict vs = is_invertible(eng, d, embed(star(eng)));
  CHECK(vs.verdict.proven_true());
  CHECK(vs.inverse == embed(star(eng)));

  InvertVerdict vm = is_invertible(eng, cl2, embed(integer(eng, -1)));
  CHECK(vm.verdict.proven_false());

  InvertVerdict ve = is_invertible(eng, e, embed(star(eng)));
  REQUIRE(ve.verdict.proven_false());
  CHECK(ve.verdict.witness == AugId(integer(eng, -1)));  // the starkiller end

  // 1 + ~1 in E resolves only at bounded confidence
  GameId pair = sum(eng, integer(eng, 1), integer(eng, -1));
  InvertVerdict vp = is_invertible(eng, e, embed(pair));
  CHECK(vp.verdict.kind == TriVerdict::Kind::BoundedTrue);
}

TEST_CASE("birthday-1 forms reduce invertibility to the strong test") {
  Engine eng;
  UniverseSpec m = UniverseSpec::full_misere();
  for (AugId f : day1_forms(eng)) {
    InvertVerdict v = is_invertible(eng, m, f);
    bool strong = is_left_strong(eng, m, aug_sum(eng, f, aug_conjugate(eng, f))).kind ==
                  StrongVerdict::Kind::ProvenStrong;
    CHECK(v.verdict.proven_true() == strong);
  }
}

TEST_CASE("day-1 census collapses to the six known classes") {
  Engine eng;
  UniverseSpec m = UniverseSpec::full_misere();
  std::vector<CensusClass> classes = day1_census(eng, m);
  REQUIRE(classes.size() == 6);

  GameId z = eng.zero();
  AugId zero = embed(z);
  AugId one = embed(integer(eng, 1));
  AugId st = embed(star(eng));
  AugId t0_ = mk_aug(eng, {z}, {}, true, false);
  AugId t00 = mk_aug(eng, {z}, {z}, true, false);
  AugId t00t = mk_aug(eng, {z}, {z}, true, true);
  std::set<AugId> reps;
  for (const CensusClass& c : classes) reps.insert(c.representative);
  CHECK(reps == std::set<AugId>{zero, one, st, t0_, t00, t00t});

  auto class_of = [&](AugId x) -> const CensusClass& {
    for (const CensusClass& c : classes)
      for (AugId mrm : c.members)
        if (mrm == x) return c;
    throw std::logic_error("form missing from census");
  };
  CHECK(class_of(mk_aug(eng, {}, {}, true, true)).representative == zero);   // {#|#} ~ 0
  CHECK(class_of(mk_aug(eng, {}, {z}, true, false)).representative == one);  // {#|0} pairs with 1
  CHECK(class_of(embed(integer(eng, -1))).representative == one);            // conjugation quotient
  CHECK(class_of(st).members.size() == 1);
  CHECK(class_of(t00t).members.size() == 1);
  CHECK(class_of(t00).members.size() == 2);
  CHECK(class_of(zero).members.size() == 4);

  CHECK_THROWS_AS(day1_census(eng, UniverseSpec::dead_ending()), std::invalid_argument);
}

TEST_CASE("day-1 invertibility reports") {
  Engine eng;
  GameId z = eng.zero();
  UniverseSpec d = UniverseSpec::dicot();
  UniverseSpec e = UniverseSpec::dead_ending();
  UhatAssertions none;

  std::vector<Day1Row> rows_d = day1_invertibles(eng, d, none);
  std::vector<Day1Row> rows_e = day1_invertibles(eng, e, none);
  auto find_row = [&](const std::vector<Day1Row>& rows, AugId f) -> const Day1Row& {
    for (const auto& r : rows)
      if (r.form == f) return r;
    throw std::logic_error("row missing");
  };

  AugId st = embed(star(eng));
  REQUIRE(find_row(rows_d, st).verdict.has_value());
  CHECK(find_row(rows_d, st).verdict->proven_true());  // no starkiller end among dicots

  REQUIRE(find_row(rows_e, st).verdict.has_value());
  CHECK(find_row(rows_e, st).verdict->proven_false());
  CHECK(*find_row(rows_e, st).witness_end == integer(eng, -1));

  // asserting {#,0|.} into U-hat makes it invertible with conjugate inverse
  AugId t0_ = mk_aug(eng, {z}, {}, true, false);
  UhatAssertions asserted;
  asserted.asserted_in.push_back(t0_);
  std::vector<Day1Row> rows_e2 = day1_invertibles(eng, e, asserted);
  const Day1Row& row = find_row(rows_e2, t0_);
  REQUIRE(row.verdict.has_value());
  CHECK(row.verdict->proven_true());
  CHECK(row.inverse == mk_aug(eng, {}, {z}, false, true));

  // 1 is not in the dicot universe and unasserted: verdict stays unknown
  CHECK_FALSE(find_row(rows_d, embed(integer(eng, 1))).verdict.has_value());
}

TEST_CASE("reduced-universe reports") {
  Engine eng;
  UhatAssertions none;
  UniverseSpec cl2 = UniverseSpec::end_closure(eng, {giveback_two(eng)});
  ReducedReport r1 = is_reduced(eng, cl2, none);
  CHECK(r1.overall == ReducedReport::Overall::Reduced);
  CHECK(r1.weakness_shortcut);

  UniverseSpec d = UniverseSpec::dicot();
  ReducedReport r2 = is_reduced(eng, d, none);
  REQUIRE(r2.overall == ReducedReport::Overall::NotReduced);
  CHECK(*r2.invertible_witness == embed(star(eng)));

  // full misere with the standard assertions: every item resolves
  UniverseSpec m = UniverseSpec::full_misere();
  GameId z = eng.zero();
  UhatAssertions standard;
  standard.asserted_not_in.push_back(mk_aug(eng, {z}, {}, true, false));
  standard.asserted_not_in.push_back(mk_aug(eng, {z}, {z}, true, true));
  ReducedReport r3 = is_reduced(eng, m, standard);
  CHECK(r3.overall == ReducedReport::Overall::Reduced);
  for (const auto& item : r3.items)
    CHECK(item.status == ReducedReport::ItemStatus::Satisfied);

  UniverseSpec e = UniverseSpec::dead_ending();
  ReducedReport r4 = is_reduced(eng, e, none);
  CHECK(r4.overall == ReducedReport::Overall::Inconclusive);
}

TEST_CASE("invertible elements form a group under conjugate inverses") {
  Engine eng;
  UniverseSpec d = UniverseSpec::dicot();
  AugId st = embed(star(eng));
  CHECK(group_closure_check(eng, d, st, st));
  CHECK(group_closure_check(eng, d, embed(eng.zero()), embed(eng.zero())));
  int checked = 0;
  for (GameId g : dicot_forms(eng, 2, 2)) {
    if (!is_invertible(eng, d, embed(g)).verdict.proven_true()) continue;
    CHECK(group_closure_check(eng, d, st, embed(g)));
    ++checked;
  }
  CHECK(checked >= 2);
  CHECK_THROWS_AS(group_closure_check(eng, d, embed(integer(eng, 1)), st),
                  std::invalid_argument);
}

TEST_CASE("conjugate property and the definitional inverse oracle on dicots") {
  Engine eng;
  UniverseSpec d = UniverseSpec::dicot();
  std::vector<GameId> dicots2 = dicot_forms(eng, 2, 2);
  std::vector<GameId> dicots3 = dicot_forms(eng, 3, 2);
  for (GameId g : dicots2) {
    InvertVerdict v = is_invertible(eng, d, embed(g));
    if (v.verdict.proven_true())
      CHECK(equiv(eng, d, embed(sum(eng, g, conjugate(eng, g))), embed(eng.zero())).proven_true());

    // definitional search: any inverse among dicots born a day later
    bool found = false;
    for (GameId h : dicots3) {
      GameId s = sum(eng, g, h);
      if (outcome_of(eng, s) != Outcome::N) continue;  // o(0) = N is necessary
      if (oracle_geq(eng, dicots3, embed(s), embed(eng.zero())).holds &&
          oracle_geq(eng, dicots3, embed(eng.zero()), embed(s)).holds) {
        found = true;
        break;
      }
    }
    CHECK(v.verdict.proven_true() == found);
  }
}

TEST_CASE("invertible forms scale across birthdays") {
  Engine eng;
  UniverseSpec d = UniverseSpec::dicot();
  GameId st = star(eng);
  for (int n = 1; n <= 3; ++n) {
    InvertVerdict v = is_invertible(eng, d, embed(n_copies(eng, st, n)));
    CHECK(v.verdict.proven_true());
  }
}

TEST_CASE("weak universes have no nonzero invertible members") {
  Engine eng;
  UniverseSpec cl2 = UniverseSpec::end_closure(eng, {giveback_two(eng)});
  for (GameId g : members_up_to(eng, cl2, 3, 2)) {
    InvertVerdict v = is_invertible(eng, cl2, embed(g));
    if (g == eng.zero())
      CHECK(v.verdict.proven_true());
    else
      CHECK(v.verdict.proven_false());
  }
}
