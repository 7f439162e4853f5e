#pragma once

#include "misere/simplest.hpp"

#include <optional>

// Invertibility analysis. A form G is U-invertible exactly when G + ~G is
// Left U-strong and every option of the U-simplest form of G is
// U-invertible; the inverse, when one exists, is always the conjugate.
// Whether a tombstoned form lies in U-hat (has a U-expansion) has no known
// decision procedure, so it enters as a user assertion, never a computation.

namespace misere {

enum class EndPredicate { Disintegrator, Starkiller, SuperStarkiller };

// Recursive end predicates characterising when the day-1 forms fail to be
// invertible: a disintegrator end kills 1, a starkiller kills *, a super
// starkiller kills {#,0|0}.
bool is_disintegrator(Engine& eng, GameId g);
bool is_starkiller(Engine& eng, GameId g);
bool is_super_starkiller(Engine& eng, GameId g);
bool end_predicate(Engine& eng, EndPredicate p, GameId g);

// Direct outcome check of the appendix lemma instance for x:
//   predicate(x)              -> o^R(companion + x) = R
//   o^L(x) = L, not predicate -> o^R(companion + x) = L
// with companion ~1, * or {#,0|0}. Returns whether the claim holds;
// throws when neither precondition applies.
bool predicate_lemma_oracle(Engine& eng, EndPredicate p, GameId x);

struct EndSearchResult {
  std::optional<GameId> witness;
  int bound = 0;
  bool complete = false;  // enumeration covered the whole Left-end set
};
EndSearchResult search_end_with(Engine& eng, const UniverseSpec& u, EndPredicate p, int bound);

struct InvertVerdict {
  TriVerdict verdict;
  AugId inverse{};   // conjugate of the input, meaningful when non-false
  AugId simplest{};  // the U-simplest form that was analysed
  struct Node {
    AugId form;
    TriVerdict verdict;
    std::vector<Node> kids;
  };
  Node tree;
};

InvertVerdict is_invertible(Engine& eng, const UniverseSpec& u, AugId a,
                            ReduceMode mode = ReduceMode::Exact);

// The 16 augmented forms with options among {0}, quotiented by equivalence
// and conjugation. Requires an exact comparison regime.
struct CensusClass {
  AugId representative;
  std::vector<AugId> members;
};
std::vector<AugId> day1_forms(Engine& eng);
std::vector<CensusClass> day1_census(Engine& eng, const UniverseSpec& u);

// User-asserted U-hat membership. Plain members of U are recognised
// directly; everything else is Unknown unless asserted.
struct UhatAssertions {
  std::vector<AugId> asserted_in;
  std::vector<AugId> asserted_not_in;

  enum class Status { In, NotIn, Unknown };
  Status status(Engine& eng, const UniverseSpec& u, AugId a) const;
};

struct Day1Row {
  AugId form;
  UhatAssertions::Status premise;
  std::optional<TriVerdict> verdict;  // absent when premise is NotIn
  std::optional<GameId> witness_end;  // end defeating invertibility
  AugId inverse{};
};
std::vector<Day1Row> day1_invertibles(Engine& eng, const UniverseSpec& u,
                                      const UhatAssertions& assertions);

struct ReducedReport {
  enum class ItemStatus { Satisfied, Violated, Unknown };
  enum class UnknownReason { None, UhatUnresolved, BoundedSearchExhausted };
  struct Item {
    std::string description;
    ItemStatus status;
    UnknownReason reason = UnknownReason::None;
    std::optional<GameId> witness_end;
  };
  enum class Overall { Reduced, NotReduced, Inconclusive };
  Overall overall;
  std::optional<AugId> invertible_witness;  // NotReduced
  bool weakness_shortcut = false;
  std::vector<Item> items;
};
ReducedReport is_reduced(Engine& eng, const UniverseSpec& u, const UhatAssertions& assertions);

// Prop: conjugate-invertible elements form a subgroup. Requires both inputs
// invertible; checks the sum is invertible with the conjugate sum inverse.
bool group_closure_check(Engine& eng, const UniverseSpec& u, AugId g, AugId h);

}  // namespace misere
