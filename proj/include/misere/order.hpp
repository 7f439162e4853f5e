#pragma once

#include "misere/universes.hpp"

// Universe-relative comparison g >=_U h for augmented forms, decided
// recursively:
//   (a) every ordinary g^R has some h^R with g^R >= h^R or some g^{RL}
//       with g^{RL} >= h;
//   (b) every ordinary h^L has some g^L with g^L >= h^L or some h^{LR}
//       with g >= h^{LR};
//   (c) if h is Left end-like then g is Left U-strong;
//   (d) if g is Right end-like then h is Right U-strong.
// (a)-(b) are the maintenance property, (c)-(d) the proviso. Verdicts are
// three-valued: a bounded strong subquery downgrades ProvenTrue to
// BoundedTrue; any proven failure dominates.

namespace misere {

struct TriVerdict {
  enum class Kind { ProvenTrue, ProvenFalse, BoundedTrue };
  Kind kind = Kind::ProvenTrue;
  int bound = 0;      // BoundedTrue: largest end bound relied on
  char condition = 0; // ProvenFalse: which of (a)-(d) failed
  AugId witness{};    // ProvenFalse: failing option, or the strong-test end

  bool proven_true() const { return kind == Kind::ProvenTrue; }
  bool proven_false() const { return kind == Kind::ProvenFalse; }
  bool non_false() const { return kind != Kind::ProvenFalse; }
};

std::string verdict_text(const TriVerdict& v);

TriVerdict geq(Engine& eng, const UniverseSpec& u, AugId g, AugId h);

// Conjunction of geq both ways; failing direction's trace is preserved.
TriVerdict equiv(Engine& eng, const UniverseSpec& u, AugId g, AugId h);

// g > h: geq(g,h) and not geq(h,g).
TriVerdict strictly_greater(Engine& eng, const UniverseSpec& u, AugId g, AugId h);

// Some direction holds.
TriVerdict comparable(Engine& eng, const UniverseSpec& u, AugId g, AugId h);

// Definitional comparison over an enumerated domain: outcome(g+X) >=
// outcome(h+X) in the misere outcome order for every X in the domain. The
// independent oracle for geq; also the only valid comparison on
// non-universe monoids.
struct OracleResult {
  bool holds = true;
  GameId witness{};       // first X violating the outcome inequality
  std::size_t checked = 0;
};
OracleResult oracle_geq(Engine& eng, const std::vector<GameId>& domain, AugId g, AugId h,
                        std::size_t max_items = static_cast<std::size_t>(-1));

// The two halves of the comparison test, exposed separately. Maintenance is
// evaluated definitionally over an enumerated hereditary set; the proviso
// against a universe's strong service.
bool maintenance_holds(Engine& eng, const std::vector<GameId>& domain, AugId g, AugId h,
                       std::size_t max_items = static_cast<std::size_t>(-1));
TriVerdict proviso_holds(Engine& eng, const UniverseSpec& u, AugId g, AugId h);

// Re-evaluates the condition named by a ProvenFalse verdict.
bool reverify_failure(Engine& eng, const UniverseSpec& u, AugId g, AugId h, const TriVerdict& v);

}  // namespace misere
