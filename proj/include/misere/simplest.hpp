#pragma once

#include "misere/order.hpp"

// Reduction to U-simplest form: remove dominated options, bypass reversible
// options (tombstoning end-reversible ones), prune unnecessary tombstones;
// bottom-up over subpositions until fixpoint. Siegel proves the fixpoint is
// unique up to isomorphism, which interning turns into id equality.
//
// In Exact mode every reduction must be justified by a proven comparison;
// BoundedAssumed also accepts bounded-true evidence and marks the trace.

namespace misere {

enum class Side : std::uint8_t { Left, Right };

enum class ReduceMode { Exact, BoundedAssumed };

struct ReductionStep {
  enum class Kind { RemoveDominated, Bypass, EndReverse, DropTombstone };
  Kind kind;
  Side side;
  AugId at;       // subposition before the step
  AugId result;   // subposition after the step
  AugId option{};  // option removed/replaced
  AugId target{};  // dominating option or reversal target
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  bool exact = true;  // no step relied on bounded-true evidence
  int bound = 0;
};

struct SimplestResult {
  AugId form;
  ReductionTrace trace;
};

// Single top-level passes (children untouched).
AugId remove_dominated(Engine& eng, const UniverseSpec& u, AugId a,
                       ReduceMode mode = ReduceMode::Exact, ReductionTrace* trace = nullptr);
AugId bypass_reversible(Engine& eng, const UniverseSpec& u, AugId a,
                        ReduceMode mode = ReduceMode::Exact, ReductionTrace* trace = nullptr);
AugId prune_tombstones(Engine& eng, const UniverseSpec& u, AugId a,
                       ReduceMode mode = ReduceMode::Exact, ReductionTrace* trace = nullptr);

SimplestResult simplest_form(Engine& eng, const UniverseSpec& u, AugId a,
                             ReduceMode mode = ReduceMode::Exact);

// Replays a trace by substituting each step's before-form with its
// after-form throughout the current form; reproduces simplest_form's output.
AugId replay_trace(Engine& eng, AugId input, const ReductionTrace& trace);

const char* step_name(ReductionStep::Kind k);

}  // namespace misere
