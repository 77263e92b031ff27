#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "l5/algebra.hpp"
#include "l5/assignment.hpp"
#include "l5/bits.hpp"
#include "l5/formula.hpp"

namespace l5 {

using World = std::uint32_t;
using WorldSet = Mask;

/// Unchecked frame input: world count and a list of related pairs.
struct RawFrame {
  std::size_t worlds = 0;
  std::vector<std::pair<World, World>> order;
};

struct FrameReport {
  ValidationReport report;
  std::optional<World> bottom;
  WorldSet maximal = 0;
  bool valid() const { return report.valid(); }
};

/// Checks the frame laws. With close_relation the reflexive-transitive closure
/// of the given pairs is used (so only antisymmetry, rootedness and range can
/// fail); without it, missing reflexive or transitive pairs are reported too.
FrameReport check_frame(const RawFrame& raw, bool close_relation = true);

/// Finite rooted partial order.
class KripkeFrame {
public:
  /// Closes the relation and validates; throws InvalidStructure on failure.
  static KripkeFrame from_raw(const RawFrame& raw);
  /// From a full relation table; throws InvalidStructure unless it is a rooted partial order.
  static KripkeFrame from_relation(const std::vector<WorldSet>& successors);

  static KripkeFrame point();
  static KripkeFrame chain(std::size_t n);
  /// Root 0 with `tips` pairwise incomparable successors 1..tips.
  static KripkeFrame fork(std::size_t tips);

  std::size_t size() const noexcept { return succ_.size(); }
  WorldSet worlds() const noexcept { return full_mask(size()); }
  World bottom() const noexcept { return bottom_; }
  WorldSet maximal() const noexcept { return maximal_; }
  bool is_maximal(World w) const { return has(maximal_, w); }
  /// w R v
  bool related(World w, World v) const { return has(succ_[w], v); }
  /// {v : w R v}, including w.
  WorldSet successors(World w) const { return succ_[w]; }
  bool is_upset(WorldSet s) const;
  bool is_linear() const;
  /// Pairs (w, v) with w R v and w != v, no transitive shortcuts.
  std::vector<std::pair<World, World>> cover_pairs() const;

private:
  KripkeFrame() = default;
  std::vector<WorldSet> succ_;
  World bottom_ = 0;
  WorldSet maximal_ = 0;
};

/// Monotone valuation: each variable denotes an up-set.
class FrameAssignment {
public:
  FrameAssignment() = default;
  /// Throws InvalidStructure if some value is not an up-set of frame.
  FrameAssignment(const KripkeFrame& frame, VarMap<WorldSet> values);

  const VarMap<WorldSet>& values() const noexcept { return values_; }
  WorldSet at(Var v) const { return values_.at(v); }
  friend bool operator==(const FrameAssignment&, const FrameAssignment&) = default;

private:
  VarMap<WorldSet> values_;
};

/// All up-sets of frame (including empty and all worlds), sorted by bitmask.
std::vector<WorldSet> upsets(const KripkeFrame& frame);

/// Pointwise satisfaction, following the clauses literally: -> quantifies over
/// the successors of w, box looks only at the bottom world.
bool sat(const KripkeFrame& frame, const FrameAssignment& g, World w, const Formula& f);

/// {w : sat(frame, g, w, f)}, computed bottom-up over subformulas.
WorldSet truth_set(const KripkeFrame& frame, const FrameAssignment& g, const Formula& f);

/// Calls fn(g) for every assignment of up-sets to vars; fn returns false to stop.
template <class Fn>
bool for_each_frame_assignment(const KripkeFrame& frame, const std::vector<Var>& vars, Fn&& fn);

/// f holds at every world under every assignment over its variables.
bool frame_valid(const KripkeFrame& frame, const Formula& f);

/// A falsifying assignment for frame_valid, with the world where f fails.
struct FrameCounterexample {
  FrameAssignment g;
  World world;
};
std::optional<FrameCounterexample> refute_on_frame(const KripkeFrame& frame, const Formula& f);

/// For every frame, assignment and maximal world: premises hold => f holds.
bool consequence_kr(const std::vector<KripkeFrame>& frames, const std::vector<Formula>& premises, const Formula& f);

/// For every frame and assignment: premises hold at the bottom => f holds there.
/// Throws InvalidStructure for modal input.
bool bottom_consequence(const std::vector<KripkeFrame>& frames, const std::vector<Formula>& premises,
                        const Formula& f);

enum class FrameClass { Any, Linear, SingleMaximal, AtMostTwo };

/// Rooted partial orders with 1..max_worlds worlds, one per isomorphism class,
/// root labeled 0; ordered by size then canonical relation matrix.
std::vector<KripkeFrame> enumerate_frames(std::size_t max_worlds, FrameClass constraint);

/// Lexicographically least relation matrix over relabelings fixing the root.
std::vector<bool> canonical_key(const KripkeFrame& frame);

// ---- implementation ------------------------------------------------------

template <class Fn>
bool for_each_frame_assignment(const KripkeFrame& frame, const std::vector<Var>& vars, Fn&& fn) {
  const std::vector<WorldSet> ups = upsets(frame);
  return for_each_assignment<WorldSet>(vars, ups, [&](const VarMap<WorldSet>& values) {
    return fn(FrameAssignment(frame, values));
  });
}

}  // namespace l5
