#pragma once

#include <string>
#include <vector>

#include "l5/algebra.hpp"
#include "l5/kripke.hpp"

namespace l5 {

/// Frame of prime filters built from an L5-model.
struct PrimeFilterFrame {
  KripkeFrame frame;
  World w_top;                      // the world equal to TRUE
  FrameAssignment g;                // g(x) = {w : gamma(x) in w}
  std::vector<ElementSet> filters;  // world -> prime filter
};

/// Worlds are the prime filters ordered by inclusion, listed by (size, mask) so
/// the bottom world {top} is world 0. Throws InternalError if {top} is not
/// prime, which DP rules out.
PrimeFilterFrame algebra_to_frame(const L5Model& model, const AlgebraAssignment& gamma, const std::vector<Var>& vars);

/// Heyting algebra whose elements are the given up-sets of frame, ordered by
/// inclusion and numbered by mask. sets must be sorted, contain 0 and all worlds,
/// and be closed under intersection, union and up-set implication.
HeytingAlgebra algebra_of_upsets(const KripkeFrame& frame, const std::vector<WorldSet>& sets);

/// Closure of seeds together with the empty set and all worlds under the three
/// up-set operations; sorted by mask.
std::vector<WorldSet> definable_upsets(const KripkeFrame& frame, const std::vector<WorldSet>& seeds);

/// {w : every successor of w in a is in b}
WorldSet upset_impl(const KripkeFrame& frame, WorldSet a, WorldSet b);

/// All up-sets of frame as a Heyting algebra.
HeytingAlgebra upset_algebra(const KripkeFrame& frame);

/// Model of definable truth sets built from a frame.
struct TruthSetModel {
  L5Model model;
  AlgebraAssignment gamma;           // gamma(x) = class of g(x)
  std::vector<WorldSet> truth_sets;  // element -> truth set
};

/// Elements are the truth sets definable from g over vars; TRUE holds the ones
/// containing w_top. Throws InvalidStructure if w_top is not maximal.
TruthSetModel frame_to_algebra(const KripkeFrame& frame, const FrameAssignment& g, World w_top,
                               const std::vector<Var>& vars);

struct RoundTripEntry {
  Formula formula;
  std::string stage;  // where the disagreement shows up
  bool expected;
  bool found;
};

struct RoundTripReport {
  std::vector<RoundTripEntry> discrepancies;
  std::size_t checked = 0;
  bool ok() const { return discrepancies.empty(); }
};

/// model -> frame -> model -> frame, comparing satisfaction at the designated
/// point for every sample formula at every stage.
RoundTripReport round_trip_check(const L5Model& model, const AlgebraAssignment& gamma, const std::vector<Var>& vars,
                                 const std::vector<Formula>& sample);

/// frame -> model -> frame, the reverse composition.
RoundTripReport round_trip_check(const KripkeFrame& frame, const FrameAssignment& g, World w_top,
                                 const std::vector<Var>& vars, const std::vector<Formula>& sample);

}  // namespace l5
