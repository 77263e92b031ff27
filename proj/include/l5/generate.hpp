#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "l5/formula.hpp"

namespace l5 {

struct FormulaShape {
  std::vector<Formula> atoms;          // depth-0 formulas, e.g. variables and bot
  std::size_t max_depth = 2;           // atoms have depth 0
  std::size_t max_modal_depth = 0;     // 0 = propositional only
};

/// Every formula of the shape, each exactly once, ordered by depth then by
/// construction order (connective, left, right).
std::vector<Formula> enumerate_formulas(const FormulaShape& shape);

/// Uniform choice of connective at each node; depth at most shape.max_depth.
Formula random_formula(std::mt19937_64& rng, const FormulaShape& shape);

/// Variables and bot, the usual atom set for sweeps.
std::vector<Formula> atoms_with_bot(const std::vector<std::string>& names);

}  // namespace l5
