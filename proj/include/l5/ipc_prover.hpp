#pragma once

#include <vector>

#include "l5/formula.hpp"

namespace l5 {

/// Intuitionistic provability of gamma => goal by backward search in the
/// contraction-free sequent calculus G4ip. Terminates on every input.
/// Throws InvalidStructure on modal input.
bool ipc_provable(const std::vector<Formula>& gamma, const Formula& goal);

bool ipc_valid(const Formula& f);

}  // namespace l5
