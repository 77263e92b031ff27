#include "l5/generate.hpp"

namespace l5 {

std::vector<Formula> atoms_with_bot(const std::vector<std::string>& names) {
  std::vector<Formula> out;
  for (const auto& n : names) out.push_back(Formula::var(n));
  out.push_back(Formula::bot());
  return out;
}

std::vector<Formula> enumerate_formulas(const FormulaShape& shape) {
  // levels[d] holds the formulas of depth exactly d.
  std::vector<std::vector<Formula>> levels{shape.atoms};
  for (std::size_t d = 1; d <= shape.max_depth; ++d) {
    std::vector<Formula> level;
    std::vector<Formula> below;
    for (std::size_t e = 0; e < d; ++e) below.insert(below.end(), levels[e].begin(), levels[e].end());
    const std::vector<Formula>& exact = levels[d - 1];
    auto binary = [&](auto make) {
      // At least one side has depth exactly d - 1.
      for (const auto& a : below)
        for (const auto& b : below)
          if (a.depth() == d - 1 || b.depth() == d - 1) level.push_back(make(a, b));
    };
    binary([](const Formula& a, const Formula& b) { return Formula::conj(a, b); });
    binary([](const Formula& a, const Formula& b) { return Formula::disj(a, b); });
    binary([](const Formula& a, const Formula& b) { return Formula::implies(a, b); });
    if (shape.max_modal_depth > 0)
      for (const auto& a : exact)
        if (a.modal_depth() < shape.max_modal_depth) level.push_back(Formula::box(a));
    levels.push_back(std::move(level));
  }
  std::vector<Formula> out;
  for (auto& l : levels) out.insert(out.end(), l.begin(), l.end());
  return out;
}

namespace {

Formula random_rec(std::mt19937_64& rng, const FormulaShape& shape, std::size_t depth, std::size_t modal) {
  const bool can_box = modal < shape.max_modal_depth;
  const int choices = depth == 0 ? 1 : (can_box ? 5 : 4);
  std::uniform_int_distribution<int> pick(0, choices - 1);
  int c = pick(rng);
  if (c == 0) {
    std::uniform_int_distribution<std::size_t> a(0, shape.atoms.size() - 1);
    return shape.atoms[a(rng)];
  }
  if (c == 4) return Formula::box(random_rec(rng, shape, depth - 1, modal + 1));
  Formula l = random_rec(rng, shape, depth - 1, modal);
  Formula r = random_rec(rng, shape, depth - 1, modal);
  if (c == 1) return Formula::conj(l, r);
  if (c == 2) return Formula::disj(l, r);
  return Formula::implies(l, r);
}

}  // namespace

Formula random_formula(std::mt19937_64& rng, const FormulaShape& shape) {
  return random_rec(rng, shape, shape.max_depth, 0);
}

}  // namespace l5
