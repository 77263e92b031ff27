#include "l5/ipc_prover.hpp"

#include <algorithm>
#include <unordered_map>

namespace l5 {
namespace {

// Antecedents are kept sorted and duplicate-free: contraction is admissible in
// G4ip, so the set reading loses nothing and improves memo hits.
using Context = std::vector<Formula>;

struct Sequent {
  Context gamma;
  Formula goal;
  friend bool operator==(const Sequent&, const Sequent&) = default;
};

struct SequentHash {
  std::size_t operator()(const Sequent& s) const noexcept {
    std::size_t h = s.goal.hash();
    for (const auto& f : s.gamma) h = h * 1000003u ^ f.hash();
    return h;
  }
};

void normalize(Context& c) {
  std::sort(c.begin(), c.end(), structurally_less);
  c.erase(std::unique(c.begin(), c.end()), c.end());
}

Context replace(const Context& c, std::size_t at, std::initializer_list<Formula> with) {
  Context out;
  out.reserve(c.size() + with.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (i != at) out.push_back(c[i]);
  out.insert(out.end(), with.begin(), with.end());
  normalize(out);
  return out;
}

Context extend(const Context& c, const Formula& f) {
  Context out = c;
  out.push_back(f);
  normalize(out);
  return out;
}

bool contains(const Context& c, const Formula& f) {
  return std::binary_search(c.begin(), c.end(), f, structurally_less);
}

class Prover {
public:
  bool prove(const Context& gamma, const Formula& goal) {
    Sequent key{gamma, goal};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = search(gamma, goal);
    memo_.emplace(std::move(key), r);
    return r;
  }

private:
  bool search(const Context& g, const Formula& c) {
    if (contains(g, c)) return true;
    for (const auto& f : g)
      if (f.op() == Op::Falsum) return true;

    // Invertible left rules.
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Formula& f = g[i];
      if (f.op() == Op::And) return prove(replace(g, i, {f.left(), f.right()}), c);
      if (f.op() == Op::Or) return prove(replace(g, i, {f.left()}), c) && prove(replace(g, i, {f.right()}), c);
      if (f.op() != Op::Implies) continue;
      const Formula& a = f.left();
      const Formula& d = f.right();
      switch (a.op()) {
        case Op::Var:
          if (contains(g, a)) return prove(replace(g, i, {d}), c);
          break;
        case Op::Falsum: return prove(replace(g, i, {}), c);
        case Op::And: return prove(replace(g, i, {Formula::implies(a.left(), Formula::implies(a.right(), d))}), c);
        case Op::Or:
          return prove(replace(g, i, {Formula::implies(a.left(), d), Formula::implies(a.right(), d)}), c);
        default: break;
      }
    }

    // Invertible right rules.
    if (c.op() == Op::And) return prove(g, c.left()) && prove(g, c.right());
    if (c.op() == Op::Implies) return prove(extend(g, c.left()), c.right());

    // Non-invertible choices.
    if (c.op() == Op::Or && (prove(g, c.left()) || prove(g, c.right()))) return true;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Formula& f = g[i];
      if (f.op() != Op::Implies || f.left().op() != Op::Implies) continue;
      const Formula& a = f.left().left();
      const Formula& b = f.left().right();
      const Formula& d = f.right();
      if (prove(replace(g, i, {Formula::implies(b, d)}), Formula::implies(a, b)) && prove(replace(g, i, {d}), c))
        return true;
    }
    return false;
  }

  std::unordered_map<Sequent, bool, SequentHash> memo_;
};

}  // namespace

bool ipc_provable(const std::vector<Formula>& gamma, const Formula& goal) {
  if (!goal.is_propositional() ||
      std::any_of(gamma.begin(), gamma.end(), [](const Formula& f) { return !f.is_propositional(); }))
    throw InvalidStructure("the intuitionistic prover accepts propositional formulas only");
  Context g = gamma;
  normalize(g);
  return Prover().prove(g, goal);
}

bool ipc_valid(const Formula& f) { return ipc_provable({}, f); }

}  // namespace l5
