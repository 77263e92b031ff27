#include "l5/duality.hpp"

#include <algorithm>
#include <set>

namespace l5 {

PrimeFilterFrame algebra_to_frame(const L5Model& model, const AlgebraAssignment& gamma, const std::vector<Var>& vars) {
  const HeytingAlgebra& h = model.algebra();
  std::vector<ElementSet> worlds;
  for (const Filter& p : prime_filters(h)) worlds.push_back(p.members);
  std::sort(worlds.begin(), worlds.end(), [](ElementSet a, ElementSet b) {
    return count(a) != count(b) ? count(a) < count(b) : a < b;
  });
  if (worlds.empty() || worlds.front() != bit(h.top()))
    throw InternalError("{top} is not a prime filter of an algebra with the disjunction property");
  if (worlds.size() > kMaxMaskSize) throw InvalidStructure("too many prime filters for a frame");

  std::vector<WorldSet> succ(worlds.size(), 0);
  for (std::size_t a = 0; a < worlds.size(); ++a)
    for (std::size_t b = 0; b < worlds.size(); ++b)
      if (subset(worlds[a], worlds[b])) succ[a] |= bit(b);
  KripkeFrame frame = KripkeFrame::from_relation(succ);

  auto top_it = std::find(worlds.begin(), worlds.end(), model.true_set());
  if (top_it == worlds.end()) throw InternalError("TRUE is not among the prime filters");

  VarMap<WorldSet> values;
  for (Var x : vars) {
    Element e = gamma.at(x);
    WorldSet s = 0;
    for (std::size_t w = 0; w < worlds.size(); ++w)
      if (has(worlds[w], e)) s |= bit(w);
    values.set(x, s);
  }
  FrameAssignment g(frame, std::move(values));
  return {std::move(frame), static_cast<World>(top_it - worlds.begin()), std::move(g), std::move(worlds)};
}

WorldSet upset_impl(const KripkeFrame& frame, WorldSet a, WorldSet b) {
  WorldSet out = 0;
  for (std::size_t w = 0; w < frame.size(); ++w)
    if (subset(frame.successors(static_cast<World>(w)) & a, b)) out |= bit(w);
  return out;
}

std::vector<WorldSet> definable_upsets(const KripkeFrame& frame, const std::vector<WorldSet>& seeds) {
  std::set<WorldSet> found{0, frame.worlds()};
  found.insert(seeds.begin(), seeds.end());
  std::vector<WorldSet> all(found.begin(), found.end());
  std::size_t done = 0;
  // Combine every new set with every set seen so far until nothing new appears.
  while (done < all.size()) {
    const std::size_t end = all.size();
    for (std::size_t i = done; i < end; ++i)
      for (std::size_t j = 0; j < end; ++j) {
        const WorldSet a = all[i], b = all[j];
        for (WorldSet c : {a & b, a | b, upset_impl(frame, a, b), upset_impl(frame, b, a)})
          if (found.insert(c).second) all.push_back(c);
      }
    done = end;
    if (all.size() > kMaxMaskSize) throw InvalidStructure("more than 64 definable up-sets");
  }
  return {found.begin(), found.end()};
}

HeytingAlgebra algebra_of_upsets(const KripkeFrame&, const std::vector<WorldSet>& sets) {
  const std::size_t n = sets.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = subset(sets[a], sets[b]);
  return HeytingAlgebra::from_order(leq, 0, static_cast<Element>(n - 1));
}

HeytingAlgebra upset_algebra(const KripkeFrame& frame) { return algebra_of_upsets(frame, upsets(frame)); }

TruthSetModel frame_to_algebra(const KripkeFrame& frame, const FrameAssignment& g, World w_top,
                               const std::vector<Var>& vars) {
  if (w_top >= frame.size() || !frame.is_maximal(w_top))
    throw InvalidStructure("designated world is not maximal");
  std::vector<WorldSet> seeds;
  for (Var x : vars) seeds.push_back(g.at(x));
  std::vector<WorldSet> sets = definable_upsets(frame, seeds);
  HeytingAlgebra h = algebra_of_upsets(frame, sets);

  ElementSet designated = 0;
  for (std::size_t e = 0; e < sets.size(); ++e)
    if (has(sets[e], w_top)) designated |= bit(e);
  AlgebraAssignment gamma;
  for (Var x : vars) {
    auto it = std::lower_bound(sets.begin(), sets.end(), g.at(x));
    gamma.set(x, static_cast<Element>(it - sets.begin()));
  }
  L5Model model = make_l5_model(std::move(h), designated);
  return {std::move(model), std::move(gamma), std::move(sets)};
}

namespace {

void compare(RoundTripReport& r, const Formula& f, const char* stage, bool expected, bool found) {
  if (expected != found) r.discrepancies.push_back({f, stage, expected, found});
}

}  // namespace

RoundTripReport round_trip_check(const L5Model& model, const AlgebraAssignment& gamma, const std::vector<Var>& vars,
                                 const std::vector<Formula>& sample) {
  RoundTripReport r;
  PrimeFilterFrame f1 = algebra_to_frame(model, gamma, vars);
  TruthSetModel m2 = frame_to_algebra(f1.frame, f1.g, f1.w_top, vars);
  PrimeFilterFrame f2 = algebra_to_frame(m2.model, m2.gamma, vars);
  for (const Formula& phi : sample) {
    const bool base = satisfies(model, gamma, phi);
    compare(r, phi, "algebra to frame", base, has(truth_set(f1.frame, f1.g, phi), f1.w_top));
    compare(r, phi, "frame to algebra", base, satisfies(m2.model, m2.gamma, phi));
    compare(r, phi, "second algebra to frame", base, has(truth_set(f2.frame, f2.g, phi), f2.w_top));
    ++r.checked;
  }
  return r;
}

RoundTripReport round_trip_check(const KripkeFrame& frame, const FrameAssignment& g, World w_top,
                                 const std::vector<Var>& vars, const std::vector<Formula>& sample) {
  RoundTripReport r;
  TruthSetModel m1 = frame_to_algebra(frame, g, w_top, vars);
  PrimeFilterFrame f2 = algebra_to_frame(m1.model, m1.gamma, vars);
  for (const Formula& phi : sample) {
    const bool base = has(truth_set(frame, g, phi), w_top);
    compare(r, phi, "frame to algebra", base, satisfies(m1.model, m1.gamma, phi));
    compare(r, phi, "algebra to frame", base, has(truth_set(f2.frame, f2.g, phi), f2.w_top));
    ++r.checked;
  }
  return r;
}

}  // namespace l5
