#include "l5/kripke.hpp"

#include <algorithm>
#include <set>

namespace l5 {

FrameReport check_frame(const RawFrame& raw, bool close_relation) {
  FrameReport out;
  ValidationReport& r = out.report;
  const std::size_t n = raw.worlds;
  if (n == 0) {
    r.violations.push_back({"non-empty", {}, "a frame needs at least one world"});
    return out;
  }
  if (n > kMaxMaskSize) {
    r.violations.push_back({"size limit", {}, "at most 64 worlds are supported"});
    return out;
  }
  std::vector<WorldSet> succ(n, 0);
  for (const auto& [a, b] : raw.order) {
    if (a >= n || b >= n) {
      r.violations.push_back({"world in range", {a, b}, "pair mentions an unknown world"});
      return out;
    }
    succ[a] |= bit(b);
  }
  if (close_relation) {
    for (std::size_t w = 0; w < n; ++w) succ[w] |= bit(w);
    // Warshall on bitsets.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t w = 0; w < n; ++w)
        if (has(succ[w], k)) succ[w] |= succ[k];
  } else {
    for (std::size_t w = 0; w < n; ++w)
      if (!has(succ[w], w)) {
        r.violations.push_back({"reflexivity", {w}, ""});
        break;
      }
    bool done = false;
    for (std::size_t a = 0; a < n && !done; ++a)
      for (auto b : members(succ[a]))
        for (auto c : members(succ[b]))
          if (!has(succ[a], c) && !done) {
            r.violations.push_back({"transitivity", {a, b, c}, ""});
            done = true;
          }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (has(succ[a], b) && has(succ[b], a)) {
        r.violations.push_back({"antisymmetry", {a, b}, "distinct worlds see each other"});
        a = n;
        break;
      }
  for (std::size_t w = 0; w < n; ++w)
    if (succ[w] == full_mask(n)) {
      out.bottom = static_cast<World>(w);
      break;
    }
  if (!out.bottom) r.violations.push_back({"least world", {}, "no world is below every world"});
  for (std::size_t w = 0; w < n; ++w)
    if (succ[w] == bit(w)) out.maximal |= bit(w);
  for (std::size_t w = 0; w < n; ++w)
    if ((succ[w] & out.maximal) == 0) {
      r.violations.push_back({"reaches a maximal world", {w}, ""});
      break;
    }
  r.notes.push_back("every chain has an upper bound: holds trivially for finite frames, not checked");
  return out;
}

KripkeFrame KripkeFrame::from_raw(const RawFrame& raw) {
  FrameReport rep = check_frame(raw, true);
  if (!rep.valid()) throw InvalidStructure("not a rooted partial order: " + rep.report.summary());
  std::vector<WorldSet> succ(raw.worlds, 0);
  for (std::size_t w = 0; w < raw.worlds; ++w) succ[w] = bit(w);
  for (const auto& [a, b] : raw.order) succ[a] |= bit(b);
  for (std::size_t k = 0; k < raw.worlds; ++k)
    for (std::size_t w = 0; w < raw.worlds; ++w)
      if (has(succ[w], k)) succ[w] |= succ[k];
  KripkeFrame f;
  f.succ_ = std::move(succ);
  f.bottom_ = *rep.bottom;
  f.maximal_ = rep.maximal;
  return f;
}

KripkeFrame KripkeFrame::from_relation(const std::vector<WorldSet>& successors) {
  RawFrame raw;
  raw.worlds = successors.size();
  for (std::size_t w = 0; w < successors.size(); ++w)
    for (auto v : members(successors[w])) raw.order.emplace_back(static_cast<World>(w), static_cast<World>(v));
  FrameReport rep = check_frame(raw, false);
  if (!rep.valid()) throw InvalidStructure("not a rooted partial order: " + rep.report.summary());
  KripkeFrame f;
  f.succ_ = successors;
  f.bottom_ = *rep.bottom;
  f.maximal_ = rep.maximal;
  return f;
}

KripkeFrame KripkeFrame::point() { return chain(1); }

KripkeFrame KripkeFrame::chain(std::size_t n) {
  std::vector<WorldSet> succ(n);
  for (std::size_t w = 0; w < n; ++w) succ[w] = full_mask(n) & ~full_mask(w);
  return from_relation(succ);
}

KripkeFrame KripkeFrame::fork(std::size_t tips) {
  std::vector<WorldSet> succ(tips + 1);
  succ[0] = full_mask(tips + 1);
  for (std::size_t w = 1; w <= tips; ++w) succ[w] = bit(w);
  return from_relation(succ);
}

bool KripkeFrame::is_upset(WorldSet s) const {
  if ((s & ~worlds()) != 0) return false;
  for (auto w : members(s))
    if (!subset(succ_[w], s)) return false;
  return true;
}

bool KripkeFrame::is_linear() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (!has(succ_[a], b) && !has(succ_[b], a)) return false;
  return true;
}

std::vector<std::pair<World, World>> KripkeFrame::cover_pairs() const {
  std::vector<std::pair<World, World>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (auto b : members(succ_[a] & ~bit(a))) {
      bool direct = true;
      for (auto c : members(succ_[a] & ~bit(a) & ~bit(b)))
        if (has(succ_[c], b)) {
          direct = false;
          break;
        }
      if (direct) out.emplace_back(static_cast<World>(a), static_cast<World>(b));
    }
  return out;
}

FrameAssignment::FrameAssignment(const KripkeFrame& frame, VarMap<WorldSet> values) : values_(std::move(values)) {
  for (const auto& [v, s] : values_.entries())
    if (!frame.is_upset(s))
      throw InvalidStructure("assignment for '" + v.name() + "' is not an up-set of the frame");
}

std::vector<WorldSet> upsets(const KripkeFrame& frame) {
  // Up-sets are exactly the unions of principal up-sets.
  std::set<WorldSet> seen{0};
  std::vector<WorldSet> frontier{0};
  while (!frontier.empty()) {
    std::vector<WorldSet> next;
    for (WorldSet u : frontier)
      for (std::size_t w = 0; w < frame.size(); ++w) {
        WorldSet v = u | frame.successors(static_cast<World>(w));
        if (seen.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool sat(const KripkeFrame& frame, const FrameAssignment& g, World w, const Formula& f) {
  switch (f.op()) {
    case Op::Falsum: return false;
    case Op::Var: return has(g.at(f.variable()), w);
    case Op::Or: return sat(frame, g, w, f.left()) || sat(frame, g, w, f.right());
    case Op::And: return sat(frame, g, w, f.left()) && sat(frame, g, w, f.right());
    case Op::Implies:
      for (auto v : members(frame.successors(w))) {
        auto u = static_cast<World>(v);
        if (sat(frame, g, u, f.left()) && !sat(frame, g, u, f.right())) return false;
      }
      return true;
    case Op::Box: return sat(frame, g, frame.bottom(), f.inner());
  }
  return false;
}

WorldSet truth_set(const KripkeFrame& frame, const FrameAssignment& g, const Formula& f) {
  switch (f.op()) {
    case Op::Falsum: return 0;
    case Op::Var: return g.at(f.variable());
    case Op::Or: return truth_set(frame, g, f.left()) | truth_set(frame, g, f.right());
    case Op::And: return truth_set(frame, g, f.left()) & truth_set(frame, g, f.right());
    case Op::Implies: {
      WorldSet a = truth_set(frame, g, f.left());
      WorldSet b = truth_set(frame, g, f.right());
      WorldSet out = 0;
      for (std::size_t w = 0; w < frame.size(); ++w)
        if (subset(frame.successors(static_cast<World>(w)) & a, b)) out |= bit(w);
      return out;
    }
    case Op::Box: return has(truth_set(frame, g, f.inner()), frame.bottom()) ? frame.worlds() : 0;
  }
  return 0;
}

std::optional<FrameCounterexample> refute_on_frame(const KripkeFrame& frame, const Formula& f) {
  std::optional<FrameCounterexample> found;
  for_each_frame_assignment(frame, f.variables(), [&](const FrameAssignment& g) {
    WorldSet t = truth_set(frame, g, f);
    if (t == frame.worlds()) return true;
    // Prefer the bottom world; by monotonicity it fails whenever any world does.
    World w = has(t, frame.bottom()) ? static_cast<World>(members(frame.worlds() & ~t).front()) : frame.bottom();
    found = FrameCounterexample{g, w};
    return false;
  });
  return found;
}

bool frame_valid(const KripkeFrame& frame, const Formula& f) { return !refute_on_frame(frame, f); }

namespace {

std::vector<Var> joint_variables(const std::vector<Formula>& premises, const Formula& f) {
  std::set<Var> vars;
  for (const auto& p : premises)
    for (Var v : p.variables()) vars.insert(v);
  for (Var v : f.variables()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

}  // namespace

bool consequence_kr(const std::vector<KripkeFrame>& frames, const std::vector<Formula>& premises, const Formula& f) {
  const auto vars = joint_variables(premises, f);
  for (const auto& frame : frames) {
    bool ok = for_each_frame_assignment(frame, vars, [&](const FrameAssignment& g) {
      WorldSet hold = frame.maximal();
      for (const auto& p : premises) hold &= truth_set(frame, g, p);
      return subset(hold, truth_set(frame, g, f));
    });
    if (!ok) return false;
  }
  return true;
}

bool bottom_consequence(const std::vector<KripkeFrame>& frames, const std::vector<Formula>& premises,
                        const Formula& f) {
  if (!f.is_propositional() ||
      std::any_of(premises.begin(), premises.end(), [](const Formula& p) { return !p.is_propositional(); }))
    throw InvalidStructure("bottom-world consequence is defined for propositional formulas only");
  const auto vars = joint_variables(premises, f);
  for (const auto& frame : frames) {
    bool ok = for_each_frame_assignment(frame, vars, [&](const FrameAssignment& g) {
      for (const auto& p : premises)
        if (!sat(frame, g, frame.bottom(), p)) return true;
      return sat(frame, g, frame.bottom(), f);
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace l5
