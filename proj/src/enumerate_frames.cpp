#include <algorithm>
#include <numeric>
#include <set>

#include "l5/kripke.hpp"

namespace l5 {
namespace {

std::vector<bool> relation_matrix(const std::vector<WorldSet>& succ, const std::vector<std::size_t>& perm) {
  // perm maps new label -> old label.
  const std::size_t n = succ.size();
  std::vector<bool> m(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m[a * n + b] = has(succ[perm[a]], perm[b]);
  return m;
}

std::vector<bool> canonical_of(const std::vector<WorldSet>& succ, World root) {
  const std::size_t n = succ.size();
  std::vector<std::size_t> rest;
  for (std::size_t w = 0; w < n; ++w)
    if (w != root) rest.push_back(w);
  std::vector<bool> best;
  do {
    std::vector<std::size_t> perm{root};
    perm.insert(perm.end(), rest.begin(), rest.end());
    auto m = relation_matrix(succ, perm);
    if (best.empty() || m < best) best = std::move(m);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

bool fits(const KripkeFrame& f, FrameClass c) {
  switch (c) {
    case FrameClass::Any: return true;
    case FrameClass::Linear: return f.is_linear();
    case FrameClass::SingleMaximal: return count(f.maximal()) == 1;
    case FrameClass::AtMostTwo: return f.size() <= 2;
  }
  return false;
}

}  // namespace

std::vector<bool> canonical_key(const KripkeFrame& frame) {
  std::vector<WorldSet> succ(frame.size());
  for (std::size_t w = 0; w < frame.size(); ++w) succ[w] = frame.successors(static_cast<World>(w));
  return canonical_of(succ, frame.bottom());
}

std::vector<KripkeFrame> enumerate_frames(std::size_t max_worlds, FrameClass constraint) {
  std::vector<KripkeFrame> out;
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    // Root 0 sees everything; the others are labeled naturally (i < j when i R j).
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::set<std::vector<bool>> seen;
    std::vector<std::pair<std::vector<bool>, KripkeFrame>> level;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
      std::vector<WorldSet> succ(n);
      succ[0] = full_mask(n);
      for (std::size_t w = 1; w < n; ++w) succ[w] = bit(w);
      for (std::size_t s = 0; s < slots.size(); ++s)
        if ((bits >> s) & 1u) succ[slots[s].first] |= bit(slots[s].second);
      bool transitive = true;
      for (std::size_t a = 1; a < n && transitive; ++a)
        for (auto b : members(succ[a]))
          if (!subset(succ[b], succ[a])) {
            transitive = false;
            break;
          }
      if (!transitive) continue;
      auto key = canonical_of(succ, 0);
      if (!seen.insert(key).second) continue;
      std::vector<WorldSet> canon(n, 0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (key[a * n + b]) canon[a] |= bit(b);
      KripkeFrame f = KripkeFrame::from_relation(canon);
      if (fits(f, constraint)) level.emplace_back(std::move(key), std::move(f));
    }
    std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, f] : level) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace l5
