#include <algorithm>
#include <set>

#include "l5/algebra.hpp"

namespace l5 {
namespace {

// Candidate orders put bot at 0, top at n-1 and label the middle elements
// naturally (i < j whenever i is strictly below j), so only the strict upper
// triangle over the middle needs enumerating.
void lattices_of_size(std::size_t n, std::set<std::vector<bool>>& seen, std::vector<HeytingAlgebra>& out) {
  const std::size_t m = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) slots.emplace_back(i, j);
  const std::uint64_t combos = std::uint64_t{1} << slots.size();

  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::uint64_t bits = 0; bits < combos; ++bits) {
    std::vector<std::vector<bool>> mid(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) mid[i][i] = true;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((bits >> s) & 1u) mid[slots[s].first][slots[s].second] = true;
    bool transitive = true;
    for (std::size_t a = 0; a < m && transitive; ++a)
      for (std::size_t b = a + 1; b < m && transitive; ++b)
        if (mid[a][b])
          for (std::size_t c = b + 1; c < m; ++c)
            if (mid[b][c] && !mid[a][c]) {
              transitive = false;
              break;
            }
    if (!transitive) continue;

    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a == 0 || b == n - 1)
          le[a][b] = true;
        else if (b == 0 || a == n - 1)
          le[a][b] = a == b;
        else
          le[a][b] = mid[a - 1][b - 1];
      }
    RawTables raw;
    raw.size = n;
    raw.leq = le;
    raw.bot = 0;
    raw.top = static_cast<Element>(n - 1);
    if (!check_heyting(raw).valid()) continue;
    HeytingAlgebra h = HeytingAlgebra::from_raw(raw);
    std::vector<bool> key = canonical_key(h);
    if (!seen.insert(key).second) continue;
    std::vector<std::vector<bool>> canon(n, std::vector<bool>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) canon[a][b] = key[a * n + b];
    out.push_back(HeytingAlgebra::from_order(canon, 0, static_cast<Element>(n - 1)));
  }
}

}  // namespace

std::vector<HeytingAlgebra> enumerate_heyting(std::size_t max_size, bool require_dp) {
  std::vector<HeytingAlgebra> out;
  for (std::size_t n = 2; n <= max_size; ++n) {
    std::set<std::vector<bool>> seen;
    std::vector<HeytingAlgebra> level;
    lattices_of_size(n, seen, level);
    std::sort(level.begin(), level.end(), [](const HeytingAlgebra& a, const HeytingAlgebra& b) {
      return canonical_key(a) < canonical_key(b);
    });
    for (auto& h : level)
      if (!require_dp || has_dp(h)) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace l5
