#include "l5/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace l5 {

std::string ValidationReport::summary() const {
  if (violations.empty()) return "valid";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.law;
    if (!v.witness.empty()) {
      s += " (witness";
      for (auto w : v.witness) s += " " + std::to_string(w);
      s += ")";
    }
    if (!v.detail.empty()) s += ": " + v.detail;
  }
  return s;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Derived {
  std::size_t n = 0;
  std::vector<std::size_t> meet, join, impl;  // kNone where undefined
};

// Greatest lower / least upper bounds and residuals computed from the order alone.
Derived derive_tables(std::size_t n, const std::vector<std::vector<bool>>& le) {
  Derived d;
  d.n = n;
  d.meet.assign(n * n, kNone);
  d.join.assign(n * n, kNone);
  d.impl.assign(n * n, kNone);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t m = 0; m < n; ++m) {
        if (!(le[m][a] && le[m][b])) continue;
        bool greatest = true;
        for (std::size_t c = 0; c < n && greatest; ++c)
          if (le[c][a] && le[c][b] && !le[c][m]) greatest = false;
        if (greatest) {
          d.meet[a * n + b] = m;
          break;
        }
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (!(le[a][j] && le[b][j])) continue;
        bool least = true;
        for (std::size_t c = 0; c < n && least; ++c)
          if (le[a][c] && le[b][c] && !le[j][c]) least = false;
        if (least) {
          d.join[a * n + b] = j;
          break;
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // greatest c with meet(a, c) <= b
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t ac = d.meet[a * n + c];
        if (ac == kNone || !le[ac][b]) continue;
        bool greatest = true;
        for (std::size_t e = 0; e < n && greatest; ++e) {
          std::size_t ae = d.meet[a * n + e];
          if (ae != kNone && le[ae][b] && !le[e][c]) greatest = false;
        }
        if (greatest) {
          d.impl[a * n + b] = c;
          break;
        }
      }
    }
  }
  return d;
}

void add(ValidationReport& r, std::string law, std::vector<std::size_t> witness, std::size_t count) {
  std::string detail = count > 1 ? std::to_string(count) + " failing cases" : "";
  r.violations.push_back({std::move(law), std::move(witness), std::move(detail)});
}

}  // namespace

ValidationReport check_heyting(const RawTables& raw) {
  ValidationReport r;
  const std::size_t n = raw.size;
  if (n == 0) {
    r.violations.push_back({"non-empty carrier", {}, "size is 0"});
    return r;
  }
  if (n > kMaxMaskSize) {
    r.violations.push_back({"size limit", {}, "at most 64 elements are supported"});
    return r;
  }
  if (raw.leq.size() != n ||
      std::any_of(raw.leq.begin(), raw.leq.end(), [&](const auto& row) { return row.size() != n; })) {
    r.violations.push_back({"order table shape", {}, "leq must be size x size"});
    return r;
  }
  if (raw.bot >= n || raw.top >= n) {
    r.violations.push_back({"bounds in range", {raw.bot, raw.top}, "bot/top index out of range"});
    return r;
  }
  const auto& le = raw.leq;

  // Partial order.
  {
    std::vector<std::size_t> first;
    std::size_t cnt = 0;
    for (std::size_t a = 0; a < n; ++a)
      if (!le[a][a] && cnt++ == 0) first = {a};
    if (cnt) add(r, "reflexivity", first, cnt);
    cnt = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (le[a][b] && le[b][a] && cnt++ == 0) first = {a, b};
    if (cnt) add(r, "antisymmetry", first, cnt);
    cnt = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (le[a][b] && le[b][c] && !le[a][c] && cnt++ == 0) first = {a, b, c};
    if (cnt) add(r, "transitivity", first, cnt);
  }
  for (std::size_t a = 0; a < n; ++a)
    if (!le[raw.bot][a]) {
      add(r, "bot is least", {raw.bot, a}, 1);
      break;
    }
  for (std::size_t a = 0; a < n; ++a)
    if (!le[a][raw.top]) {
      add(r, "top is greatest", {a, raw.top}, 1);
      break;
    }
  if (raw.bot == raw.top) add(r, "non-trivial", {raw.bot}, 1);

  Derived d = derive_tables(n, le);
  bool lattice = true;
  {
    std::size_t cm = 0, cj = 0;
    std::vector<std::size_t> wm, wj;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (d.meet[a * n + b] == kNone && cm++ == 0) wm = {a, b};
        if (d.join[a * n + b] == kNone && cj++ == 0) wj = {a, b};
      }
    if (cm) add(r, "meet exists", wm, cm);
    if (cj) add(r, "join exists", wj, cj);
    lattice = cm == 0 && cj == 0;
  }

  auto check_table = [&](const char* law, const std::optional<std::vector<std::vector<Element>>>& t,
                         const std::vector<std::size_t>& want) {
    if (!t) return;
    if (t->size() != n ||
        std::any_of(t->begin(), t->end(), [&](const auto& row) { return row.size() != n; })) {
      r.violations.push_back({law, {}, "table must be size x size"});
      return;
    }
    std::size_t cnt = 0;
    std::vector<std::size_t> first;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (want[a * n + b] != kNone && (*t)[a][b] != want[a * n + b] && cnt++ == 0) first = {a, b};
    if (cnt) add(r, law, first, cnt);
  };
  check_table("meet table is greatest lower bound", raw.meet, d.meet);
  check_table("join table is least upper bound", raw.join, d.join);

  if (!lattice) return r;

  {
    std::size_t cnt = 0;
    std::vector<std::size_t> first;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          auto lhs = d.meet[a * n + d.join[b * n + c]];
          auto rhs = d.join[d.meet[a * n + b] * n + d.meet[a * n + c]];
          if (lhs != rhs && cnt++ == 0) first = {a, b, c};
        }
    if (cnt) add(r, "distributivity", first, cnt);
  }
  {
    std::size_t cnt = 0;
    std::vector<std::size_t> first;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (d.impl[a * n + b] == kNone && cnt++ == 0) first = {a, b};
    if (cnt) add(r, "relative pseudo-complement exists", first, cnt);
  }
  if (raw.impl) {
    const auto& t = *raw.impl;
    if (t.size() != n ||
        std::any_of(t.begin(), t.end(), [&](const auto& row) { return row.size() != n; })) {
      r.violations.push_back({"relative pseudo-complement", {}, "impl table must be size x size"});
    } else {
      std::size_t cnt = 0;
      std::vector<std::size_t> first;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          std::size_t i = t[a][b];
          bool ok = i < n && le[d.meet[a * n + i]][b];
          for (std::size_t c = 0; ok && c < n; ++c)
            if (le[d.meet[a * n + c]][b] && !le[c][i]) ok = false;
          if (!ok && cnt++ == 0) first = {a, b};
        }
      if (cnt) add(r, "relative pseudo-complement", first, cnt);
    }
  }
  return r;
}

HeytingAlgebra HeytingAlgebra::from_raw(const RawTables& raw) {
  ValidationReport report = check_heyting(raw);
  if (!report.valid()) throw InvalidStructure("not a non-trivial Heyting algebra: " + report.summary());
  Derived d = derive_tables(raw.size, raw.leq);
  HeytingAlgebra h;
  const std::size_t n = raw.size;
  h.n_ = n;
  h.bot_ = raw.bot;
  h.top_ = raw.top;
  h.leq_.resize(n * n);
  h.meet_.resize(n * n);
  h.join_.resize(n * n);
  h.impl_.resize(n * n);
  h.up_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      h.leq_[a * n + b] = raw.leq[a][b];
      h.meet_[a * n + b] = static_cast<Element>(d.meet[a * n + b]);
      h.join_[a * n + b] = static_cast<Element>(d.join[a * n + b]);
      h.impl_[a * n + b] = static_cast<Element>(d.impl[a * n + b]);
      if (raw.leq[a][b]) h.up_[a] |= bit(b);
    }
  return h;
}

HeytingAlgebra HeytingAlgebra::from_order(const std::vector<std::vector<bool>>& leq, Element bot, Element top) {
  RawTables raw;
  raw.size = leq.size();
  raw.leq = leq;
  raw.bot = bot;
  raw.top = top;
  return from_raw(raw);
}

HeytingAlgebra HeytingAlgebra::chain(std::size_t n) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) le[a][b] = a <= b;
  return from_order(le, 0, n == 0 ? 0 : static_cast<Element>(n - 1));
}

HeytingAlgebra HeytingAlgebra::boolean(std::size_t atoms) {
  const std::size_t n = std::size_t{1} << atoms;
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) le[a][b] = (a & ~b) == 0;
  return from_order(le, 0, static_cast<Element>(n - 1));
}

std::vector<std::vector<bool>> HeytingAlgebra::leq_table() const {
  std::vector<std::vector<bool>> t(n_, std::vector<bool>(n_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) t[a][b] = leq_[a * n_ + b];
  return t;
}

RawTables HeytingAlgebra::raw() const {
  RawTables r;
  r.size = n_;
  r.leq = leq_table();
  r.bot = bot_;
  r.top = top_;
  auto table = [&](const std::vector<Element>& v) {
    std::vector<std::vector<Element>> t(n_, std::vector<Element>(n_));
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) t[a][b] = v[a * n_ + b];
    return t;
  };
  r.meet = table(meet_);
  r.join = table(join_);
  r.impl = table(impl_);
  return r;
}

std::vector<Element> elements(const HeytingAlgebra& h) {
  std::vector<Element> out(h.size());
  std::iota(out.begin(), out.end(), Element{0});
  return out;
}

bool has_dp(const HeytingAlgebra& h) {
  for (Element a = 0; a < h.size(); ++a)
    for (Element b = 0; b < h.size(); ++b)
      if (h.join(a, b) == h.top() && a != h.top() && b != h.top()) return false;
  return true;
}

bool is_linear(const HeytingAlgebra& h) {
  for (Element a = 0; a < h.size(); ++a)
    for (Element b = 0; b < h.size(); ++b)
      if (!h.leq(a, b) && !h.leq(b, a)) return false;
  return true;
}

bool is_kc_algebra(const HeytingAlgebra& h) {
  if (!has_dp(h)) return false;
  for (Element a = 0; a < h.size(); ++a)
    for (Element b = 0; b < h.size(); ++b)
      if (a != h.bot() && b != h.bot() && h.meet(a, b) == h.bot()) return false;
  return true;
}

std::vector<bool> canonical_key(const HeytingAlgebra& h) {
  const std::size_t n = h.size();
  std::vector<Element> middle;
  for (Element e = 0; e < n; ++e)
    if (e != h.bot() && e != h.top()) middle.push_back(e);
  // perm[i] = old element placed at new position i
  std::vector<Element> perm(n);
  std::vector<bool> best, cur(n * n);
  std::sort(middle.begin(), middle.end());
  do {
    perm[0] = h.bot();
    for (std::size_t i = 0; i < middle.size(); ++i) perm[i + 1] = middle[i];
    perm[n - 1] = h.top();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cur[i * n + j] = h.leq(perm[i], perm[j]);
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(middle.begin(), middle.end()));
  return best;
}

bool is_isomorphic(const HeytingAlgebra& a, const HeytingAlgebra& b) {
  return a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

// ---- filters -------------------------------------------------------------

bool is_filter(const HeytingAlgebra& h, ElementSet s) {
  if (!has(s, h.top())) return false;
  for (auto a : members(s)) {
    if (!subset(h.up(static_cast<Element>(a)), s)) return false;
    for (auto b : members(s))
      if (!has(s, h.meet(static_cast<Element>(a), static_cast<Element>(b)))) return false;
  }
  return true;
}

ElementSet generated_filter(const HeytingAlgebra& h, ElementSet s) {
  ElementSet cur = s | bit(h.top());
  while (true) {
    ElementSet next = cur;
    for (auto a : members(cur)) {
      next |= h.up(static_cast<Element>(a));
      for (auto b : members(cur)) next |= bit(h.meet(static_cast<Element>(a), static_cast<Element>(b)));
    }
    if (next == cur) return cur;
    cur = next;
  }
}

Filter make_filter(const HeytingAlgebra& h, ElementSet s) {
  if ((s & ~h.all()) != 0 || !is_filter(h, s)) throw InvalidStructure("element set is not a filter");
  Filter f;
  f.members = s;
  f.is_proper = !has(s, h.bot());
  if (!f.is_proper) return f;
  f.is_prime = true;
  for (Element a = 0; a < h.size() && f.is_prime; ++a)
    for (Element b = 0; b < h.size(); ++b)
      if (has(s, h.join(a, b)) && !has(s, a) && !has(s, b)) {
        f.is_prime = false;
        break;
      }
  // Maximal among proper filters: adding any outside element generates bot.
  f.is_ultra = true;
  for (Element a = 0; a < h.size(); ++a)
    if (!has(s, a) && !has(generated_filter(h, s | bit(a)), h.bot())) {
      f.is_ultra = false;
      break;
    }
  return f;
}

std::vector<Filter> filters(const HeytingAlgebra& h) {
  // Filters of a finite lattice are principal: the up-set of their meet.
  std::vector<Filter> out;
  for (Element a = 0; a < h.size(); ++a)
    if (a != h.bot()) out.push_back(make_filter(h, h.up(a)));
  std::sort(out.begin(), out.end(), [](const Filter& a, const Filter& b) { return a.members < b.members; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Filter> prime_filters(const HeytingAlgebra& h) {
  auto all = filters(h);
  std::erase_if(all, [](const Filter& f) { return !f.is_prime; });
  return all;
}

std::vector<Filter> ultrafilters(const HeytingAlgebra& h) {
  auto all = filters(h);
  std::erase_if(all, [](const Filter& f) { return !f.is_ultra; });
  return all;
}

Quotient quotient(const HeytingAlgebra& h, const Filter& f) {
  if (!is_filter(h, f.members) || has(f.members, h.bot()))
    throw InvalidStructure("quotient requires a proper filter");
  const std::size_t n = h.size();
  std::vector<Element> cls(n, static_cast<Element>(-1));
  std::vector<Element> rep;
  for (Element a = 0; a < n; ++a) {
    if (cls[a] != static_cast<Element>(-1)) continue;
    auto id = static_cast<Element>(rep.size());
    rep.push_back(a);
    for (Element b = a; b < n; ++b)
      if (f.contains(h.impl(a, b)) && f.contains(h.impl(b, a))) cls[b] = id;
  }
  const std::size_t k = rep.size();
  std::vector<std::vector<bool>> le(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) le[i][j] = f.contains(h.impl(rep[i], rep[j]));
  return {HeytingAlgebra::from_order(le, cls[h.bot()], cls[h.top()]), std::move(cls)};
}

// ---- models --------------------------------------------------------------

L5Model make_l5_model(HeytingAlgebra h, const Filter& u) {
  if (!has_dp(h)) throw InvalidStructure("algebra lacks the disjunction property");
  if ((u.members & ~h.all()) != 0 || !is_filter(h, u.members))
    throw InvalidStructure("designated set is not a filter");
  Filter checked = make_filter(h, u.members);
  if (!checked.is_ultra) throw InvalidStructure("designated filter is not an ultrafilter");

  L5Model m(std::move(h));
  const HeytingAlgebra& a = m.algebra_;
  m.true_set_ = checked.members;
  m.box_.resize(a.size());
  for (Element e = 0; e < a.size(); ++e) m.box_[e] = a.box(e);

  const std::size_t n = a.size();
  auto box = [&](Element e) { return m.box_[e]; };
  bool c1 = true, c2 = true, c3 = true, c4 = true;
  for (Element x = 0; x < n; ++x) {
    c1 = c1 && a.leq(box(x), x);
    c4 = c4 && (m.designated(box(x)) == (x == a.top()));
    for (Element y = 0; y < n; ++y) {
      c3 = c3 && a.leq(box(a.join(x, y)), a.join(box(x), box(y)));
      for (Element z = 0; z < n && c2; ++z)
        c2 = a.leq(box(a.impl(x, y)), a.impl(box(a.impl(y, z)), box(a.impl(x, z))));
    }
  }
  m.conditions_ = {c1, c2, c3, c4};
  if (!(c1 && c2 && c3 && c4)) throw InternalError("forced box violates a truth condition");
  return m;
}

L5Model make_l5_model(HeytingAlgebra h, ElementSet ultrafilter) {
  Filter f;
  f.members = ultrafilter;
  return make_l5_model(std::move(h), f);
}

Element eval(const HeytingAlgebra& h, const AlgebraAssignment& gamma, const Formula& f) {
  switch (f.op()) {
    case Op::Var: {
      Element e = gamma.at(f.variable());
      if (e >= h.size()) throw InvalidStructure("assignment value out of range for " + f.variable().name());
      return e;
    }
    case Op::Falsum: return h.bot();
    case Op::Box: return h.box(eval(h, gamma, f.inner()));
    case Op::And: return h.meet(eval(h, gamma, f.left()), eval(h, gamma, f.right()));
    case Op::Or: return h.join(eval(h, gamma, f.left()), eval(h, gamma, f.right()));
    case Op::Implies: return h.impl(eval(h, gamma, f.left()), eval(h, gamma, f.right()));
  }
  return h.bot();
}

Element eval(const L5Model& m, const AlgebraAssignment& gamma, const Formula& f) {
  const HeytingAlgebra& h = m.algebra();
  switch (f.op()) {
    case Op::Box: return m.box(eval(m, gamma, f.inner()));
    case Op::And: return h.meet(eval(m, gamma, f.left()), eval(m, gamma, f.right()));
    case Op::Or: return h.join(eval(m, gamma, f.left()), eval(m, gamma, f.right()));
    case Op::Implies: return h.impl(eval(m, gamma, f.left()), eval(m, gamma, f.right()));
    default: return eval(h, gamma, f);
  }
}

bool satisfies(const L5Model& m, const AlgebraAssignment& gamma, const Formula& f) {
  return m.designated(eval(m, gamma, f));
}

std::vector<std::pair<Formula, Element>> eval_trace(const L5Model& m, const AlgebraAssignment& gamma,
                                                    const Formula& f) {
  std::vector<std::pair<Formula, Element>> out;
  auto visit = [&](auto& self, const Formula& g) -> void {
    switch (g.op()) {
      case Op::Var:
      case Op::Falsum: break;
      case Op::Box: self(self, g.inner()); break;
      default:
        self(self, g.left());
        self(self, g.right());
    }
    for (const auto& entry : out)
      if (entry.first == g) return;
    out.emplace_back(g, eval(m, gamma, g));
  };
  visit(visit, f);
  return out;
}

}  // namespace l5
