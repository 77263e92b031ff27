#include "l5/formula.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <set>
#include <unordered_map>

namespace l5 {

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, std::string found)
    : Error([&] {
        std::string msg = "syntax error at position " + std::to_string(position) + ": found " +
                          (found.empty() ? std::string("end of input") : "'" + found + "'") +
                          ", expected one of:";
        for (const auto& e : expected) msg += " " + e;
        return msg;
      }()),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

class VarTable {
public:
  static VarTable& instance() {
    static VarTable table;
    return table;
  }

  std::uint32_t intern(std::string_view name) {
    std::lock_guard lock(mu_);
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
  }

  const std::string& name(std::uint32_t id) {
    std::lock_guard lock(mu_);
    return names_[id];
  }

private:
  std::mutex mu_;
  std::deque<std::string> names_;  // stable references
  std::unordered_map<std::string, std::uint32_t> ids_;
};

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Var::Var(std::string_view name) : id_(VarTable::instance().intern(name)) {}

const std::string& Var::name() const { return VarTable::instance().name(id_); }

std::strong_ordering operator<=>(Var a, Var b) {
  if (a.id_ == b.id_) return std::strong_ordering::equal;
  return a.name() <=> b.name();
}

bool is_identifier(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return name != "bot" && name != "top" && name != "box";
}

struct Formula::Node {
  Op op;
  Surface surface;
  std::optional<Var> var;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  std::size_t hash;
  std::size_t depth;
  std::size_t modal_depth;
  std::size_t size;
  bool propositional;
  // Stable Formula handles for the children so accessors can return references.
  std::optional<Formula> left_handle;
  std::optional<Formula> right_handle;
};

Formula Formula::make(Op op, std::optional<Var> v, std::shared_ptr<const Node> l,
                      std::shared_ptr<const Node> r, Surface s) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->surface = s;
  n->var = v;
  n->left = l;
  n->right = r;
  std::size_t h = static_cast<std::size_t>(op) * 0x100000001b3ULL;
  if (v) h = mix(h, std::hash<std::string>{}(v->name()));
  if (l) h = mix(h, l->hash);
  if (r) h = mix(h, r->hash);
  n->hash = h;
  n->depth = std::max(l ? l->depth + 1 : 0, r ? r->depth + 1 : 0);
  n->modal_depth = std::max(l ? l->modal_depth : 0, r ? r->modal_depth : 0) + (op == Op::Box ? 1 : 0);
  n->size = 1 + (l ? l->size : 0) + (r ? r->size : 0);
  n->propositional = op != Op::Box && (!l || l->propositional) && (!r || r->propositional);
  if (l) n->left_handle.emplace(Formula(l));
  if (r) n->right_handle.emplace(Formula(r));
  return Formula(std::move(n));
}

Formula Formula::var(std::string_view name) { return var(Var(name)); }
Formula Formula::var(Var v) { return make(Op::Var, v, nullptr, nullptr, Surface::Auto); }

Formula Formula::bot() {
  static const Formula falsum = make(Op::Falsum, std::nullopt, nullptr, nullptr, Surface::Auto);
  return falsum;
}

Formula Formula::conj(Formula a, Formula b) { return make(Op::And, std::nullopt, a.node_, b.node_, Surface::Auto); }
Formula Formula::disj(Formula a, Formula b) { return make(Op::Or, std::nullopt, a.node_, b.node_, Surface::Auto); }
Formula Formula::implies(Formula a, Formula b) {
  return make(Op::Implies, std::nullopt, a.node_, b.node_, Surface::Auto);
}
Formula Formula::box(Formula a) { return make(Op::Box, std::nullopt, a.node_, nullptr, Surface::Auto); }

Formula Formula::neg(Formula a) { return implies(std::move(a), bot()); }
Formula Formula::top() { return neg(bot()); }
Formula Formula::iff(Formula a, Formula b) { return conj(implies(a, b), implies(b, a)); }
Formula Formula::ident(Formula a, Formula b) { return conj(box(implies(a, b)), box(implies(b, a))); }

Op Formula::op() const noexcept { return node_->op; }

Var Formula::variable() const {
  assert(node_->op == Op::Var);
  return *node_->var;
}

const Formula& Formula::left() const {
  assert(node_->left_handle);
  return *node_->left_handle;
}

const Formula& Formula::right() const {
  assert(node_->right_handle);
  return *node_->right_handle;
}

const Formula& Formula::inner() const {
  assert(node_->op == Op::Box);
  return *node_->left_handle;
}

Surface Formula::surface() const noexcept { return node_->surface; }

Formula Formula::with_surface(Surface s) const {
  if (s == node_->surface) return *this;
  return make(node_->op, node_->var, node_->left, node_->right, s);
}

bool Formula::is_propositional() const noexcept { return node_->propositional; }
std::size_t Formula::depth() const noexcept { return node_->depth; }
std::size_t Formula::modal_depth() const noexcept { return node_->modal_depth; }
std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

namespace {

void collect_vars(const Formula& f, std::set<Var>& out) {
  switch (f.op()) {
    case Op::Var: out.insert(f.variable()); break;
    case Op::Falsum: break;
    case Op::Box: collect_vars(f.inner(), out); break;
    default:
      collect_vars(f.left(), out);
      collect_vars(f.right(), out);
  }
}

}  // namespace

std::vector<Var> Formula::variables() const {
  std::set<Var> vars;
  collect_vars(*this, vars);
  return {vars.begin(), vars.end()};
}

bool Formula::contains(Var v) const {
  switch (op()) {
    case Op::Var: return variable() == v;
    case Op::Falsum: return false;
    case Op::Box: return inner().contains(v);
    default: return left().contains(v) || right().contains(v);
  }
}

bool operator==(const Formula& a, const Formula& b) {
  const Formula::Node* x = a.node_.get();
  const Formula::Node* y = b.node_.get();
  if (x == y) return true;
  if (x->hash != y->hash || x->op != y->op || x->size != y->size) return false;
  switch (x->op) {
    case Op::Var: return *x->var == *y->var;
    case Op::Falsum: return true;
    case Op::Box: return a.inner() == b.inner();
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

bool structurally_less(const Formula& a, const Formula& b) {
  if (a.op() != b.op()) return a.op() < b.op();
  switch (a.op()) {
    case Op::Var: return a.variable() < b.variable();
    case Op::Falsum: return false;
    case Op::Box: return structurally_less(a.inner(), b.inner());
    default:
      if (a.left() != b.left()) return structurally_less(a.left(), b.left());
      return structurally_less(a.right(), b.right());
  }
}

std::optional<Formula> as_negation(const Formula& f) {
  if (f.op() == Op::Implies && f.right().op() == Op::Falsum) return f.left();
  return std::nullopt;
}

bool is_top(const Formula& f) {
  return f.op() == Op::Implies && f.left().op() == Op::Falsum && f.right().op() == Op::Falsum;
}

std::optional<std::pair<Formula, Formula>> as_iff(const Formula& f) {
  if (f.op() != Op::And) return std::nullopt;
  const Formula& l = f.left();
  const Formula& r = f.right();
  if (l.op() != Op::Implies || r.op() != Op::Implies) return std::nullopt;
  if (l.left() == r.right() && l.right() == r.left()) return std::pair{l.left(), l.right()};
  return std::nullopt;
}

std::optional<std::pair<Formula, Formula>> as_ident(const Formula& f) {
  if (f.op() != Op::And || f.left().op() != Op::Box || f.right().op() != Op::Box) return std::nullopt;
  const Formula& l = f.left().inner();
  const Formula& r = f.right().inner();
  if (l.op() != Op::Implies || r.op() != Op::Implies) return std::nullopt;
  if (l.left() == r.right() && l.right() == r.left()) return std::pair{l.left(), l.right()};
  return std::nullopt;
}

namespace {

template <class Leaf>
Formula rebuild(const Formula& f, const Leaf& leaf) {
  switch (f.op()) {
    case Op::Var: return leaf(f);
    case Op::Falsum: return f;
    case Op::Box: {
      Formula in = rebuild(f.inner(), leaf);
      return in == f.inner() ? f : Formula::box(in).with_surface(f.surface());
    }
    default: {
      Formula l = rebuild(f.left(), leaf);
      Formula r = rebuild(f.right(), leaf);
      if (l == f.left() && r == f.right()) return f;
      switch (f.op()) {
        case Op::And: return Formula::conj(l, r).with_surface(f.surface());
        case Op::Or: return Formula::disj(l, r).with_surface(f.surface());
        default: return Formula::implies(l, r).with_surface(f.surface());
      }
    }
  }
}

}  // namespace

Formula substitute(const Formula& chi, Var x, const Formula& phi) {
  return rebuild(chi, [&](const Formula& v) { return v.variable() == x ? phi : v; });
}

Formula substitute_all(const Formula& chi, const std::vector<std::pair<Var, Formula>>& binding) {
  return rebuild(chi, [&](const Formula& v) {
    for (const auto& [x, phi] : binding)
      if (v.variable() == x) return phi;
    return v;
  });
}

namespace {

// FNV-1a; std::hash is not stable across implementations.
std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct Abstractor {
  std::vector<Var> taken;
  std::vector<std::pair<Var, Formula>> binding;

  Var fresh_for(const Formula& boxed) {
    for (const auto& [v, g] : binding)
      if (g == boxed) return v;
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a(render(boxed));
    std::string name = "b_";
    for (int i = 15; i >= 4; --i) name += hex[(h >> (4 * i)) & 0xf];
    auto clash = [&](const std::string& n) {
      Var v(n);
      if (std::find(taken.begin(), taken.end(), v) != taken.end()) return true;
      for (const auto& entry : binding)
        if (entry.first == v) return true;
      return false;
    };
    while (clash(name)) name += "_";
    Var v(name);
    binding.emplace_back(v, boxed);
    return v;
  }

  Formula run(const Formula& f) {
    switch (f.op()) {
      case Op::Var:
      case Op::Falsum: return f;
      case Op::Box: return Formula::var(fresh_for(f));
      case Op::And: return Formula::conj(run(f.left()), run(f.right()));
      case Op::Or: return Formula::disj(run(f.left()), run(f.right()));
      case Op::Implies: return Formula::implies(run(f.left()), run(f.right()));
    }
    return f;
  }
};

}  // namespace

BoxAbstraction abstract_boxes(const Formula& f) {
  if (f.is_propositional()) return {f, {}};
  Abstractor a;
  a.taken = f.variables();
  Formula skeleton = a.run(f);
  return {skeleton, std::move(a.binding)};
}

Formula conjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::top();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::conj(acc, parts[i]);
  return acc;
}

}  // namespace l5
