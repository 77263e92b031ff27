#pragma once

#include <algorithm>
#include <initializer_list>
#include <string_view>
#include <utility>
#include <vector>

#include "l5/error.hpp"
#include "l5/formula.hpp"

namespace l5 {

/// Finite map from variables to values, kept sorted by variable name.
template <class T>
class VarMap {
public:
  VarMap() = default;
  VarMap(std::initializer_list<std::pair<std::string_view, T>> init) {
    for (const auto& [name, value] : init) set(Var(name), value);
  }

  void set(Var v, T value) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const auto& e, Var key) { return e.first < key; });
    if (it != entries_.end() && it->first == v)
      it->second = std::move(value);
    else
      entries_.emplace(it, v, std::move(value));
  }

  const T* find(Var v) const {
    for (const auto& e : entries_)
      if (e.first == v) return &e.second;
    return nullptr;
  }

  const T& at(Var v) const {
    if (const T* p = find(v)) return *p;
    throw UnboundVariable(v.name());
  }

  bool covers(const std::vector<Var>& vars) const {
    return std::all_of(vars.begin(), vars.end(), [&](Var v) { return find(v) != nullptr; });
  }

  const std::vector<std::pair<Var, T>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const VarMap& a, const VarMap& b) { return a.entries_ == b.entries_; }

private:
  std::vector<std::pair<Var, T>> entries_;
};

/// Calls fn(assignment) for every map vars -> values[i]; values are tried in
/// order with the first variable varying slowest. fn returns false to stop.
/// Returns false iff stopped early.
template <class T, class Fn>
bool for_each_assignment(const std::vector<Var>& vars, const std::vector<T>& values, Fn&& fn) {
  VarMap<T> current;
  if (vars.empty()) return fn(current);
  if (values.empty()) return true;
  std::vector<std::size_t> idx(vars.size(), 0);
  for (std::size_t i = 0; i < vars.size(); ++i) current.set(vars[i], values[0]);
  while (true) {
    if (!fn(current)) return false;
    std::size_t k = vars.size();
    while (k > 0) {
      --k;
      if (++idx[k] < values.size()) {
        current.set(vars[k], values[idx[k]]);
        break;
      }
      idx[k] = 0;
      current.set(vars[k], values[0]);
      if (k == 0) return true;
    }
  }
}

}  // namespace l5
