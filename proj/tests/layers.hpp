#pragma once

// Exhaustive sweeps over all formulas of bounded depth, grouped by meaning.
//
// A formula's signature is any tuple of values that the semantics computes
// compositionally (element in an algebra, truth set on a frame, ...). The
// signature of op(a, b) depends only on the signatures of a and b, so keeping
// one representative per (signature, modal depth) class at each depth level
// reaches every signature that any formula of that depth can have. Counts track
// how many syntactically distinct formulas each class stands for.

#include <cstdint>
#include <map>
#include <vector>

#include "l5/formula.hpp"

namespace layers {

using l5::Formula;

template <class Sig>
struct Class {
  Formula rep;
  std::uint64_t count;
};

template <class Sig>
using Layer = std::map<std::pair<Sig, std::size_t>, Class<Sig>>;

/// All formulas over atoms with depth <= max_depth and box nesting <=
/// max_modal_depth, grouped by sig(f). Visit each class with
/// visit(rep, count) afterwards.
template <class Sig, class SigFn>
Layer<Sig> build(const std::vector<Formula>& atoms, std::size_t max_depth, std::size_t max_modal_depth, SigFn&& sig) {
  auto put = [&](Layer<Sig>& layer, const Formula& f, std::uint64_t count) {
    auto key = std::make_pair(sig(f), f.modal_depth());
    auto it = layer.find(key);
    if (it == layer.end())
      layer.emplace(key, Class<Sig>{f, count});
    else
      it->second.count += count;
  };
  Layer<Sig> prev;
  for (const auto& a : atoms) put(prev, a, 1);
  for (std::size_t d = 1; d <= max_depth; ++d) {
    Layer<Sig> next;
    for (const auto& a : atoms) put(next, a, 1);
    for (const auto& [ka, ca] : prev)
      for (const auto& [kb, cb] : prev) {
        const std::uint64_t n = ca.count * cb.count;
        put(next, Formula::conj(ca.rep, cb.rep), n);
        put(next, Formula::disj(ca.rep, cb.rep), n);
        put(next, Formula::implies(ca.rep, cb.rep), n);
      }
    for (const auto& [k, c] : prev)
      if (k.second < max_modal_depth) put(next, Formula::box(c.rep), c.count);
    prev = std::move(next);
  }
  return prev;
}

template <class Sig>
std::uint64_t total(const Layer<Sig>& layer) {
  std::uint64_t n = 0;
  for (const auto& [k, c] : layer) n += c.count;
  return n;
}

/// Number of formulas the sweep should cover, counted independently:
/// c_d[m] = atoms (m = 0) + binary combinations + boxes.
inline std::uint64_t syntactic_count(std::size_t atoms, std::size_t max_depth, std::size_t max_modal_depth) {
  // by_md[m]: formulas of depth <= d with modal depth exactly m
  std::vector<std::uint64_t> by_md(max_modal_depth + 1, 0);
  by_md[0] = atoms;
  for (std::size_t d = 1; d <= max_depth; ++d) {
    std::vector<std::uint64_t> next(max_modal_depth + 1, 0);
    next[0] = atoms;
    for (std::size_t a = 0; a <= max_modal_depth; ++a)
      for (std::size_t b = 0; b <= max_modal_depth; ++b) next[std::max(a, b)] += 3 * by_md[a] * by_md[b];
    for (std::size_t m = 0; m < max_modal_depth; ++m) next[m + 1] += by_md[m];
    by_md = std::move(next);
  }
  std::uint64_t n = 0;
  for (auto c : by_md) n += c;
  return n;
}

}  // namespace layers
