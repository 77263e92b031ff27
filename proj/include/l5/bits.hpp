#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace l5 {

/// Sets of up to 64 dense indices (elements of an algebra, worlds of a frame).
using Mask = std::uint64_t;

constexpr std::size_t kMaxMaskSize = 64;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }
constexpr Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
constexpr bool has(Mask m, std::size_t i) { return (m >> i) & 1u; }
constexpr bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline int count(Mask m) { return std::popcount(m); }

inline std::vector<std::size_t> members(Mask m) {
  std::vector<std::size_t> out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

}  // namespace l5
