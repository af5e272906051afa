#pragma once

#include <bit>
#include <cstdint>

namespace pclique {

// Pinned bound on measured working space for the filtering/completion
// pipeline: peak_bits <= kSpaceBudgetA + kSpaceBudgetB * rounds * ceil(log2 n).
// The measured peak is (3*rounds + 2) * vertex_register_bits(n) + 1, so B = 4
// leaves slack for any n >= 16 and A covers small fixed state.
inline constexpr std::uint64_t kSpaceBudgetA = 64;
inline constexpr std::uint64_t kSpaceBudgetB = 4;

inline std::uint32_t ceil_log2(std::uint64_t n) {
  return n <= 1 ? 0 : static_cast<std::uint32_t>(std::bit_width(n - 1));
}

// Vertex counters range over 0..n, hence one extra bit over ceil(log2 n).
inline std::uint32_t vertex_register_bits(std::uint64_t n) {
  return static_cast<std::uint32_t>(std::bit_width(n));
}

inline std::uint64_t space_budget(std::uint64_t n, std::uint32_t rounds) {
  return kSpaceBudgetA + kSpaceBudgetB * static_cast<std::uint64_t>(rounds) * ceil_log2(n);
}

}  // namespace pclique
