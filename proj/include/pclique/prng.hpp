#pragma once

#include <cstdint>

namespace pclique {

using Seed = std::uint64_t;

// splitmix64 finalizer; full avalanche on 64 bits.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Counter-based stream: block(i) is a pure function of (seed, domain, i).
// Blocks can be generated in any order, so edge bits do not depend on
// traversal order.
class CounterStream {
 public:
  CounterStream(Seed seed, std::uint64_t domain) : key_(mix64(seed ^ domain)) {}

  std::uint64_t block(std::uint64_t counter) const {
    return mix64(key_ ^ ((counter + 1) * 0x9e3779b97f4a7c15ull));
  }

 private:
  std::uint64_t key_;
};

// Small sequential generator for subset sampling and shuffles.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t s) : state_(s) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }

  // Uniform draw from [0, bound); multiplicative range reduction.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace pclique
