#pragma once

// Undirected simple graphs on vertices 1..n. Adjacency is one bit per
// unordered pair, packed in lexicographic (u,v) order with u < v; bit i lives
// at words[i/64], position i%64. Samplers draw each pair from a counter-based
// stream keyed by (seed, pair index).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "prng.hpp"

namespace pclique {

using Vertex = std::uint64_t;

class Graph {
 public:
  Graph() = default;

  static Graph edgeless(std::uint64_t n) {
    Graph g;
    g.n_ = n;
    g.words_.assign((pair_count_of(n) + 63) / 64, 0);
    return g;
  }

  static Graph from_bits(std::uint64_t n, std::vector<std::uint64_t> words) {
    const std::uint64_t need = (pair_count_of(n) + 63) / 64;
    if (words.size() != need)
      throw invalid_parameter_error("adjacency word count mismatch");
    Graph g;
    g.n_ = n;
    g.words_ = std::move(words);
    g.mask_tail();
    return g;
  }

  std::uint64_t vertex_count() const { return n_; }
  std::uint64_t pair_count() const { return pair_count_of(n_); }
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    const std::uint64_t i = bit_index(u, v);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set_edge(Vertex u, Vertex v, bool present = true) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw invalid_parameter_error("self loops are not representable");
    if (u > v) std::swap(u, v);
    const std::uint64_t i = bit_index(u, v);
    if (present)
      words_[i >> 6] |= 1ull << (i & 63);
    else
      words_[i >> 6] &= ~(1ull << (i & 63));
  }

  // Number of neighbors u of v with lo < u <= hi. The range must sit at or
  // above v so the bits form one contiguous run of v's row.
  std::uint64_t neighbors_in_range(Vertex v, Vertex lo, Vertex hi) const {
    check_vertex(v);
    if (hi > n_ || lo > hi) throw invalid_parameter_error("bad vertex range");
    if (v > lo) throw invalid_parameter_error("range must lie above the row vertex");
    if (lo == hi) return 0;
    return popcount_range(bit_index(v, lo + 1), bit_index(v, hi) + 1);
  }

  std::uint64_t degree(Vertex v) const {
    check_vertex(v);
    std::uint64_t d = v < n_ ? neighbors_in_range(v, v, n_) : 0;
    for (Vertex u = 1; u < v; ++u) {
      const std::uint64_t i = bit_index(u, v);
      d += (words_[i >> 6] >> (i & 63)) & 1u;
    }
    return d;
  }

  std::uint64_t edge_total() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

 private:
  static std::uint64_t pair_count_of(std::uint64_t n) { return n * (n - 1) / 2; }

  void check_vertex(Vertex v) const {
    if (v < 1 || v > n_)
      throw invalid_parameter_error("vertex id " + std::to_string(v) +
                                    " outside 1.." + std::to_string(n_));
  }

  // u < v assumed.
  std::uint64_t bit_index(Vertex u, Vertex v) const {
    return (u - 1) * n_ - u * (u + 1) / 2 + v - 1;
  }

  std::uint64_t popcount_range(std::uint64_t b0, std::uint64_t b1) const {
    std::uint64_t w0 = b0 >> 6, w1 = (b1 - 1) >> 6, c = 0;
    const std::uint64_t head = ~0ull << (b0 & 63);
    const std::uint64_t tail = ~0ull >> (63 - ((b1 - 1) & 63));
    if (w0 == w1) return std::popcount(words_[w0] & head & tail);
    c += std::popcount(words_[w0] & head);
    for (std::uint64_t w = w0 + 1; w < w1; ++w) c += std::popcount(words_[w]);
    c += std::popcount(words_[w1] & tail);
    return c;
  }

  void mask_tail() {
    const std::uint64_t bits = pair_count();
    if (bits & 63) words_.back() &= ~0ull >> (64 - (bits & 63));
  }

  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> words_;

  friend Graph sample_er(std::uint64_t, Seed);
};

namespace detail {
inline constexpr std::uint64_t kEdgeDomain = 0x45444745'53545231ull;
inline constexpr std::uint64_t kCliqueDomain = 0x434c4951'55455631ull;
}  // namespace detail

inline Graph sample_er(std::uint64_t n, Seed seed) {
  if (n < 1) throw invalid_parameter_error("sample_er needs n >= 1");
  Graph g = Graph::edgeless(n);
  CounterStream stream(seed, detail::kEdgeDomain);
  for (std::uint64_t w = 0; w < g.words_.size(); ++w) g.words_[w] = stream.block(w);
  g.mask_tail();
  return g;
}

struct PlantedInstance {
  Graph graph;
  std::vector<Vertex> clique;  // sorted, size k
  Seed seed = 0;
};

// Uniform k-subset via Floyd's algorithm, then clique pairs forced present on
// top of the same G(n, 1/2) stream the null sampler uses.
inline PlantedInstance sample_planted(std::uint64_t n, std::uint64_t k, Seed seed) {
  if (n < 1) throw invalid_parameter_error("sample_planted needs n >= 1");
  if (k < 1 || k > n)
    throw invalid_parameter_error("clique size must satisfy 1 <= k <= n");
  PlantedInstance inst;
  inst.seed = seed;
  inst.graph = sample_er(n, seed);

  SplitMix64 pick(mix64(seed ^ detail::kCliqueDomain));
  std::vector<bool> chosen(n + 1, false);
  for (std::uint64_t j = n - k + 1; j <= n; ++j) {
    const Vertex t = static_cast<Vertex>(pick.below(j)) + 1;
    if (chosen[t])
      chosen[j] = true;
    else
      chosen[t] = true;
  }
  for (Vertex v = 1; v <= n; ++v)
    if (chosen[v]) inst.clique.push_back(v);

  for (std::size_t i = 0; i < inst.clique.size(); ++i)
    for (std::size_t j = i + 1; j < inst.clique.size(); ++j)
      inst.graph.set_edge(inst.clique[i], inst.clique[j]);
  return inst;
}

}  // namespace pclique
