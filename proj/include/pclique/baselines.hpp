#pragma once

// Baseline detectors and recovery procedures the pipeline is compared
// against: global edge counting, per-vertex degree counting, bounded
// exhaustive clique search, exact maximum-clique search, and the reduction
// that turns any detector into a recovery procedure by deleting one vertex
// neighborhood at a time.

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "ledger.hpp"
#include "space_budget.hpp"

namespace pclique {

enum class DetectionVerdict { null_model, planted };

struct DetectionReport {
  DetectionVerdict verdict = DetectionVerdict::null_model;
  double statistic = 0.0;
  double threshold = 0.0;
};

// Declares planted when the edge total clears the midpoint between the two
// hypotheses' means: pairs/2 under the null, plus a quarter of the planted
// pairs as margin.
inline DetectionReport edge_count_detect(const Graph& g, std::uint64_t k,
                                         WorkspaceLedger& ledger) {
  const std::uint64_t n = g.vertex_count();
  if (k < 1 || k > n)
    throw invalid_parameter_error("edge detection needs 1 <= k <= n");
  ScopedFrame frame(
      ledger, {Register{"edgeCount", static_cast<std::uint32_t>(
                                         std::bit_width(g.pair_count()))}});
  const double stat = static_cast<double>(g.edge_total());
  const double thr = static_cast<double>(g.pair_count()) / 2.0 +
                     static_cast<double>(k * (k - 1) / 2) / 4.0;
  return {stat >= thr ? DetectionVerdict::planted : DetectionVerdict::null_model,
          stat, thr};
}

// Emits every vertex whose degree clears the null mean plus a quarter of the
// planted degree boost. Sound only for k of order sqrt(n log n) or larger.
inline std::vector<Vertex> degree_count_recover(const Graph& g, std::uint64_t k,
                                                WorkspaceLedger& ledger) {
  const std::uint64_t n = g.vertex_count();
  if (k < 1 || k > n)
    throw invalid_parameter_error("degree recovery needs 1 <= k <= n");
  const double thr = static_cast<double>(n - 1) / 2.0 +
                     static_cast<double>(k - 1) / 4.0;
  std::vector<Vertex> out;
  const std::uint32_t w = vertex_register_bits(n);
  ScopedFrame frame(ledger, {Register{"v", w}, Register{"deg", w}});
  for (Vertex v = 1; v <= n; ++v)
    if (static_cast<double>(g.degree(v)) >= thr) out.push_back(v);
  return out;
}

namespace detail {

// 0-based adjacency rows packed 64 vertices per word; scratch copy used by
// the exact searches.
struct PackedAdjacency {
  std::uint64_t n = 0;
  std::uint64_t words = 0;
  std::vector<std::uint64_t> rows;

  explicit PackedAdjacency(const Graph& g)
      : n(g.vertex_count()), words((n + 63) / 64), rows(n * words, 0) {
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v)
        if (g.edge(u, v)) {
          rows[(u - 1) * words + ((v - 1) >> 6)] |= 1ull << ((v - 1) & 63);
          rows[(v - 1) * words + ((u - 1) >> 6)] |= 1ull << ((u - 1) & 63);
        }
  }

  const std::uint64_t* row(std::uint32_t v) const { return rows.data() + v * words; }
};

inline bool any_bit(const std::vector<std::uint64_t>& set) {
  for (std::uint64_t w : set)
    if (w) return true;
  return false;
}

// Branch and bound with a greedy-coloring bound. Candidates are colored into
// independent classes; a clique can use at most one vertex per class, so the
// class index of a vertex bounds any clique drawn from it and its
// predecessors in the coloring order. Stops early once best reaches stop_at.
inline void mcq_expand(const PackedAdjacency& a, std::vector<std::uint64_t>& cand,
                       std::uint64_t held, std::uint64_t& best,
                       std::uint64_t stop_at) {
  if (!any_bit(cand)) {
    if (held > best) best = held;
    return;
  }
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> bound;
  {
    std::vector<std::uint64_t> uncolored = cand;
    std::uint32_t color = 0;
    while (any_bit(uncolored)) {
      ++color;
      std::vector<std::uint64_t> avail = uncolored;
      while (any_bit(avail)) {
        std::uint32_t v = 0;
        for (std::uint64_t w = 0; w < a.words; ++w)
          if (avail[w]) {
            v = static_cast<std::uint32_t>(w * 64 + std::countr_zero(avail[w]));
            break;
          }
        avail[v >> 6] &= ~(1ull << (v & 63));
        uncolored[v >> 6] &= ~(1ull << (v & 63));
        for (std::uint64_t w = 0; w < a.words; ++w) avail[w] &= ~a.row(v)[w];
        order.push_back(v);
        bound.push_back(color);
      }
    }
  }
  for (std::size_t i = order.size(); i-- > 0;) {
    if (best >= stop_at) return;
    if (held + bound[i] <= best) return;
    const std::uint32_t v = order[i];
    cand[v >> 6] &= ~(1ull << (v & 63));
    std::vector<std::uint64_t> next(a.words);
    for (std::uint64_t w = 0; w < a.words; ++w) next[w] = cand[w] & a.row(v)[w];
    mcq_expand(a, next, held + 1, best, stop_at);
  }
}

inline std::uint64_t clique_size_bounded(const Graph& g, std::uint64_t stop_at) {
  const PackedAdjacency a(g);
  std::vector<std::uint64_t> cand(a.words, ~0ull);
  if (a.n & 63) cand.back() = ~0ull >> (64 - (a.n & 63));
  if (a.words == 0) return 0;
  std::uint64_t best = 0;
  mcq_expand(a, cand, 0, best, stop_at);
  return best;
}

}  // namespace detail

// Size of the largest clique; exact for any n the search can afford.
inline std::uint64_t max_clique_size(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  return detail::clique_size_bounded(g, g.vertex_count() + 1);
}

// Exact maximum clique as a vertex set, lexicographically smallest among the
// maximum cliques. Ascending depth-first order visits candidate sets in
// lexicographic order and only a strictly larger clique replaces the
// incumbent, so the first maximum-size clique found is the lex-least one.
inline std::vector<Vertex> max_clique(const Graph& g) {
  const std::uint64_t n = g.vertex_count();
  if (n > 64)
    throw infeasible_scale_error("exact lexicographic search is limited to n <= 64");
  std::array<std::uint64_t, 64> adj{};
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (g.edge(u, v)) {
        adj[u - 1] |= 1ull << (v - 1);
        adj[v - 1] |= 1ull << (u - 1);
      }

  struct Dfs {
    const std::array<std::uint64_t, 64>& adj;
    std::vector<Vertex> best, cur;
    void run(std::uint64_t cand) {
      if (!cand) {
        if (cur.size() > best.size()) best = cur;
        return;
      }
      while (cand) {
        if (cur.size() + static_cast<std::size_t>(std::popcount(cand)) <=
            best.size())
          return;
        const int i = std::countr_zero(cand);
        cand &= cand - 1;
        cur.push_back(static_cast<Vertex>(i) + 1);
        run(cand & adj[i]);
        cur.pop_back();
      }
    }
  };
  Dfs dfs{adj, {}, {}};
  dfs.run(n == 64 ? ~0ull : (1ull << n) - 1);
  return dfs.best;
}

// Detector that answers whether the graph holds a clique of the given size.
inline std::function<bool(const Graph&)> max_clique_detector(
    std::uint64_t threshold) {
  return [threshold](const Graph& h) {
    if (threshold == 0) return true;
    return detail::clique_size_bounded(h, threshold) >= threshold;
  };
}

// Looks for a clique of size ceil((2+epsilon)*log2 n), a size present in a
// planted instance but (for positive epsilon) absent from the null model with
// high probability. Refuses to run when that size exceeds the cap, since the
// search is exponential in it.
inline DetectionReport exhaustive_detect(const Graph& g, double epsilon,
                                         std::uint32_t cap,
                                         WorkspaceLedger& ledger) {
  const std::uint64_t n = g.vertex_count();
  if (n < 2) throw invalid_parameter_error("exhaustive detection needs n >= 2");
  if (!(epsilon > 0.0))
    throw invalid_parameter_error("epsilon must be positive");
  const std::uint64_t s = static_cast<std::uint64_t>(
      std::ceil((2.0 + epsilon) * std::log2(static_cast<double>(n))));
  if (s > cap)
    throw infeasible_scale_error("witness size " + std::to_string(s) +
                                 " exceeds search cap " + std::to_string(cap));
  ScopedFrame frame(ledger,
                    s * vertex_register_bits(n) + std::bit_width(s));
  const std::uint64_t found = detail::clique_size_bounded(g, s);
  return {found >= s ? DetectionVerdict::planted : DetectionVerdict::null_model,
          static_cast<double>(found), static_cast<double>(s)};
}

// Detection-to-recovery reduction: v is emitted when deleting v and its
// neighborhood destroys every large clique, i.e. the detector goes quiet on
// the subgraph induced by v's non-neighbors. Charges the materialized
// subinstance (relabeling map plus adjacency); the detector runs on top of
// that charge.
inline std::vector<Vertex> alon_reduction_recover(
    const Graph& g, const std::function<bool(const Graph&)>& detector,
    WorkspaceLedger& ledger) {
  const std::uint64_t n = g.vertex_count();
  std::vector<Vertex> out;
  ScopedFrame outer(ledger, {Register{"v", vertex_register_bits(n)}});
  for (Vertex v = 1; v <= n; ++v) {
    std::vector<Vertex> keep;
    for (Vertex u = 1; u <= n; ++u)
      if (u != v && !g.edge(u, v)) keep.push_back(u);
    const std::uint64_t m = keep.size();
    ScopedFrame sub(ledger, m * vertex_register_bits(n) +
                                (m ? m * (m - 1) / 2 : 0));
    Graph h = Graph::edgeless(m);
    for (std::uint64_t i = 0; i < m; ++i)
      for (std::uint64_t j = i + 1; j < m; ++j)
        if (g.edge(keep[i], keep[j])) h.set_edge(i + 1, j + 1);
    if (!detector(h)) out.push_back(v);
  }
  return out;
}

}  // namespace pclique
