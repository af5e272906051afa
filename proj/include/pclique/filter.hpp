#pragma once

// Iterated degree filtering. Vertices are split into geometric bands
// N_t = (n0/2^t, n0/2^(t-1)]; V_1 is the whole first band and a vertex of a
// later band survives round t when its edge count into the previous
// survivor set clears bar(t) = |V_{t-1}|/2 + k_{t+2} - 2*sqrt(|V_{t-1}|).
// vt_membership answers survivor queries with O(t) registers by recomputing
// the previous round from scratch on every probe; reference_filter_trace
// materializes the survivor sets explicitly and is the testing oracle.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "ledger.hpp"
#include "space_budget.hpp"

namespace pclique {

// Iterated base-2 logarithm: applications of log2 until the value is <= 1.
inline std::uint32_t log_star(double x) {
  std::uint32_t c = 0;
  while (x > 1.0) {
    x = std::log2(x);
    ++c;
  }
  return c;
}

struct FilterSchedule {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t n0 = 0;        // smallest power of two >= n/2
  std::uint32_t rounds = 0;    // filtering depth T
  std::uint32_t depth_cap = 0; // log2(n0); bands exist for 1 <= t <= depth_cap
  std::uint64_t k0_num = 0;    // k0 = k*n0/n, reduced fraction
  std::uint64_t k0_den = 1;

  std::uint64_t band_lo(std::uint32_t t) const { return n0 >> t; }       // n_t
  std::uint64_t band_hi(std::uint32_t t) const { return n0 >> (t - 1); } // n_{t-1}
  std::uint64_t band_size(std::uint32_t t) const { return n0 >> t; }

  // k_t = k0 / 2^t, evaluated in double for threshold comparisons.
  double k_t(std::uint32_t t) const {
    return std::ldexp(static_cast<double>(k0_num) / static_cast<double>(k0_den),
                      -static_cast<int>(t));
  }
};

namespace detail {

inline FilterSchedule schedule_arithmetic(std::uint64_t n, std::uint64_t k) {
  if (n < 4) throw invalid_parameter_error("schedule needs n >= 4");
  if (k < 1 || k > n)
    throw invalid_parameter_error("schedule needs 1 <= k <= n");
  FilterSchedule s;
  s.n = n;
  s.k = k;
  s.n0 = std::bit_ceil((n + 1) / 2);
  s.depth_cap = static_cast<std::uint32_t>(std::countr_zero(s.n0));
  const double ratio = static_cast<double>(k) / std::sqrt(static_cast<double>(n));
  s.rounds = 2 * (log_star(static_cast<double>(n)) - log_star(ratio)) + 3;
  const std::uint64_t g = std::gcd(k * s.n0, n);
  s.k0_num = k * s.n0 / g;
  s.k0_den = n / g;
  return s;
}

}  // namespace detail

// Full feasibility: the round count must stay inside the band hierarchy and
// the guaranteed survivor floor k/2^(T+3) must be at least one vertex.
inline FilterSchedule make_schedule(std::uint64_t n, std::uint64_t k) {
  FilterSchedule s = detail::schedule_arithmetic(n, k);
  if (s.rounds >= s.depth_cap)
    throw schedule_infeasible_error(
        "rounds", "round count " + std::to_string(s.rounds) +
                      " reaches band depth log2(n0) = " + std::to_string(s.depth_cap));
  if (s.rounds + 3 >= 64 || (k >> (s.rounds + 3)) == 0)
    throw schedule_infeasible_error(
        "survivor-floor", "k/2^(T+3) < 1 for k = " + std::to_string(k) +
                              ", T = " + std::to_string(s.rounds));
  return s;
}

// Band arithmetic only, with the depth clamped to the band hierarchy; serves
// membership diagnostics at sizes where the full schedule is infeasible.
inline FilterSchedule make_schedule_clamped(std::uint64_t n, std::uint64_t k) {
  FilterSchedule s = detail::schedule_arithmetic(n, k);
  s.rounds = std::min(s.rounds, s.depth_cap);
  return s;
}

inline bool in_nt(const FilterSchedule& s, std::uint32_t t, Vertex v) {
  if (t < 1 || t > s.depth_cap)
    throw invalid_parameter_error("band index " + std::to_string(t) +
                                  " outside 1.." + std::to_string(s.depth_cap));
  if (v < 1 || v > s.n) throw invalid_parameter_error("vertex outside 1..n");
  return s.band_lo(t) < v && v <= s.band_hi(t);
}

// Survival bar for round t given the previous survivor count. Compared as a
// real number; callers treat an empty previous round as automatic failure.
inline double filter_bar(const FilterSchedule& s, std::uint32_t t,
                         std::uint64_t prev_size) {
  return static_cast<double>(prev_size) / 2.0 + s.k_t(t + 2) -
         2.0 * std::sqrt(static_cast<double>(prev_size));
}

inline std::array<Register, 3> vt_frame_registers(std::uint64_t n) {
  const std::uint32_t w = vertex_register_bits(n);
  return {Register{"u", w}, Register{"sizeV", w}, Register{"degV", w}};
}

// Survivor-set membership for round t, recomputed recursively; one 3-register
// frame per open round, nothing retained between probes.
inline bool vt_membership(const Graph& g, const FilterSchedule& s, std::uint32_t t,
                          Vertex v, WorkspaceLedger& ledger) {
  if (t < 1 || t > s.rounds)
    throw invalid_parameter_error("round index outside 1..T");
  if (!in_nt(s, t, v))
    throw invalid_parameter_error("vertex " + std::to_string(v) +
                                  " is not in band " + std::to_string(t));
  if (t == 1) return true;

  const auto regs = vt_frame_registers(s.n);
  ScopedFrame frame(ledger, std::span<const Register>(regs));
  std::uint64_t size_v = 0, deg_v = 0;
  if (t == 2) {
    // Round 1 admits its whole band, so the scan over N_1 collapses to a
    // contiguous row popcount; v <= n_1 < every u in N_1.
    size_v = s.band_size(1);
    deg_v = g.neighbors_in_range(v, s.band_lo(1), s.band_hi(1));
  } else {
    for (Vertex u = static_cast<Vertex>(s.band_lo(t - 1)) + 1;
         u <= s.band_hi(t - 1); ++u) {
      if (vt_membership(g, s, t - 1, u, ledger)) {
        ++size_v;
        deg_v += g.edge(u, v) ? 1 : 0;
      }
    }
  }
  return size_v > 0 &&
         static_cast<double>(deg_v) >= filter_bar(s, t, size_v);
}

struct FilterTrace {
  // sets[t-1] holds the sorted survivor set V_t.
  std::vector<std::vector<Vertex>> sets;
};

inline FilterTrace reference_filter_trace(const Graph& g, const FilterSchedule& s,
                                          std::uint32_t depth) {
  if (depth < 1 || depth > s.depth_cap)
    throw invalid_parameter_error("trace depth outside 1..log2(n0)");
  FilterTrace trace;
  trace.sets.emplace_back();
  for (Vertex v = static_cast<Vertex>(s.band_lo(1)) + 1; v <= s.band_hi(1); ++v)
    trace.sets[0].push_back(v);

  for (std::uint32_t t = 2; t <= depth; ++t) {
    const auto& prev = trace.sets[t - 2];
    std::vector<Vertex> cur;
    if (!prev.empty()) {
      const double bar = filter_bar(s, t, prev.size());
      for (Vertex v = static_cast<Vertex>(s.band_lo(t)) + 1; v <= s.band_hi(t); ++v) {
        std::uint64_t deg = 0;
        for (Vertex u : prev) deg += g.edge(u, v) ? 1 : 0;
        if (static_cast<double>(deg) >= bar) cur.push_back(v);
      }
    }
    trace.sets.push_back(std::move(cur));
  }
  return trace;
}

}  // namespace pclique
