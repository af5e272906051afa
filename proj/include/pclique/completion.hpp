#pragma once

// Clique completion from a membership oracle, plus the end-to-end recovery
// pipeline that feeds the completion scan the survivor set of the iterated
// degree filter. All mutable algorithm state is charged to a WorkspaceLedger;
// the input adjacency and the emitted output are not.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "filter.hpp"
#include "graph.hpp"
#include "ledger.hpp"
#include "prng.hpp"
#include "space_budget.hpp"

namespace pclique {

// Seed set handed to the completion scan: vertices believed to lie in the
// hidden clique, plus the working-space bill for whatever internal state the
// oracle is answerable for while it is alive.
struct MembershipOracle {
  std::vector<Vertex> members;  // ascending, distinct
  std::uint64_t declared_bits = 0;

  bool contains(Vertex v) const {
    return std::binary_search(members.begin(), members.end(), v);
  }
};

namespace detail {
inline constexpr std::uint64_t kOracleDomain = 0x4f52434c'53454c31ull;
}  // namespace detail

// Oracle holding a uniform m-subset of a known clique; the idealized seed set
// the completion stage is validated against on its own.
inline MembershipOracle subset_oracle(const std::vector<Vertex>& clique,
                                      std::uint64_t m, Seed seed,
                                      std::uint64_t n) {
  if (m < 1 || m > clique.size())
    throw invalid_parameter_error("oracle subset size outside 1..|clique|");
  SplitMix64 pick(mix64(seed ^ detail::kOracleDomain));
  const std::uint64_t c = clique.size();
  std::vector<bool> chosen(c, false);
  for (std::uint64_t j = c - m; j < c; ++j) {
    const std::uint64_t t = pick.below(j + 1);
    if (chosen[t])
      chosen[j] = true;
    else
      chosen[t] = true;
  }
  MembershipOracle oracle;
  for (std::uint64_t i = 0; i < c; ++i)
    if (chosen[i]) oracle.members.push_back(clique[i]);
  oracle.declared_bits = m * vertex_register_bits(n);
  return oracle;
}

inline std::array<Register, 5> sscc_frame_registers(std::uint64_t n) {
  const std::uint32_t w = vertex_register_bits(n);
  return {Register{"v", w}, Register{"u", w}, Register{"w", w},
          Register{"degTilde", w}, Register{"allAdj", 1}};
}

// Completion scan: emits every vertex v with at least 2k/3 + 3*log2(k)
// neighbors u whose neighborhood covers the whole oracle set apart from u
// itself. The member scan per (v, u) bails at the first missing edge.
inline std::vector<Vertex> sscc(const Graph& g, std::uint64_t k,
                                const MembershipOracle& oracle,
                                WorkspaceLedger& ledger) {
  if (k < 1) throw invalid_parameter_error("sscc needs k >= 1");
  const std::uint64_t n = g.vertex_count();
  const double bar = 2.0 * static_cast<double>(k) / 3.0 +
                     3.0 * std::log2(static_cast<double>(k));
  std::vector<Vertex> out;
  ScopedFrame oracle_frame(ledger, oracle.declared_bits);
  const auto regs = sscc_frame_registers(n);
  ScopedFrame frame(ledger, std::span<const Register>(regs));
  for (Vertex v = 1; v <= n; ++v) {
    std::uint64_t deg_tilde = 0;
    for (Vertex u = 1; u <= n; ++u) {
      if (!g.edge(u, v)) continue;
      bool all_adj = true;
      for (Vertex w : oracle.members) {
        if (w == u) continue;
        if (!g.edge(w, u)) {
          all_adj = false;
          break;
        }
      }
      if (all_adj) ++deg_tilde;
    }
    if (static_cast<double>(deg_tilde) >= bar) out.push_back(v);
  }
  return out;
}

// Builds the completion oracle by probing last-round survivor membership for
// the whole final band. The probes run under their own ledger; the oracle
// declares that measured peak and the pipeline charges the declaration on the
// caller's ledger for the oracle's lifetime.
inline MembershipOracle survivor_snapshot(const Graph& g,
                                          const FilterSchedule& s) {
  MembershipOracle oracle;
  WorkspaceLedger build;
  {
    ScopedFrame scan(build, {Register{"w", vertex_register_bits(s.n)}});
    for (Vertex w = static_cast<Vertex>(s.band_lo(s.rounds)) + 1;
         w <= s.band_hi(s.rounds); ++w)
      if (vt_membership(g, s, s.rounds, w, build)) oracle.members.push_back(w);
  }
  oracle.declared_bits = build.peak_bits();
  return oracle;
}

struct PipelineConfig {
  double constant_c = 8.0;  // recovery is attempted only when k >= c*sqrt(n)
};

inline void check_clique_floor(std::uint64_t n, std::uint64_t k,
                               const PipelineConfig& cfg) {
  const double floor = cfg.constant_c * std::sqrt(static_cast<double>(n));
  if (static_cast<double>(k) < floor)
    throw schedule_infeasible_error(
        "clique-floor", "pipeline needs k >= c*sqrt(n) = " +
                            std::to_string(floor) + ", got k = " +
                            std::to_string(k));
}

inline std::vector<Vertex> recover_large_clique(const Graph& g, std::uint64_t k,
                                                const PipelineConfig& cfg,
                                                WorkspaceLedger& ledger) {
  check_clique_floor(g.vertex_count(), k, cfg);
  const FilterSchedule s = make_schedule(g.vertex_count(), k);
  const MembershipOracle oracle = survivor_snapshot(g, s);
  return sscc(g, k, oracle, ledger);
}

// Opens the pipeline's exact frame stack without evaluating a graph: the
// deepest snapshot descent on a build ledger, then the declared oracle frame
// and the completion registers on the caller's ledger. Returns the stack
// depth in bits; used where a full run is not time-feasible.
inline std::uint64_t measure_pipeline_peak(std::uint64_t n, std::uint64_t k,
                                           const PipelineConfig& cfg,
                                           WorkspaceLedger& ledger) {
  check_clique_floor(n, k, cfg);
  const FilterSchedule s = make_schedule(n, k);

  WorkspaceLedger build;
  const auto vt = vt_frame_registers(n);
  std::vector<WorkspaceLedger::FrameId> stack;
  stack.push_back(build.open_frame({Register{"w", vertex_register_bits(n)}}));
  for (std::uint32_t t = 2; t <= s.rounds; ++t)
    stack.push_back(build.open_frame(std::span<const Register>(vt)));
  while (!stack.empty()) {
    build.close_frame(stack.back());
    stack.pop_back();
  }

  const std::uint64_t before = ledger.current_bits();
  ScopedFrame oracle_frame(ledger, build.peak_bits());
  const auto regs = sscc_frame_registers(n);
  ScopedFrame frame(ledger, std::span<const Register>(regs));
  return ledger.current_bits() - before;
}

}  // namespace pclique
