#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include <pclique/baselines.hpp>
#include <pclique/graph.hpp>
#include <pclique/ledger.hpp>
#include <pclique/prng.hpp>

using namespace pclique;

namespace {

bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.edge(vs[i], vs[j])) return false;
  return true;
}

bool is_maximal_clique(const Graph& g, const std::vector<Vertex>& vs) {
  if (!is_clique(g, vs)) return false;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (std::find(vs.begin(), vs.end(), v) != vs.end()) continue;
    bool extends = true;
    for (Vertex u : vs)
      if (!g.edge(u, v)) { extends = false; break; }
    if (extends) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("edge-count test on fixed instances") {
  SECTION("complete graph on four vertices, k=3") {
    PlantedInstance inst = sample_planted(4, 4, 0);
    WorkspaceLedger led;
    DetectionReport r = edge_count_detect(inst.graph, 3, led);
    REQUIRE(r.statistic == 6.0);
    REQUIRE(r.threshold == 3.75);
    REQUIRE(r.verdict == DetectionVerdict::planted);
  }
  SECTION("empty graph reads as the null model") {
    Graph g = Graph::edgeless(4);
    WorkspaceLedger led;
    DetectionReport r = edge_count_detect(g, 3, led);
    REQUIRE(r.statistic == 0.0);
    REQUIRE(r.verdict == DetectionVerdict::null_model);
  }
  SECTION("parameter validation") {
    Graph g = Graph::edgeless(4);
    WorkspaceLedger led;
    REQUIRE_THROWS_AS(edge_count_detect(g, 0, led), invalid_parameter_error);
    REQUIRE_THROWS_AS(edge_count_detect(g, 5, led), invalid_parameter_error);
  }
}

TEST_CASE("edge-count verdict tracks the statistic and is edge-monotone") {
  WorkspaceLedger led;
  for (Seed seed = 0; seed < 10; ++seed) {
    Graph g = sample_er(24, seed);
    DetectionReport r = edge_count_detect(g, 8, led);
    REQUIRE((r.verdict == DetectionVerdict::planted) ==
            (r.statistic >= r.threshold));
    // adding edges never flips planted back to null
    Graph denser = g;
    SplitMix64 rng(seed * 7 + 1);
    for (int i = 0; i < 40; ++i) {
      Vertex u = static_cast<Vertex>(rng.below(24) + 1);
      Vertex v = static_cast<Vertex>(rng.below(24) + 1);
      if (u != v) denser.set_edge(u, v, true);
    }
    DetectionReport r2 = edge_count_detect(denser, 8, led);
    REQUIRE(r2.statistic >= r.statistic);
    if (r.verdict == DetectionVerdict::planted)
      REQUIRE(r2.verdict == DetectionVerdict::planted);
  }
}

TEST_CASE("degree-threshold recovery edge cases") {
  WorkspaceLedger led;
  SECTION("complete graph emits every vertex") {
    PlantedInstance inst = sample_planted(12, 12, 0);
    std::vector<Vertex> out = degree_count_recover(inst.graph, 12, led);
    REQUIRE(out.size() == 12);
    REQUIRE(std::is_sorted(out.begin(), out.end()));
  }
  SECTION("empty graph emits nothing") {
    Graph g = Graph::edgeless(12);
    REQUIRE(degree_count_recover(g, 4, led).empty());
  }
  SECTION("relabelling the graph relabels the output") {
    PlantedInstance inst = sample_planted(20, 8, 3);
    std::vector<Vertex> perm(20);
    std::iota(perm.begin(), perm.end(), 1);
    SplitMix64 rng(99);
    for (std::size_t i = 19; i > 0; --i)
      std::swap(perm[i], perm[rng.below(i + 1)]);
    Graph h = Graph::edgeless(20);
    for (Vertex u = 1; u <= 20; ++u)
      for (Vertex v = u + 1; v <= 20; ++v)
        if (inst.graph.edge(u, v)) h.set_edge(perm[u - 1], perm[v - 1], true);
    std::vector<Vertex> base = degree_count_recover(inst.graph, 8, led);
    std::vector<Vertex> mapped;
    for (Vertex v : base) mapped.push_back(perm[v - 1]);
    std::sort(mapped.begin(), mapped.end());
    REQUIRE(degree_count_recover(h, 8, led) == mapped);
  }
}

TEST_CASE("exact maximum clique") {
  SECTION("fixed instances") {
    Graph empty = Graph::edgeless(5);
    REQUIRE(max_clique(empty) == std::vector<Vertex>{1});
    REQUIRE(max_clique_size(empty) == 1);
    PlantedInstance full = sample_planted(5, 5, 0);
    REQUIRE(max_clique(full.graph) == std::vector<Vertex>{1, 2, 3, 4, 5});
    REQUIRE(max_clique_size(full.graph) == 5);
  }
  SECTION("scale guard") {
    Graph g = Graph::edgeless(65);
    REQUIRE_THROWS_AS(max_clique(g), infeasible_scale_error);
  }
  SECTION("postconditions on random graphs") {
    for (Seed seed = 0; seed < 12; ++seed) {
      Graph g = sample_er(28, seed);
      std::vector<Vertex> c = max_clique(g);
      INFO("seed=" << seed);
      REQUIRE(is_maximal_clique(g, c));
      REQUIRE(c.size() == max_clique_size(g));
      REQUIRE(std::is_sorted(c.begin(), c.end()));
    }
  }
  SECTION("finds a planted clique that dominates the noise") {
    std::uint64_t hits = 0;
    for (Seed seed = 0; seed < 10; ++seed) {
      PlantedInstance inst = sample_planted(32, 12, seed);
      if (max_clique(inst.graph) == inst.clique) ++hits;
    }
    REQUIRE(hits >= 8);
  }
}

TEST_CASE("subgraph census detector") {
  WorkspaceLedger led;
  SECTION("complete graph at n=16 with eps=0.5 wants size 10") {
    PlantedInstance inst = sample_planted(16, 16, 0);
    DetectionReport r = exhaustive_detect(inst.graph, 0.5, 12, led);
    REQUIRE(r.threshold == 10.0);
    REQUIRE(r.verdict == DetectionVerdict::planted);
    Graph g = Graph::edgeless(16);
    DetectionReport r0 = exhaustive_detect(g, 0.5, 12, led);
    REQUIRE(r0.statistic == 1.0);
    REQUIRE(r0.verdict == DetectionVerdict::null_model);
  }
  SECTION("cap guards the witness size") {
    Graph g = Graph::edgeless(4096);
    REQUIRE_THROWS_AS(exhaustive_detect(g, 0.1, 12, led),
                      infeasible_scale_error);
    REQUIRE_THROWS_AS(exhaustive_detect(g, 0.0, 64, led),
                      invalid_parameter_error);
  }
  SECTION("agrees with the exact clique number") {
    for (Seed seed = 0; seed < 8; ++seed) {
      Graph g = sample_er(16, seed);
      DetectionReport r = exhaustive_detect(g, 0.5, 12, led);
      const std::uint64_t omega = max_clique_size(g);
      REQUIRE((r.verdict == DetectionVerdict::planted) == (omega >= 10));
      // statistic stops growing once the witness size is reached
      REQUIRE(r.statistic ==
              static_cast<double>(std::min<std::uint64_t>(omega, 10)));
    }
  }
}

TEST_CASE("detector factory") {
  PlantedInstance inst = sample_planted(10, 10, 0);
  REQUIRE(max_clique_detector(0)(inst.graph));
  REQUIRE(max_clique_detector(10)(inst.graph));
  REQUIRE_FALSE(max_clique_detector(11)(inst.graph));
  Graph g = Graph::edgeless(10);
  REQUIRE_FALSE(max_clique_detector(2)(g));
}

TEST_CASE("vertex-removal reduction") {
  WorkspaceLedger led;
  SECTION("complete graph keeps every vertex") {
    // removing non-neighbours of any v leaves an empty remnant
    PlantedInstance inst = sample_planted(10, 10, 0);
    std::vector<Vertex> out =
        alon_reduction_recover(inst.graph, max_clique_detector(2), led);
    REQUIRE(out.size() == 10);
  }
  SECTION("clique members leave no clique remnant behind") {
    for (Seed seed = 0; seed < 6; ++seed) {
      PlantedInstance inst = sample_planted(64, 32, seed);
      std::vector<Vertex> out =
          alon_reduction_recover(inst.graph, max_clique_detector(8), led);
      // a member's non-neighbours are all noise, so the remnant clique stays
      // under 8; a non-member leaves about half the plant intact
      std::vector<Vertex> inter;
      std::set_intersection(out.begin(), out.end(), inst.clique.begin(),
                            inst.clique.end(), std::back_inserter(inter));
      INFO("seed=" << seed << " emitted=" << out.size()
                   << " overlap=" << inter.size());
      REQUIRE(inter.size() == inst.clique.size());
      REQUIRE(out.size() <= inst.clique.size() + 2);
    }
  }
  SECTION("ledger drains back to zero") {
    PlantedInstance inst = sample_planted(32, 16, 1);
    WorkspaceLedger fresh;
    alon_reduction_recover(inst.graph, max_clique_detector(4), fresh);
    REQUIRE(fresh.current_bits() == 0);
    REQUIRE(fresh.open_frames() == 0);
    REQUIRE(fresh.peak_bits() > 0);
  }
}
