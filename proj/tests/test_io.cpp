#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include <pclique/graph.hpp>
#include <pclique/graph_io.hpp>

using namespace pclique;

namespace {

std::string le64(std::uint64_t x) {
  std::string s;
  for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
  return s;
}

}  // namespace

TEST_CASE("encoding matches the frozen byte layout") {
  // n=3 path graph 1-2-3: pair bits (1,2)=1, (1,3)=0, (2,3)=1 -> byte 0x05
  Graph g = Graph::edgeless(3);
  g.set_edge(1, 2);
  g.set_edge(2, 3);
  const std::string expected = std::string("PCG1") + le64(3) +
                               std::string(1, '\0') + std::string(1, '\x05');
  REQUIRE(encode_graph(g, std::nullopt) == expected);

  SECTION("truth section layout") {
    Graph k2 = Graph::edgeless(3);
    k2.set_edge(1, 3);
    const std::string with_truth = std::string("PCG1") + le64(3) +
                                   std::string(1, '\x01') + le64(2) + le64(1) +
                                   le64(3) + std::string(1, '\x02');
    REQUIRE(encode_graph(k2, std::vector<Vertex>{1, 3}) == with_truth);
  }
  SECTION("n=1 has an empty adjacency payload") {
    const std::string bytes = encode_graph(Graph::edgeless(1), std::nullopt);
    REQUIRE(bytes.size() == 13);
    REQUIRE(decode_graph(bytes).graph.vertex_count() == 1);
  }
}

TEST_CASE("round trips are byte exact") {
  for (Seed s = 0; s < 8; ++s) {
    PlantedInstance inst = sample_planted(17, 5, s);
    const std::string bytes = encode_graph(inst.graph, inst.clique);
    StoredInstance back = decode_graph(bytes);
    REQUIRE(back.graph.words() == inst.graph.words());
    REQUIRE(back.truth.has_value());
    REQUIRE(*back.truth == inst.clique);
    REQUIRE(encode_graph(back.graph, back.truth) == bytes);
  }
  SECTION("without truth") {
    Graph g = sample_er(65, 3);
    const std::string bytes = encode_graph(g, std::nullopt);
    StoredInstance back = decode_graph(bytes);
    REQUIRE_FALSE(back.truth.has_value());
    REQUIRE(back.graph.words() == g.words());
    REQUIRE(encode_graph(back.graph, std::nullopt) == bytes);
  }
  SECTION("through a file") {
    PlantedInstance inst = sample_planted(33, 6, 42);
    write_graph("io_roundtrip_tmp.pcg", inst.graph, inst.clique);
    StoredInstance back = read_graph("io_roundtrip_tmp.pcg");
    REQUIRE(back.graph.words() == inst.graph.words());
    REQUIRE(*back.truth == inst.clique);
  }
}

TEST_CASE("malformed streams are rejected") {
  PlantedInstance inst = sample_planted(9, 3, 1);
  const std::string good = encode_graph(inst.graph, inst.clique);

  SECTION("wrong magic") {
    std::string bad = good;
    bad[0] = 'X';
    REQUIRE_THROWS_AS(decode_graph(bad), format_error);
  }
  SECTION("too short for a header") {
    REQUIRE_THROWS_AS(decode_graph("PCG1"), format_error);
    REQUIRE_THROWS_AS(decode_graph(""), format_error);
  }
  SECTION("unknown flag bits") {
    std::string bad = good;
    bad[12] = '\x02';
    REQUIRE_THROWS_AS(decode_graph(bad), format_error);
  }
  SECTION("truncated and padded payloads") {
    REQUIRE_THROWS_AS(decode_graph(good.substr(0, good.size() - 1)), format_error);
    REQUIRE_THROWS_AS(decode_graph(good + '\0'), format_error);
  }
  SECTION("truncated truth ids") {
    const std::string prefix = std::string("PCG1") + le64(9) +
                               std::string(1, '\x01') + le64(3) + le64(1);
    REQUIRE_THROWS_AS(decode_graph(prefix), format_error);
  }
  SECTION("truth size out of range") {
    std::string bad = std::string("PCG1") + le64(9) + std::string(1, '\x01') +
                      le64(0) + std::string(5, '\0');
    REQUIRE_THROWS_AS(decode_graph(bad), format_error);
    std::string bad2 = std::string("PCG1") + le64(9) + std::string(1, '\x01') +
                       le64(10) + std::string(85, '\0');
    REQUIRE_THROWS_AS(decode_graph(bad2), format_error);
  }
  SECTION("truth ids must be sorted, distinct, in range") {
    Graph g = Graph::edgeless(4);
    g.set_edge(1, 2);
    REQUIRE_THROWS_AS(encode_graph(g, std::vector<Vertex>{2, 1}), format_error);
    REQUIRE_THROWS_AS(encode_graph(g, std::vector<Vertex>{1, 1}), format_error);
    REQUIRE_THROWS_AS(encode_graph(g, std::vector<Vertex>{1, 5}), format_error);
  }
  SECTION("truth must be a clique in the stored graph") {
    Graph g = Graph::edgeless(4);
    g.set_edge(1, 2);
    REQUIRE_THROWS_AS(encode_graph(g, std::vector<Vertex>{1, 2, 3}), format_error);
    // and on the decode side: valid layout, truth pair (1,3) missing
    std::string bad = std::string("PCG1") + le64(3) + std::string(1, '\x01') +
                      le64(2) + le64(1) + le64(3) + std::string(1, '\x01');
    REQUIRE_THROWS_AS(decode_graph(bad), format_error);
  }
  SECTION("implausible vertex count is rejected before allocation") {
    std::string bad = std::string("PCG1") + le64(1ull << 40) + std::string(1, '\0');
    REQUIRE_THROWS_AS(decode_graph(bad), format_error);
  }
  SECTION("missing file") {
    REQUIRE_THROWS_AS(read_graph("definitely_not_here.pcg"), format_error);
  }
}
