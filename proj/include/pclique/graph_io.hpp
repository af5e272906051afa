#pragma once

// PCG1 container: "PCG1" magic, u64 LE vertex count, u8 flags (bit0 = ground
// truth present), optional u64 LE k followed by k sorted u64 LE vertex ids,
// then ceil(pairs/8) bytes of adjacency bits. Bit 0 of byte 0 is the least
// significant bit and corresponds to pair (1,2).

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace pclique {

struct StoredInstance {
  Graph graph;
  std::optional<std::vector<Vertex>> truth;
};

namespace detail {

inline void put_u64(std::string& out, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

inline std::uint64_t get_u64(const std::string& in, std::size_t at) {
  std::uint64_t x = 0;
  for (int i = 0; i < 8; ++i)
    x |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[at + i])) << (8 * i);
  return x;
}

inline void validate_truth(const Graph& g, const std::vector<Vertex>& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 1 || ids[i] > g.vertex_count())
      throw format_error("truth vertex id out of range");
    if (i > 0 && ids[i] <= ids[i - 1])
      throw format_error("truth ids must be strictly increasing");
  }
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (!g.edge(ids[i], ids[j]))
        throw format_error("truth set is not a clique in the stored graph");
}

}  // namespace detail

inline std::string encode_graph(const Graph& g,
                                const std::optional<std::vector<Vertex>>& truth) {
  if (truth) detail::validate_truth(g, *truth);
  std::string out = "PCG1";
  detail::put_u64(out, g.vertex_count());
  out.push_back(truth ? 1 : 0);
  if (truth) {
    detail::put_u64(out, truth->size());
    for (Vertex v : *truth) detail::put_u64(out, v);
  }
  const std::uint64_t nbytes = (g.pair_count() + 7) / 8;
  for (std::uint64_t b = 0; b < nbytes; ++b)
    out.push_back(static_cast<char>((g.words()[b >> 3] >> (8 * (b & 7))) & 0xff));
  return out;
}

inline StoredInstance decode_graph(const std::string& bytes) {
  if (bytes.size() < 13 || bytes.compare(0, 4, "PCG1") != 0)
    throw format_error("not a PCG1 file");
  const std::uint64_t n = detail::get_u64(bytes, 4);
  if (n > (1ull << 32)) throw format_error("vertex count implausible");
  const unsigned flags = static_cast<unsigned char>(bytes[12]);
  if (flags > 1) throw format_error("unknown flag bits set");
  std::size_t at = 13;

  std::optional<std::vector<Vertex>> truth;
  if (flags & 1) {
    if (bytes.size() < at + 8) throw format_error("truncated truth header");
    const std::uint64_t k = detail::get_u64(bytes, at);
    at += 8;
    if (k < 1 || k > n) throw format_error("truth size inconsistent with vertex count");
    if (bytes.size() < at + 8 * k) throw format_error("truncated truth ids");
    std::vector<Vertex> ids(k);
    for (std::uint64_t i = 0; i < k; ++i, at += 8) ids[i] = detail::get_u64(bytes, at);
    truth = std::move(ids);
  }

  const std::uint64_t pairs = n * (n - 1) / 2;
  const std::uint64_t nbytes = (pairs + 7) / 8;
  if (bytes.size() != at + nbytes)
    throw format_error("adjacency payload has wrong length");
  std::vector<std::uint64_t> words((pairs + 63) / 64, 0);
  for (std::uint64_t b = 0; b < nbytes; ++b)
    words[b >> 3] |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[at + b]))
                     << (8 * (b & 7));

  StoredInstance inst;
  inst.graph = Graph::from_bits(n, std::move(words));
  if (truth) {
    detail::validate_truth(inst.graph, *truth);
    inst.truth = std::move(truth);
  }
  return inst;
}

inline void write_graph(const std::string& path, const Graph& g,
                        const std::optional<std::vector<Vertex>>& truth = std::nullopt) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw format_error("cannot open " + path + " for writing");
  const std::string bytes = encode_graph(g, truth);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw format_error("write failed: " + path);
}

inline StoredInstance read_graph(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw format_error("cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return decode_graph(bytes);
}

}  // namespace pclique
