#pragma once

// graph6: a size header followed by the upper triangle of the adjacency matrix
// in column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits
// per byte, each byte offset by 63. Header is n+63 for n <= 62, otherwise 126
// followed by three 6-bit groups (n < 2^18) or 126 126 and six groups.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "adimlab/error.hpp"
#include "adimlab/graph.hpp"

namespace adimlab {

namespace detail {

inline void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n < (std::size_t{1} << 18)) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else if (n < (std::size_t{1} << 36)) {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    throw Error(ErrorCode::TooLarge, "graph6 cannot encode n >= 2^36");
  }
}

inline int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) throw Error(ErrorCode::MalformedHeader, std::string("byte out of graph6 range: ") + c);
  return v;
}

}  // namespace detail

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  detail::append_size(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    const VertexSet& col = g.neighbors(j);
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (col.contains(i) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

inline Graph from_graph6(std::string_view text) {
  // Tolerate the optional ">>graph6<<" file header and trailing line ends.
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::MalformedHeader, "empty graph6 record");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(detail::sextet(text[0]));
    pos = 1;
  } else {
    const bool eight_byte = text.size() > 1 && text[1] == 126;
    const std::size_t groups = eight_byte ? 6 : 3;
    pos = eight_byte ? 2 : 1;
    if (text.size() < pos + groups) throw Error(ErrorCode::MalformedHeader, "truncated long-form size header");
    for (std::size_t i = 0; i < groups; ++i) n = (n << 6) | static_cast<std::size_t>(detail::sextet(text[pos + i]));
    pos += groups;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes)
    throw Error(ErrorCode::TruncatedPayload, "expected " + std::to_string(bytes) + " payload bytes, got " +
                                                 std::to_string(text.size() - pos));
  if (text.size() - pos > bytes)
    throw Error(ErrorCode::MalformedHeader, "trailing bytes after graph6 payload");

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = detail::sextet(text[pos + bit / 6]);
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = detail::sextet(text[pos + bytes - 1]);
    const int pad = 6 - static_cast<int>(bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw Error(ErrorCode::NonCanonicalPadding, "non-zero padding bits");
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace adimlab
