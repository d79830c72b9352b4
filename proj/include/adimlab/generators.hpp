#pragma once

#include <bit>
#include <cstddef>
#include <string>
#include <vector>

#include "adimlab/error.hpp"
#include "adimlab/graph.hpp"

namespace adimlab {

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParameter, what);
}

}  // namespace detail

inline Graph empty_graph(std::size_t n) {
  return Graph::from_edge_list(n, {}, "N" + std::to_string(n));
}

inline Graph path(std::size_t n) {
  detail::require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e, "P" + std::to_string(n));
}

inline Graph cycle(std::size_t n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, e, "C" + std::to_string(n));
}

inline Graph complete(std::size_t n) {
  detail::require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edge_list(n, e, "K" + std::to_string(n));
}

/// Parts {0..r-1} and {r..r+s-1}.
inline Graph complete_bipartite(std::size_t r, std::size_t s) {
  detail::require(r >= 1 && s >= 1, "complete bipartite graph needs r, s >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < r; ++i)
    for (Vertex j = 0; j < s; ++j) e.emplace_back(i, r + j);
  return Graph::from_edge_list(r + s, e, "K" + std::to_string(r) + "," + std::to_string(s));
}

/// K_{1,n}, centre 0.
inline Graph star(std::size_t n) { return complete_bipartite(1, n).with_name("S" + std::to_string(n)); }

inline Graph hypercube(std::size_t r) {
  detail::require(r >= 1 && r <= 20, "hypercube needs 1 <= r <= 20");
  const std::size_t n = std::size_t{1} << r;
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (std::size_t b = 0; b < r; ++b) {
      const Vertex v = u ^ (std::size_t{1} << b);
      if (u < v) e.emplace_back(u, v);
    }
  return Graph::from_edge_list(n, e, "Q" + std::to_string(r));
}

/// Outer 5-cycle 0..4, spokes i -> i+5, inner pentagram on 5..9.
inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edge_list(10, e, "Petersen");
}

/// K1 + P_n with the apex as vertex 0.
inline Graph fan(std::size_t n) {
  detail::require(n >= 1, "fan needs n >= 1");
  return cone(path(n)).with_name("F1," + std::to_string(n));
}

/// K1 + C_n with the hub as vertex 0.
inline Graph wheel(std::size_t n) {
  detail::require(n >= 3, "wheel needs n >= 3");
  return cone(cycle(n)).with_name("W1," + std::to_string(n));
}

// Fixture graphs. Comments use 1-based vertex labels; the graphs use
// 0-based indices.

/// A 5-cycle v1 v2 v3 v4 u1 with a path u1 u2 ... ut hanging off u1.
/// v1..v4 -> 0..3, u1..ut -> 4..3+t. Its k-metric dimension is k+1 for k <= 4.
inline Graph fig1_graph(std::size_t t) {
  detail::require(t >= 1, "fig1 graph needs t >= 1");
  std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 3}};
  for (Vertex i = 0; i + 1 < t; ++i) e.emplace_back(4 + i, 5 + i);
  return Graph::from_edge_list(4 + t, e, "Fig1(t=" + std::to_string(t) + ")");
}

enum class HubTopology { Path, Cycle };

/// Four fans K1 + P5 glued along their apexes. Block b has apex 6b joined to
/// 6b+1..6b+5, which form a path. The apexes 0, 6, 12, 18 form a path as drawn;
/// closing them into a 4-cycle gives the same dim_k and adim_k for k <= 3.
inline Graph fig2_graph(HubTopology hubs = HubTopology::Path) {
  std::vector<Edge> e;
  for (Vertex b = 0; b < 4; ++b) {
    const Vertex hub = 6 * b;
    for (Vertex i = 1; i <= 5; ++i) e.emplace_back(hub, hub + i);
    for (Vertex i = 1; i < 5; ++i) e.emplace_back(hub + i, hub + i + 1);
    if (b > 0) e.emplace_back(hub - 6, hub);
  }
  if (hubs == HubTopology::Cycle) e.emplace_back(18, 0);
  return Graph::from_edge_list(24, e, hubs == HubTopology::Path ? "Fig2" : "Fig2-hub-cycle");
}

/// v1 joined to v2..v5; v6, v7, v8, v9 joined to {v2,v3}, {v3,v4}, {v4,v5},
/// {v2,v5}. v_i -> i-1. Its only 2-adjacency basis is {v2,v3,v4,v5}.
inline Graph fig3_graph() {
  return Graph::from_edge_list(9,
                               {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                {5, 1}, {5, 2}, {6, 2}, {6, 3}, {7, 3}, {7, 4}, {8, 1}, {8, 4}},
                               "Fig3");
}

/// Nine vertices labelled 1..9 (-> 0..8) with six 3-adjacency bases,
/// one of them {1,2,3,4,5,8,9}.
inline Graph fig4_graph() {
  const std::vector<Edge> one_based = {{1, 2}, {1, 3}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 4}, {2, 6},
                                       {2, 7}, {3, 4}, {3, 5}, {3, 8}, {4, 5}, {4, 6}, {4, 8}, {5, 6},
                                       {5, 9}, {6, 9}};
  std::vector<Edge> e;
  for (const auto& [u, v] : one_based) e.emplace_back(u - 1, v - 1);
  return Graph::from_edge_list(9, e, "Fig4");
}

/// Path 1-2-...-9 plus chords 1-{3,5,6,7,8,9} and 2-{6,7,8} (labels -> 0..8).
/// Its only 3-adjacency basis is {2,3,5,6,7,9}, contained in N(1).
inline Graph fig5_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < 9; ++i) e.emplace_back(i, i + 1);
  for (Vertex v : {3, 5, 6, 7, 8, 9}) e.emplace_back(0, v - 1);
  for (Vertex v : {6, 7, 8}) e.emplace_back(1, v - 1);
  return Graph::from_edge_list(9, e, "Fig5");
}

}  // namespace adimlab
