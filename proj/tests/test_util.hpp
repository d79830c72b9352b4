#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "adimlab/adimlab.hpp"

namespace adimlab::testing {

/// G(n, p) with a caller-owned engine so suites stay reproducible.
inline Graph gnp(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph::from_edge_list(n, e);
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  std::uniform_int_distribution<std::size_t> order(lo, hi);
  std::uniform_real_distribution<double> density(0.15, 0.85);
  const std::size_t n = order(rng);
  return gnp(rng, n, density(rng));
}

/// Floyd-Warshall distances with n as "infinity"; independent of the BFS code.
inline std::vector<std::vector<std::size_t>> floyd_distances(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t inf = n + 1;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (Vertex u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v = 0; v < n; ++v)
      if (g.adjacent(u, v)) d[u][v] = 1;
  }
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (d[u][w] + d[w][v] < d[u][v]) d[u][v] = d[u][w] + d[w][v];
  return d;
}

/// Minimum k-generator size by plain subset enumeration, straight from the
/// definition (truncated distances from Floyd-Warshall). Only for n <= 12.
inline std::size_t definition_adim(const Graph& g, std::size_t k, std::size_t t = 2) {
  const std::size_t n = g.order();
  const auto d = floyd_distances(g);
  auto dt = [&](Vertex a, Vertex b) { return std::min(d[a][b], t); };
  std::size_t best = n + 1;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    bool ok = true;
    for (Vertex x = 0; x < n && ok; ++x)
      for (Vertex y = x + 1; y < n && ok; ++y) {
        std::size_t hits = 0;
        for (Vertex z = 0; z < n; ++z)
          if ((mask >> z & 1U) && dt(x, z) != dt(y, z)) ++hits;
        ok = hits >= k;
      }
    if (ok) best = size;
  }
  return best;
}

inline VertexSet set_of(std::size_t n, std::initializer_list<Vertex> members) { return VertexSet::of(n, members); }

}  // namespace adimlab::testing
