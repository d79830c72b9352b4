#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "adimlab/error.hpp"
#include "adimlab/graph.hpp"
#include "adimlab/vertex_set.hpp"

namespace adimlab {

inline void check_level(std::size_t t) {
  if (t < 1) throw Error(ErrorCode::BadParameter, "truncation level must be >= 1");
}

inline std::size_t truncated_distance(const Graph& g, std::size_t t, Vertex x, Vertex y) {
  check_level(t);
  if (x >= g.order() || y >= g.order()) throw Error(ErrorCode::OutOfRange, "vertex outside graph");
  return bfs_distances(g, x)[y].truncated(t);
}

/// Vertices z with d_t(x, z) != d_t(y, z). Always contains x and y.
inline VertexSet distinguishing_set(const Graph& g, std::size_t t, Vertex x, Vertex y) {
  check_level(t);
  const std::size_t n = g.order();
  if (x >= n || y >= n) throw Error(ErrorCode::OutOfRange, "vertex outside graph");
  if (x == y) throw Error(ErrorCode::SamePair, "distinguishing set needs two distinct vertices");
  if (t == 2) {
    VertexSet s = g.neighbors(x) ^ g.neighbors(y);
    s.insert(x);
    s.insert(y);
    return s;
  }
  const auto dx = bfs_distances(g, x);
  const auto dy = bfs_distances(g, y);
  VertexSet s(n);
  for (Vertex z = 0; z < n; ++z)
    if (dx[z].truncated(t) != dy[z].truncated(t)) s.insert(z);
  return s;
}

/// Flat position of the unordered pair {x, y}, x < y, among the n(n-1)/2 pairs.
constexpr std::size_t pair_rank(std::size_t n, Vertex x, Vertex y) {
  return x * n - x * (x + 1) / 2 + (y - x - 1);
}

/// For a fixed graph and truncation level, the distinguishing set of every
/// unordered vertex pair. Immutable once built.
class DistinguishTable {
 public:
  struct Pair {
    Vertex x;
    Vertex y;
  };

  const Graph& graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return graph_.order(); }
  std::size_t level() const noexcept { return level_; }
  std::size_t pair_count() const noexcept { return sets_.size(); }

  const VertexSet& set(std::size_t rank) const { return sets_.at(rank); }
  std::size_t set_size(std::size_t rank) const { return sizes_.at(rank); }
  Pair pair(std::size_t rank) const { return pairs_.at(rank); }

  const VertexSet& set(Vertex x, Vertex y) const {
    if (x == y) throw Error(ErrorCode::SamePair, "pair needs two distinct vertices");
    if (x > y) std::swap(x, y);
    if (y >= order()) throw Error(ErrorCode::OutOfRange, "vertex outside graph");
    return sets_[pair_rank(order(), x, y)];
  }

  const std::vector<VertexSet>& sets() const noexcept { return sets_; }
  const std::vector<std::uint32_t>& sizes() const noexcept { return sizes_; }

  static DistinguishTable build(const Graph& g, std::size_t t) {
    check_level(t);
    DistinguishTable table;
    table.graph_ = g;
    table.level_ = t;
    const std::size_t n = g.order();
    const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
    table.sets_.reserve(pairs);
    table.pairs_.reserve(pairs);
    if (t == 2) {
      // Row symmetric differences; z outside {x, y} distinguishes the pair
      // exactly when it is adjacent to one of them.
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
          VertexSet s = g.neighbors(x) ^ g.neighbors(y);
          s.insert(x);
          s.insert(y);
          table.sets_.push_back(std::move(s));
          table.pairs_.push_back({x, y});
        }
    } else {
      std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n));
      for (Vertex x = 0; x < n; ++x) {
        const auto row = bfs_distances(g, x);
        for (Vertex z = 0; z < n; ++z) d[x][z] = row[z].truncated(t);
      }
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
          VertexSet s(n);
          for (Vertex z = 0; z < n; ++z)
            if (d[x][z] != d[y][z]) s.insert(z);
          table.sets_.push_back(std::move(s));
          table.pairs_.push_back({x, y});
        }
    }
    table.sizes_.reserve(pairs);
    for (const auto& s : table.sets_) table.sizes_.push_back(static_cast<std::uint32_t>(s.size()));
    return table;
  }

 private:
  DistinguishTable() = default;

  Graph graph_;
  std::size_t level_ = 2;
  std::vector<VertexSet> sets_;
  std::vector<Pair> pairs_;
  std::vector<std::uint32_t> sizes_;
};

inline DistinguishTable build_table(const Graph& g, std::size_t t = 2) { return DistinguishTable::build(g, t); }

/// Smallest distinguishing-set size over all pairs: the largest k for which a
/// k-generator exists at this level.
inline std::size_t dimensionality(const DistinguishTable& table) {
  if (table.order() < 2) throw Error(ErrorCode::TooSmall, "dimensionality needs at least two vertices");
  return *std::min_element(table.sizes().begin(), table.sizes().end());
}

inline std::size_t dimensionality(const Graph& g, std::size_t t = 2) { return dimensionality(build_table(g, t)); }

/// Union of the distinguishing sets of size exactly k. Every k-basis contains it.
inline VertexSet forced_set(const DistinguishTable& table, std::size_t k) {
  const std::size_t kmax = dimensionality(table);
  if (k > kmax)
    throw Error(ErrorCode::KTooLarge, "k=" + std::to_string(k) + " exceeds dimensionality " + std::to_string(kmax));
  VertexSet forced(table.order());
  for (std::size_t r = 0; r < table.pair_count(); ++r)
    if (table.set_size(r) == k) forced |= table.set(r);
  return forced;
}

/// Closed form for K1 + H: min{C(H), n - Delta(H) + 1}.
inline std::size_t cone_dimensionality(const Graph& h) {
  if (h.order() < 2) throw Error(ErrorCode::TooSmall, "cone formula needs a nontrivial graph");
  return std::min(dimensionality(h), h.order() - h.max_degree() + 1);
}

/// Closed form for G + H with both factors nontrivial:
/// min{C(G), C(H), n1 - Delta(G) + n2 - Delta(H)}.
inline std::size_t join_dimensionality(const Graph& g, const Graph& h) {
  if (g.order() < 2 || h.order() < 2) throw Error(ErrorCode::TooSmall, "join formula needs nontrivial factors");
  return std::min({dimensionality(g), dimensionality(h),
                   g.order() - g.max_degree() + h.order() - h.max_degree()});
}

}  // namespace adimlab
