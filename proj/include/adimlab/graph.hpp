#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "adimlab/error.hpp"
#include "adimlab/vertex_set.hpp"

namespace adimlab {

using Edge = std::pair<Vertex, Vertex>;

/// Shortest-path length, or the dedicated infinite value for vertices in
/// different components.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::size_t hops) : finite_(true), hops_(hops) {}
  static constexpr Distance infinite() { return Distance(Tag{}); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }

  constexpr std::size_t hops() const {
    if (!finite_) throw Error(ErrorCode::BadParameter, "infinite distance has no hop count");
    return hops_;
  }

  /// min(d, t); infinite saturates to t.
  constexpr std::size_t truncated(std::size_t t) const { return finite_ ? std::min(hops_, t) : t; }

  friend constexpr bool operator==(const Distance&, const Distance&) = default;

 private:
  struct Tag {};
  constexpr explicit Distance(Tag) : finite_(false), hops_(0) {}

  bool finite_ = true;
  std::size_t hops_ = 0;
};

/// Immutable simple graph on vertices 0..n-1 stored as open-neighbourhood rows.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const {
    check_vertex(v);
    return rows_[v];
  }

  VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
  }

  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(order());
    for (Vertex v = 0; v < order(); ++v) d[v] = rows_[v].size();
    return d;
  }

  std::size_t max_degree() const {
    std::size_t m = 0;
    for (const auto& r : rows_) m = std::max(m, r.size());
    return m;
  }

  std::size_t min_degree() const {
    if (rows_.empty()) return 0;
    std::size_t m = rows_.front().size();
    for (const auto& r : rows_) m = std::min(m, r.size());
    return m;
  }

  VertexSet vertices() const { return VertexSet::full(order()); }

  /// Edges (u, v) with u < v, ascending.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : rows_[u])
        if (v > u) out.emplace_back(u, v);
    return out;
  }

  const std::string& name() const noexcept { return name_; }
  Graph with_name(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
  }

  /// Structural equality; the label is ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

  static Graph from_edge_list(std::size_t n, const std::vector<Edge>& edges, std::string name = {}) {
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n)
        throw Error(ErrorCode::OutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                               ") has an endpoint >= n=" + std::to_string(n));
      if (u == v) throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(u));
      rows[u].insert(v);
      rows[v].insert(u);
    }
    return Graph(std::move(rows), std::move(name));
  }

  /// Rows must already be symmetric and loop-free; validated.
  static Graph from_rows(std::vector<VertexSet> rows, std::string name = {}) {
    const std::size_t n = rows.size();
    for (Vertex u = 0; u < n; ++u) {
      if (rows[u].universe() != n) throw Error(ErrorCode::BadParameter, "row universe differs from order");
      if (rows[u].contains(u)) throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(u));
      for (Vertex v : rows[u])
        if (!rows[v].contains(u)) throw Error(ErrorCode::BadParameter, "asymmetric adjacency rows");
    }
    return Graph(std::move(rows), std::move(name));
  }

 private:
  Graph(std::vector<VertexSet> rows, std::string name) : rows_(std::move(rows)), name_(std::move(name)) {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.size();
    edge_count_ = twice / 2;
  }

  void check_vertex(Vertex v) const {
    if (v >= order())
      throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " >= n=" + std::to_string(order()));
  }

  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
  std::string name_;
};

inline Graph from_edge_list(std::size_t n, const std::vector<Edge>& edges) {
  return Graph::from_edge_list(n, edges);
}

// Plain edge-list text: "n m" then m lines "u v", 0-indexed.

inline Graph read_edge_list(std::istream& in) {
  std::size_t n = 0;
  std::size_t m = 0;
  if (!(in >> n >> m)) throw Error(ErrorCode::ParseError, "edge list must start with \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Vertex u = 0;
    Vertex v = 0;
    if (!(in >> u >> v))
      throw Error(ErrorCode::ParseError, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

// Operations.

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> rows;
  rows.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexSet r = g.neighbors(v).complement();
    r.erase(v);
    rows.push_back(std::move(r));
  }
  return Graph::from_rows(std::move(rows));
}

namespace detail {

inline std::vector<Edge> shifted_edges(const Graph& g, std::size_t offset) {
  std::vector<Edge> out = g.edges();
  for (auto& [u, v] : out) {
    u += offset;
    v += offset;
  }
  return out;
}

}  // namespace detail

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  auto shifted = detail::shifted_edges(h, g.order());
  edges.insert(edges.end(), shifted.begin(), shifted.end());
  return Graph::from_edge_list(g.order() + h.order(), edges);
}

/// G's vertices keep 0..n1-1, H's are shifted by n1, every cross pair is joined.
inline Graph join(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  auto shifted = detail::shifted_edges(h, g.order());
  edges.insert(edges.end(), shifted.begin(), shifted.end());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < h.order(); ++v) edges.emplace_back(u, g.order() + v);
  return Graph::from_edge_list(g.order() + h.order(), edges);
}

/// K1 + H with the apex as vertex 0 and H shifted by one.
inline Graph cone(const Graph& h) {
  return join(Graph::from_edge_list(1, {}), h);
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> order = keep.to_vector();
  std::vector<std::size_t> index(g.order(), g.order());
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v)) edges.emplace_back(index[u], index[v]);
  return Graph::from_edge_list(order.size(), edges);
}

// Distances.

inline std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  const std::size_t n = g.order();
  if (source >= n) throw Error(ErrorCode::OutOfRange, "source " + std::to_string(source) + " >= n");
  std::vector<Distance> dist(n, Distance::infinite());
  std::queue<Vertex> queue;
  dist[source] = Distance(0);
  queue.push(source);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    const std::size_t next = dist[u].hops() + 1;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w].is_infinite()) {
        dist[w] = Distance(next);
        queue.push(w);
      }
    }
  }
  return dist;
}

inline std::vector<std::vector<Distance>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<Distance>> d;
  d.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

/// Diameter, or nullopt ("unbounded") when the graph is disconnected.
inline std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (const Distance& d : bfs_distances(g, v)) {
      if (d.is_infinite()) return std::nullopt;
      best = std::max(best, d.hops());
    }
  }
  return best;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> comps;
  VertexSet seen(n);
  for (Vertex s = 0; s < n; ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(n);
    VertexSet frontier = VertexSet::of(n, {s});
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(n);
      for (Vertex v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
    }
    seen |= comp;
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

/// Length of a shortest cycle, or nullopt for forests.
inline std::optional<std::size_t> girth(const Graph& g) {
  std::optional<std::size_t> best;
  const std::size_t n = g.order();
  for (Vertex s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, n + 1);
    std::vector<Vertex> parent(n, n);
    std::queue<Vertex> queue;
    dist[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == n + 1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (parent[u] != w) {
          const std::size_t len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

// Twins.

enum class TwinKind { Singleton, TrueTwin, FalseTwin };

/// Twin classes of a graph; u and v share a class iff N(u)-{v} = N(v)-{u}.
struct TwinPartition {
  std::vector<VertexSet> classes;
  std::vector<TwinKind> kinds;

  /// Index of the class holding v.
  std::size_t class_of(Vertex v) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (classes[i].contains(v)) return i;
    throw Error(ErrorCode::OutOfRange, "vertex not covered by the partition");
  }

  bool twins_free() const {
    return std::all_of(kinds.begin(), kinds.end(), [](TwinKind k) { return k == TwinKind::Singleton; });
  }
};

inline bool are_twins(const Graph& g, Vertex u, Vertex v) {
  VertexSet nu = g.neighbors(u);
  VertexSet nv = g.neighbors(v);
  nu.erase(v);
  nv.erase(u);
  return nu == nv;
}

inline TwinPartition twin_partition(const Graph& g) {
  // Twinness is an equivalence relation, so the first member of each class is a
  // valid representative to compare against.
  const std::size_t n = g.order();
  TwinPartition p;
  std::vector<bool> placed(n, false);
  for (Vertex u = 0; u < n; ++u) {
    if (placed[u]) continue;
    VertexSet cls = VertexSet::of(n, {u});
    placed[u] = true;
    for (Vertex v = u + 1; v < n; ++v) {
      if (!placed[v] && are_twins(g, u, v)) {
        cls.insert(v);
        placed[v] = true;
      }
    }
    TwinKind kind = TwinKind::Singleton;
    if (cls.size() > 1) {
      const Vertex other = *std::next(cls.begin());
      kind = g.adjacent(u, other) ? TwinKind::TrueTwin : TwinKind::FalseTwin;
    }
    p.classes.push_back(std::move(cls));
    p.kinds.push_back(kind);
  }
  return p;
}

inline std::string_view to_string(TwinKind k) {
  switch (k) {
    case TwinKind::Singleton: return "singleton";
    case TwinKind::TrueTwin: return "true-twin";
    case TwinKind::FalseTwin: return "false-twin";
  }
  return "?";
}

}  // namespace adimlab
