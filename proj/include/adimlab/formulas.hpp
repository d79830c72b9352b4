#pragma once

// Closed-form k-adjacency dimensions for standard families, and the decidable
// criteria for cones K1 + H and joins G + H. Criteria that quantify over every
// basis enumerate all bases; a basis cap aborts with CapExceeded.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adimlab/error.hpp"
#include "adimlab/generators.hpp"
#include "adimlab/graph.hpp"
#include "adimlab/metric.hpp"
#include "adimlab/solver.hpp"
#include "adimlab/vertex_set.hpp"

namespace adimlab {

enum class Family { Path, Cycle, Complete, Empty, CompleteBipartite, Fan, Wheel, Petersen };

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Empty: return "empty";
    case Family::CompleteBipartite: return "bipartite";
    case Family::Fan: return "fan";
    case Family::Wheel: return "wheel";
    case Family::Petersen: return "petersen";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  for (Family f : {Family::Path, Family::Cycle, Family::Complete, Family::Empty, Family::CompleteBipartite,
                   Family::Fan, Family::Wheel, Family::Petersen})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

/// params: {n} for path/cycle/complete/empty/fan/wheel (fan and wheel use the
/// rim order), {r, s} for bipartite, {} for petersen.
struct FormulaQuery {
  Family family = Family::Path;
  std::vector<std::size_t> params;
  std::size_t k = 1;
};

namespace detail {

constexpr std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

/// adim_1 of paths and cycles.
constexpr std::size_t two_fifths(std::size_t n) { return (2 * n + 2) / 5; }

[[noreturn]] inline void refuse(const FormulaQuery& q, const std::string& range) {
  std::string p;
  for (std::size_t i = 0; i < q.params.size(); ++i) p += (i ? "," : "") + std::to_string(q.params[i]);
  throw Error(ErrorCode::OutOfProvenRange, std::string(to_string(q.family)) + "(" + p + "), k=" +
                                               std::to_string(q.k) + ": closed form proven only for " + range);
}

inline std::size_t param(const FormulaQuery& q, std::size_t i, const std::string& range) {
  if (q.params.size() <= i) refuse(q, range);
  return q.params[i];
}

}  // namespace detail

/// Human-readable proven range for a family, listed per k.
inline std::string proven_range(Family f) {
  switch (f) {
    case Family::Path: return "k=1,2 with n>=2; k=3 with n>=4";
    case Family::Cycle: return "k=1 with n>=4; k=2,3,4 with n>=5";
    case Family::Complete:
    case Family::Empty: return "k=1,2 with n>=2";
    case Family::CompleteBipartite: return "k=1,2 with r,s>=1";
    case Family::Fan: return "k=1 with n>=1; k=2 with n>=2; k=3 with n>=4";
    case Family::Wheel: return "k=1,2 with n>=3; k=3,4 with n>=5";
    case Family::Petersen: return "k=1..6";
  }
  return "";
}

/// Closed-form adim_k. Queries outside the proven range throw OutOfProvenRange
/// naming the range; nothing is extrapolated.
inline std::size_t formula_adim(const FormulaQuery& q) {
  using detail::ceil_div;
  using detail::two_fifths;
  const std::string range = proven_range(q.family);
  const std::size_t k = q.k;
  switch (q.family) {
    case Family::Path: {
      const std::size_t n = detail::param(q, 0, range);
      if ((k == 1 || k == 2) && n >= 2) return k == 1 ? two_fifths(n) : ceil_div(n + 1, 2);
      if (k == 3 && n >= 4) return n - (n - 4) / 5;
      break;
    }
    case Family::Cycle: {
      const std::size_t n = detail::param(q, 0, range);
      if (k == 1 && n >= 4) return two_fifths(n);
      if (n >= 5) {
        if (k == 2) return ceil_div(n, 2);
        if (k == 3) return n - n / 5;
        if (k == 4) return n;
      }
      break;
    }
    case Family::Complete:
    case Family::Empty: {
      // Every vertex is in one twin class.
      const std::size_t n = detail::param(q, 0, range);
      if (n >= 2 && (k == 1 || k == 2)) return k == 1 ? n - 1 : n;
      break;
    }
    case Family::CompleteBipartite: {
      const std::size_t r = detail::param(q, 0, range);
      const std::size_t s = detail::param(q, 1, range);
      if (r < 1 || s < 1) break;
      // Each side is a false-twin class; a single-vertex side is a singleton.
      if (k == 1) return r == 1 && s == 1 ? 1 : r + s - 2;
      if (k == 2) return std::min(r, s) == 1 && std::max(r, s) > 1 ? r + s - 1 : r + s;
      break;
    }
    case Family::Fan: {
      const std::size_t n = detail::param(q, 0, range);
      if (k == 1 && n >= 1) {
        if (n == 1) return 1;
        if (n <= 5) return 2;
        if (n == 6) return 3;
        return two_fifths(n);
      }
      if (k == 2 && n >= 2) {
        if (n == 2) return 3;
        if (n <= 5) return 4;
        return ceil_div(n + 1, 2);
      }
      if (k == 3 && n >= 4) return n <= 5 ? 5 : n - (n - 4) / 5;
      break;
    }
    case Family::Wheel: {
      const std::size_t n = detail::param(q, 0, range);
      if (k == 1 && n >= 3) return n == 3 || n == 6 ? 3 : two_fifths(n);
      if (k == 2 && n >= 3) return n <= 6 ? 4 : ceil_div(n, 2);
      if (k == 3 && n >= 5) return n <= 6 ? 5 : n - n / 5;
      if (k == 4 && n >= 5) return n <= 6 ? 6 : n;
      break;
    }
    case Family::Petersen: {
      constexpr std::size_t ladder[] = {3, 4, 7, 8, 9, 10};
      if (k >= 1 && k <= 6) return ladder[k - 1];
      break;
    }
  }
  detail::refuse(q, range);
}

/// The graph a query describes.
inline Graph family_graph(const FormulaQuery& q) {
  auto p = [&](std::size_t i) {
    if (q.params.size() <= i) throw Error(ErrorCode::BadParameter, "missing family parameter");
    return q.params[i];
  };
  switch (q.family) {
    case Family::Path: return path(p(0));
    case Family::Cycle: return cycle(p(0));
    case Family::Complete: return complete(p(0));
    case Family::Empty: return empty_graph(p(0));
    case Family::CompleteBipartite: return complete_bipartite(p(0), p(1));
    case Family::Fan: return fan(p(0));
    case Family::Wheel: return wheel(p(0));
    case Family::Petersen: return petersen();
  }
  throw Error(ErrorCode::BadParameter, "unknown family");
}

enum class JoinFactor { Complete, Empty };
enum class JoinBase { Path, Cycle };

/// adim_k of K_t + B or N_t + B with B a path or cycle on n vertices, k in {1,2}.
/// Proven for t >= 2 with cycles of order >= 5 or paths of order >= 4, except K_t with
/// order 6 at k=1.
inline std::size_t formula_join_adim(JoinFactor factor, std::size_t t, JoinBase base, std::size_t n, std::size_t k) {
  const bool ok = t >= 2 && (k == 1 || k == 2) && (base == JoinBase::Cycle ? n >= 5 : n >= 4);
  if (!ok)
    throw Error(ErrorCode::OutOfProvenRange,
                "join closed form proven only for t>=2, k=1,2, cycles with n>=5 and paths with n>=4");
  // K_t + C6 and K_t + P6 at k=1 need t+2: each adjacency basis of the order-6 factor
  // has a common neighbour, which the complete factor cannot separate from it.
  if (factor == JoinFactor::Complete && k == 1 && n == 6)
    throw Error(ErrorCode::OutOfProvenRange, "join closed form does not hold for K_t with a 6-vertex cycle or path at k=1");
  if (k == 1) return detail::two_fifths(n) + t - 1;
  return (base == JoinBase::Cycle ? detail::ceil_div(n, 2) : detail::ceil_div(n + 1, 2)) + t;
}

struct CriterionReport {
  std::string criterion;
  bool holds = false;
  /// A basis exhibiting the condition (or, for a failed "for every basis"
  /// premise, a basis that violates it).
  std::optional<VertexSet> witness;
  std::optional<Vertex> witness_vertex;
};

/// min over y of |A - N(y)|: how many members of A the worst vertex misses.
inline std::size_t min_outside_neighborhood(const Graph& g, const VertexSet& a) {
  std::size_t best = a.size();
  for (Vertex y = 0; y < g.order(); ++y) best = std::min(best, (a - g.neighbors(y)).size());
  return best;
}

namespace detail {

inline void require_nontrivial(const Graph& g) {
  if (g.order() < 2) throw Error(ErrorCode::TooSmall, "graph must have at least two vertices");
}

inline void require_k(std::size_t k, std::size_t limit, const std::string& what) {
  if (k < 1) throw Error(ErrorCode::BadParameter, "k must be >= 1");
  if (k > limit)
    throw Error(ErrorCode::KExceedsDimensionality,
                "k=" + std::to_string(k) + " exceeds " + what + " = " + std::to_string(limit));
}

}  // namespace detail

/// adim_k(K1 + H) = adim_k(H) iff some k-basis A of H has |A - N(y)| >= k for
/// every y. The witness is the first such basis in lexicographic order.
inline CriterionReport cone_equality_criterion(const Graph& h, std::size_t k, std::size_t basis_cap = 0) {
  detail::require_nontrivial(h);
  detail::require_k(k, cone_dimensionality(h), "dimensionality of K1+H");
  CriterionReport r{"cone-equality", false, std::nullopt, std::nullopt};
  for (const VertexSet& a : enumerate_bases(build_table(h), k, basis_cap)) {
    if (min_outside_neighborhood(h, a) >= k) {
      r.holds = true;
      r.witness = a;
      return r;
    }
  }
  return r;
}

/// Premise forcing adim_k(K1 + H) = adim_k(H) + 1: every k-basis A has some h
/// with |A - N(h)| = k-1 and none below k-1. When the premise fails the witness
/// is the first basis breaking it.
inline CriterionReport cone_plus_one_criterion(const Graph& h, std::size_t k, std::size_t basis_cap = 0) {
  detail::require_nontrivial(h);
  detail::require_k(k, cone_dimensionality(h), "dimensionality of K1+H");
  CriterionReport r{"cone-plus-one", true, std::nullopt, std::nullopt};
  for (const VertexSet& a : enumerate_bases(build_table(h), k, basis_cap)) {
    if (min_outside_neighborhood(h, a) + 1 != k) {
      r.holds = false;
      r.witness = a;
      r.witness_vertex.reset();
      return r;
    }
    if (!r.witness) {
      r.witness = a;
      for (Vertex y = 0; y < h.order(); ++y)
        if ((a - h.neighbors(y)).size() + 1 == k) {
          r.witness_vertex = y;
          break;
        }
    }
  }
  return r;
}

struct Adim2ConeBound {
  std::size_t bound = 0;  ///< adim_2(H) + 2
  /// A universal vertex of H lying in no 2-basis.
  std::optional<Vertex> universal_outside_bases;
  /// An isolated vertex and a vertex of degree n-2, both in no 2-basis.
  std::optional<std::pair<Vertex, Vertex>> isolated_pair_outside_bases;
  bool equality_forced() const { return universal_outside_bases || isolated_pair_outside_bases; }
};

/// adim_2(K1 + H) <= adim_2(H) + 2, with the two premises that force equality.
inline Adim2ConeBound adim2_upper_cone(const Graph& h, std::size_t basis_cap = 0) {
  detail::require_nontrivial(h);
  const std::size_t n = h.order();
  const auto bases = enumerate_bases(build_table(h), 2, basis_cap);
  VertexSet used(n);
  for (const VertexSet& b : bases) used |= b;
  Adim2ConeBound out;
  out.bound = bases.front().size() + 2;
  for (Vertex x = 0; x < n; ++x)
    if (h.degree(x) == n - 1 && !used.contains(x)) {
      out.universal_outside_bases = x;
      break;
    }
  for (Vertex v = 0; v < n && !out.isolated_pair_outside_bases; ++v) {
    if (h.degree(v) != 0 || used.contains(v)) continue;
    for (Vertex x = 0; x < n; ++x)
      if (h.degree(x) == n - 2 && !used.contains(x)) {
        out.isolated_pair_outside_bases = std::make_pair(v, x);
        break;
      }
  }
  return out;
}

struct JoinBounds {
  std::size_t lower = 0;
  /// adim_k(K1 + G) + adim_k(H); present only for k <= min{C(H), C(K1 + G)}.
  std::optional<std::size_t> upper;
};

/// adim_k(G) + adim_k(H) <= adim_k(G + H) <= adim_k(K1 + G) + adim_k(H).
inline JoinBounds join_bounds(const Graph& g, const Graph& h, std::size_t k, std::uint64_t node_budget = 0) {
  detail::require_nontrivial(g);
  detail::require_nontrivial(h);
  detail::require_k(k, join_dimensionality(g, h), "dimensionality of G+H");
  SolveOptions opts;
  opts.node_budget = node_budget;
  JoinBounds b;
  const std::size_t ah = solve_adim(h, k, opts).dimension;
  b.lower = solve_adim(g, k, opts).dimension + ah;
  if (k <= std::min(dimensionality(h), cone_dimensionality(g)))
    b.upper = solve_adim(cone(g), k, opts).dimension + ah;
  return b;
}

/// adim_k(G + H) = adim_k(G) + adim_k(H) iff k-bases A_G, A_H exist with
/// |(A_G - N(x)) u (A_H - N(y))| >= k for all x in G, y in H. The two parts are
/// disjoint, so the best pair maximizes each side's worst-vertex count
/// independently. The witness is A_G u A_H in G + H indexing (H shifted by |G|).
inline CriterionReport join_equality_criterion(const Graph& g, const Graph& h, std::size_t k,
                                               std::size_t basis_cap = 0) {
  detail::require_nontrivial(g);
  detail::require_nontrivial(h);
  detail::require_k(k, join_dimensionality(g, h), "dimensionality of G+H");
  auto best_side = [&](const Graph& x) {
    std::pair<std::size_t, VertexSet> best{0, VertexSet(x.order())};
    bool first = true;
    for (const VertexSet& a : enumerate_bases(build_table(x), k, basis_cap)) {
      const std::size_t m = min_outside_neighborhood(x, a);
      if (first || m > best.first) best = {m, a};
      first = false;
    }
    return best;
  };
  const auto [mg, ag] = best_side(g);
  const auto [mh, ah] = best_side(h);
  CriterionReport r{"join-equality", mg + mh >= k, std::nullopt, std::nullopt};
  if (r.holds) {
    VertexSet w(g.order() + h.order());
    for (Vertex v : ag) w.insert(v);
    for (Vertex v : ah) w.insert(g.order() + v);
    r.witness = w;
  }
  return r;
}

/// adim_k(G) = n iff the forced set C_k(G) is all of V. Decided without search;
/// the witness is the forced set.
inline CriterionReport full_dimension_criteria(const Graph& g, std::size_t k) {
  detail::require_nontrivial(g);
  const VertexSet forced = forced_set(build_table(g), k);
  return {"full-dimension-k", forced.size() == g.order(), forced, std::nullopt};
}

/// adim_2(G) = n iff every vertex has a twin. A witness vertex is a singleton
/// twin class when the criterion fails.
inline CriterionReport full_dimension_twins(const Graph& g) {
  detail::require_nontrivial(g);
  const TwinPartition tp = twin_partition(g);
  CriterionReport r{"full-dimension-twins", true, std::nullopt, std::nullopt};
  for (Vertex v = 0; v < g.order(); ++v)
    if (tp.classes[tp.class_of(v)].size() == 1) {
      r.holds = false;
      r.witness_vertex = v;
      break;
    }
  return r;
}

/// adim_2(K1 + H) = n + 1 iff H has a universal vertex and every
/// non-universal vertex has a twin in H.
inline CriterionReport cone_full_dimension(const Graph& h) {
  detail::require_nontrivial(h);
  const std::size_t n = h.order();
  const TwinPartition tp = twin_partition(h);
  CriterionReport r{"cone-full-dimension", h.max_degree() == n - 1, std::nullopt, std::nullopt};
  for (Vertex v = 0; v < n && r.holds; ++v)
    if (h.degree(v) < n - 1 && tp.classes[tp.class_of(v)].size() == 1) {
      r.holds = false;
      r.witness_vertex = v;
    }
  return r;
}

/// adim_2(G + H) = n1 + n2 iff every vertex of both factors has a twin in its
/// factor, or both factors have a universal vertex and every non-universal
/// vertex has a twin in its factor.
inline CriterionReport join_full_dimension(const Graph& g, const Graph& h) {
  detail::require_nontrivial(g);
  detail::require_nontrivial(h);
  auto all_twinned = [](const Graph& x, bool skip_universal) {
    const TwinPartition tp = twin_partition(x);
    for (Vertex v = 0; v < x.order(); ++v) {
      if (skip_universal && x.degree(v) == x.order() - 1) continue;
      if (tp.classes[tp.class_of(v)].size() == 1) return false;
    }
    return true;
  };
  const bool a = all_twinned(g, false) && all_twinned(h, false);
  const bool b = g.max_degree() == g.order() - 1 && h.max_degree() == h.order() - 1 && all_twinned(g, true) &&
                 all_twinned(h, true);
  return {"join-full-dimension", a || b, std::nullopt, std::nullopt};
}

/// C(T) for a tree on at least three vertices: 2 when two leaves share a
/// support vertex, otherwise 3.
inline std::size_t tree_dimensionality(const Graph& t) {
  if (t.order() < 3) throw Error(ErrorCode::TooSmall, "tree dimensionality needs at least three vertices");
  if (!is_tree(t)) throw Error(ErrorCode::NotATree, "graph is not a tree");
  std::vector<std::size_t> leaves_at(t.order(), 0);
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.degree(v) == 1)
      for (Vertex s : t.neighbors(v))
        if (++leaves_at[s] >= 2) return 2;
  return 3;
}

}  // namespace adimlab
