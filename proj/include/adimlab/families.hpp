#pragma once

// G_B(G): every graph that keeps G's edges at the vertices of B and chooses the
// edges among the free vertices V - B arbitrarily. Member `mask` sets free pair
// i (pairs of free vertices in lexicographic order) when bit i is set.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "adimlab/error.hpp"
#include "adimlab/graph.hpp"
#include "adimlab/metric.hpp"
#include "adimlab/solver.hpp"
#include "adimlab/vertex_set.hpp"

namespace adimlab {

class FamilySpec {
 public:
  FamilySpec(Graph g, VertexSet b) : graph_(std::move(g)), basis_(std::move(b)) {
    if (basis_.universe() != graph_.order())
      throw Error(ErrorCode::OutOfRange, "basis universe differs from the graph order");
    free_ = basis_.complement().to_vector();
    for (std::size_t i = 0; i < free_.size(); ++i)
      for (std::size_t j = i + 1; j < free_.size(); ++j) pairs_.emplace_back(free_[i], free_[j]);
    for (const auto& [u, v] : graph_.edges())
      if (basis_.contains(u) || basis_.contains(v)) fixed_.emplace_back(u, v);
  }

  const Graph& graph() const noexcept { return graph_; }
  const VertexSet& basis() const noexcept { return basis_; }
  const std::vector<Vertex>& free_vertices() const noexcept { return free_; }
  const std::vector<Edge>& free_pairs() const noexcept { return pairs_; }
  std::size_t free_pair_count() const noexcept { return pairs_.size(); }

  /// 2^(m(m-1)/2) for m free vertices; nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> family_size() const {
    if (pairs_.size() >= 64) return std::nullopt;
    return std::uint64_t{1} << pairs_.size();
  }

  /// Mask of G itself.
  std::uint64_t mask_of_base() const {
    if (pairs_.size() > 64) throw Error(ErrorCode::TooLarge, "more than 64 free pairs");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      if (graph_.adjacent(pairs_[i].first, pairs_[i].second)) m |= std::uint64_t{1} << i;
    return m;
  }

  Graph member(std::uint64_t mask) const {
    if (pairs_.size() > 64) throw Error(ErrorCode::TooLarge, "more than 64 free pairs");
    if (pairs_.size() < 64 && (mask >> pairs_.size()) != 0)
      throw Error(ErrorCode::OutOfRange, "mask has bits beyond the free pairs");
    std::vector<Edge> e = fixed_;
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      if ((mask >> i) & 1) e.push_back(pairs_[i]);
    return Graph::from_edge_list(graph_.order(), e);
  }

 private:
  Graph graph_;
  VertexSet basis_;
  std::vector<Vertex> free_;
  std::vector<Edge> pairs_;
  std::vector<Edge> fixed_;
};

/// Calls f(mask, member) for masks from_mask, from_mask+1, ... up to and
/// excluding to_mask, stopping early when f returns false. Without an explicit
/// end or limit, families with more than 40 free pairs are refused.
inline void for_each_family_member(const FamilySpec& spec, const std::function<bool(std::uint64_t, const Graph&)>& f,
                                   std::optional<std::uint64_t> limit = std::nullopt, std::uint64_t from_mask = 0,
                                   std::optional<std::uint64_t> to_mask = std::nullopt) {
  const std::size_t p = spec.free_pair_count();
  if (p > 40 && !limit && !to_mask)
    throw Error(ErrorCode::LimitRequired,
                std::to_string(p) + " free pairs: pass a limit or a mask range to enumerate this family");
  if (p > 64) throw Error(ErrorCode::TooLarge, "more than 64 free pairs");
  const std::uint64_t end_all = p == 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << p);
  std::uint64_t end = to_mask ? std::min(*to_mask, end_all) : end_all;
  if (limit && from_mask < end && end - from_mask > *limit) end = from_mask + *limit;
  for (std::uint64_t m = from_mask; m < end; ++m)
    if (!f(m, spec.member(m))) return;
}

inline std::vector<Graph> enumerate_family(const Graph& g, const VertexSet& b,
                                           std::optional<std::uint64_t> limit = std::nullopt) {
  const FamilySpec spec(g, b);
  std::vector<Graph> out;
  for_each_family_member(spec, [&](std::uint64_t, const Graph& m) {
    out.push_back(m);
    return true;
  }, limit);
  return out;
}

struct FamilyViolation {
  std::uint64_t mask = 0;
  std::string what;
};

struct FamilyReport {
  std::size_t k = 0;
  VertexSet basis;
  std::size_t base_dimension = 0;
  std::uint64_t members = 0;
  std::size_t min_dimension = std::numeric_limits<std::size_t>::max();
  std::size_t max_dimension = 0;
  /// The rigidity corollary that applied: the exact dimension every member must have.
  std::optional<std::size_t> rigid_dimension;
  std::vector<FamilyViolation> violations;
  bool passed() const { return violations.empty(); }
};

struct FamilyCheckOptions {
  /// Basis to use; defaults to the lexicographically smallest k-basis of G.
  std::optional<VertexSet> basis;
  std::optional<std::uint64_t> limit;
  std::uint64_t from_mask = 0;
  std::optional<std::uint64_t> to_mask;
  std::uint64_t node_budget = 0;
};

/// For a k-basis B of G, checks every member G' of G_B(G): B generates G' and
/// adim_k(G') <= |B|. When adim_k(G) = k+1 with n >= 4, or adim_k(G) = k+2
/// with n >= 7, every member must have exactly that dimension.
inline FamilyReport verify_family_theorem(const Graph& g, std::size_t k, const FamilyCheckOptions& opts = {}) {
  SolveOptions solve_opts;
  solve_opts.node_budget = opts.node_budget;
  const SolveResult base = solve_adim(g, k, solve_opts);
  FamilyReport report;
  report.k = k;
  report.base_dimension = base.dimension;
  report.basis = opts.basis.value_or(base.witness);
  if (!is_k_generator(g, k, report.basis))
    throw Error(ErrorCode::BadParameter, "given set is not a k-adjacency generator of the base graph");
  if (report.basis.size() != base.dimension)
    throw Error(ErrorCode::BadParameter, "given set is a generator but not a basis");
  const std::size_t n = g.order();
  if (base.dimension == k + 1 && n >= 4) report.rigid_dimension = k + 1;
  if (base.dimension == k + 2 && n >= 7) report.rigid_dimension = k + 2;

  const FamilySpec spec(g, report.basis);
  for_each_family_member(
      spec,
      [&](std::uint64_t mask, const Graph& member) {
        ++report.members;
        const DistinguishTable table = build_table(member);
        if (!is_k_generator(table, k, report.basis)) {
          report.violations.push_back({mask, "basis is not a generator of the member"});
          return true;
        }
        const std::size_t d = solve(table, k, solve_opts).dimension;
        report.min_dimension = std::min(report.min_dimension, d);
        report.max_dimension = std::max(report.max_dimension, d);
        if (d > report.basis.size())
          report.violations.push_back({mask, "dimension " + std::to_string(d) + " exceeds |B|"});
        else if (report.rigid_dimension && d != *report.rigid_dimension)
          report.violations.push_back({mask, "dimension " + std::to_string(d) + " differs from rigid value " +
                                                 std::to_string(*report.rigid_dimension)});
        return true;
      },
      opts.limit, opts.from_mask, opts.to_mask);
  return report;
}

}  // namespace adimlab
