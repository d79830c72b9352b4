#pragma once

// Exact k-generator search. A k-generator is a vertex set S with
// |S & C(x,y)| >= k for every pair, so the minimum one is a set multicover:
// each pair demands k of its distinguishing vertices. The search branches
// include/exclude on vertices, propagates pairs whose remaining candidates are
// exactly their residual demand, and prunes with three lower bounds (largest
// residual demand, a disjoint-candidate packing, and a coverage count).

#include <algorithm>
#include <chrono>
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
#include "adimlab/vertex_set.hpp"

namespace adimlab {

struct SolveOptions {
  /// Maximum search nodes across all phases of one call; 0 means unlimited.
  std::uint64_t node_budget = 0;
  /// Decide whether the witness is the only optimal generator.
  bool check_unique = false;
  /// Collect every optimal generator into SolveResult::all_bases.
  bool collect_all = false;
  /// Abort basis enumeration once more than this many bases exist; 0 means unlimited.
  std::size_t basis_cap = 0;
  /// Refine the witness to the lexicographically smallest basis. When false the
  /// witness is whichever optimum the search found first.
  bool lex_witness = true;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::size_t forced_size = 0;
  std::size_t greedy_bound = 0;
  double millis = 0.0;
};

struct SolveResult {
  std::size_t k = 0;
  std::size_t dimension = 0;
  VertexSet witness;
  std::optional<std::vector<VertexSet>> all_bases;
  std::optional<bool> unique;
  SolveStats stats;
};

/// True iff every pair has at least k members of S in its distinguishing set.
inline bool is_k_generator(const DistinguishTable& table, std::size_t k, const VertexSet& s) {
  for (const VertexSet& c : table.sets())
    if (c.intersection_size(s) < k) return false;
  return true;
}

inline bool is_k_generator(const Graph& g, std::size_t k, const VertexSet& s) {
  return is_k_generator(build_table(g, 2), k, s);
}

namespace detail {

inline void check_k(const DistinguishTable& table, std::size_t k) {
  if (table.order() < 2) throw Error(ErrorCode::TooSmall, "need at least two vertices");
  if (k < 1) throw Error(ErrorCode::BadParameter, "k must be >= 1");
  const std::size_t kmax = dimensionality(table);
  if (k > kmax)
    throw Error(ErrorCode::KExceedsDimensionality,
                "no " + std::to_string(k) + "-generator exists: dimensionality is " + std::to_string(kmax));
}

template <class Set>
class MulticoverSearch {
 public:
  enum class Mode { Optimize, Exists, Enumerate };

  MulticoverSearch(const DistinguishTable& table, std::size_t k, std::uint64_t budget)
      : n_(table.order()), k_(k), budget_(budget) {
    pairs_.reserve(table.pair_count());
    for (const VertexSet& c : table.sets()) pairs_.push_back(Set::from(c));
    all_ = Set::from(VertexSet::full(n_));
    cov_.assign(n_, 0);
  }

  std::uint64_t nodes() const { return nodes_; }

  /// Smallest generator strictly below `incumbent_size` that contains
  /// `fixed_in`; nullopt when none exists.
  std::optional<Set> optimize(const Set& fixed_in, std::size_t incumbent_size) {
    mode_ = Mode::Optimize;
    bound_ = incumbent_size;
    best_.reset();
    run(fixed_in, Set::empty_like(fixed_in));
    return best_;
  }

  /// Any generator of size <= target containing fixed_in and avoiding fixed_out.
  std::optional<Set> exists(const Set& fixed_in, const Set& fixed_out, std::size_t target) {
    mode_ = Mode::Exists;
    bound_ = target;
    best_.reset();
    run(fixed_in, fixed_out);
    return best_;
  }

  /// Every generator of size <= target reached before satisfaction. With target
  /// equal to the optimum these are exactly the optimal generators, each once.
  /// Stops after `cap` solutions when cap > 0.
  std::vector<Set> enumerate(std::size_t target, std::size_t cap) {
    mode_ = Mode::Enumerate;
    bound_ = target;
    cap_ = cap;
    found_.clear();
    Set none = Set::from(VertexSet(n_));
    run(none, none);
    return found_;
  }

 private:
  struct Frame {
    Set in;
    Set undecided;
  };

  void run(const Set& fixed_in, const Set& fixed_out) {
    stop_ = false;
    Frame root{fixed_in, all_ - fixed_in - fixed_out};
    descend(root);
  }

  bool accept_size(std::size_t size) const {
    return mode_ == Mode::Optimize ? size < bound_ : size <= bound_;
  }

  void descend(Frame& f) {
    if (stop_) return;
    if (budget_ != 0 && nodes_ >= budget_)
      throw Error(ErrorCode::BudgetExhausted, "node budget of " + std::to_string(budget_) + " exhausted");
    ++nodes_;

    // Propagate: a pair whose candidates equal its residual demand takes them all.
    for (bool changed = true; changed;) {
      changed = false;
      for (const Set& c : pairs_) {
        const std::size_t hits = c.intersection_size(f.in);
        if (hits >= k_) continue;
        const std::size_t need = k_ - hits;
        const Set cand = c & f.undecided;
        const std::size_t avail = cand.size();
        if (avail < need) return;
        if (avail == need) {
          f.in |= cand;
          f.undecided -= cand;
          changed = true;
        }
      }
      if (!accept_size(f.in.size())) return;
    }

    // Residual demands, coverage counts and the branching pair.
    std::fill(cov_.begin(), cov_.end(), 0);
    std::size_t max_need = 0;
    std::size_t total_need = 0;
    std::size_t best_pair = pairs_.size();
    std::size_t best_slack = std::numeric_limits<std::size_t>::max();
    std::size_t best_need = 0;
    deficient_.clear();
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      const Set& c = pairs_[p];
      const std::size_t hits = c.intersection_size(f.in);
      if (hits >= k_) continue;
      const std::size_t need = k_ - hits;
      const Set cand = c & f.undecided;
      const std::size_t avail = cand.size();
      cand.for_each([&](Vertex v) { ++cov_[v]; });
      max_need = std::max(max_need, need);
      total_need += need;
      deficient_.push_back({p, need, avail});
      const std::size_t slack = avail - need;
      if (slack < best_slack || (slack == best_slack && need > best_need)) {
        best_slack = slack;
        best_need = need;
        best_pair = p;
      }
    }

    if (deficient_.empty()) {
      record(f.in);
      return;
    }

    const std::size_t have = f.in.size();
    if (!accept_size(have + lower_bound(f, max_need, total_need))) return;

    // Branch on the candidate of the tightest pair covering the most deficient pairs.
    const Set cand = pairs_[best_pair] & f.undecided;
    Vertex pick = n_;
    std::size_t pick_cov = 0;
    cand.for_each([&](Vertex v) {
      if (pick == n_ || cov_[v] > pick_cov) {
        pick = v;
        pick_cov = cov_[v];
      }
    });

    Frame with{f.in, f.undecided};
    with.in.insert(pick);
    with.undecided.erase(pick);
    descend(with);
    if (stop_) return;
    Frame without{f.in, f.undecided};
    without.undecided.erase(pick);
    descend(without);
  }

  std::size_t lower_bound(const Frame& f, std::size_t max_need, std::size_t total_need) {
    std::size_t lb = max_need;

    // Each added vertex lowers the total residual demand by at most its coverage.
    sorted_cov_.clear();
    f.undecided.for_each([&](Vertex v) {
      if (cov_[v] > 0) sorted_cov_.push_back(cov_[v]);
    });
    std::sort(sorted_cov_.begin(), sorted_cov_.end(), std::greater<>());
    std::size_t acc = 0;
    std::size_t m = 0;
    while (acc < total_need && m < sorted_cov_.size()) acc += sorted_cov_[m++];
    if (acc < total_need) return std::numeric_limits<std::size_t>::max() / 2;
    lb = std::max(lb, m);

    // Pairs with pairwise disjoint candidate sets need separate vertices.
    std::sort(deficient_.begin(), deficient_.end(), [](const Deficit& a, const Deficit& b) {
      if (a.avail != b.avail) return a.avail < b.avail;
      return a.need > b.need;
    });
    Set used = Set::empty_like(f.in);
    std::size_t packed = 0;
    for (const Deficit& d : deficient_) {
      const Set cand = pairs_[d.pair] & f.undecided;
      if (cand.intersects(used)) continue;
      used |= cand;
      packed += d.need;
    }
    return std::max(lb, packed);
  }

  void record(const Set& in) {
    if (!accept_size(in.size())) return;
    switch (mode_) {
      case Mode::Optimize:
        best_ = in;
        bound_ = in.size();
        break;
      case Mode::Exists:
        best_ = in;
        stop_ = true;
        break;
      case Mode::Enumerate:
        found_.push_back(in);
        if (cap_ != 0 && found_.size() >= cap_) stop_ = true;
        break;
    }
  }

  struct Deficit {
    std::size_t pair;
    std::size_t need;
    std::size_t avail;
  };

  std::size_t n_;
  std::size_t k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Set> pairs_;
  Set all_;
  Mode mode_ = Mode::Optimize;
  std::size_t bound_ = 0;
  std::size_t cap_ = 0;
  bool stop_ = false;
  std::optional<Set> best_;
  std::vector<Set> found_;
  std::vector<std::size_t> cov_;
  std::vector<std::size_t> sorted_cov_;
  std::vector<Deficit> deficient_;
};

}  // namespace detail

/// A valid k-generator built by repeatedly adding the vertex that covers the
/// most deficient pairs (lowest index on ties). An upper bound, not a minimum.
inline VertexSet greedy_bound(const DistinguishTable& table, std::size_t k) {
  detail::check_k(table, k);
  const std::size_t n = table.order();
  VertexSet chosen(n);
  std::vector<std::size_t> hits(table.pair_count(), 0);
  for (;;) {
    std::vector<std::size_t> cov(n, 0);
    bool deficient = false;
    for (std::size_t p = 0; p < table.pair_count(); ++p) {
      if (hits[p] >= k) continue;
      deficient = true;
      for (Vertex v : table.set(p))
        if (!chosen.contains(v)) ++cov[v];
    }
    if (!deficient) return chosen;
    Vertex pick = 0;
    for (Vertex v = 1; v < n; ++v)
      if (cov[v] > cov[pick]) pick = v;
    chosen.insert(pick);
    for (std::size_t p = 0; p < table.pair_count(); ++p)
      if (table.set(p).contains(pick)) ++hits[p];
  }
}

namespace detail {

template <class Set>
SolveResult solve_with(const DistinguishTable& table, std::size_t k, const SolveOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = table.order();
  SolveResult result;
  result.k = k;
  result.stats.forced_size = forced_set(table, k).size();

  const VertexSet greedy = greedy_bound(table, k);
  result.stats.greedy_bound = greedy.size();

  MulticoverSearch<Set> search(table, k, opts.node_budget);
  const Set none = Set::from(VertexSet(n));

  const std::optional<Set> better = search.optimize(none, greedy.size());
  const std::size_t d = better ? better->size() : greedy.size();
  result.dimension = d;

  // Lexicographically smallest optimum: include each vertex, in index order,
  // whenever an optimum extending the current choices still contains it.
  Set fixed_in = none;
  Set fixed_out = none;
  Set current = better ? *better : Set::from(greedy);
  for (Vertex v = 0; opts.lex_witness && v < n && fixed_in.size() < d; ++v) {
    Set trial = fixed_in;
    trial.insert(v);
    if (current.contains(v) && (current & fixed_out).empty() && (fixed_in - current).empty()) {
      fixed_in = trial;
      continue;
    }
    if (auto s = search.exists(trial, fixed_out, d)) {
      fixed_in = trial;
      current = *s;
    } else {
      fixed_out.insert(v);
    }
  }
  result.witness = (opts.lex_witness ? fixed_in : current).to_vertex_set(n);

  if (opts.collect_all || opts.check_unique) {
    const std::size_t cap = opts.collect_all ? (opts.basis_cap == 0 ? 0 : opts.basis_cap + 1) : 2;
    std::vector<Set> found = search.enumerate(d, cap);
    if (opts.collect_all && opts.basis_cap != 0 && found.size() > opts.basis_cap)
      throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(opts.basis_cap) + " bases");
    result.unique = found.size() == 1;
    if (opts.collect_all) {
      std::vector<VertexSet> bases;
      bases.reserve(found.size());
      for (const Set& s : found) bases.push_back(s.to_vertex_set(n));
      std::sort(bases.begin(), bases.end());
      result.all_bases = std::move(bases);
    }
  }

  result.stats.nodes = search.nodes();
  result.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace detail

/// Exact minimum k-generator of the metric the table was built for.
inline SolveResult solve(const DistinguishTable& table, std::size_t k, const SolveOptions& opts = {}) {
  detail::check_k(table, k);
  if (table.order() <= 64) return detail::solve_with<WordSet>(table, k, opts);
  return detail::solve_with<WideSet>(table, k, opts);
}

/// adim_k(G): the k-adjacency dimension. Disconnected graphs are accepted;
/// vertices in different components sit at truncated distance 2.
inline SolveResult solve_adim(const Graph& g, std::size_t k, const SolveOptions& opts = {}) {
  if (g.order() < 2) throw Error(ErrorCode::TooSmall, "need at least two vertices");
  return solve(build_table(g, 2), k, opts);
}

/// dim_k(G): the k-metric dimension, via the table truncated at the diameter.
inline SolveResult solve_dim(const Graph& g, std::size_t k, const SolveOptions& opts = {}) {
  if (g.order() < 2) throw Error(ErrorCode::TooSmall, "need at least two vertices");
  const auto diam = diameter(g);
  if (!diam) throw Error(ErrorCode::Disconnected, "k-metric dimension needs a connected graph");
  return solve(build_table(g, *diam), k, opts);
}

/// adim_1 .. adim_C of the table's metric, indexed by k-1.
inline std::vector<std::size_t> dimension_profile(const DistinguishTable& table, std::uint64_t node_budget = 0) {
  SolveOptions opts;
  opts.lex_witness = false;
  opts.node_budget = node_budget;
  std::vector<std::size_t> out;
  const std::size_t kmax = dimensionality(table);
  for (std::size_t k = 1; k <= kmax; ++k) out.push_back(solve(table, k, opts).dimension);
  return out;
}

/// All optimal k-generators in ascending lexicographic order.
inline std::vector<VertexSet> enumerate_bases(const DistinguishTable& table, std::size_t k,
                                              std::size_t cap = 0, std::uint64_t node_budget = 0) {
  SolveOptions opts;
  opts.collect_all = true;
  opts.basis_cap = cap;
  opts.node_budget = node_budget;
  return *solve(table, k, opts).all_bases;
}

inline std::vector<VertexSet> enumerate_bases(const Graph& g, std::size_t k, std::size_t cap = 0) {
  if (g.order() < 2) throw Error(ErrorCode::TooSmall, "need at least two vertices");
  return enumerate_bases(build_table(g, 2), k, cap);
}

/// Exhaustive oracle: subsets by increasing size, lexicographic within a size;
/// the first generator found is returned. Sizes whose subset count exceeds
/// `evaluation_limit` are refused on graphs with more than 14 vertices.
inline SolveResult brute_force_adim(const DistinguishTable& table, std::size_t k, std::size_t size_cap,
                                    std::uint64_t evaluation_limit = 5'000'000) {
  const auto start = std::chrono::steady_clock::now();
  detail::check_k(table, k);
  const std::size_t n = table.order();
  SolveResult result;
  result.k = k;
  std::uint64_t evaluations = 0;
  for (std::size_t s = k; s <= std::min(size_cap, n); ++s) {
    if (n > 14) {
      // C(n, s) with saturation.
      double count = 1;
      for (std::size_t i = 0; i < s; ++i) count = count * static_cast<double>(n - i) / static_cast<double>(i + 1);
      if (count > static_cast<double>(evaluation_limit))
        throw Error(ErrorCode::CapExceeded, "C(" + std::to_string(n) + "," + std::to_string(s) +
                                                ") subsets exceed the brute-force limit");
    }
    std::vector<Vertex> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ++evaluations;
      const VertexSet candidate = VertexSet::from_range(n, idx);
      if (is_k_generator(table, k, candidate)) {
        result.dimension = s;
        result.witness = candidate;
        result.stats.nodes = evaluations;
        result.stats.millis =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return result;
      }
      // Next combination in lexicographic order.
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == n - s + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw Error(ErrorCode::CapExceeded, "no " + std::to_string(k) + "-generator with at most " +
                                          std::to_string(size_cap) + " vertices");
}

inline SolveResult brute_force_adim(const Graph& g, std::size_t k, std::size_t size_cap) {
  if (g.order() < 2) throw Error(ErrorCode::TooSmall, "need at least two vertices");
  return brute_force_adim(build_table(g, 2), k, size_cap);
}

}  // namespace adimlab
