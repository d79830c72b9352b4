#pragma once

// Corpus sweeps. A corpus is a list of segments (all labeled graphs of one
// order, non-isomorphic trees, or graph6 records) with an optional filter.
// sweep_theorem splits the item range into contiguous shards, one per worker,
// checks every accepted graph and returns violations sorted by (graph6, k).

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "adimlab/error.hpp"
#include "adimlab/formulas.hpp"
#include "adimlab/generators.hpp"
#include "adimlab/graph.hpp"
#include "adimlab/graph6.hpp"
#include "adimlab/metric.hpp"
#include "adimlab/solver.hpp"
#include "adimlab/vertex_set.hpp"

namespace adimlab {

// ---------------------------------------------------------------------------
// Labeled enumeration

inline constexpr std::size_t kMaxLabeledOrder = 7;

inline std::uint64_t labeled_graph_count(std::size_t n) {
  if (n > kMaxLabeledOrder)
    throw Error(ErrorCode::TooLarge, "labeled enumeration is limited to n <= " + std::to_string(kMaxLabeledOrder));
  return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
}

/// Bit i of the mask is the i-th pair in lexicographic order (0,1), (0,2), ..., (n-2,n-1).
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> e;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) e.emplace_back(u, v);
  return Graph::from_edge_list(n, e);
}

/// Every labeled graph on n vertices, once each, in mask order.
class LabeledGraphs {
 public:
  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    iterator(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {}
    Graph operator*() const { return graph_from_mask(n_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    bool operator==(const iterator& o) const { return mask_ == o.mask_; }

   private:
    std::size_t n_;
    std::uint64_t mask_;
  };

  explicit LabeledGraphs(std::size_t n) : n_(n), count_(labeled_graph_count(n)) {}
  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, count_}; }
  std::uint64_t size() const { return count_; }

 private:
  std::size_t n_;
  std::uint64_t count_;
};

inline LabeledGraphs enumerate_all_graphs(std::size_t n) { return LabeledGraphs(n); }

// ---------------------------------------------------------------------------
// Recognizers

inline bool is_path_graph(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && g.max_degree() <= 2 && is_connected(g);
}

inline bool is_cycle_graph(const Graph& g) {
  return g.order() >= 3 && g.min_degree() == 2 && g.max_degree() == 2 && is_connected(g);
}

namespace detail {

inline std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v))
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

}  // namespace detail

/// Canonical string of a tree: the smallest rooted encoding over its centers.
/// Two trees are isomorphic iff their codes are equal.
inline std::string tree_code(const Graph& t) {
  if (!is_tree(t)) throw Error(ErrorCode::NotATree, "graph is not a tree");
  const std::size_t n = t.order();
  if (n == 1) return "()";
  // Peel leaves until one or two centers remain.
  std::vector<std::size_t> deg = t.degrees();
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  std::size_t remaining = n;
  while (remaining > 2) {
    std::vector<Vertex> next;
    remaining -= layer.size();
    for (Vertex v : layer)
      for (Vertex w : t.neighbors(v))
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    std::string code = detail::rooted_code(t, c, n);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

/// A spider: a centre 0 with legs of the given lengths.
inline Graph spider(const std::vector<std::size_t>& legs) {
  std::vector<Edge> e;
  Vertex next = 1;
  for (std::size_t len : legs) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i, ++next) {
      e.emplace_back(prev, next);
      prev = next;
    }
  }
  return Graph::from_edge_list(next, e);
}

/// Non-isomorphic trees on n vertices, grown leaf by leaf and deduplicated by code.
inline std::vector<Graph> all_trees(std::size_t n) {
  if (n == 0) return {};
  if (n > 20) throw Error(ErrorCode::TooLarge, "tree enumeration is limited to n <= 20");
  std::map<std::string, Graph> level{{"()", Graph::from_edge_list(1, {})}};
  for (std::size_t m = 2; m <= n; ++m) {
    std::map<std::string, Graph> grown;
    for (const auto& [code, t] : level) {
      for (Vertex v = 0; v < t.order(); ++v) {
        std::vector<Edge> e = t.edges();
        e.emplace_back(v, t.order());
        Graph g = Graph::from_edge_list(m, e);
        grown.try_emplace(tree_code(g), std::move(g));
      }
    }
    level = std::move(grown);
  }
  std::vector<Graph> out;
  for (auto& [code, t] : level) out.push_back(t);
  return out;
}

/// Trees T whose cone K1 + T has a larger k-adjacency dimension than T, for
/// k = 1, 2, 3, as canonical codes of order n:
///   k=1: P2, P3, P6, stars K_{1,m} (m >= 3), and P5 with a pendant at its centre;
///   k=2: P2..P5, stars K_{1,m} (m >= 3), and a star with one leaf extended by two
///        more vertices (the spider with legs 1,...,1,3);
///   k=3: P4 only. P5 is not exceptional: adim_3(K1 + P5) = adim_3(P5) = 5.
inline std::set<std::string> cone_exceptional_trees(std::size_t k, std::size_t n) {
  std::set<std::string> out;
  auto add = [&](const Graph& g) {
    if (g.order() == n) out.insert(tree_code(g));
  };
  if (n < 2) return out;
  const bool big_star = n >= 4;
  switch (k) {
    case 1:
      add(path(2));
      add(path(3));
      add(path(6));
      if (big_star) add(star(n - 1));
      add(spider({2, 2, 1}));
      break;
    case 2:
      for (std::size_t r = 2; r <= 5; ++r) add(path(r));
      if (big_star) add(star(n - 1));
      if (n >= 4) {
        std::vector<std::size_t> legs(n - 4, 1);
        legs.push_back(3);
        add(spider(legs));
      }
      break;
    case 3:
      add(path(4));
      break;
    default:
      throw Error(ErrorCode::BadParameter, "tree families exist for k = 1, 2, 3");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corpus

struct CorpusFilter {
  std::size_t min_order = 0;
  std::size_t max_order = std::numeric_limits<std::size_t>::max();
  bool connected = false;
  std::size_t min_degree = 0;
  bool trees = false;

  bool accepts(const Graph& g) const {
    if (g.order() < min_order || g.order() > max_order) return false;
    if (min_degree > 0 && (g.order() == 0 || g.min_degree() < min_degree)) return false;
    if (trees) return is_tree(g);
    if (connected && !is_connected(g)) return false;
    return true;
  }
};

class Corpus {
 public:
  /// Every labeled graph with min_n <= n <= max_n (max_n <= 7).
  static Corpus labeled(std::size_t min_n, std::size_t max_n) {
    Corpus c;
    for (std::size_t n = min_n; n <= max_n; ++n) c.segments_.push_back(Segment{n, labeled_graph_count(n), {}});
    c.describe_ = "labeled n=" + std::to_string(min_n) + ".." + std::to_string(max_n);
    return c;
  }

  /// Non-isomorphic trees with min_n <= n <= max_n.
  static Corpus trees(std::size_t min_n, std::size_t max_n) {
    std::vector<Graph> gs;
    for (std::size_t n = min_n; n <= max_n; ++n)
      for (Graph& t : all_trees(n)) gs.push_back(std::move(t));
    Corpus c = graphs(std::move(gs));
    c.describe_ = "trees n=" + std::to_string(min_n) + ".." + std::to_string(max_n);
    return c;
  }

  static Corpus graphs(std::vector<Graph> gs) {
    Corpus c;
    c.segments_.push_back(Segment{0, gs.size(), std::move(gs)});
    c.describe_ = "explicit list";
    return c;
  }

  /// One graph6 record per non-empty line; malformed lines throw when reached.
  static Corpus graph6_lines(const std::vector<std::string>& lines) {
    std::vector<Graph> gs;
    for (const std::string& line : lines) {
      if (line.empty() || line == "\r") continue;
      gs.push_back(from_graph6(line));
    }
    Corpus c = graphs(std::move(gs));
    c.describe_ = "graph6 records";
    return c;
  }

  static Corpus graph6_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorCode::BadParameter, "cannot open " + file);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    Corpus c = graph6_lines(lines);
    c.describe_ = file;
    return c;
  }

  Corpus& with_filter(const CorpusFilter& f) {
    filter_ = f;
    return *this;
  }

  const CorpusFilter& filter() const { return filter_; }
  const std::string& description() const { return describe_; }

  /// Items before filtering.
  std::uint64_t size() const {
    std::uint64_t s = 0;
    for (const auto& seg : segments_) s += seg.count;
    return s;
  }

  /// Item i, or nullopt when the filter rejects it.
  std::optional<Graph> at(std::uint64_t i) const {
    for (const auto& seg : segments_) {
      if (i < seg.count) {
        Graph g = seg.explicit_graphs.empty() ? graph_from_mask(seg.order, i) : seg.explicit_graphs[i];
        if (!filter_.accepts(g)) return std::nullopt;
        return g;
      }
      i -= seg.count;
    }
    throw Error(ErrorCode::OutOfRange, "corpus index out of range");
  }

 private:
  struct Segment {
    std::size_t order;  // labeled segments
    std::uint64_t count;
    std::vector<Graph> explicit_graphs;
  };
  std::vector<Segment> segments_;
  CorpusFilter filter_;
  std::string describe_;
};

// ---------------------------------------------------------------------------
// Reports

struct Violation {
  std::string graph6;
  std::size_t k = 0;
  std::int64_t observed = 0;
  std::int64_t expected = 0;
  /// The relation that should have held: observed <relation> expected.
  std::string relation;
  std::string note;

  friend bool operator<(const Violation& a, const Violation& b) {
    return std::tie(a.graph6, a.k, a.note) < std::tie(b.graph6, b.k, b.note);
  }
};

struct SweepReport {
  std::string theorem;
  std::uint64_t graphs = 0;
  /// Graphs on which the statement's interesting case occurred (for example
  /// adim_3 = 4 for "adim3-eq-4", a strict cone increase for "cone-equality").
  std::uint64_t matched = 0;
  std::vector<Violation> violations;
  double millis = 0.0;
  bool passed() const { return violations.empty(); }
};

struct SweepOptions {
  std::size_t jobs = 1;
  /// k range for statements quantified over k (clipped to feasibility).
  std::size_t k_min = 1;
  std::size_t k_max = std::numeric_limits<std::size_t>::max();
  std::uint64_t node_budget = 0;
  /// Join partners for the pairwise statements; defaults to all graphs of order 2 and 3
  /// up to isomorphism.
  std::optional<std::vector<Graph>> partners;
  /// Called as soon as a violation is found, from the worker thread (serialized).
  std::function<void(const std::string& theorem, const Violation&)> on_violation;
};

inline std::vector<Graph> default_join_partners() {
  return {complete(2), empty_graph(2), empty_graph(3), Graph::from_edge_list(3, {{0, 1}}, "K2uK1"), path(3),
          complete(3)};
}

inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "monotony",      "k-plus-2",          "adim1-ge-3",          "complement",     "dim-le-adim",
      "kdim-vs-kadj",  "join-lower",        "join-equality",       "join-dimensionality",
      "cone-lower",    "cone-dimensionality", "cone-equality",     "cone-conjecture",
      "disconnection-dichotomy", "adim3-eq-4", "adim4-eq-5",       "adim-eq-k",      "full-dimension",
      "K1T-trees"};
  return ids;
}

namespace detail {

struct GraphCheck {
  bool matched = false;
  std::vector<Violation> violations;
};

class Checker {
 public:
  Checker(const Graph& g, const SweepOptions& opts) : g_(g), opts_(opts) {}

  GraphCheck run(const std::string& id);

 private:
  const DistinguishTable& table() {
    if (!table_) table_ = build_table(g_);
    return *table_;
  }
  const std::vector<std::size_t>& profile() {
    if (!profile_) profile_ = dimension_profile(table(), opts_.node_budget);
    return *profile_;
  }
  const Graph& cone_graph() {
    if (!cone_) cone_ = cone(g_);
    return *cone_;
  }
  const std::vector<std::size_t>& cone_profile() {
    if (!cone_profile_) cone_profile_ = dimension_profile(build_table(cone_graph()), opts_.node_budget);
    return *cone_profile_;
  }
  std::size_t adim(std::size_t k) { return profile().at(k - 1); }
  std::size_t cone_adim(std::size_t k) { return cone_profile().at(k - 1); }
  std::size_t solve_value(const Graph& g, std::size_t k) {
    SolveOptions o;
    o.lex_witness = false;
    o.node_budget = opts_.node_budget;
    return solve_adim(g, k, o).dimension;
  }

  void fail(std::size_t k, std::int64_t observed, const char* rel, std::int64_t expected, std::string note) {
    if (!g6_) g6_ = to_graph6(g_);
    out_.violations.push_back({*g6_, k, observed, expected, rel, std::move(note)});
  }
  void check(bool ok, std::size_t k, std::int64_t observed, const char* rel, std::int64_t expected,
             const std::string& note) {
    if (!ok) fail(k, observed, rel, expected, note);
  }

  void monotony();
  void k_plus_2();
  void adim1_ge_3();
  void complement_invariance();
  void dim_le_adim();
  void kdim_vs_kadj();
  void join_statements(const std::string& id);
  void cone_lower();
  void cone_dimensionality_check();
  void cone_equality();
  void cone_conjecture();
  void disconnection();
  void adim3_eq_4();
  void adim4_eq_5();
  void adim_eq_k();
  void full_dimension();
  void k1t_trees();

  const Graph& g_;
  const SweepOptions& opts_;
  GraphCheck out_;
  std::optional<DistinguishTable> table_;
  std::optional<std::vector<std::size_t>> profile_;
  std::optional<Graph> cone_;
  std::optional<std::vector<std::size_t>> cone_profile_;
  std::optional<std::string> g6_;
};

inline void Checker::monotony() {
  const auto& p = profile();
  const std::size_t c = p.size();
  const std::size_t n = g_.order();
  out_.matched = c >= 2;
  for (std::size_t k = 1; k < c; ++k) check(p[k] > p[k - 1], k + 1, p[k], ">", p[k - 1], "adim_k vs adim_(k-1)");
  for (std::size_t r = 2; r <= c; ++r)
    check(p[r - 1] >= p[0] + r - 1, r, p[r - 1], ">=", p[0] + r - 1, "adim_r vs adim_1 + r - 1");
  for (std::size_t r = 1; r < c; ++r) check(p[r - 1] < n, r, p[r - 1], "<", n, "adim_r vs n for r < C");
}

inline void Checker::k_plus_2() {
  if (g_.order() < 7) return;
  out_.matched = true;
  const auto& p = profile();
  for (std::size_t k = 1; k <= p.size(); ++k) check(p[k - 1] >= k + 2, k, p[k - 1], ">=", k + 2, "n >= 7");
}

inline void Checker::adim1_ge_3() {
  if (g_.order() < 7) return;
  out_.matched = true;
  check(adim(1) >= 3, 1, adim(1), ">=", 3, "n >= 7");
}

inline void Checker::complement_invariance() {
  const auto& p = profile();
  const auto q = dimension_profile(build_table(complement(g_)), opts_.node_budget);
  check(q.size() == p.size(), 0, q.size(), "==", p.size(), "dimensionality of the complement");
  for (std::size_t k = 1; k <= std::min(p.size(), q.size()); ++k)
    check(q[k - 1] == p[k - 1], k, q[k - 1], "==", p[k - 1], "adim_k of the complement");
}

inline void Checker::dim_le_adim() {
  const auto d = diameter(g_);
  if (!d || g_.order() < 2) return;
  const DistinguishTable td = build_table(g_, *d);
  const auto& p = profile();
  const bool small = *d <= 2;
  out_.matched = small;
  SolveOptions o;
  o.lex_witness = false;
  o.node_budget = opts_.node_budget;
  for (std::size_t k = 1; k <= p.size(); ++k) {
    const std::size_t dk = solve(td, k, o).dimension;
    check(dk <= p[k - 1], k, dk, "<=", p[k - 1], "dim_k vs adim_k");
    if (small) check(dk == p[k - 1], k, dk, "==", p[k - 1], "dim_k = adim_k for diameter <= 2");
  }
}

inline void Checker::kdim_vs_kadj() {
  const auto d = diameter(g_);
  if (!d || g_.order() < 2) return;
  const std::size_t c2 = dimensionality(table());
  const std::size_t cd = dimensionality(build_table(g_, *d));
  out_.matched = *d <= 2;
  check(c2 <= cd, 0, c2, "<=", cd, "adjacency vs metric dimensionality");
  if (*d <= 2) check(c2 == cd, 0, c2, "==", cd, "equal for diameter <= 2");
}

inline void Checker::join_statements(const std::string& id) {
  if (g_.order() < 2) return;
  const std::vector<Graph> partners = opts_.partners.value_or(default_join_partners());
  for (const Graph& h : partners) {
    const Graph j = join(g_, h);
    const DistinguishTable tj = build_table(j);
    const std::size_t cj = join_dimensionality(g_, h);
    const std::string tag = " (partner " + to_graph6(h) + ")";
    if (id == "join-dimensionality") {
      check(cj == dimensionality(tj), 0, cj, "==", dimensionality(tj), "closed-form C(G+H)" + tag);
      continue;
    }
    const auto hp = dimension_profile(build_table(h), opts_.node_budget);
    const std::size_t cone_c = cone_dimensionality(g_);
    for (std::size_t k = 1; k <= cj; ++k) {
      SolveOptions o;
      o.lex_witness = false;
      o.node_budget = opts_.node_budget;
      const std::size_t aj = solve(tj, k, o).dimension;
      const std::size_t sum = adim(k) + hp[k - 1];
      if (id == "join-lower") {
        check(aj >= sum, k, aj, ">=", sum, "lower bound" + tag);
        if (k <= std::min(hp.size(), cone_c)) {
          const std::size_t up = cone_adim(k) + hp[k - 1];
          check(aj <= up, k, aj, "<=", up, "upper bound" + tag);
        }
      } else {
        const bool crit = join_equality_criterion(g_, h, k).holds;
        if (aj == sum) out_.matched = true;
        check(crit == (aj == sum), k, crit, "==", aj == sum, "criterion vs equality" + tag);
      }
    }
  }
}

inline void Checker::cone_lower() {
  if (g_.order() < 2) return;
  const std::size_t c = cone_dimensionality(g_);
  for (std::size_t k = 1; k <= c; ++k) {
    if (cone_adim(k) > adim(k)) out_.matched = true;
    check(cone_adim(k) >= adim(k), k, cone_adim(k), ">=", adim(k), "adim_k(K1+H) vs adim_k(H)");
  }
}

inline void Checker::cone_dimensionality_check() {
  if (g_.order() < 2) return;
  const std::size_t c = cone_dimensionality(g_);
  check(c == cone_profile().size(), 0, c, "==", cone_profile().size(), "closed-form C(K1+H)");
}

inline void Checker::cone_equality() {
  if (g_.order() < 2) return;
  const std::size_t c = cone_dimensionality(g_);
  const auto d = diameter(g_);
  const auto gir = girth(g_);
  for (std::size_t k = 1; k <= c; ++k) {
    const bool equal = cone_adim(k) == adim(k);
    if (!equal) out_.matched = true;
    const bool crit = cone_equality_criterion(g_, k).holds;
    check(crit == equal, k, crit, "==", equal, "criterion vs equality");
    if (cone_plus_one_criterion(g_, k).holds)
      check(cone_adim(k) == adim(k) + 1, k, cone_adim(k), "==", adim(k) + 1, "plus-one premise");
    if (d && *d >= 6) check(equal, k, cone_adim(k), "==", adim(k), "diameter >= 6");
    if (gir && *gir >= 5 && g_.min_degree() >= 3) check(equal, k, cone_adim(k), "==", adim(k), "girth >= 5, min degree >= 3");
  }
  const Adim2ConeBound b = adim2_upper_cone(g_);
  check(cone_adim(2) <= b.bound, 2, cone_adim(2), "<=", b.bound, "adim_2(K1+H) <= adim_2(H) + 2");
  if (b.equality_forced()) check(cone_adim(2) == b.bound, 2, cone_adim(2), "==", b.bound, "adim_2 +2 premise");
}

inline void Checker::cone_conjecture() {
  if (g_.order() < 2) return;
  const std::size_t c = std::min(cone_dimensionality(g_), opts_.k_max);
  for (std::size_t k = opts_.k_min; k <= c; ++k) {
    const std::size_t bound = adim(k) + k;
    if (cone_adim(k) == bound) out_.matched = true;
    check(cone_adim(k) <= bound, k, cone_adim(k), "<=", bound, "adim_k(K1+H) <= adim_k(H) + k");
  }
}

inline void Checker::disconnection() {
  if (g_.order() < 2) return;
  const std::size_t c = cone_dimensionality(g_);
  bool increases = false;
  for (std::size_t k = 1; k <= c; ++k) increases = increases || cone_adim(k) > adim(k);
  if (!increases) return;
  out_.matched = true;
  const auto comps = connected_components(g_);
  const bool ok = comps.size() == 1 ||
                  (comps.size() == 2 && (comps[0].size() == 1 || comps[1].size() == 1));
  check(ok, 0, comps.size(), "==", 1, "cone increase needs H connected or one isolated vertex plus one component");
}

inline void Checker::adim3_eq_4() {
  if (g_.order() < 4 || profile().size() < 3) return;
  const bool eq = adim(3) == 4;
  const bool shape = (g_.order() == 4 && is_path_graph(g_)) || (g_.order() == 5 && is_cycle_graph(g_));
  out_.matched = eq;
  check(eq == shape, 3, adim(3), shape ? "==" : "!=", 4, "adim_3 = 4 iff P4 or C5");
}

inline void Checker::adim4_eq_5() {
  if (profile().size() < 4) return;
  const bool eq = adim(4) == 5;
  const bool shape = g_.order() == 5 && is_cycle_graph(g_);
  out_.matched = eq;
  check(eq == shape, 4, adim(4), shape ? "==" : "!=", 5, "adim_4 = 5 iff C5");
}

inline void Checker::adim_eq_k() {
  if (g_.order() < 2) return;
  const std::size_t n = g_.order();
  const bool small = (n == 2) || (n == 3 && g_.size() >= 1 && g_.size() <= 2);
  for (std::size_t k = 1; k <= profile().size(); ++k) {
    const bool eq = adim(k) == k;
    if (eq) out_.matched = true;
    const bool expected = k <= 2 && small;
    check(eq == expected, k, adim(k), expected ? "==" : "!=", k, "adim_k = k iff k <= 2 and G in {P2, P3, N2, K2uK1}");
  }
}

inline void Checker::full_dimension() {
  if (g_.order() < 2) return;
  const std::size_t n = g_.order();
  for (std::size_t k = 1; k <= profile().size(); ++k) {
    const bool full = adim(k) == n;
    const bool crit = full_dimension_criteria(g_, k).holds;
    check(crit == full, k, adim(k), crit ? "==" : "!=", n, "forced set covers V iff adim_k = n");
  }
  const bool full2 = adim(2) == n;
  out_.matched = full2;
  check(full_dimension_twins(g_).holds == full2, 2, adim(2), full2 ? "==" : "!=", n,
        "every vertex has a twin iff adim_2 = n");
  const bool cone_full = cone_adim(2) == n + 1;
  check(cone_full_dimension(g_).holds == cone_full, 2, cone_adim(2), cone_full ? "==" : "!=", n + 1,
        "adim_2(K1+H) = n+1 characterization");
}

inline void Checker::k1t_trees() {
  if (g_.order() < 2 || !is_tree(g_)) return;
  const std::string code = tree_code(g_);
  const std::size_t c = cone_dimensionality(g_);
  for (std::size_t k = 1; k <= std::min<std::size_t>(3, c); ++k) {
    const bool in_family = cone_exceptional_trees(k, g_.order()).count(code) > 0;
    const bool equal = cone_adim(k) == adim(k);
    if (in_family) out_.matched = true;
    check(equal != in_family, k, cone_adim(k), in_family ? "!=" : "==", adim(k),
          in_family ? "tree in the exceptional family" : "tree outside the exceptional family");
  }
}

inline GraphCheck Checker::run(const std::string& id) {
  // Every statement concerns nontrivial graphs.
  if (g_.order() < 2) {
    if (std::find(theorem_ids().begin(), theorem_ids().end(), id) == theorem_ids().end())
      throw Error(ErrorCode::UnknownTheorem, "unknown theorem id: " + id);
    return std::move(out_);
  }
  if (id == "monotony") monotony();
  else if (id == "k-plus-2") k_plus_2();
  else if (id == "adim1-ge-3") adim1_ge_3();
  else if (id == "complement") complement_invariance();
  else if (id == "dim-le-adim") dim_le_adim();
  else if (id == "kdim-vs-kadj") kdim_vs_kadj();
  else if (id == "join-lower" || id == "join-equality" || id == "join-dimensionality") join_statements(id);
  else if (id == "cone-lower") cone_lower();
  else if (id == "cone-dimensionality") cone_dimensionality_check();
  else if (id == "cone-equality") cone_equality();
  else if (id == "cone-conjecture") cone_conjecture();
  else if (id == "disconnection-dichotomy") disconnection();
  else if (id == "adim3-eq-4") adim3_eq_4();
  else if (id == "adim4-eq-5") adim4_eq_5();
  else if (id == "adim-eq-k") adim_eq_k();
  else if (id == "full-dimension") full_dimension();
  else if (id == "K1T-trees") k1t_trees();
  else throw Error(ErrorCode::UnknownTheorem, "unknown theorem id: " + id);
  return std::move(out_);
}

}  // namespace detail

/// Checks one graph against one statement.
inline SweepReport check_graph(const Graph& g, const std::string& theorem, const SweepOptions& opts = {}) {
  SweepReport r;
  r.theorem = theorem;
  r.graphs = 1;
  detail::GraphCheck c = detail::Checker(g, opts).run(theorem);
  r.matched = c.matched ? 1 : 0;
  r.violations = std::move(c.violations);
  return r;
}

inline SweepReport sweep_theorem(const Corpus& corpus, const std::string& theorem, const SweepOptions& opts = {}) {
  if (std::find(theorem_ids().begin(), theorem_ids().end(), theorem) == theorem_ids().end())
    throw Error(ErrorCode::UnknownTheorem, "unknown theorem id: " + theorem);
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = corpus.size();
  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::uint64_t>(opts.jobs, std::max<std::uint64_t>(total, 1)));

  std::vector<SweepReport> parts(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::mutex stream_mutex;

  auto work = [&](std::size_t w) {
    try {
      SweepReport& part = parts[w];
      const std::uint64_t lo = total * w / jobs;
      const std::uint64_t hi = total * (w + 1) / jobs;
      for (std::uint64_t i = lo; i < hi; ++i) {
        const std::optional<Graph> g = corpus.at(i);
        if (!g) continue;
        ++part.graphs;
        detail::GraphCheck c = detail::Checker(*g, opts).run(theorem);
        if (c.matched) ++part.matched;
        for (Violation& v : c.violations) {
          if (opts.on_violation) {
            std::lock_guard<std::mutex> lock(stream_mutex);
            opts.on_violation(theorem, v);
          }
          part.violations.push_back(std::move(v));
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  SweepReport report;
  report.theorem = theorem;
  for (SweepReport& p : parts) {
    report.graphs += p.graphs;
    report.matched += p.matched;
    for (Violation& v : p.violations) report.violations.push_back(std::move(v));
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// adim_k(K1 + H) <= adim_k(H) + k for k in [k_min, k_max], clipped to the
/// dimensionality of K1 + H. `matched` counts graphs where the bound is tight.
inline SweepReport check_cone_conjecture(const Corpus& corpus, std::size_t k_min, std::size_t k_max,
                                         SweepOptions opts = {}) {
  opts.k_min = k_min;
  opts.k_max = k_max;
  return sweep_theorem(corpus, "cone-conjecture", opts);
}

}  // namespace adimlab
