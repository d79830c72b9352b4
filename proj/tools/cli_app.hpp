#pragma once

// adimlab command line. run() holds everything so tests can drive it with
// string streams; adimlab.cpp only forwards argv.
//
// Exit codes: 0 success, 1 violations or mismatches found, 2 usage error,
// 3 computation aborted (node budget or basis cap).

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"

#include "adimlab/adimlab.hpp"
#include "adimlab/io.hpp"

namespace adimlab::cli {

// ---------------------------------------------------------------------------
// Graph specs

namespace detail {

inline std::vector<std::size_t> parse_numbers(std::string_view s, std::string_view what) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string_view tok = s.substr(pos, comma == std::string_view::npos ? s.size() - pos : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
      throw Error(ErrorCode::ParseError, "bad number '" + std::string(tok) + "' in " + std::string(what));
    out.push_back(std::stoul(std::string(tok)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::string_view strip_parens(std::string_view s) {
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool wraps = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
      if (depth == 0 && i + 1 < s.size()) {
        wraps = false;
        break;
      }
    }
    if (!wraps) break;
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

}  // namespace detail

inline constexpr std::string_view kGraphSpecHelp =
    "Graph specs: name[:param[,param]]\n"
    "  path:n  cycle:n  complete:n  empty:n  bipartite:r,s  star:n  hypercube:r\n"
    "  petersen  fan:n  wheel:n  fig1:t  fig2[:cycle]  fig3  fig4  fig5\n"
    "  join:A+B   complement:X   cone:X (= join:complete:1+X)\n"
    "  Parentheses group nested joins, e.g. join:(join:path:2+path:2)+cycle:5";

/// Parses the generator mini-language described in kGraphSpecHelp.
inline Graph parse_graph_spec(std::string_view spec) {
  spec = detail::strip_parens(spec);
  const std::size_t colon = spec.find(':');
  const std::string name(spec.substr(0, colon));
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (name == "join") {
    int depth = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      depth += rest[i] == '(' ? 1 : rest[i] == ')' ? -1 : 0;
      if (rest[i] == '+' && depth == 0) {
        const Graph a = parse_graph_spec(rest.substr(0, i));
        const Graph b = parse_graph_spec(rest.substr(i + 1));
        return join(a, b).with_name(a.name() + "+" + b.name());
      }
    }
    throw Error(ErrorCode::ParseError, "join needs two operands: join:A+B");
  }
  if (name == "complement") {
    const Graph g = parse_graph_spec(rest);
    return complement(g).with_name("co-" + g.name());
  }
  if (name == "cone") {
    const Graph g = parse_graph_spec(rest);
    return cone(g).with_name("K1+" + g.name());
  }

  auto params = [&](std::size_t count) {
    if (count == 0) {
      if (!rest.empty()) throw Error(ErrorCode::ParseError, name + " takes no parameters");
      return std::vector<std::size_t>{};
    }
    if (rest.empty()) throw Error(ErrorCode::ParseError, name + " needs " + std::to_string(count) + " parameter(s)");
    auto v = detail::parse_numbers(rest, name);
    if (v.size() != count) throw Error(ErrorCode::ParseError, name + " needs " + std::to_string(count) + " parameter(s)");
    return v;
  };

  if (name == "path") return path(params(1)[0]);
  if (name == "cycle") return cycle(params(1)[0]);
  if (name == "complete") return complete(params(1)[0]);
  if (name == "empty") return empty_graph(params(1)[0]);
  if (name == "bipartite") {
    const auto p = params(2);
    return complete_bipartite(p[0], p[1]);
  }
  if (name == "star") return star(params(1)[0]);
  if (name == "hypercube") return hypercube(params(1)[0]);
  if (name == "petersen") return params(0), petersen();
  if (name == "fan") return fan(params(1)[0]);
  if (name == "wheel") return wheel(params(1)[0]);
  if (name == "fig1") return fig1_graph(params(1)[0]);
  if (name == "fig2") {
    if (rest == "cycle") return fig2_graph(HubTopology::Cycle);
    return params(0), fig2_graph();
  }
  if (name == "fig3") return params(0), fig3_graph();
  if (name == "fig4") return params(0), fig4_graph();
  if (name == "fig5") return params(0), fig5_graph();
  throw Error(ErrorCode::ParseError, "unknown graph name '" + name + "'");
}

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

/// "3" or "1..4".
inline Range parse_range(std::string_view s, std::string_view what) {
  const std::size_t dots = s.find("..");
  if (dots == std::string_view::npos) {
    const auto v = detail::parse_numbers(s, what);
    if (v.size() != 1) throw Error(ErrorCode::ParseError, "expected a number or a range a..b for " + std::string(what));
    return {v[0], v[0]};
  }
  const auto lo = detail::parse_numbers(s.substr(0, dots), what);
  const auto hi = detail::parse_numbers(s.substr(dots + 2), what);
  if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0])
    throw Error(ErrorCode::ParseError, "bad range '" + std::string(s) + "' for " + std::string(what));
  return {lo[0], hi[0]};
}

/// A file holding either one graph6 record or an edge list ("n" then "u v" lines).
inline Graph read_graph_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::BadParameter, "cannot open " + file);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error(ErrorCode::ParseError, file + " is empty");
  const std::size_t eol = text.find('\n', first);
  const std::string line = text.substr(first, eol == std::string::npos ? std::string::npos : eol - first);
  const bool looks_g6 = line.rfind(">>graph6<<", 0) == 0 || (line.find_first_of(" \t") == std::string::npos &&
                                                                     line.find_first_not_of("0123456789\r") != std::string::npos);
  if (looks_g6) return from_graph6(line).with_name(file);
  return parse_edge_list(text).with_name(file);
}

// ---------------------------------------------------------------------------
// run

namespace detail {

enum class Format { Table, Json, Csv };

struct Common {
  std::string graph;
  std::string g6;
  std::string file;
  std::string k;
  std::string format = "table";
  std::optional<std::uint64_t> budget;

  Format fmt() const {
    if (format == "table") return Format::Table;
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    throw Error(ErrorCode::ParseError, "--format must be table, json or csv");
  }

  std::uint64_t node_budget() const {
    if (budget) return *budget;
    if (const char* env = std::getenv("ADIMLAB_BUDGET")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "ADIMLAB_BUDGET must be a non-negative integer");
      }
    }
    return 0;
  }

  Graph load() const {
    const int sources = !graph.empty() + !g6.empty() + !file.empty();
    if (sources != 1) throw Error(ErrorCode::ParseError, "give exactly one of --graph, --g6, --file");
    if (!graph.empty()) return parse_graph_spec(graph).with_name(graph);
    if (!g6.empty()) return from_graph6(g6).with_name(g6);
    return read_graph_file(file);
  }

  /// Requested k range clipped against C; an explicit k above C is an error.
  Range ks(std::size_t c, const std::string& what = "C(G)") const {
    if (k.empty()) return {1, c};
    const Range r = parse_range(k, "--k");
    if (r.lo < 1) throw Error(ErrorCode::BadParameter, "k must be >= 1");
    if (r.hi > c)
      throw Error(ErrorCode::KExceedsDimensionality,
                  "k=" + std::to_string(r.hi) + " exceeds " + what + "=" + std::to_string(c) +
                      ": no k-adjacency generator exists");
    return r;
  }
};

inline void add_graph_options(CLI::App* app, Common& c) {
  app->add_option("--graph", c.graph, "Generator spec, e.g. path:7 or join:path:3+cycle:5");
  app->add_option("--g6", c.g6, "graph6 literal");
  app->add_option("--file", c.file, "File with a graph6 record or an edge list");
}

inline void add_output_options(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  app->add_option("--budget", c.budget, "Search node budget (0 = unlimited; default from ADIMLAB_BUDGET)");
}

inline std::string set_text(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

inline void print_solve(std::ostream& out, Format f, const std::vector<SolveResult>& rs, bool single) {
  if (f == Format::Json) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    out << (single ? arr[0] : arr).dump() << "\n";
    return;
  }
  if (f == Format::Csv) {
    out << "k,dimension,unique,nodes,witness\n";
    for (const auto& r : rs)
      out << r.k << "," << r.dimension << "," << (r.unique ? (*r.unique ? "true" : "false") : "") << ","
          << r.stats.nodes << "," << set_text(r.witness) << "\n";
    return;
  }
  out << std::left << std::setw(4) << "k" << std::setw(11) << "dimension" << std::setw(8) << "unique" << std::setw(10)
      << "nodes"
      << "witness\n";
  for (const auto& r : rs)
    out << std::setw(4) << r.k << std::setw(11) << r.dimension << std::setw(8)
        << (r.unique ? (*r.unique ? "yes" : "no") : "-") << std::setw(10) << r.stats.nodes << r.witness.to_string(false)
        << "\n";
}

inline void print_report(std::ostream& out, Format f, const SweepReport& r) {
  if (f == Format::Json) {
    out << to_json(r).dump() << "\n";
    return;
  }
  if (f == Format::Csv) {
    out << "theorem,graphs,matched,violations,millis\n"
        << r.theorem << "," << r.graphs << "," << r.matched << "," << r.violations.size() << "," << r.millis << "\n";
    return;
  }
  out << r.theorem << ": " << r.graphs << " graphs, " << r.matched << " matched, " << r.violations.size()
      << " violations (" << static_cast<long long>(r.millis) << " ms)\n";
  for (const Violation& v : r.violations)
    out << "  " << v.graph6 << " k=" << v.k << " observed " << v.observed << ", expected " << v.relation << " "
        << v.expected << " [" << v.note << "]\n";
}

struct SweepArgs {
  std::size_t min_n = 2;
  std::size_t max_n = 6;
  bool trees = false;
  bool connected = false;
  std::size_t min_degree = 0;
  std::size_t jobs = 1;
  std::string out;
};

inline Corpus make_corpus(const Common& c, const SweepArgs& s) {
  Corpus corpus = !c.file.empty() ? Corpus::graph6_file(c.file)
                  : s.trees       ? Corpus::trees(s.min_n, s.max_n)
                                  : Corpus::labeled(s.min_n, s.max_n);
  CorpusFilter f;
  f.min_order = s.min_n;
  f.max_order = s.max_n;
  f.connected = s.connected;
  f.min_degree = s.min_degree;
  f.trees = s.trees;
  corpus.with_filter(f);
  return corpus;
}

inline void add_sweep_options(CLI::App* app, Common& c, SweepArgs& s) {
  app->add_option("--min-n", s.min_n, "Smallest order");
  app->add_option("--max-n", s.max_n, "Largest order (labeled enumeration allows up to 7)");
  app->add_option("--file", c.file, "graph6 corpus file (one record per line)");
  app->add_flag("--trees", s.trees, "Use non-isomorphic trees instead of labeled graphs");
  app->add_flag("--connected", s.connected, "Only connected graphs");
  app->add_option("--min-degree", s.min_degree, "Only graphs with this minimum degree");
  app->add_option("--jobs", s.jobs, "Worker threads");
  app->add_option("--out", s.out, "Append violations as NDJSON to this file");
  app->add_option("--k", c.k, "k or k range a..b");
  add_output_options(app, c);
}

inline SweepReport run_sweep(const Common& c, const SweepArgs& s, const std::string& theorem,
                             std::optional<Range> ks = std::nullopt) {
  SweepOptions opts;
  opts.jobs = s.jobs;
  opts.node_budget = c.node_budget();
  if (ks) {
    opts.k_min = ks->lo;
    opts.k_max = ks->hi;
  }
  std::ofstream stream;
  if (!s.out.empty()) {
    stream.open(s.out, std::ios::app);
    if (!stream) throw Error(ErrorCode::BadParameter, "cannot open " + s.out);
    opts.on_violation = [&](const std::string& id, const Violation& v) {
      stream << violation_line(id, v) << "\n";
      stream.flush();
    };
  }
  return sweep_theorem(make_corpus(c, s), theorem, opts);
}

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExhausted:
    case ErrorCode::CapExceeded: return 3;
    default: return 2;
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Exact k-adjacency and k-metric dimensions of graphs."};
  app.footer(std::string(kGraphSpecHelp));
  app.require_subcommand(1);

  Common c;

  // compute
  bool no_unique = false;
  std::size_t level = 2;
  auto* compute = app.add_subcommand("compute", "Exact adim_k (or the t-truncated k-dimension with --t)");
  add_graph_options(compute, c);
  compute->add_option("--k", c.k, "k or k range a..b (default: all feasible)");
  compute->add_option("--t", level, "Truncation level (default 2)");
  compute->add_flag("--no-unique", no_unique, "Skip the uniqueness check");
  add_output_options(compute, c);

  // dim
  auto* dim = app.add_subcommand("dim", "Exact k-metric dimension dim_k of a connected graph");
  add_graph_options(dim, c);
  dim->add_option("--k", c.k, "k or k range a..b");
  dim->add_flag("--no-unique", no_unique, "Skip the uniqueness check");
  add_output_options(dim, c);

  // info
  auto* info = app.add_subcommand("info", "Order, degrees, diameter, dimensionality, twin classes");
  add_graph_options(info, c);
  info->add_option("--format", c.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));

  // formulas
  std::string family_name;
  std::string params_text;
  std::string criterion;
  std::string partner;
  bool verify_formula = false;
  std::size_t basis_cap = 0;
  auto* formulas = app.add_subcommand("formulas", "Closed forms and basis criteria");
  formulas->add_option("--family", family_name,
                       "path, cycle, complete, empty, bipartite, fan, wheel or petersen");
  formulas->add_option("--n", params_text, "Order or order range a..b (bipartite: r,s)");
  formulas->add_option("--criterion", criterion,
                       "cone-equality, cone-plus-one, adim2-upper-cone, join-bounds, join-equality, "
                       "full-dimension-k, full-dimension-twins, cone-full-dimension, join-full-dimension, "
                       "tree-dimensionality");
  formulas->add_option("--with", partner, "Second join factor (graph spec) for join criteria");
  formulas->add_flag("--verify", verify_formula, "Compare closed forms with the exact solver");
  formulas->add_option("--cap", basis_cap, "Abort when a graph has more bases than this (0 = no cap)");
  add_graph_options(formulas, c);
  formulas->add_option("--k", c.k, "k or k range a..b");
  add_output_options(formulas, c);

  // bases
  auto* bases = app.add_subcommand("bases", "All k-adjacency bases");
  add_graph_options(bases, c);
  bases->add_option("--k", c.k, "k")->required();
  bases->add_option("--cap", basis_cap, "Abort when there are more bases than this (0 = no cap)");
  add_output_options(bases, c);

  // family
  std::string basis_text;
  std::optional<std::uint64_t> from_mask;
  std::optional<std::uint64_t> to_mask;
  std::optional<std::uint64_t> limit;
  auto* family = app.add_subcommand("family", "Check every graph sharing a basis's neighbourhoods");
  add_graph_options(family, c);
  family->add_option("--k", c.k, "k")->required();
  family->add_option("--basis", basis_text, "Comma-separated basis (default: smallest basis)");
  family->add_option("--from-mask", from_mask, "First member mask");
  family->add_option("--to-mask", to_mask, "End mask (exclusive)");
  family->add_option("--limit", limit, "Maximum members to check");
  add_output_options(family, c);

  // sweep
  std::string theorem;
  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Check a statement on every graph of a corpus");
  sweep->add_option("--theorem", theorem, "Statement id, or 'all'")->required();
  add_sweep_options(sweep, c, sweep_args);

  // conjecture
  SweepArgs conj_args;
  auto* conjecture = app.add_subcommand("conjecture", "Check adim_k(K1+H) <= adim_k(H) + k on a corpus");
  add_sweep_options(conjecture, c, conj_args);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Format fmt = c.fmt();

    if (compute->parsed() || dim->parsed()) {
      const Graph g = c.load();
      if (g.order() < 2) throw Error(ErrorCode::TooSmall, "need at least two vertices");
      std::size_t t = level;
      if (dim->parsed()) {
        const auto d = diameter(g);
        if (!d) throw Error(ErrorCode::Disconnected, "dim needs a connected graph");
        t = std::max<std::size_t>(*d, 1);
      }
      const DistinguishTable table = build_table(g, t);
      const std::size_t cmax = dimensionality(table);
      const Range ks = c.ks(cmax);
      SolveOptions opts;
      opts.node_budget = c.node_budget();
      opts.check_unique = !no_unique;
      std::vector<SolveResult> rs;
      for (std::size_t k = ks.lo; k <= ks.hi; ++k) rs.push_back(solve(table, k, opts));
      print_solve(out, fmt, rs, !c.k.empty() && ks.lo == ks.hi);
      return 0;
    }

    if (info->parsed()) {
      const Graph g = c.load();
      const json j = graph_info(g);
      if (fmt == Format::Json) {
        out << j.dump() << "\n";
      } else {
        const char* sep = fmt == Format::Csv ? "," : ": ";
        if (fmt == Format::Csv) out << "key,value\n";
        for (const char* key : {"name", "n", "m", "graph6", "connected", "min_degree", "max_degree", "diameter",
                                "girth", "dimensionality", "twins_free"})
          if (j.contains(key)) {
            const json& v = j[key];
            out << key << sep << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
          }
        std::string classes;
        const TwinPartition tp = twin_partition(g);
        for (std::size_t i = 0; i < tp.classes.size(); ++i)
          if (tp.classes[i].size() > 1)
            classes += (classes.empty() ? "" : " ") + tp.classes[i].to_string(false) + ":" +
                       std::string(to_string(tp.kinds[i]));
        out << "twin_classes" << sep << (classes.empty() ? "all singleton" : classes) << "\n";
      }
      return 0;
    }

    if (formulas->parsed()) {
      if (!criterion.empty()) {
        const Graph g = c.load();
        const std::size_t k = c.k.empty() ? 0 : parse_range(c.k, "--k").lo;
        auto need_k = [&] {
          if (k == 0) throw Error(ErrorCode::ParseError, "--k is required for " + criterion);
          return k;
        };
        auto second = [&] {
          if (partner.empty()) throw Error(ErrorCode::ParseError, "--with is required for " + criterion);
          return parse_graph_spec(partner);
        };
        json j;
        if (criterion == "cone-equality") j = to_json(cone_equality_criterion(g, need_k(), basis_cap));
        else if (criterion == "cone-plus-one") j = to_json(cone_plus_one_criterion(g, need_k(), basis_cap));
        else if (criterion == "join-equality") j = to_json(join_equality_criterion(g, second(), need_k(), basis_cap));
        else if (criterion == "full-dimension-k") j = to_json(full_dimension_criteria(g, need_k()));
        else if (criterion == "full-dimension-twins") j = to_json(full_dimension_twins(g));
        else if (criterion == "cone-full-dimension") j = to_json(cone_full_dimension(g));
        else if (criterion == "join-full-dimension") j = to_json(join_full_dimension(g, second()));
        else if (criterion == "tree-dimensionality")
          j = {{"criterion", criterion}, {"value", tree_dimensionality(g)}};
        else if (criterion == "adim2-upper-cone") {
          const Adim2ConeBound b = adim2_upper_cone(g, basis_cap);
          j = {{"criterion", criterion}, {"bound", b.bound}, {"equality_forced", b.equality_forced()}};
          if (b.universal_outside_bases) j["universal_vertex"] = *b.universal_outside_bases;
          if (b.isolated_pair_outside_bases)
            j["isolated_pair"] = {b.isolated_pair_outside_bases->first, b.isolated_pair_outside_bases->second};
        } else if (criterion == "join-bounds") {
          const JoinBounds b = join_bounds(g, second(), need_k(), c.node_budget());
          j = {{"criterion", criterion}, {"lower", b.lower}, {"upper", b.upper ? json(*b.upper) : json(nullptr)}};
        } else {
          throw Error(ErrorCode::ParseError, "unknown criterion '" + criterion + "'");
        }
        if (fmt == Format::Json) {
          out << j.dump() << "\n";
        } else {
          for (auto it = j.begin(); it != j.end(); ++it)
            out << it.key() << (fmt == Format::Csv ? "," : ": ") << it.value().dump() << "\n";
        }
        return 0;
      }

      const auto fam = parse_family(family_name);
      if (!fam) throw Error(ErrorCode::ParseError, "--family must be one of path, cycle, complete, empty, bipartite, "
                                                   "fan, wheel, petersen");
      std::vector<std::vector<std::size_t>> param_sets;
      if (*fam == Family::Petersen) {
        param_sets.push_back({});
      } else if (*fam == Family::CompleteBipartite) {
        param_sets.push_back(detail::parse_numbers(params_text, "--n"));
      } else {
        if (params_text.empty()) throw Error(ErrorCode::ParseError, "--n is required");
        const Range r = parse_range(params_text, "--n");
        for (std::size_t n = r.lo; n <= r.hi; ++n) param_sets.push_back({n});
      }
      if (c.k.empty()) throw Error(ErrorCode::ParseError, "--k is required");
      const Range ks = parse_range(c.k, "--k");
      const bool single = param_sets.size() == 1 && ks.lo == ks.hi;
      int status = 0;
      json rows = json::array();
      for (const auto& p : param_sets)
        for (std::size_t k = ks.lo; k <= ks.hi; ++k) {
          const FormulaQuery q{*fam, p, k};
          json row{{"family", std::string(to_string(*fam))}, {"params", p}, {"k", k}};
          try {
            row["formula"] = formula_adim(q);
          } catch (const Error& e) {
            if (single || e.code() != ErrorCode::OutOfProvenRange) throw;
            row["formula"] = nullptr;
            row["refused"] = e.what();
          }
          if (verify_formula && !row["formula"].is_null()) {
            SolveOptions o;
            o.lex_witness = false;
            o.node_budget = c.node_budget();
            const std::size_t exact = solve_adim(family_graph(q), k, o).dimension;
            row["exact"] = exact;
            row["match"] = exact == row["formula"].get<std::size_t>();
            if (!row["match"].get<bool>()) status = 1;
          }
          rows.push_back(row);
        }
      if (fmt == Format::Json) {
        out << (single ? rows[0] : rows).dump() << "\n";
      } else {
        const bool csv = fmt == Format::Csv;
        if (csv) out << "family,params,k,formula" << (verify_formula ? ",exact,match" : "") << "\n";
        for (const json& row : rows) {
          std::string ps;
          for (const auto& x : row["params"]) ps += (ps.empty() ? "" : csv ? ";" : ",") + x.dump();
          const std::string f = row["formula"].is_null() ? "refused" : row["formula"].dump();
          if (csv) {
            out << row["family"].get<std::string>() << "," << ps << "," << row["k"] << "," << f;
            if (verify_formula) out << "," << (row.contains("exact") ? row["exact"].dump() : "") << ","
                                    << (row.contains("match") ? row["match"].dump() : "");
            out << "\n";
          } else {
            out << row["family"].get<std::string>() << "(" << ps << ") k=" << row["k"] << ": " << f;
            if (row.contains("exact")) out << "  exact " << row["exact"] << (row["match"].get<bool>() ? "" : "  MISMATCH");
            out << "\n";
          }
        }
      }
      return status;
    }

    if (bases->parsed()) {
      const Graph g = c.load();
      if (g.order() < 2) throw Error(ErrorCode::TooSmall, "need at least two vertices");
      const DistinguishTable table = build_table(g);
      const std::size_t k = c.ks(dimensionality(table)).lo;
      const auto bs = enumerate_bases(table, k, basis_cap, c.node_budget());
      if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto& b : bs) arr.push_back(to_json(b));
        out << json{{"k", k}, {"dimension", bs.front().size()}, {"count", bs.size()}, {"bases", arr}}.dump() << "\n";
      } else if (fmt == Format::Csv) {
        out << "basis\n";
        for (const auto& b : bs) out << set_text(b) << "\n";
      } else {
        out << bs.size() << " " << k << "-adjacency bases of size " << bs.front().size() << "\n";
        for (const auto& b : bs) out << "  " << b.to_string(false) << "\n";
      }
      return 0;
    }

    if (family->parsed()) {
      const Graph g = c.load();
      if (g.order() < 2) throw Error(ErrorCode::TooSmall, "need at least two vertices");
      const std::size_t k = c.ks(dimensionality(g)).lo;
      FamilyCheckOptions opts;
      if (!basis_text.empty()) {
        const auto members = detail::parse_numbers(basis_text, "--basis");
        for (std::size_t v : members)
          if (v >= g.order()) throw Error(ErrorCode::OutOfRange, "basis vertex " + std::to_string(v) + " outside graph");
        opts.basis = VertexSet::from_range(g.order(), members);
      }
      opts.from_mask = from_mask.value_or(0);
      opts.to_mask = to_mask;
      opts.limit = limit;
      opts.node_budget = c.node_budget();
      const FamilyReport r = verify_family_theorem(g, k, opts);
      if (fmt == Format::Json) {
        out << to_json(r).dump() << "\n";
      } else if (fmt == Format::Csv) {
        out << "k,basis,members,min_dimension,max_dimension,violations\n"
            << r.k << "," << set_text(r.basis) << "," << r.members << "," << (r.members ? r.min_dimension : 0) << ","
            << r.max_dimension << "," << r.violations.size() << "\n";
      } else {
        out << "basis " << r.basis.to_string(false) << ", k=" << r.k << ": " << r.members << " members";
        if (r.members) out << ", adim_k in [" << r.min_dimension << ", " << r.max_dimension << "]";
        out << ", " << r.violations.size() << " violations\n";
        for (const auto& v : r.violations) out << "  mask " << v.mask << ": " << v.what << "\n";
      }
      return r.passed() ? 0 : 1;
    }

    if (sweep->parsed()) {
      std::vector<std::string> ids;
      if (theorem == "all") ids = theorem_ids();
      else ids.push_back(theorem);
      std::optional<Range> ks;
      if (!c.k.empty()) ks = parse_range(c.k, "--k");
      bool ok = true;
      json all = json::array();
      for (const std::string& id : ids) {
        SweepArgs s = sweep_args;
        if (id == "K1T-trees" && c.file.empty()) s.trees = true;
        const SweepReport r = run_sweep(c, s, id, ks);
        ok = ok && r.passed();
        if (fmt == Format::Json) all.push_back(to_json(r));
        else print_report(out, fmt, r);
      }
      if (fmt == Format::Json) out << (ids.size() == 1 ? all[0] : all).dump() << "\n";
      return ok ? 0 : 1;
    }

    if (conjecture->parsed()) {
      const Range ks = c.k.empty() ? Range{1, 4} : parse_range(c.k, "--k");
      const SweepReport r = run_sweep(c, conj_args, "cone-conjecture", ks);
      print_report(out, fmt, r);
      return r.passed() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::OutOfProvenRange && !family_name.empty())
      if (const auto fam = parse_family(family_name))
        err << "proven range for " << family_name << ": " << proven_range(*fam) << "\n";
    return exit_code_for(e.code());
  }
  return 2;
}

}  // namespace adimlab::cli
