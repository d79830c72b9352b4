#pragma once

// JSON views of the result types. Needs nlohmann/json ("json.hpp") on the
// include path; the core headers do not.

#include <string>
#include <vector>

#include "json.hpp"

#include "adimlab/families.hpp"
#include "adimlab/formulas.hpp"
#include "adimlab/graph.hpp"
#include "adimlab/graph6.hpp"
#include "adimlab/metric.hpp"
#include "adimlab/solver.hpp"
#include "adimlab/verify.hpp"

namespace adimlab {

using json = nlohmann::json;

inline json to_json(const VertexSet& s) { return s.to_vector(); }

inline json to_json(const SolveResult& r) {
  json j;
  j["k"] = r.k;
  j["dimension"] = r.dimension;
  j["witness"] = to_json(r.witness);
  j["unique"] = r.unique ? json(*r.unique) : json(nullptr);
  j["nodes"] = r.stats.nodes;
  j["millis"] = r.stats.millis;
  if (r.all_bases) {
    json all = json::array();
    for (const VertexSet& b : *r.all_bases) all.push_back(to_json(b));
    j["bases"] = all;
  }
  return j;
}

inline json to_json(const DistinguishTable& t) {
  json pairs = json::array();
  for (std::size_t r = 0; r < t.pair_count(); ++r) {
    const auto p = t.pair(r);
    pairs.push_back({{"x", p.x}, {"y", p.y}, {"set", to_json(t.set(r))}});
  }
  return {{"n", t.order()}, {"t", t.level()}, {"pairs", pairs}};
}

inline json to_json(const CriterionReport& c) {
  json j;
  j["criterion"] = c.criterion;
  j["holds"] = c.holds;
  j["witness"] = c.witness ? to_json(*c.witness) : json(nullptr);
  if (c.witness_vertex) j["witness_vertex"] = *c.witness_vertex;
  return j;
}

inline json to_json(const Violation& v) {
  return {{"graph6", v.graph6}, {"k", v.k},           {"observed", v.observed},
          {"expected", v.expected}, {"relation", v.relation}, {"note", v.note}};
}

inline json to_json(const SweepReport& r) {
  json vs = json::array();
  for (const Violation& v : r.violations) vs.push_back(to_json(v));
  return {{"theorem", r.theorem}, {"graphs", r.graphs},   {"matched", r.matched},
          {"violations", vs},     {"millis", r.millis},   {"passed", r.passed()}};
}

/// One NDJSON line for the violation stream.
inline std::string violation_line(const std::string& theorem, const Violation& v) {
  json j = to_json(v);
  j["theorem"] = theorem;
  return j.dump();
}

inline json to_json(const FamilyReport& r) {
  json vs = json::array();
  for (const FamilyViolation& v : r.violations) vs.push_back({{"mask", v.mask}, {"what", v.what}});
  json j{{"k", r.k},
         {"basis", to_json(r.basis)},
         {"base_dimension", r.base_dimension},
         {"members", r.members},
         {"violations", vs},
         {"passed", r.passed()}};
  if (r.members > 0) {
    j["min_dimension"] = r.min_dimension;
    j["max_dimension"] = r.max_dimension;
  }
  j["rigid_dimension"] = r.rigid_dimension ? json(*r.rigid_dimension) : json(nullptr);
  return j;
}

inline json graph_info(const Graph& g) {
  json j;
  j["name"] = g.name();
  j["n"] = g.order();
  j["m"] = g.size();
  j["graph6"] = to_graph6(g);
  j["connected"] = is_connected(g);
  if (g.order() >= 1) {
    j["min_degree"] = g.min_degree();
    j["max_degree"] = g.max_degree();
  }
  const auto d = diameter(g);
  j["diameter"] = d ? json(*d) : json(nullptr);
  const auto gi = girth(g);
  j["girth"] = gi ? json(*gi) : json(nullptr);
  if (g.order() >= 2) j["dimensionality"] = dimensionality(g);
  const TwinPartition tp = twin_partition(g);
  json classes = json::array();
  for (std::size_t i = 0; i < tp.classes.size(); ++i)
    classes.push_back({{"members", to_json(tp.classes[i])}, {"kind", std::string(to_string(tp.kinds[i]))}});
  j["twin_classes"] = classes;
  j["twins_free"] = tp.twins_free();
  return j;
}

}  // namespace adimlab
