#pragma once

// JSON views of hypergraphs, certificates, class memberships, traces, and
// search records. nlohmann::json keeps object keys sorted, so every dump is
// byte-deterministic.

#include <json.hpp>

#include "hypercrit/criticality.hpp"
#include "hypercrit/hypergraph.hpp"
#include "hypercrit/search.hpp"
#include "hypercrit/solvers.hpp"
#include "hypercrit/transforms.hpp"

namespace hypercrit {

using json = nlohmann::json;

inline json to_json(Edge e) { return json(e.vertices()); }

inline json to_json(const Hypergraph& h) {
  json edges = json::array();
  for (const Edge& e : h.edges()) edges.push_back(to_json(e));
  return json{{"n", h.n()}, {"edges", edges}};
}

inline json to_json(const RankProfile& p) {
  return json{{"rank", p.rank},
              {"min_edge_size", p.min_edge_size},
              {"is_uniform", p.is_uniform}};
}

inline json to_json(const DegreeProfile& p) {
  return json{{"degree", p.degree},
              {"min_degree", p.min_degree},
              {"isolated", p.isolated}};
}

inline json to_json(const MembershipReport& r) {
  json vs = json::array();
  for (const auto& v : r.violations) {
    json jv{{"kind", v.kind}};
    if (!v.edges.empty()) {
      json es = json::array();
      for (const Edge& e : v.edges) es.push_back(to_json(e));
      jv["edges"] = es;
    }
    if (v.vertex >= 0) jv["vertex"] = v.vertex;
    vs.push_back(jv);
  }
  return json{{"in_H_r", r.in_H_r}, {"violations", vs}};
}

inline json to_json(const TransversalCertificate& c) {
  return json{{"tau", c.tau}, {"witness", to_json(c.witness)}};
}

inline json to_json(const MatchingCertificate& c) {
  json w = json::array();
  for (const Edge& e : c.witness) w.push_back(to_json(e));
  return json{{"alpha_prime", c.alpha_prime},
              {"witness", w},
              {"matched_vertices", to_json(c.matched_vertices)}};
}

inline json to_json(const QuasidegreeCertificate& c) {
  json w = json::array();
  for (const Edge& e : c.witness) w.push_back(to_json(e));
  return json{{"vertex", c.vertex}, {"qd", c.qd}, {"witness", w}};
}

inline json to_json(const ColoringCertificate& c) {
  return json{{"k", c.k}, {"assignment", c.assignment}, {"proper", c.proper}};
}

inline json to_json(const ClassMembership& m) {
  json witnesses = json::object();
  if (!m.h1.value) {
    json w = json::object();
    if (m.h1.non_uniform_witness)
      w["non_uniform_edge"] = to_json(*m.h1.non_uniform_witness);
    if (m.h1.two_coloring) w["two_coloring"] = to_json(*m.h1.two_coloring);
    witnesses["H1"] = w;
  }
  if (!m.h2.value) {
    json w = json::object();
    if (m.h2.non_edge_transversal)
      w["non_edge_min_transversal"] = to_json(*m.h2.non_edge_transversal);
    if (m.h2.special.short_transversal)
      w["short_transversal"] = to_json(*m.h2.special.short_transversal);
    witnesses["H2"] = w;
  }
  if (!m.h3.value && m.h3.short_transversal)
    witnesses["H3"] = json{{"short_transversal", to_json(*m.h3.short_transversal)}};
  if (!m.h4.value && m.h4.witness)
    witnesses["H4"] = json{{"edge", to_json(m.h4.witness->first)},
                           {"vertex", m.h4.witness->second}};
  if (!m.h5.value && m.h5.witness_vertex)
    witnesses["H5"] = json{{"vertex", *m.h5.witness_vertex}};
  return json{{"rank", m.rank},   {"H1", m.h1.value}, {"H2", m.h2.value},
              {"H3", m.h3.value}, {"H4", m.h4.value}, {"H5", m.h5.value},
              {"witnesses", witnesses}};
}

inline json to_json(const TraceStep& s) {
  switch (s.kind) {
    case TraceStep::Kind::AddEdge:
      return json{{"op", "add_edge"}, {"edge", to_json(s.edge)}};
    case TraceStep::Kind::DeleteEdge:
      return json{{"op", "delete_edge"}, {"edge", to_json(s.edge)}};
    case TraceStep::Kind::ShrinkEdge:
      return json{{"op", "shrink_edge"},
                  {"edge", to_json(s.edge)},
                  {"vertex", s.vertex},
                  {"result", to_json(s.result)},
                  {"merged", s.merged}};
    case TraceStep::Kind::AddVertex:
      return json{{"op", "add_vertex"}, {"vertex", s.vertex}};
    case TraceStep::Kind::DeleteVertex:
      return json{{"op", "delete_vertex"},
                  {"vertex", s.vertex},
                  {"remap", s.remap}};
  }
  throw std::logic_error("unknown trace step");
}

// One rewrite per line (JSON Lines).
inline std::string trace_to_jsonl(const TransformTrace& t) {
  std::string out;
  for (const TraceStep& s : t.steps) {
    out += to_json(s).dump();
    out += "\n";
  }
  return out;
}

inline json to_json(const RankLiftReport& r) {
  json s1 = json::array(), s2 = json::array();
  for (const Edge& e : r.step1_shrinks) s1.push_back(to_json(e));
  for (const Edge& e : r.step2_shrinks) s2.push_back(to_json(e));
  return json{{"case_used", r.case_used},
              {"new_vertices", r.new_vertices},
              {"step1_shrinks", s1},
              {"step2_shrinks", s2},
              {"survivors_of_xy", r.survivors},
              {"output_rank", r.output_rank}};
}

inline json to_json(const ExtremalRecord& r) {
  json j{{"class_index", r.class_index},
         {"rank", r.rank},
         {"n_max_searched", r.n_max_searched},
         {"best_order", r.best_order},
         {"exhaustive", r.exhaustive}};
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  return j;
}

inline json to_json(const NestingReport& r) {
  json seps = json::array();
  for (int i = 0; i < 4; ++i) {
    json s{{"pair",
            "H" + std::to_string(i + 2) + "\\H" + std::to_string(i + 1)}};
    s["example"] = r.separators[static_cast<std::size_t>(i)]
                       ? to_json(*r.separators[static_cast<std::size_t>(i)])
                       : json(nullptr);
    seps.push_back(s);
  }
  json viols = json::array();
  for (const auto& v : r.violations) {
    viols.push_back(json{{"hypergraph", to_json(v.hypergraph)},
                         {"flags", v.flags}});
  }
  return json{{"rank", r.rank},
              {"n_max", r.n_max},
              {"members", r.members},
              {"class_counts", r.class_counts},
              {"violations", viols},
              {"separators", seps},
              {"exhaustive", r.exhaustive}};
}

inline json to_json(const CatalogEntry& e) {
  return json{{"name", e.name},
              {"hypergraph", to_json(e.hypergraph)},
              {"provenance", e.provenance}};
}

}  // namespace hypercrit
