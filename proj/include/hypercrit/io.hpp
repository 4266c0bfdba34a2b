#pragma once

// Text and JSON interchange for hypergraphs.
//
// Text format, one hypergraph per file:
//   line 1:            n <count>
//   following lines:   e <v1> <v2> ...      (0-based indices)
//   '#' starts a comment; blank lines are skipped.
// Writers emit vertices ascending within an edge and edges in lexicographic
// order, so output is bit-exact deterministic.
//
// JSON alternative: {"n": int, "edges": [[int,...],...]}.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hypercrit/hypergraph.hpp"

namespace hypercrit {

inline Hypergraph parse_hypergraph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;

  auto fail = [&](const std::string& msg, int col) -> void {
    throw ParseError(msg, lineno, col);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank
    if (n < 0) {
      if (tag != "n") fail("expected 'n <count>' header", 1);
      long long count = -1;
      if (!(ls >> count) || count < 0 || count > kMaxVertices)
        fail("bad vertex count", 3);
      std::string rest;
      if (ls >> rest) fail("trailing tokens after vertex count", 3);
      n = static_cast<int>(count);
      continue;
    }
    if (tag != "e") fail("expected 'e <v1> <v2> ...' edge line", 1);
    std::vector<int> vs;
    long long v;
    while (ls >> v) {
      if (v < 0 || v >= n)
        fail("vertex index " + std::to_string(v) + " out of range", 3);
      vs.push_back(static_cast<int>(v));
    }
    if (!ls.eof()) fail("bad vertex token", 3);
    if (vs.empty()) fail("empty edge", 1);
    const Edge e = Edge::from_vertices(vs);
    if (e.size() != static_cast<int>(vs.size()))
      fail("repeated vertex within edge", 3);
    if (std::find(edges.begin(), edges.end(), e) != edges.end())
      fail("duplicate edge " + to_string(e), 1);
    edges.push_back(e);
  }
  if (n < 0) throw ParseError("missing 'n <count>' header", lineno, 1);
  return Hypergraph(n, std::move(edges));
}

inline Hypergraph parse_hypergraph_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("expected object with \"n\" and \"edges\"", 1, 1);
  if (!j["n"].is_number_integer() || !j["edges"].is_array())
    throw ParseError("\"n\" must be an integer and \"edges\" an array", 1, 1);
  const int n = j["n"].get<int>();
  if (n < 0 || n > kMaxVertices) throw ParseError("bad vertex count", 1, 1);
  std::vector<Edge> edges;
  for (const auto& je : j["edges"]) {
    if (!je.is_array()) throw ParseError("edge must be an array", 1, 1);
    std::vector<int> vs;
    for (const auto& jv : je) {
      if (!jv.is_number_integer()) throw ParseError("bad vertex entry", 1, 1);
      const int v = jv.get<int>();
      if (v < 0 || v >= n) throw ParseError("vertex index out of range", 1, 1);
      vs.push_back(v);
    }
    if (vs.empty()) throw ParseError("empty edge", 1, 1);
    const Edge e = Edge::from_vertices(vs);
    if (e.size() != static_cast<int>(vs.size()))
      throw ParseError("repeated vertex within edge", 1, 1);
    if (std::find(edges.begin(), edges.end(), e) != edges.end())
      throw ParseError("duplicate edge " + to_string(e), 1, 1);
    edges.push_back(e);
  }
  return Hypergraph(n, std::move(edges));
}

inline Hypergraph parse_hypergraph(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') {
      nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
      if (j.is_discarded()) throw ParseError("malformed JSON", 1, 1);
      return parse_hypergraph_json(j);
    }
    break;
  }
  return parse_hypergraph_text(text);
}

inline Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_hypergraph(buf.str());
}

inline std::string write_hypergraph_text(const Hypergraph& h) {
  std::string out = "n " + std::to_string(h.n()) + "\n";
  for (const Edge& e : h.edges()) {
    out += "e";
    for (int v : e.vertices()) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

inline void write_hypergraph_file(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << write_hypergraph_text(h);
}

}  // namespace hypercrit
