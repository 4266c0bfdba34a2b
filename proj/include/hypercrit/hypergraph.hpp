#pragma once

// Value-semantic hypergraph over a dense vertex universe 0..n-1, with the
// elementary rewrites (add / delete / shrink / vertex-delete-and-shrink),
// structural queries, and replayable rewrite traces.
//
// Vertices are indices into a fixed universe; edges are bitmasks, so the
// whole library is capped at 64 vertices (far beyond the desk scale the
// solvers are meant for).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypercrit {

inline constexpr int kMaxVertices = 64;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad call-site arguments (unknown edge, out-of-range vertex, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// An operation's documented precondition does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  int line;
  int column;
};

// A set of vertices, stored as a bitmask. Used both for edges and for
// vertex-set witnesses (transversals, color classes, ...).
struct Edge {
  std::uint64_t bits = 0;

  constexpr Edge() = default;
  explicit constexpr Edge(std::uint64_t b) : bits(b) {}
  Edge(std::initializer_list<int> vs) {
    for (int v : vs) bits |= mask_of(v);
  }

  static Edge from_vertices(const std::vector<int>& vs) {
    Edge e;
    for (int v : vs) e.bits |= mask_of(v);
    return e;
  }

  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool contains(int v) const { return (bits & mask_of(v)) != 0; }
  Edge with(int v) const { return Edge(bits | mask_of(v)); }
  Edge without(int v) const { return Edge(bits & ~mask_of(v)); }

  int min_vertex() const { return std::countr_zero(bits); }

  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits; b; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr bool operator==(Edge, Edge) = default;

 private:
  static constexpr std::uint64_t mask_of(int v) {
    if (v < 0 || v >= kMaxVertices)
      throw ArgumentError("vertex index out of range: " + std::to_string(v));
    return std::uint64_t{1} << v;
  }
};

using VertexSet = Edge;

inline constexpr Edge operator&(Edge a, Edge b) { return Edge(a.bits & b.bits); }
inline constexpr Edge operator|(Edge a, Edge b) { return Edge(a.bits | b.bits); }
inline constexpr Edge operator-(Edge a, Edge b) { return Edge(a.bits & ~b.bits); }

inline bool intersects(Edge a, Edge b) { return (a.bits & b.bits) != 0; }
inline bool subset_of(Edge a, Edge b) { return (a.bits & ~b.bits) == 0; }

// Two edges overlap when they share at least two vertices.
inline bool overlapping(Edge a, Edge b) { return (a & b).size() >= 2; }

// Lexicographic order of the ascending vertex sequences. A proper prefix
// sorts before its extensions, so {0} < {0,1} < {0,2} < {1}.
inline bool lex_less(Edge a, Edge b) {
  std::uint64_t x = a.bits, y = b.bits;
  while (x && y) {
    int va = std::countr_zero(x), vb = std::countr_zero(y);
    if (va != vb) return va < vb;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

inline std::string to_string(Edge e) {
  std::string s = "{";
  bool first = true;
  for (int v : e.vertices()) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

// Simple hypergraph: a duplicate-free edge family over vertices 0..n-1.
// Immutable after construction; every rewrite returns a new value.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0 || n > kMaxVertices)
      throw ArgumentError("vertex count out of range: " + std::to_string(n));
    const Edge uni = universe();
    for (const Edge& e : edges_) {
      if (e.empty()) throw ArgumentError("empty edge");
      if (!subset_of(e, uni))
        throw ArgumentError("edge " + to_string(e) + " not within universe 0.." +
                            std::to_string(n - 1));
    }
    std::sort(edges_.begin(), edges_.end(), lex_less);
    for (std::size_t i = 1; i < edges_.size(); ++i)
      if (edges_[i] == edges_[i - 1])
        throw ArgumentError("duplicate edge " + to_string(edges_[i]));
  }

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  Edge universe() const {
    return n_ == 64 ? Edge(~std::uint64_t{0})
                    : Edge((std::uint64_t{1} << n_) - 1);
  }

  bool has_edge(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e, lex_less);
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;  // lex-sorted, duplicate-free
};

// ---------------------------------------------------------------------------
// Structural profiles and membership in H_r.

struct RankProfile {
  int rank = 0;
  int min_edge_size = 0;
  bool is_uniform = false;
};

struct DegreeProfile {
  std::vector<int> degree;
  int min_degree = 0;
  std::vector<int> isolated;
};

struct MembershipViolation {
  std::string kind;  // "no_edges" | "small_edge" | "isolated_vertex" | "disjoint_pair"
  std::vector<Edge> edges;
  int vertex = -1;
};

struct MembershipReport {
  bool in_H_r = false;
  std::vector<MembershipViolation> violations;
};

struct IntersectingCheck {
  bool intersecting = false;
  std::optional<std::pair<Edge, Edge>> disjoint_witness;
};

inline RankProfile rank_profile(const Hypergraph& h) {
  if (h.edge_count() == 0) throw ArgumentError("rank undefined: no edges");
  RankProfile p;
  p.rank = 0;
  p.min_edge_size = kMaxVertices + 1;
  for (const Edge& e : h.edges()) {
    p.rank = std::max(p.rank, e.size());
    p.min_edge_size = std::min(p.min_edge_size, e.size());
  }
  p.is_uniform = (p.rank == p.min_edge_size);
  return p;
}

inline DegreeProfile degree_profile(const Hypergraph& h) {
  DegreeProfile p;
  p.degree.assign(static_cast<std::size_t>(h.n()), 0);
  for (const Edge& e : h.edges())
    for (int v : e.vertices()) ++p.degree[static_cast<std::size_t>(v)];
  p.min_degree = h.n() == 0 ? 0
                            : *std::min_element(p.degree.begin(), p.degree.end());
  for (int v = 0; v < h.n(); ++v)
    if (p.degree[static_cast<std::size_t>(v)] == 0) p.isolated.push_back(v);
  return p;
}

inline IntersectingCheck is_intersecting(const Hypergraph& h) {
  const auto& es = h.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (!intersects(es[i], es[j]))
        return {false, std::make_pair(es[i], es[j])};
  return {true, std::nullopt};
}

// h is a valid member of H_r iff it is intersecting, every edge has >= 2
// vertices, and no vertex is isolated. Reports violations, never throws.
inline MembershipReport validate_membership(const Hypergraph& h) {
  MembershipReport rep;
  if (h.edge_count() == 0) {
    rep.violations.push_back({"no_edges", {}, -1});
  } else {
    for (const Edge& e : h.edges())
      if (e.size() < 2) rep.violations.push_back({"small_edge", {e}, -1});
    const auto deg = degree_profile(h);
    for (int v : deg.isolated)
      rep.violations.push_back({"isolated_vertex", {}, v});
    const auto inter = is_intersecting(h);
    if (!inter.intersecting)
      rep.violations.push_back(
          {"disjoint_pair",
           {inter.disjoint_witness->first, inter.disjoint_witness->second},
           -1});
  }
  rep.in_H_r = rep.violations.empty();
  return rep;
}

inline std::vector<std::vector<int>> connected_components(const Hypergraph& h) {
  std::vector<int> parent(static_cast<std::size_t>(h.n()));
  for (int v = 0; v < h.n(); ++v) parent[static_cast<std::size_t>(v)] = v;
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const Edge& e : h.edges()) {
    const auto vs = e.vertices();
    for (std::size_t i = 1; i < vs.size(); ++i)
      parent[static_cast<std::size_t>(find(vs[i]))] = find(vs[0]);
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> root_slot(static_cast<std::size_t>(h.n()), -1);
  for (int v = 0; v < h.n(); ++v) {
    int r = find(v);
    if (root_slot[static_cast<std::size_t>(r)] < 0) {
      root_slot[static_cast<std::size_t>(r)] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(root_slot[static_cast<std::size_t>(r)])]
        .push_back(v);
  }
  return comps;
}

// ---------------------------------------------------------------------------
// Rewrites and traces.

struct TraceStep {
  enum class Kind { AddEdge, DeleteEdge, ShrinkEdge, AddVertex, DeleteVertex };
  Kind kind{};
  Edge edge{};             // AddEdge / DeleteEdge target; ShrinkEdge pre-edge
  int vertex = -1;         // ShrinkEdge pivot; AddVertex / DeleteVertex index
  Edge result{};           // ShrinkEdge post-edge
  bool merged = false;     // ShrinkEdge collapsed onto an existing equal edge
  std::vector<int> remap;  // DeleteVertex old->new labels (-1 for the removed)
};

struct TransformTrace {
  std::vector<TraceStep> steps;
  bool empty() const { return steps.empty(); }
};

struct RewriteResult {
  Hypergraph output;
  TransformTrace trace;
  // old label -> new label, -1 when the vertex was removed. Identity-sized
  // to the input universe so certificates stay translatable.
  std::vector<int> vertex_map;
};

namespace detail {

inline std::vector<int> identity_map(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) m[static_cast<std::size_t>(v)] = v;
  return m;
}

// Remap a mask after deleting vertex `idx`: labels above shift down by one.
inline Edge drop_vertex_label(Edge e, int idx) {
  const std::uint64_t low = e.bits & ((std::uint64_t{1} << idx) - 1);
  const std::uint64_t high = e.bits >> (idx + 1);
  return Edge(low | (high << idx));
}

inline std::vector<int> delete_vertex_remap(int n, int idx) {
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    m[static_cast<std::size_t>(v)] = v == idx ? -1 : (v > idx ? v - 1 : v);
  return m;
}

}  // namespace detail

// Replays a trace against its input; throws on any inconsistency so a trace
// that validates is a proof of the rewrite.
inline Hypergraph replay(const Hypergraph& input, const TransformTrace& trace) {
  int n = input.n();
  std::vector<Edge> edges = input.edges();
  auto find_edge = [&](Edge e) {
    return std::find(edges.begin(), edges.end(), e);
  };
  for (const TraceStep& s : trace.steps) {
    switch (s.kind) {
      case TraceStep::Kind::AddEdge: {
        if (find_edge(s.edge) != edges.end())
          throw Error("replay: adding duplicate edge " + to_string(s.edge));
        edges.push_back(s.edge);
        break;
      }
      case TraceStep::Kind::DeleteEdge: {
        auto it = find_edge(s.edge);
        if (it == edges.end())
          throw Error("replay: deleting unknown edge " + to_string(s.edge));
        edges.erase(it);
        break;
      }
      case TraceStep::Kind::ShrinkEdge: {
        auto it = find_edge(s.edge);
        if (it == edges.end())
          throw Error("replay: shrinking unknown edge " + to_string(s.edge));
        if (!s.edge.contains(s.vertex))
          throw Error("replay: shrink vertex not in edge");
        const Edge result = s.edge.without(s.vertex);
        if (result != s.result) throw Error("replay: shrink result mismatch");
        edges.erase(it);
        const bool merged = find_edge(result) != edges.end();
        if (merged != s.merged) throw Error("replay: merge flag mismatch");
        if (!merged) edges.push_back(result);
        break;
      }
      case TraceStep::Kind::AddVertex: {
        if (s.vertex != n) throw Error("replay: non-dense vertex addition");
        ++n;
        break;
      }
      case TraceStep::Kind::DeleteVertex: {
        if (s.vertex < 0 || s.vertex >= n)
          throw Error("replay: vertex out of range");
        for (const Edge& e : edges)
          if (e.contains(s.vertex))
            throw Error("replay: deleting non-isolated vertex");
        if (!s.remap.empty() && s.remap != detail::delete_vertex_remap(n, s.vertex))
          throw Error("replay: re-index map mismatch");
        for (Edge& e : edges) e = detail::drop_vertex_label(e, s.vertex);
        --n;
        break;
      }
    }
  }
  return Hypergraph(n, std::move(edges));
}

// Replace e by e \ {v}. Merges with an existing equal edge (logged in the
// trace); never touches the vertex universe.
inline RewriteResult shrink_edge(const Hypergraph& h, Edge e, int v) {
  if (!h.has_edge(e)) throw ArgumentError("shrink_edge: unknown edge " + to_string(e));
  if (!e.contains(v))
    throw ArgumentError("shrink_edge: vertex " + std::to_string(v) +
                        " not in edge " + to_string(e));
  if (e.size() == 1)
    throw ArgumentError("shrink_edge: shrinking a 1-edge would empty it");
  const Edge result = e.without(v);
  std::vector<Edge> edges;
  edges.reserve(h.edges().size());
  bool merged = false;
  for (const Edge& f : h.edges()) {
    if (f == e) continue;
    if (f == result) merged = true;
    edges.push_back(f);
  }
  if (!merged) edges.push_back(result);
  TransformTrace trace;
  trace.steps.push_back({TraceStep::Kind::ShrinkEdge, e, v, result, merged, {}});
  return {Hypergraph(h.n(), std::move(edges)), std::move(trace),
          detail::identity_map(h.n())};
}

// Delete the given edges, then drop any vertex left isolated (re-indexing
// the survivors densely).
inline RewriteResult delete_edges(const Hypergraph& h, const std::vector<Edge>& es) {
  std::vector<Edge> sorted(es);
  std::sort(sorted.begin(), sorted.end(), lex_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const Edge& e : sorted)
    if (!h.has_edge(e))
      throw ArgumentError("delete_edges: unknown edge " + to_string(e));

  TransformTrace trace;
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    if (std::binary_search(sorted.begin(), sorted.end(), e, lex_less)) continue;
    edges.push_back(e);
  }
  for (const Edge& e : sorted)
    trace.steps.push_back({TraceStep::Kind::DeleteEdge, e, -1, {}, false, {}});

  Edge covered;
  for (const Edge& e : edges) covered = covered | e;
  std::vector<int> vmap = detail::identity_map(h.n());
  int n = h.n();
  // Descending order keeps the labels of later deletions stable.
  for (int v = h.n() - 1; v >= 0; --v) {
    if (covered.contains(v)) continue;
    TraceStep step{TraceStep::Kind::DeleteVertex, {}, v, {}, false,
                   detail::delete_vertex_remap(n, v)};
    trace.steps.push_back(std::move(step));
    for (Edge& e : edges) e = detail::drop_vertex_label(e, v);
    covered = detail::drop_vertex_label(covered, v);
    --n;
    vmap[static_cast<std::size_t>(v)] = -1;
    for (int u = v + 1; u < h.n(); ++u) {
      auto& slot = vmap[static_cast<std::size_t>(u)];
      if (slot >= 0) --slot;
    }
  }
  return {Hypergraph(n, std::move(edges)), std::move(trace), std::move(vmap)};
}

// Remove vertex v from the universe after shrinking every incident edge at
// v; empty results and duplicates collapse. Only v leaves the universe.
inline RewriteResult vertex_delete_and_shrink(const Hypergraph& h, int v) {
  if (v < 0 || v >= h.n())
    throw ArgumentError("vertex_delete_and_shrink: vertex out of range");
  TransformTrace trace;
  std::vector<Edge> edges;
  for (const Edge& e : h.edges())
    if (!e.contains(v)) edges.push_back(e);
  for (const Edge& e : h.edges()) {
    if (!e.contains(v)) continue;
    if (e.size() == 1) {
      trace.steps.push_back({TraceStep::Kind::DeleteEdge, e, -1, {}, false, {}});
      continue;
    }
    const Edge result = e.without(v);
    const bool merged =
        std::find(edges.begin(), edges.end(), result) != edges.end();
    trace.steps.push_back(
        {TraceStep::Kind::ShrinkEdge, e, v, result, merged, {}});
    if (!merged) edges.push_back(result);
  }
  trace.steps.push_back({TraceStep::Kind::DeleteVertex, {}, v, {}, false,
                         detail::delete_vertex_remap(h.n(), v)});
  for (Edge& e : edges) e = detail::drop_vertex_label(e, v);
  return {Hypergraph(h.n() - 1, std::move(edges)), std::move(trace),
          detail::delete_vertex_remap(h.n(), v)};
}

}  // namespace hypercrit
