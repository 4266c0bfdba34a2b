#pragma once

// The five constructive rewrites: saturation to maximal 1-special, shrinking
// to 1-edge-critical, the rank lift, minimalization of 1-vertex-critical
// inputs, and the uniformizing extension. Each emits a replayable trace and
// asserts its postconditions instead of trusting them.
//
// Whenever a choice is left open (pivot edge, scan order), the
// lexicographically least qualifying object is taken, so all runs are
// reproducible.

#include <optional>

#include "hypercrit/criticality.hpp"
#include "hypercrit/hypergraph.hpp"
#include "hypercrit/solvers.hpp"

namespace hypercrit {

struct TransformResult {
  Hypergraph output;
  TransformTrace trace;
};

struct RankLiftReport {
  int case_used = 0;              // 1: all pivot degrees = 2; 2: some >= 3
  std::vector<int> new_vertices;  // labels at insertion time
  std::vector<Edge> step1_shrinks;  // case 2: edges shrunk at x (pre-shrink)
  std::vector<Edge> step2_shrinks;  // case 2: edges shrunk at y (pre-shrink)
  std::vector<int> survivors;       // case 2: which of {x, y} remain
  int output_rank = 0;
  TransformTrace trace;
};

struct RankLiftResult {
  Hypergraph output;
  RankLiftReport report;
};

class DegenerateShrinkError : public Error {
 public:
  DegenerateShrinkError(const std::string& msg, TransformTrace trace)
      : Error(msg), trace(std::move(trace)) {}
  TransformTrace trace;
};

namespace detail {

// Shrinking e at v leaves the matching number alone exactly when every edge
// through v overlaps e in at least two vertices.
inline bool shrink_keeps_matching(const Hypergraph& h, Edge e, int v) {
  const Edge only_v = Edge{}.with(v);
  for (const Edge& f : h.edges()) {
    if (f == e || !f.contains(v)) continue;
    if ((e & f) == only_v) return false;
  }
  return true;
}

inline Hypergraph with_edge(const Hypergraph& h, Edge e) {
  auto edges = h.edges();
  edges.push_back(e);
  return Hypergraph(h.n(), std::move(edges));
}

inline Hypergraph without_edge(const Hypergraph& h, Edge e) {
  std::vector<Edge> edges;
  for (const Edge& f : h.edges())
    if (f != e) edges.push_back(f);
  return Hypergraph(h.n(), std::move(edges));
}

}  // namespace detail

// Repeatedly add the least non-edge minimum transversal as a new r-edge
// until every minimum transversal is an edge. The vertex set never changes
// and tau stays at r throughout.
inline TransformResult saturate(const Hypergraph& h) {
  const auto special = is_1_special(h);
  if (!special.value)
    throw PreconditionError("saturate requires a 1-special input");
  const int r = rank_profile(h).rank;
  Hypergraph cur = h;
  TransformTrace trace;
  for (;;) {
    std::optional<VertexSet> missing;
    for (const VertexSet& t : enumerate_min_transversals(cur)) {
      if (!cur.has_edge(t)) {
        missing = t;
        break;
      }
    }
    if (!missing) break;
    cur = detail::with_edge(cur, *missing);
    trace.steps.push_back(
        {TraceStep::Kind::AddEdge, *missing, -1, {}, false, {}});
    if (transversal_number(cur).tau != r)
      throw std::logic_error("saturation changed the transversal number");
  }
  if (!is_maximal_1_special(cur).value)
    throw std::logic_error("saturation did not reach maximal 1-special");
  return {std::move(cur), std::move(trace)};
}

// While some (e, u) has every edge through u overlapping e, shrink e at u.
// Scan order: edges lexicographic, vertices ascending, restarting after
// every rewrite. Keeps the input 1-vertex-critical at each step and ends
// 1-edge-critical on the same vertex set.
inline TransformResult shrink_to_edge_critical(const Hypergraph& h) {
  if (!is_vertex_critical(h).value)
    throw PreconditionError(
        "shrink_to_edge_critical requires a 1-vertex-critical input");
  Hypergraph cur = h;
  TransformTrace trace;
  for (;;) {
    bool fired = false;
    for (const Edge& e : cur.edges()) {
      for (int u : e.vertices()) {
        if (!detail::shrink_keeps_matching(cur, e, u)) continue;
        if (e.size() == 2)
          throw DegenerateShrinkError(
              "degenerate shrink: a 2-edge would become a 1-edge",
              std::move(trace));
        auto rw = shrink_edge(cur, e, u);
        trace.steps.insert(trace.steps.end(), rw.trace.steps.begin(),
                           rw.trace.steps.end());
        cur = std::move(rw.output);
        if (!is_vertex_critical(cur).value)
          throw std::logic_error(
              "shrink broke 1-vertex-criticality mid-transform");
        fired = true;
        break;
      }
      if (fired) break;
    }
    if (!fired) break;
  }
  if (!is_edge_critical(cur).value)
    throw std::logic_error("shrink loop ended on a non-edge-critical output");
  if (cur.n() != h.n())
    throw std::logic_error("shrink loop changed the vertex set");
  return {std::move(cur), std::move(trace)};
}

// Lift a 1-edge-critical hypergraph of rank r to one of rank r+1 with more
// vertices. The pivot must be an r-edge: the least one for uniform inputs,
// a caller-chosen one otherwise.
inline RankLiftResult rank_lift(const Hypergraph& h,
                                std::optional<Edge> pivot_arg = std::nullopt) {
  detail::require_member(h);
  if (!is_edge_critical(h).value)
    throw PreconditionError("rank_lift requires a 1-edge-critical input");
  const int r = rank_profile(h).rank;

  Edge pivot;
  if (pivot_arg) {
    pivot = *pivot_arg;
    if (!h.has_edge(pivot))
      throw ArgumentError("rank_lift: pivot is not an edge of the input");
    if (pivot.size() != r)
      throw ArgumentError("rank_lift: pivot must be an r-edge");
  } else {
    if (!rank_profile(h).is_uniform)
      throw PreconditionError(
          "rank_lift on a non-uniform input needs an explicit pivot edge");
    pivot = h.edges().front();
  }

  const auto deg = degree_profile(h);
  RankLiftReport report;
  TransformTrace& trace = report.trace;
  Hypergraph cur = h;

  int branch_vertex = -1;
  for (int u : pivot.vertices())
    if (deg.degree[static_cast<std::size_t>(u)] >= 3) {
      branch_vertex = u;
      break;
    }

  if (branch_vertex < 0) {

    // Case 1: every pivot vertex has degree 2, which forces |E| = r + 1.
    // One fresh vertex per edge plus the edge of fresh vertices.
    report.case_used = 1;
    if (cur.edge_count() != r + 1)
      throw std::logic_error(
          "rank_lift case 1: edge count is not r + 1; input was not a valid "
          "1-edge-critical intersecting hypergraph");
    std::vector<Edge> ordered{pivot};
    for (const Edge& e : h.edges())
      if (e != pivot) ordered.push_back(e);
    const int n0 = h.n();
    Edge fresh_edge;
    for (int i = 0; i <= r; ++i) {
      trace.steps.push_back(
          {TraceStep::Kind::AddVertex, {}, n0 + i, {}, false, {}});
      report.new_vertices.push_back(n0 + i);
      fresh_edge = fresh_edge.with(n0 + i);
    }
    std::vector<Edge> edges;
    for (int i = 0; i <= r; ++i) {
      const Edge before = ordered[static_cast<std::size_t>(i)];
      const Edge after = before.with(n0 + i);
      trace.steps.push_back(
          {TraceStep::Kind::DeleteEdge, before, -1, {}, false, {}});
      trace.steps.push_back(
          {TraceStep::Kind::AddEdge, after, -1, {}, false, {}});
      edges.push_back(after);
    }
    trace.steps.push_back(
        {TraceStep::Kind::AddEdge, fresh_edge, -1, {}, false, {}});
    edges.push_back(fresh_edge);
    cur = Hypergraph(n0 + r + 1, std::move(edges));
    if (cur.edge_count() != h.edge_count() + 1)
      throw std::logic_error("rank_lift case 1: unexpected edge count");
  } else {
    // Case 2: some pivot vertex u has degree >= 3. Split u's edges across
    // two fresh vertices x, y, then drop x and y again wherever the shrink
    // keeps the matching number (checked in slot order against the evolving
    // edge set).
    report.case_used = 2;
    const int u = branch_vertex;
    Edge only_u = Edge{}.with(u);
    Edge witness_f;
    bool found_f = false;
    for (const Edge& f : h.edges())
      if ((pivot & f) == only_u) {
        witness_f = f;
        found_f = true;
        break;
      }
    if (!found_f)
      throw std::logic_error("rank_lift case 2: no witness edge meets the "
                             "pivot exactly at u");
    std::vector<Edge> through_u;
    for (const Edge& e : h.edges())
      if (e.contains(u) && e != pivot && e != witness_f) through_u.push_back(e);

    const int x = h.n(), y = h.n() + 1;
    report.new_vertices = {x, y};
    trace.steps.push_back({TraceStep::Kind::AddVertex, {}, x, {}, false, {}});
    trace.steps.push_back({TraceStep::Kind::AddVertex, {}, y, {}, false, {}});

    std::vector<Edge> slots;  // e'_0, middles..., e'_{d(u)-1}
    std::vector<std::pair<Edge, Edge>> rewires;
    rewires.emplace_back(pivot, pivot.with(x));
    for (const Edge& e : through_u)
      rewires.emplace_back(e, e.without(u).with(x).with(y));
    rewires.emplace_back(witness_f, witness_f.with(y));

    std::vector<Edge> edges;
    for (const Edge& e : h.edges())
      if (!e.contains(u)) edges.push_back(e);
    for (const auto& [before, after] : rewires) {
      trace.steps.push_back(
          {TraceStep::Kind::DeleteEdge, before, -1, {}, false, {}});
      trace.steps.push_back(
          {TraceStep::Kind::AddEdge, after, -1, {}, false, {}});
      edges.push_back(after);
      slots.push_back(after);
    }
    cur = Hypergraph(h.n() + 2, std::move(edges));

    for (int pass = 0; pass < 2; ++pass) {
      const int z = pass == 0 ? x : y;
      auto& log = pass == 0 ? report.step1_shrinks : report.step2_shrinks;
      for (Edge& slot : slots) {
        if (!slot.contains(z)) continue;
        if (!cur.has_edge(slot)) continue;  // merged away earlier
        if (!detail::shrink_keeps_matching(cur, slot, z)) continue;
        auto rw = shrink_edge(cur, slot, z);
        trace.steps.insert(trace.steps.end(), rw.trace.steps.begin(),
                           rw.trace.steps.end());
        cur = std::move(rw.output);
        log.push_back(slot);
        slot = slot.without(z);
      }
    }

    // Drop whichever of x, y ended isolated (larger label first so the
    // other label stays put while recorded).
    const auto deg2 = degree_profile(cur);
    const bool x_alive = deg2.degree[static_cast<std::size_t>(x)] > 0;
    const bool y_alive = deg2.degree[static_cast<std::size_t>(y)] > 0;
    if (!x_alive && !y_alive)
      throw std::logic_error("rank_lift case 2: both fresh vertices dropped");
    if (x_alive) report.survivors.push_back(x);
    if (y_alive) report.survivors.push_back(y);
    for (int z : {y, x}) {
      if (deg2.degree[static_cast<std::size_t>(z)] > 0) continue;
      TraceStep step{TraceStep::Kind::DeleteVertex, {}, z, {}, false,
                     detail::delete_vertex_remap(cur.n(), z)};
      trace.steps.push_back(std::move(step));
      std::vector<Edge> rebuilt;
      for (const Edge& e : cur.edges())
        rebuilt.push_back(detail::drop_vertex_label(e, z));
      cur = Hypergraph(cur.n() - 1, std::move(rebuilt));
    }
  }

  if (cur.n() <= h.n())
    throw std::logic_error("rank_lift did not grow the vertex set");
  report.output_rank = rank_profile(cur).rank;
  if (report.output_rank > r + 1)
    throw std::logic_error("rank_lift output rank exceeds r + 1");
  if (report.case_used == 1 && report.output_rank != r + 1)
    throw std::logic_error("rank_lift case 1 output rank is not r + 1");
  if (!is_intersecting(cur).intersecting)
    throw std::logic_error("rank_lift output is not intersecting");
  if (!is_edge_critical(cur).value)
    throw std::logic_error("rank_lift output is not 1-edge-critical");
  return {std::move(cur), std::move(report)};
}

// Repeatedly delete the least edge whose removal preserves
// 1-vertex-criticality. The vertex set is untouched: every remaining vertex
// keeps qd >= 2, hence degree >= 2.
inline TransformResult minimalize(const Hypergraph& h) {
  if (!is_vertex_critical(h).value)
    throw PreconditionError("minimalize requires a 1-vertex-critical input");
  Hypergraph cur = h;
  TransformTrace trace;
  for (;;) {
    std::optional<Edge> removable;
    for (const Edge& e : cur.edges()) {
      const Hypergraph rem = detail::without_edge(cur, e);
      if (validate_membership(rem).in_H_r && is_vertex_critical(rem).value) {
        removable = e;
        break;
      }
    }
    if (!removable) break;
    trace.steps.push_back(
        {TraceStep::Kind::DeleteEdge, *removable, -1, {}, false, {}});
    cur = detail::without_edge(cur, *removable);
  }
  if (cur.n() != h.n())
    throw std::logic_error("minimalize changed the vertex set");
  if (degree_profile(cur).min_degree < 1)
    throw std::logic_error("minimalize isolated a vertex");
  if (!is_minimal_vertex_critical(cur).value)
    throw std::logic_error("minimalize ended on a non-minimal output");
  return {std::move(cur), std::move(trace)};
}

// Grow a minimal 1-vertex-critical hypergraph of rank r around a short edge:
// pick the least t-edge e (t < r), a vertex u in e whose quasidegree
// collapses in h - e, and an r-edge f meeting e exactly at u; then add a
// fresh vertex v, add (f \ {u}) ∪ {v}, and widen e to e ∪ {v}.
inline TransformResult uniformize_extend(const Hypergraph& h, int r) {
  detail::require_member(h);
  if (rank_profile(h).rank != r)
    throw ArgumentError("uniformize_extend: rank mismatch");
  if (!is_vertex_critical(h).value)
    throw PreconditionError(
        "uniformize_extend requires a 1-vertex-critical input");
  if (!is_minimal_vertex_critical(h).value)
    throw PreconditionError("uniformize_extend requires a minimal input");

  std::optional<std::tuple<Edge, int, Edge>> triple;
  for (const Edge& e : h.edges()) {
    if (e.size() >= r) continue;
    const Hypergraph rem = delete_edges(h, {e}).output;
    for (int u : e.vertices()) {
      if (!qd_below_two(rem, u)) continue;
      const Edge only_u = Edge{}.with(u);
      for (const Edge& f : h.edges()) {
        if (f.size() == r && (e & f) == only_u) {
          triple = std::make_tuple(e, u, f);
          break;
        }
      }
      if (triple) break;
    }
    if (triple) break;
  }
  if (!triple)
    throw PreconditionError(
        "construction inapplicable: no short edge with a collapsing vertex "
        "and an r-edge witness");

  const auto [e, u, f] = *triple;
  const int v = h.n();
  const Edge added = f.without(u).with(v);
  const Edge widened = e.with(v);
  TransformTrace trace;
  trace.steps.push_back({TraceStep::Kind::AddVertex, {}, v, {}, false, {}});
  trace.steps.push_back({TraceStep::Kind::AddEdge, added, -1, {}, false, {}});
  trace.steps.push_back({TraceStep::Kind::DeleteEdge, e, -1, {}, false, {}});
  trace.steps.push_back({TraceStep::Kind::AddEdge, widened, -1, {}, false, {}});

  std::vector<Edge> edges;
  for (const Edge& g : h.edges())
    if (g != e) edges.push_back(g);
  edges.push_back(added);
  edges.push_back(widened);
  Hypergraph out(h.n() + 1, std::move(edges));

  if (!is_intersecting(out).intersecting)
    throw std::logic_error("uniformize_extend output is not intersecting");
  if (rank_profile(out).rank != r)
    throw std::logic_error("uniformize_extend output rank changed");
  if (!is_vertex_critical(out).value)
    throw std::logic_error("uniformize_extend output not 1-vertex-critical");
  const auto dp = degree_profile(out);
  if (dp.degree[static_cast<std::size_t>(v)] != 2 || quasidegree(out, v).qd != 2)
    throw std::logic_error("fresh vertex must have d = qd = 2");
  return {std::move(out), std::move(trace)};
}

}  // namespace hypercrit
