#pragma once

// Exact solvers for the transversal number, matching number, quasidegree,
// and k-colorability, each returning a certificate with an explicit witness.
// All witnesses are tie-broken lexicographically so every output is
// deterministic. Desk scale: up to 64 vertices and 64 edges.

#include <optional>

#include "hypercrit/hypergraph.hpp"

namespace hypercrit {

inline constexpr int kMaxSolverEdges = 64;

struct TransversalCertificate {
  int tau = 0;
  VertexSet witness;  // lexicographically least minimum transversal
};

struct MatchingCertificate {
  int alpha_prime = 0;
  std::vector<Edge> witness;  // pairwise disjoint, lex-least maximum matching
  VertexSet matched_vertices;
};

struct QuasidegreeCertificate {
  int vertex = -1;
  int qd = 0;
  std::vector<Edge> witness;  // pairwise intersections all equal {vertex}
};

struct ColoringCertificate {
  int k = 0;
  std::vector<int> assignment;  // vertex -> color in 1..k
  bool proper = false;
};

namespace detail {

inline void require_solver_scale(const Hypergraph& h) {
  if (h.edge_count() > kMaxSolverEdges)
    throw ArgumentError("solvers capped at " + std::to_string(kMaxSolverEdges) +
                        " edges");
}

// Greedy packing of pairwise disjoint uncovered edges; every packed edge
// needs its own cover vertex, so the count is an admissible lower bound.
inline int packing_bound(const std::vector<Edge>& edges, std::uint64_t uncovered) {
  Edge used;
  int count = 0;
  for (std::uint64_t b = uncovered; b; b &= b - 1) {
    const Edge& e = edges[static_cast<std::size_t>(std::countr_zero(b))];
    if (!intersects(e, used)) {
      used = used | e;
      ++count;
    }
  }
  return count;
}

inline int greedy_cover_size(const Hypergraph& h) {
  std::uint64_t uncovered = h.edge_count() == 64
                                ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << h.edge_count()) - 1;
  int size = 0;
  while (uncovered) {
    int best_v = 0, best_hits = -1;
    for (int v = 0; v < h.n(); ++v) {
      int hits = 0;
      for (std::uint64_t b = uncovered; b; b &= b - 1)
        if (h.edges()[static_cast<std::size_t>(std::countr_zero(b))].contains(v))
          ++hits;
      if (hits > best_hits) {
        best_hits = hits;
        best_v = v;
      }
    }
    for (std::uint64_t b = uncovered; b; b &= b - 1) {
      const int i = std::countr_zero(b);
      if (h.edges()[static_cast<std::size_t>(i)].contains(best_v))
        uncovered &= ~(std::uint64_t{1} << i);
    }
    ++size;
  }
  return size;
}

// Branch and bound for the exact minimum hitting set size: branch on the
// vertices of a smallest uncovered edge, bound by the greedy packing.
inline void tau_bnb(const std::vector<Edge>& edges, std::uint64_t uncovered,
                    int chosen, int& best) {
  if (!uncovered) {
    best = std::min(best, chosen);
    return;
  }
  if (chosen + packing_bound(edges, uncovered) >= best) return;
  int pick = -1;
  for (std::uint64_t b = uncovered; b; b &= b - 1) {
    const int i = std::countr_zero(b);
    if (pick < 0 ||
        edges[static_cast<std::size_t>(i)].size() <
            edges[static_cast<std::size_t>(pick)].size())
      pick = i;
  }
  for (int v : edges[static_cast<std::size_t>(pick)].vertices()) {
    std::uint64_t rest = uncovered;
    for (std::uint64_t b = uncovered; b; b &= b - 1) {
      const int i = std::countr_zero(b);
      if (edges[static_cast<std::size_t>(i)].contains(v))
        rest &= ~(std::uint64_t{1} << i);
    }
    tau_bnb(edges, rest, chosen + 1, best);
  }
}

// Emits every transversal of size exactly `target` in lexicographic order.
// The visitor returns false to stop early.
template <typename Visit>
bool transversals_of_size(const Hypergraph& h, int target, Visit&& visit) {
  const auto& edges = h.edges();
  const std::uint64_t all = h.edge_count() == 64
                                ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << h.edge_count()) - 1;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int start, std::uint64_t uncovered,
                 int left) -> bool {
    if (left == 0) {
      if (uncovered) return true;
      return visit(VertexSet(Edge::from_vertices(chosen)));
    }
    if (packing_bound(edges, uncovered) > left) return true;
    for (int v = start; v < h.n(); ++v) {
      if (h.n() - v < left) break;
      std::uint64_t rest = uncovered;
      for (std::uint64_t b = uncovered; b; b &= b - 1) {
        const int i = std::countr_zero(b);
        if (edges[static_cast<std::size_t>(i)].contains(v))
          rest &= ~(std::uint64_t{1} << i);
      }
      // A vertex hitting nothing new cannot appear in a minimum transversal.
      if (rest == uncovered) continue;
      chosen.push_back(v);
      const bool go_on = self(self, v + 1, rest, left - 1);
      chosen.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return rec(rec, 0, all, target);
}

// Maximum clique over an adjacency given as per-vertex bitmasks, with a
// greedy coloring bound. Used for matchings (disjointness graph) and
// quasidegrees (exact-intersection compatibility graph).
struct CliqueGraph {
  int m = 0;
  std::vector<std::uint64_t> adj;
};

inline int clique_color_bound(const CliqueGraph& g, std::uint64_t p) {
  // Same color class = pairwise non-adjacent, so a clique takes at most one
  // vertex per class.
  std::vector<std::uint64_t> classes;
  for (std::uint64_t b = p; b; b &= b - 1) {
    const int v = std::countr_zero(b);
    bool placed = false;
    for (auto& cl : classes) {
      if ((cl & g.adj[static_cast<std::size_t>(v)]) == 0) {
        cl |= std::uint64_t{1} << v;
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back(std::uint64_t{1} << v);
  }
  return static_cast<int>(classes.size());
}

inline void clique_bnb(const CliqueGraph& g, std::uint64_t p, int size, int& best) {
  if (!p) {
    best = std::max(best, size);
    return;
  }
  if (size + std::popcount(p) <= best) return;
  if (size + clique_color_bound(g, p) <= best) return;
  while (p) {
    if (size + std::popcount(p) <= best) return;
    const int v = std::countr_zero(p);
    p &= p - 1;
    clique_bnb(g, p & g.adj[static_cast<std::size_t>(v)], size + 1, best);
  }
}

inline int max_clique_size(const CliqueGraph& g) {
  if (g.m == 0) return 0;
  const std::uint64_t all =
      g.m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.m) - 1;
  int best = 0;
  clique_bnb(g, all, 0, best);
  return best;
}

// First clique of the target size found by ascending-index DFS: the
// lexicographically least one.
inline bool lex_least_clique(const CliqueGraph& g, std::uint64_t p, int need,
                             std::vector<int>& out) {
  if (need == 0) return true;
  while (p) {
    if (std::popcount(p) < need) return false;
    const int v = std::countr_zero(p);
    p &= p - 1;
    out.push_back(v);
    if (lex_least_clique(g, p & g.adj[static_cast<std::size_t>(v)], need - 1, out))
      return true;
    out.pop_back();
  }
  return false;
}

}  // namespace detail

// Exact minimum transversal (hitting set). Empty edge set: tau = 0 with an
// empty witness, by convention.
inline TransversalCertificate transversal_number(const Hypergraph& h) {
  detail::require_solver_scale(h);
  if (h.edge_count() == 0) return {0, {}};
  for (const Edge& e : h.edges())
    if (e.empty()) throw ArgumentError("transversal undefined on empty edge");
  int best = detail::greedy_cover_size(h);
  const std::uint64_t all = h.edge_count() == 64
                                ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << h.edge_count()) - 1;
  detail::tau_bnb(h.edges(), all, 0, best);
  TransversalCertificate cert;
  cert.tau = best;
  detail::transversals_of_size(h, best, [&](VertexSet t) {
    cert.witness = t;
    return false;  // first = lexicographically least
  });
  return cert;
}

// All transversals of size tau(h), lexicographically sorted.
inline std::vector<VertexSet> enumerate_min_transversals(const Hypergraph& h) {
  const int tau = transversal_number(h).tau;
  std::vector<VertexSet> out;
  detail::transversals_of_size(h, tau, [&](VertexSet t) {
    out.push_back(t);
    return true;
  });
  return out;
}

// Exact maximum matching via maximum clique on the disjointness graph.
inline MatchingCertificate matching_number(const Hypergraph& h) {
  detail::require_solver_scale(h);
  MatchingCertificate cert;
  if (h.edge_count() == 0) return cert;
  detail::CliqueGraph g;
  g.m = h.edge_count();
  g.adj.assign(static_cast<std::size_t>(g.m), 0);
  for (int i = 0; i < g.m; ++i)
    for (int j = 0; j < g.m; ++j)
      if (i != j && !intersects(h.edges()[static_cast<std::size_t>(i)],
                                h.edges()[static_cast<std::size_t>(j)]))
        g.adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  cert.alpha_prime = detail::max_clique_size(g);
  std::vector<int> picked;
  const std::uint64_t all =
      g.m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.m) - 1;
  detail::lex_least_clique(g, all, cert.alpha_prime, picked);
  for (int i : picked) {
    cert.witness.push_back(h.edges()[static_cast<std::size_t>(i)]);
    cert.matched_vertices =
        cert.matched_vertices | h.edges()[static_cast<std::size_t>(i)];
  }
  return cert;
}

// Quasidegree of v: the largest family of edges through v whose pairwise
// intersections all equal {v}. A single incident edge counts as a family of
// one (qd = 1); no incident edge gives qd = 0.
inline QuasidegreeCertificate quasidegree(const Hypergraph& h, int v) {
  detail::require_solver_scale(h);
  if (v < 0 || v >= h.n())
    throw ArgumentError("quasidegree: vertex out of range");
  QuasidegreeCertificate cert;
  cert.vertex = v;
  std::vector<Edge> incident;
  for (const Edge& e : h.edges())
    if (e.contains(v)) incident.push_back(e);
  if (incident.empty()) return cert;
  detail::CliqueGraph g;
  g.m = static_cast<int>(incident.size());
  g.adj.assign(static_cast<std::size_t>(g.m), 0);
  const Edge only_v = Edge{}.with(v);
  for (int i = 0; i < g.m; ++i)
    for (int j = 0; j < g.m; ++j)
      if (i != j && (incident[static_cast<std::size_t>(i)] &
                     incident[static_cast<std::size_t>(j)]) == only_v)
        g.adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  cert.qd = detail::max_clique_size(g);
  std::vector<int> picked;
  const std::uint64_t all =
      g.m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.m) - 1;
  detail::lex_least_clique(g, all, cert.qd, picked);
  for (int i : picked) cert.witness.push_back(incident[static_cast<std::size_t>(i)]);
  return cert;
}

// Strict reading: no incident edge at all.
inline bool qd_is_zero(const Hypergraph& h, int v) {
  for (const Edge& e : h.edges())
    if (e.contains(v)) return false;
  return true;
}

// Proof-level reading of a collapsed quasidegree: no two incident edges meet
// exactly at v (covers the strict case as well).
inline bool qd_below_two(const Hypergraph& h, int v) {
  return quasidegree(h, v).qd < 2;
}

namespace detail {

inline bool coloring_is_proper(const Hypergraph& h, const std::vector<int>& colors,
                               int k) {
  if (static_cast<int>(colors.size()) != h.n()) return false;
  for (int c : colors)
    if (c < 1 || c > k) return false;
  for (const Edge& e : h.edges()) {
    const auto vs = e.vertices();
    bool mono = true;
    for (std::size_t i = 1; i < vs.size(); ++i)
      if (colors[static_cast<std::size_t>(vs[i])] !=
          colors[static_cast<std::size_t>(vs[0])]) {
        mono = false;
        break;
      }
    if (mono) return false;
  }
  return true;
}

}  // namespace detail

inline bool verify(const Hypergraph& h, const ColoringCertificate& c) {
  return c.proper && detail::coloring_is_proper(h, c.assignment, c.k);
}

// Exact decision by backtracking. Symmetry breaking: vertex 0 gets color 1
// and color c+1 is only used once color c appears.
inline std::optional<ColoringCertificate> is_k_colorable(const Hypergraph& h,
                                                         int k) {
  if (k < 1) throw ArgumentError("color count must be positive");
  std::vector<int> colors(static_cast<std::size_t>(h.n()), 0);
  auto rec = [&](auto&& self, int v, int used) -> bool {
    if (v == h.n()) return true;
    const int limit = std::min(used + 1, k);
    for (int c = 1; c <= limit; ++c) {
      colors[static_cast<std::size_t>(v)] = c;
      bool ok = true;
      for (const Edge& e : h.edges()) {
        if (!e.contains(v)) continue;
        bool complete = true, mono = true;
        for (int u : e.vertices()) {
          const int cu = colors[static_cast<std::size_t>(u)];
          if (cu == 0) {
            complete = false;
            break;
          }
          if (cu != c) mono = false;
        }
        if (complete && mono) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, v + 1, std::max(used, c))) return true;
    }
    colors[static_cast<std::size_t>(v)] = 0;
    return false;
  };
  if (!rec(rec, 0, 0)) return std::nullopt;
  ColoringCertificate cert{k, colors, true};
  if (!verify(h, cert)) throw std::logic_error("improper coloring produced");
  return cert;
}

// Nested-edge check used by the constructive 3-coloring's precondition.
inline std::optional<std::pair<Edge, Edge>> find_nested_edges(const Hypergraph& h) {
  const auto& es = h.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = 0; j < es.size(); ++j)
      if (i != j && subset_of(es[i], es[j]))
        return std::make_pair(es[i], es[j]);
  return std::nullopt;
}

// Constructive 3-coloring of an intersecting hypergraph: two colors inside
// the first edge, a third color everywhere else. Requires
// all edge sizes >= 2 and no edge nested inside another; otherwise throws
// "construction inapplicable" (callers fall back to is_k_colorable(h, 3)).
inline ColoringCertificate three_coloring_construct(const Hypergraph& h) {
  if (h.edge_count() == 0)
    throw PreconditionError("construction inapplicable: no edges");
  if (!is_intersecting(h).intersecting)
    throw PreconditionError("construction inapplicable: not intersecting");
  for (const Edge& e : h.edges())
    if (e.size() < 2)
      throw PreconditionError("construction inapplicable: 1-edge present");
  if (find_nested_edges(h))
    throw PreconditionError("construction inapplicable: nested edges");

  const Edge e = h.edges().front();
  const auto vs = e.vertices();
  std::vector<int> colors(static_cast<std::size_t>(h.n()), 3);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << vs.size()); ++code) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      colors[static_cast<std::size_t>(vs[i])] =
          ((code >> i) & 1) ? 2 : 1;
    bool ok = true;
    for (const Edge& f : h.edges()) {
      if (!subset_of(f, e)) continue;
      bool mono = true;
      const auto fs = f.vertices();
      for (std::size_t i = 1; i < fs.size(); ++i)
        if (colors[static_cast<std::size_t>(fs[i])] !=
            colors[static_cast<std::size_t>(fs[0])]) {
          mono = false;
          break;
        }
      if (mono) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ColoringCertificate cert{3, colors, true};
      if (!verify(h, cert))
        throw std::logic_error("constructive 3-coloring not proper");
      return cert;
    }
  }
  throw std::logic_error("no valid 2-coloring of the first edge");
}

// Witness re-validation entry points (consistency, not re-optimization).
inline bool verify(const Hypergraph& h, const TransversalCertificate& c) {
  if (c.witness.size() != c.tau) return false;
  for (const Edge& e : h.edges())
    if (!intersects(e, c.witness)) return false;
  return true;
}

inline bool verify(const Hypergraph& h, const MatchingCertificate& c) {
  if (static_cast<int>(c.witness.size()) != c.alpha_prime) return false;
  Edge seen;
  for (const Edge& e : c.witness) {
    if (!h.has_edge(e)) return false;
    if (intersects(e, seen)) return false;
    seen = seen | e;
  }
  return seen == c.matched_vertices;
}

inline bool verify(const Hypergraph& h, const QuasidegreeCertificate& c) {
  if (static_cast<int>(c.witness.size()) != c.qd) return false;
  const Edge only_v = c.vertex >= 0 ? Edge{}.with(c.vertex) : Edge{};
  for (std::size_t i = 0; i < c.witness.size(); ++i) {
    if (!h.has_edge(c.witness[i])) return false;
    if (!c.witness[i].contains(c.vertex)) return false;
    for (std::size_t j = i + 1; j < c.witness.size(); ++j)
      if ((c.witness[i] & c.witness[j]) != only_v) return false;
  }
  return true;
}

}  // namespace hypercrit
