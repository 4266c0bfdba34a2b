#pragma once

// Classification of H_r members into the five nested criticality classes,
// with failure witnesses. Each characterization-based predicate has a
// definitional companion that rewrites the hypergraph and recomputes the
// matching number; the pairs are cross-checked over the exhaustive corpus
// in the test suite.

#include <optional>

#include "hypercrit/hypergraph.hpp"
#include "hypercrit/solvers.hpp"

namespace hypercrit {

struct SpecialCheck {
  bool value = false;
  std::optional<VertexSet> short_transversal;  // size < r when value is false
};

struct MaximalSpecialCheck {
  bool value = false;
  std::optional<VertexSet> non_edge_transversal;
  SpecialCheck special;
};

struct EdgeCriticalCheck {
  bool value = false;
  std::optional<std::pair<Edge, int>> witness;  // (e, v) with no f: e∩f={v}
};

struct VertexCriticalCheck {
  bool value = false;
  std::optional<int> witness_vertex;  // qd <= 1
};

struct MinimalityCheck {
  bool value = false;
  std::optional<Edge> removable_edge;
};

struct UniformChromaticCheck {
  bool value = false;
  std::optional<Edge> non_uniform_witness;
  std::optional<ColoringCertificate> two_coloring;
};

struct ClassMembership {
  int rank = 0;
  UniformChromaticCheck h1;
  MaximalSpecialCheck h2;
  SpecialCheck h3;
  EdgeCriticalCheck h4;
  VertexCriticalCheck h5;

  bool in(int i) const {
    switch (i) {
      case 1: return h1.value;
      case 2: return h2.value;
      case 3: return h3.value;
      case 4: return h4.value;
      case 5: return h5.value;
      default: throw ArgumentError("class index must be 1..5");
    }
  }
  // The five classes nest; a violation would contradict the classifier.
  bool nesting_ok() const {
    return (!h1.value || h2.value) && (!h2.value || h3.value) &&
           (!h3.value || h4.value) && (!h4.value || h5.value);
  }
};

namespace detail {

inline void require_member(const Hypergraph& h) {
  const auto rep = validate_membership(h);
  if (rep.in_H_r) return;
  std::string msg = "input is not a valid H_r member:";
  for (const auto& v : rep.violations) {
    msg += " " + v.kind;
    if (v.vertex >= 0) msg += "(" + std::to_string(v.vertex) + ")";
    for (const Edge& e : v.edges) msg += " " + to_string(e);
    msg += ";";
  }
  throw PreconditionError(msg);
}

}  // namespace detail

// tau(h) = r. A 1-special hypergraph is necessarily r-uniform, since every
// edge of an intersecting hypergraph is itself a transversal.
inline SpecialCheck is_1_special(const Hypergraph& h) {
  detail::require_member(h);
  const int r = rank_profile(h).rank;
  const auto cert = transversal_number(h);
  if (cert.tau == r) {
    if (!rank_profile(h).is_uniform)
      throw std::logic_error("1-special hypergraph is not uniform");
    return {true, std::nullopt};
  }
  return {false, cert.witness};
}

// Characterization: 1-special and every minimum transversal is an edge.
inline MaximalSpecialCheck is_maximal_1_special(const Hypergraph& h) {
  MaximalSpecialCheck out;
  out.special = is_1_special(h);
  if (!out.special.value) return out;
  for (const VertexSet& t : enumerate_min_transversals(h)) {
    if (!h.has_edge(t)) {
      out.non_edge_transversal = t;
      return out;
    }
  }
  out.value = true;
  return out;
}

// Definitional oracle: adding any missing r-subset of the universe as a new
// edge must raise the matching number.
inline bool is_maximal_1_special_definitional(const Hypergraph& h) {
  if (!is_1_special(h).value) return false;
  const int r = rank_profile(h).rank;
  std::vector<int> comb(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) comb[static_cast<std::size_t>(i)] = i;
  const int n = h.n();
  if (n < r) return true;
  for (;;) {
    const Edge t = Edge::from_vertices(comb);
    if (!h.has_edge(t)) {
      auto edges = h.edges();
      edges.push_back(t);
      if (matching_number(Hypergraph(n, std::move(edges))).alpha_prime == 1)
        return false;
    }
    int i = r - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j)
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

// Characterization: for every edge e and every v in e, some edge meets e
// exactly at v.
inline EdgeCriticalCheck is_edge_critical(const Hypergraph& h) {
  detail::require_member(h);
  for (const Edge& e : h.edges()) {
    for (int v : e.vertices()) {
      const Edge only_v = Edge{}.with(v);
      bool found = false;
      for (const Edge& f : h.edges()) {
        if ((e & f) == only_v) {
          found = true;
          break;
        }
      }
      if (!found) return {false, std::make_pair(e, v)};
    }
  }
  return {true, std::nullopt};
}

// Definitional oracle: every v-shrink of every edge raises the matching
// number (shrinking a 2-edge to a 1-edge is allowed here).
inline bool is_edge_critical_definitional(const Hypergraph& h) {
  detail::require_member(h);
  for (const Edge& e : h.edges())
    for (int v : e.vertices())
      if (matching_number(shrink_edge(h, e, v).output).alpha_prime < 2)
        return false;
  return true;
}

// Characterization: qd(v) >= 2 for every vertex.
inline VertexCriticalCheck is_vertex_critical(const Hypergraph& h) {
  detail::require_member(h);
  for (int v = 0; v < h.n(); ++v)
    if (quasidegree(h, v).qd < 2) return {false, v};
  return {true, std::nullopt};
}

// Definitional oracle: deleting any vertex (shrinking its edges) raises the
// matching number.
inline bool is_vertex_critical_definitional(const Hypergraph& h) {
  detail::require_member(h);
  for (int v = 0; v < h.n(); ++v)
    if (matching_number(vertex_delete_and_shrink(h, v).output).alpha_prime < 2)
      return false;
  return true;
}

// No edge can be removed while preserving 1-vertex-criticality. On minimal
// instances, every edge must contain a vertex whose quasidegree collapses
// below 2 once the edge is gone.
inline MinimalityCheck is_minimal_vertex_critical(const Hypergraph& h) {
  if (!is_vertex_critical(h).value)
    throw PreconditionError("input is not 1-vertex-critical");
  for (const Edge& e : h.edges()) {
    const auto rem = delete_edges(h, {e});
    if (rem.output.n() != h.n())
      throw std::logic_error("edge removal isolated a vertex despite qd >= 2");
    if (validate_membership(rem.output).in_H_r &&
        is_vertex_critical(rem.output).value)
      return {false, e};
  }
  for (const Edge& e : h.edges()) {
    const auto rem = delete_edges(h, {e});
    bool collapsed = false;
    for (int v : e.vertices())
      if (qd_below_two(rem.output, v)) {
        collapsed = true;
        break;
      }
    if (!collapsed)
      throw std::logic_error("minimal instance without a collapsing vertex");
  }
  return {true, std::nullopt};
}

// r-uniform and not 2-colorable (3-colorability being automatic for
// intersecting hypergraphs).
inline UniformChromaticCheck is_three_chromatic_uniform(const Hypergraph& h) {
  detail::require_member(h);
  const auto rp = rank_profile(h);
  UniformChromaticCheck out;
  if (!rp.is_uniform) {
    for (const Edge& e : h.edges())
      if (e.size() < rp.rank) {
        out.non_uniform_witness = e;
        break;
      }
    return out;
  }
  if (auto two = is_k_colorable(h, 2)) {
    out.two_coloring = *two;
    return out;
  }
  out.value = true;
  return out;
}

// All five class flags with witnesses for the failures. Classification is
// against r = rank(h); a non-uniform member fails H1 and H3 outright.
inline ClassMembership classify(const Hypergraph& h) {
  detail::require_member(h);
  ClassMembership out;
  out.rank = rank_profile(h).rank;
  out.h1 = is_three_chromatic_uniform(h);
  out.h2 = is_maximal_1_special(h);
  out.h3 = is_1_special(h);
  out.h4 = is_edge_critical(h);
  out.h5 = is_vertex_critical(h);
  return out;
}

}  // namespace hypercrit
