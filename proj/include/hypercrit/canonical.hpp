#pragma once

// Exact canonical labeling for hypergraph isomorphism at desk scale.
//
// The form is the minimum relabeled edge list over all vertex orderings
// consistent with an iterated invariant partition (degree + incident edge
// sizes, refined by neighborhood class signatures). Within a class, vertices
// with identical incidence ("twins") are never permuted against each other,
// which collapses the factorial blowup of complete and edgeless families.
// Minimum over a canonically ordered permutation set is itself canonical:
// two hypergraphs map to equal keys iff they are isomorphic.
//
// Capped at n <= 16; the search module needs n <= 12 and everything here is
// correctness-over-speed beyond that.

#include <map>
#include <string>

#include "hypercrit/hypergraph.hpp"

namespace hypercrit {

inline constexpr int kCanonicalMaxVertices = 16;

struct CanonicalForm {
  std::string key;
  Hypergraph representative;     // the relabeled minimum, a canonical member
  std::vector<int> relabeling;   // input label -> representative label
};

namespace detail {

inline std::string encode_edges(const Hypergraph& h) {
  std::string s = "n" + std::to_string(h.n()) + ";";
  for (const Edge& e : h.edges()) {
    bool first = true;
    for (int v : e.vertices()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    s += ";";
  }
  return s;
}

// Compares two lex-sorted edge lists of equal length.
inline bool edge_list_less(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return lex_less(a[i], b[i]);
  }
  return false;
}

}  // namespace detail

inline CanonicalForm canonicalize(const Hypergraph& h) {
  const int n = h.n();
  if (n > kCanonicalMaxVertices)
    throw ArgumentError("canonical form capped at n <= " +
                        std::to_string(kCanonicalMaxVertices));
  if (h.edge_count() == 0) {
    CanonicalForm out{detail::encode_edges(h), h, detail::identity_map(n)};
    return out;
  }

  const auto& edges = h.edges();
  const int m = h.edge_count();

  // Invariant partition: start from (degree, sorted incident sizes), then
  // refine by the multiset of incident edges' class profiles until stable.
  std::vector<int> cls(static_cast<std::size_t>(n), 0);
  {
    std::vector<std::pair<std::vector<int>, int>> keyed;
    keyed.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> key;
      for (const Edge& e : edges)
        if (e.contains(v)) key.push_back(e.size());
      std::sort(key.begin(), key.end());
      key.insert(key.begin(), static_cast<int>(key.size()));  // degree first
      keyed.emplace_back(std::move(key), v);
    }
    std::sort(keyed.begin(), keyed.end());
    int id = 0;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i > 0 && keyed[i].first != keyed[i - 1].first) ++id;
      cls[static_cast<std::size_t>(keyed[i].second)] = id;
    }
  }
  for (;;) {
    using Sig = std::pair<int, std::vector<std::vector<int>>>;
    std::vector<std::pair<Sig, int>> keyed;
    keyed.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<std::vector<int>> sig;
      for (const Edge& e : edges) {
        if (!e.contains(v)) continue;
        std::vector<int> profile;
        for (int u : e.vertices()) profile.push_back(cls[static_cast<std::size_t>(u)]);
        std::sort(profile.begin(), profile.end());
        sig.push_back(std::move(profile));
      }
      std::sort(sig.begin(), sig.end());
      keyed.emplace_back(Sig{cls[static_cast<std::size_t>(v)], std::move(sig)}, v);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    int id = 0;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i > 0 && keyed[i].first != keyed[i - 1].first) ++id;
      next[static_cast<std::size_t>(keyed[i].second)] = id;
    }
    if (next == cls) break;
    cls = std::move(next);
  }

  const int class_count = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<std::vector<int>> members(static_cast<std::size_t>(class_count));
  for (int v = 0; v < n; ++v)
    members[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)])].push_back(v);

  // Twin ids within each class: vertices with identical incidence are
  // interchangeable, so only their multiset arrangements are enumerated.
  std::vector<std::vector<int>> twin_seq(static_cast<std::size_t>(class_count));
  std::vector<std::map<int, std::vector<int>>> twin_members(
      static_cast<std::size_t>(class_count));
  for (int c = 0; c < class_count; ++c) {
    std::map<std::vector<int>, int> seen;  // incidence -> twin id
    for (int v : members[static_cast<std::size_t>(c)]) {
      std::vector<int> inc;
      for (int i = 0; i < m; ++i)
        if (edges[static_cast<std::size_t>(i)].contains(v)) inc.push_back(i);
      auto [it, fresh] = seen.emplace(std::move(inc), static_cast<int>(seen.size()));
      (void)fresh;
      twin_seq[static_cast<std::size_t>(c)].push_back(it->second);
      twin_members[static_cast<std::size_t>(c)][it->second].push_back(v);
    }
    std::sort(twin_seq[static_cast<std::size_t>(c)].begin(),
              twin_seq[static_cast<std::size_t>(c)].end());
  }

  std::vector<int> base(static_cast<std::size_t>(class_count), 0);
  for (int c = 1; c < class_count; ++c)
    base[static_cast<std::size_t>(c)] =
        base[static_cast<std::size_t>(c - 1)] +
        static_cast<int>(members[static_cast<std::size_t>(c - 1)].size());

  std::vector<int> perm(static_cast<std::size_t>(n), -1);  // old -> new
  std::vector<Edge> best;
  std::vector<int> best_perm;
  std::vector<Edge> scratch(static_cast<std::size_t>(m));

  auto evaluate = [&]() {
    for (int i = 0; i < m; ++i) {
      Edge mapped;
      for (int v : edges[static_cast<std::size_t>(i)].vertices())
        mapped = mapped.with(perm[static_cast<std::size_t>(v)]);
      scratch[static_cast<std::size_t>(i)] = mapped;
    }
    std::sort(scratch.begin(), scratch.end(), lex_less);
    if (best.empty() || detail::edge_list_less(scratch, best)) {
      best = scratch;
      best_perm = perm;
    }
  };

  auto assign_class = [&](int c) {
    // Positions base..base+k-1 take this class's vertices, twin groups in
    // the arrangement order, members of a group in ascending label order.
    std::vector<int> cursor(twin_members[static_cast<std::size_t>(c)].size(), 0);
    const auto& arr = twin_seq[static_cast<std::size_t>(c)];
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const int tid = arr[k];
      const auto& tm = twin_members[static_cast<std::size_t>(c)].at(tid);
      const int v = tm[static_cast<std::size_t>(cursor[static_cast<std::size_t>(tid)]++)];
      perm[static_cast<std::size_t>(v)] = base[static_cast<std::size_t>(c)] +
                                          static_cast<int>(k);
    }
  };

  // Odometer over per-class multiset permutations.
  auto run = [&](auto&& self, int c) -> void {
    if (c == class_count) {
      evaluate();
      return;
    }
    auto& arr = twin_seq[static_cast<std::size_t>(c)];
    std::sort(arr.begin(), arr.end());
    do {
      assign_class(c);
      self(self, c + 1);
    } while (std::next_permutation(arr.begin(), arr.end()));
  };
  run(run, 0);

  Hypergraph rep(n, best);
  return {detail::encode_edges(rep), std::move(rep), std::move(best_perm)};
}

inline std::string canonical_form(const Hypergraph& h) {
  return canonicalize(h).key;
}

}  // namespace hypercrit
