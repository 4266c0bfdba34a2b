#pragma once

// Isomorph-free exhaustive enumeration of small intersecting hypergraphs,
// extremal-order records, the nesting check, and the catalog of named
// hypergraphs.
//
// Enumeration walks candidate edges in lexicographic order with an
// extend-only-upward rule; an edge disjoint from a chosen edge is never
// added, so only intersecting families are visited. All subtree prunes are
// closure-safe (any extension of the current family lies inside the closure
// of still-compatible candidates), which is what lets full runs keep the
// `exhaustive` flag. Results are deduplicated by canonical form and returned
// as canonical representatives in a deterministic order.

#include <array>
#include <functional>
#include <mutex>
#include <thread>

#include "hypercrit/canonical.hpp"
#include "hypercrit/criticality.hpp"
#include "hypercrit/hypergraph.hpp"
#include "hypercrit/transforms.hpp"

namespace hypercrit {

inline constexpr int kEnumMaxVertices = 12;

struct EnumOptions {
  bool uniform = false;
  // Keep only families with qd >= 2 everywhere, pruning subtrees whose
  // closure cannot reach that. Safe for class searches since every class
  // sits inside the 1-vertex-critical one, and adding edges never lowers a
  // quasidegree.
  bool vertex_critical_prefilter = false;
  int max_edges = 0;  // 0 = unbounded
  int threads = 1;
};

namespace detail {

struct EnumUniverse {
  int r = 0, n = 0;
  Edge full;                // all n vertices
  std::vector<Edge> cands;  // lex order; sizes in [2, r] (uniform: == r)
  int words = 0;
  std::vector<std::vector<std::uint64_t>> compat;  // intersecting pairs
  std::vector<std::uint64_t> size_r;               // candidates of size r
  // meet[v][i]: candidates j with cand_i ∩ cand_j == {v} (prefilter only)
  std::vector<std::vector<std::vector<std::uint64_t>>> meet;
};

inline void bitset_set(std::vector<std::uint64_t>& b, int i) {
  b[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
}

inline bool bitset_get(const std::vector<std::uint64_t>& b, int i) {
  return (b[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
}

template <typename F>
void bitset_for_each(const std::vector<std::uint64_t>& b, F&& f) {
  for (std::size_t w = 0; w < b.size(); ++w)
    for (std::uint64_t bits = b[w]; bits; bits &= bits - 1)
      if (!f(static_cast<int>(w * 64) + std::countr_zero(bits))) return;
}

inline EnumUniverse build_enum_universe(int r, int n, const EnumOptions& opt) {
  if (n > kEnumMaxVertices)
    throw ArgumentError("enumeration capped at n <= " +
                        std::to_string(kEnumMaxVertices));
  if (r < 2) throw ArgumentError("rank must be at least 2");
  if (n < 0) throw ArgumentError("vertex count must be nonnegative");
  EnumUniverse u;
  u.r = r;
  u.n = n;
  const std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  u.full = Edge(full);
  for (std::uint64_t m = 1; m <= full && full; ++m) {
    const int sz = std::popcount(m);
    if (sz < 2 || sz > r) continue;
    if (opt.uniform && sz != r) continue;
    u.cands.push_back(Edge(m));
  }
  std::sort(u.cands.begin(), u.cands.end(), lex_less);
  const int c = static_cast<int>(u.cands.size());
  u.words = (c + 63) / 64;
  u.compat.assign(static_cast<std::size_t>(c),
                  std::vector<std::uint64_t>(static_cast<std::size_t>(u.words), 0));
  u.size_r.assign(static_cast<std::size_t>(u.words), 0);
  for (int i = 0; i < c; ++i) {
    if (u.cands[static_cast<std::size_t>(i)].size() == r) bitset_set(u.size_r, i);
    for (int j = 0; j < c; ++j)
      if (i != j && intersects(u.cands[static_cast<std::size_t>(i)],
                               u.cands[static_cast<std::size_t>(j)]))
        bitset_set(u.compat[static_cast<std::size_t>(i)], j);
  }
  if (opt.vertex_critical_prefilter) {
    u.meet.assign(static_cast<std::size_t>(n),
                  std::vector<std::vector<std::uint64_t>>(
                      static_cast<std::size_t>(c),
                      std::vector<std::uint64_t>(static_cast<std::size_t>(u.words), 0)));
    for (int v = 0; v < n; ++v) {
      const Edge only_v = Edge{}.with(v);
      for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
          if (i != j && (u.cands[static_cast<std::size_t>(i)] &
                         u.cands[static_cast<std::size_t>(j)]) == only_v)
            bitset_set(u.meet[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)], j);
    }
  }
  return u;
}

struct EnumWalker {
  const EnumUniverse& u;
  const EnumOptions& opt;
  std::function<void(const Hypergraph&)> sink;  // receives raw labeled families

  std::vector<int> chosen;
  std::vector<std::uint64_t> chosen_bits;
  Edge covered;
  int max_size = 0;

  explicit EnumWalker(const EnumUniverse& u_, const EnumOptions& opt_,
                      std::function<void(const Hypergraph&)> sink_)
      : u(u_), opt(opt_), sink(std::move(sink_)) {
    chosen_bits.assign(static_cast<std::size_t>(u.words), 0);
  }

  bool family_has_qd2_everywhere() const {
    for (int v = 0; v < u.n; ++v) {
      bool ok = false;
      for (int i : chosen) {
        const auto& row = u.meet[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
        for (std::size_t w = 0; w < row.size(); ++w)
          if (row[w] & chosen_bits[w]) {
            ok = true;
            break;
          }
        if (ok) break;
      }
      if (!ok) return false;
    }
    return true;
  }

  void maybe_emit() {
    if (chosen.empty()) return;
    if (max_size != u.r) return;
    if (covered != u.full) return;
    if (opt.vertex_critical_prefilter && !family_has_qd2_everywhere()) return;
    std::vector<Edge> edges;
    edges.reserve(chosen.size());
    for (int i : chosen) edges.push_back(u.cands[static_cast<std::size_t>(i)]);
    sink(Hypergraph(u.n, std::move(edges)));
  }

  // Subtree prunes against the closure chosen ∪ compatible-rest.
  bool closure_viable(const std::vector<std::uint64_t>& compat) const {
    Edge cover = covered;
    bool has_r = max_size == u.r;
    bitset_for_each(compat, [&](int j) {
      cover = cover | u.cands[static_cast<std::size_t>(j)];
      if (u.cands[static_cast<std::size_t>(j)].size() == u.r) has_r = true;
      return !(cover == u.full && has_r);
    });
    if (cover != u.full || !has_r) return false;
    if (opt.vertex_critical_prefilter) {
      for (int v = 0; v < u.n; ++v) {
        bool ok = false;
        auto scan = [&](int i) {
          const auto& row = u.meet[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
          for (std::size_t w = 0; w < row.size(); ++w)
            if (row[w] & (chosen_bits[w] | compat[w])) return false;  // found
          return true;
        };
        for (int i : chosen)
          if (!scan(i)) {
            ok = true;
            break;
          }
        if (!ok)
          bitset_for_each(compat, [&](int j) {
            if (!scan(j)) {
              ok = true;
              return false;
            }
            return true;
          });
        if (!ok) return false;
      }
    }
    return true;
  }

  void push(int i) {
    chosen.push_back(i);
    bitset_set(chosen_bits, i);
    covered = covered | u.cands[static_cast<std::size_t>(i)];
    max_size = std::max(max_size, u.cands[static_cast<std::size_t>(i)].size());
  }

  void pop(Edge saved_cover, int saved_max) {
    const int i = chosen.back();
    chosen.pop_back();
    chosen_bits[static_cast<std::size_t>(i >> 6)] &=
        ~(std::uint64_t{1} << (i & 63));
    covered = saved_cover;
    max_size = saved_max;
  }

  void walk(const std::vector<std::uint64_t>& compat) {
    maybe_emit();
    if (opt.max_edges > 0 && static_cast<int>(chosen.size()) >= opt.max_edges)
      return;
    if (!closure_viable(compat)) return;
    std::vector<std::uint64_t> next(static_cast<std::size_t>(u.words));
    bitset_for_each(compat, [&](int j) {
      // restrict to indices above j and to edges meeting cand_j
      for (std::size_t w = 0; w < next.size(); ++w)
        next[w] = compat[w] & u.compat[static_cast<std::size_t>(j)][w];
      const std::size_t jw = static_cast<std::size_t>(j >> 6);
      next[jw] &= ~((std::uint64_t{2} << (j & 63)) - 1);
      for (std::size_t w = 0; w < jw; ++w) next[w] = 0;
      const Edge saved_cover = covered;
      const int saved_max = max_size;
      push(j);
      walk(next);
      pop(saved_cover, saved_max);
      return true;
    });
  }
};

inline bool hypergraph_order_less(const Hypergraph& a, const Hypergraph& b) {
  if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
  for (int i = 0; i < a.edge_count(); ++i) {
    const Edge ea = a.edges()[static_cast<std::size_t>(i)];
    const Edge eb = b.edges()[static_cast<std::size_t>(i)];
    if (ea == eb) continue;
    return lex_less(ea, eb);
  }
  return false;
}

}  // namespace detail

// All H_r members on exactly n non-isolated vertices, one canonical
// representative per isomorphism class, deterministically ordered.
inline std::vector<Hypergraph> enumerate_H_r(int r, int n,
                                             const EnumOptions& opt = {}) {
  const auto u = detail::build_enum_universe(r, n, opt);
  const int c = static_cast<int>(u.cands.size());
  std::vector<std::uint64_t> all(static_cast<std::size_t>(u.words), 0);
  for (int i = 0; i < c; ++i) detail::bitset_set(all, i);

  std::mutex mu;
  std::vector<Hypergraph> out;
  std::vector<std::string> seen;  // sorted canonical keys
  auto emit = [&](const Hypergraph& raw) {
    auto canon = canonicalize(raw);
    std::lock_guard<std::mutex> lock(mu);
    auto it = std::lower_bound(seen.begin(), seen.end(), canon.key);
    if (it != seen.end() && *it == canon.key) return;
    seen.insert(it, canon.key);
    out.push_back(std::move(canon.representative));
  };

  const int threads = std::max(1, opt.threads);
  if (threads == 1 || c == 0) {
    detail::EnumWalker walker(u, opt, emit);
    walker.walk(all);
  } else {
    // Split by first candidate: worker w owns subtrees rooted at indices
    // congruent to w. Deduplication is shared; order is restored below.
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w]() {
        detail::EnumWalker walker(u, opt, emit);
        for (int first = w; first < c; first += threads) {
          std::vector<std::uint64_t> next(static_cast<std::size_t>(u.words));
          for (std::size_t k = 0; k < next.size(); ++k)
            next[k] = all[k] & u.compat[static_cast<std::size_t>(first)][k];
          const std::size_t fw = static_cast<std::size_t>(first >> 6);
          next[fw] &= ~((std::uint64_t{2} << (first & 63)) - 1);
          for (std::size_t k = 0; k < fw; ++k) next[k] = 0;
          walker.push(first);
          walker.walk(next);
          walker.pop(Edge{}, 0);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  std::sort(out.begin(), out.end(), detail::hypergraph_order_less);
  return out;
}

// ---------------------------------------------------------------------------
// Catalog of named hypergraphs.

struct CatalogEntry {
  std::string name;
  Hypergraph hypergraph;
  std::string provenance;
};

inline std::vector<std::string> catalog_names() {
  return {"fano", "triangle", "paper_example_4v", "complete_uniform(r)",
          "star(k)"};
}

inline CatalogEntry catalog(const std::string& name) {
  if (name == "fano") {
    return {name,
            Hypergraph(7, {{0, 1, 2},
                           {0, 3, 4},
                           {0, 5, 6},
                           {1, 3, 5},
                           {1, 4, 6},
                           {2, 3, 6},
                           {2, 4, 5}}),
            "seven-point, seven-line projective plane of order 2"};
  }
  if (name == "triangle") {
    return {name, Hypergraph(3, {{0, 1}, {0, 2}, {1, 2}}),
            "complete graph on three vertices"};
  }
  if (name == "paper_example_4v") {
    return {name, Hypergraph(4, {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}}),
            "one 3-edge plus the three 2-edges joining it to an apex vertex"};
  }
  auto parse_param = [&](const std::string& prefix) -> std::optional<int> {
    if (name.size() <= prefix.size() + 2) return std::nullopt;
    if (name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    if (name[prefix.size()] != '(' || name.back() != ')') return std::nullopt;
    const std::string digits =
        name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    if (digits.empty()) return std::nullopt;
    for (char ch : digits)
      if (ch < '0' || ch > '9') return std::nullopt;
    return std::stoi(digits);
  };
  if (auto r = parse_param("complete_uniform")) {
    if (*r < 2 || *r > 8)
      throw ArgumentError("complete_uniform(r) needs 2 <= r <= 8");
    const int n = 2 * *r - 1;
    std::vector<Edge> edges;
    std::vector<int> comb(static_cast<std::size_t>(*r));
    for (int i = 0; i < *r; ++i) comb[static_cast<std::size_t>(i)] = i;
    for (;;) {
      edges.push_back(Edge::from_vertices(comb));
      int i = *r - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - *r + i) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < *r; ++j)
        comb[static_cast<std::size_t>(j)] =
            comb[static_cast<std::size_t>(j - 1)] + 1;
    }
    return {name, Hypergraph(n, std::move(edges)),
            "all r-subsets of a (2r-1)-vertex set"};
  }
  if (auto k = parse_param("star")) {
    if (*k < 1 || *k + 1 > kMaxVertices)
      throw ArgumentError("star(k) needs 1 <= k <= 63");
    std::vector<Edge> edges;
    for (int i = 1; i <= *k; ++i) edges.push_back(Edge{0, i});
    return {name, Hypergraph(*k + 1, std::move(edges)),
            "k 2-edges through a common center"};
  }
  std::string msg = "unknown catalog name '" + name + "'; available:";
  for (const auto& s : catalog_names()) msg += " " + s;
  throw ArgumentError(msg);
}

// ---------------------------------------------------------------------------
// Extremal orders and the nesting check.

struct ExtremalRecord {
  int class_index = 0;
  int rank = 0;
  int n_max_searched = 0;
  int best_order = 0;
  std::optional<Hypergraph> witness;
  bool exhaustive = false;
};

// Largest vertex count achieving class flag i at rank r. Exhaustive mode
// scans the full enumeration from n_max down; witness-only mode reports a
// lower bound from the catalog and rank-lift chains.
inline ExtremalRecord extremal_order(int class_index, int r, int n_max,
                                     bool witness_only = false, int threads = 1) {
  if (class_index < 1 || class_index > 5)
    throw ArgumentError("class index must be 1..5");
  if (r < 2) throw ArgumentError("rank must be at least 2");
  ExtremalRecord rec;
  rec.class_index = class_index;
  rec.rank = r;
  rec.n_max_searched = n_max;

  if (witness_only) {
    std::vector<Hypergraph> candidates;
    auto consider = [&](const Hypergraph& h) {
      if (h.edge_count() == 0 || h.edge_count() > kMaxSolverEdges) return;
      if (rank_profile(h).rank != r) return;
      candidates.push_back(h);
    };
    for (const char* base : {"triangle", "fano", "paper_example_4v"})
      consider(catalog(base).hypergraph);
    if (2 * r - 1 <= kMaxVertices) {
      try {
        consider(catalog("complete_uniform(" + std::to_string(r) + ")").hypergraph);
      } catch (const Error&) {
      }
    }
    // Rank-lift chains from the two base examples.
    for (const char* base : {"triangle", "fano"}) {
      try {
        Hypergraph cur = catalog(base).hypergraph;
        for (int step = 0; step < 16 && rank_profile(cur).rank < r; ++step) {
          if (!rank_profile(cur).is_uniform) break;
          cur = rank_lift(cur).output;
        }
        consider(cur);
      } catch (const Error&) {
      }
    }
    for (const Hypergraph& h : candidates) {
      if (!validate_membership(h).in_H_r) continue;
      if (!classify(h).in(class_index)) continue;
      if (h.n() > rec.best_order) {
        rec.best_order = h.n();
        rec.witness = h;
      }
    }
    rec.exhaustive = false;
    return rec;
  }

  if (r != 2 && r != 3)
    throw ArgumentError("exhaustive mode supports rank 2 or 3; "
                        "use witness-only for larger ranks");
  if (n_max > kEnumMaxVertices)
    throw ArgumentError("exhaustive mode capped at n <= " +
                        std::to_string(kEnumMaxVertices));
  EnumOptions opt;
  opt.vertex_critical_prefilter = true;  // every class lies inside H^5
  opt.threads = threads;
  for (int n = n_max; n >= 2; --n) {
    for (const Hypergraph& h : enumerate_H_r(r, n, opt)) {
      if (classify(h).in(class_index)) {
        rec.best_order = n;
        rec.witness = h;
        rec.exhaustive = true;
        return rec;
      }
    }
  }
  rec.exhaustive = true;  // full scan, class empty in range
  return rec;
}

struct NestingViolation {
  Hypergraph hypergraph;
  std::array<bool, 5> flags{};
};

struct NestingReport {
  int rank = 0;
  int n_max = 0;
  long long members = 0;
  std::array<long long, 5> class_counts{};
  std::vector<NestingViolation> violations;
  // separators[i]: a member of H^{i+2} \ H^{i+1} (0-based pairs), if any
  std::array<std::optional<Hypergraph>, 4> separators;
  bool exhaustive = false;
};

// Checks H1 => H2 => H3 => H4 => H5 over the full enumeration and collects
// one separating example per consecutive pair when one exists in range.
inline NestingReport verify_nesting(int r, int n_max, int max_edges = 0,
                                    int threads = 1) {
  NestingReport rep;
  rep.rank = r;
  rep.n_max = n_max;
  EnumOptions opt;
  opt.max_edges = max_edges;
  opt.threads = threads;
  for (int n = 2; n <= n_max; ++n) {
    for (const Hypergraph& h : enumerate_H_r(r, n, opt)) {
      ++rep.members;
      const auto cm = classify(h);
      std::array<bool, 5> flags{cm.h1.value, cm.h2.value, cm.h3.value,
                                cm.h4.value, cm.h5.value};
      for (int i = 0; i < 5; ++i)
        if (flags[static_cast<std::size_t>(i)])
          ++rep.class_counts[static_cast<std::size_t>(i)];
      if (!cm.nesting_ok()) rep.violations.push_back({h, flags});
      for (int i = 0; i < 4; ++i)
        if (flags[static_cast<std::size_t>(i + 1)] &&
            !flags[static_cast<std::size_t>(i)] &&
            !rep.separators[static_cast<std::size_t>(i)])
          rep.separators[static_cast<std::size_t>(i)] = h;
    }
  }
  rep.exhaustive = true;
  return rep;
}

}  // namespace hypercrit
