#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hypercrit/search.hpp"
#include "oracles.hpp"

using namespace hypercrit;

namespace {

// Brute-force isomorph-free count: all subsets of the candidate edges,
// filtered for intersecting + full coverage + exact rank, deduplicated by
// canonical form.
long long brute_class_count(int r, int n, bool uniform, int max_edges) {
  std::vector<Edge> cands;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    const int sz = std::popcount(m);
    if (sz < 2 || sz > r) continue;
    if (uniform && sz != r) continue;
    cands.push_back(Edge(m));
  }
  std::set<std::string> keys;
  const int c = static_cast<int>(cands.size());
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << c); ++sub) {
    if (max_edges > 0 && std::popcount(sub) > max_edges) continue;
    std::vector<Edge> edges;
    for (std::uint64_t b = sub; b; b &= b - 1)
      edges.push_back(cands[static_cast<std::size_t>(std::countr_zero(b))]);
    Edge cover;
    int rank = 0;
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      cover = cover | edges[i];
      rank = std::max(rank, edges[i].size());
      for (std::size_t j = i + 1; j < edges.size(); ++j)
        if (!intersects(edges[i], edges[j])) {
          ok = false;
          break;
        }
    }
    if (!ok || rank != r || cover.size() != n) continue;
    keys.insert(canonical_form(Hypergraph(n, edges)));
  }
  return static_cast<long long>(keys.size());
}

}  // namespace

TEST_CASE("enumeration matches the brute-force count at tiny scale") {
  CHECK(static_cast<long long>(enumerate_H_r(2, 3).size()) ==
        brute_class_count(2, 3, false, 0));
  CHECK(static_cast<long long>(enumerate_H_r(2, 4).size()) ==
        brute_class_count(2, 4, false, 0));
  CHECK(static_cast<long long>(enumerate_H_r(3, 4).size()) ==
        brute_class_count(3, 4, false, 0));
  EnumOptions capped;
  capped.max_edges = 3;
  CHECK(static_cast<long long>(enumerate_H_r(3, 4, capped).size()) ==
        brute_class_count(3, 4, false, 3));
}

TEST_CASE("rank-2 enumeration on three and four vertices") {
  // n = 3: the triangle and the 2-star.
  const auto on3 = enumerate_H_r(2, 3);
  REQUIRE(on3.size() == 2);
  CHECK(canonical_form(on3[0]) == canonical_form(catalog("star(2)").hypergraph));
  CHECK(canonical_form(on3[1]) == canonical_form(catalog("triangle").hypergraph));

  // n = 4: stars are the only intersecting graphs covering four vertices.
  const auto on4 = enumerate_H_r(2, 4);
  REQUIRE(on4.size() == 1);
  CHECK(canonical_form(on4[0]) == canonical_form(catalog("star(3)").hypergraph));
}

TEST_CASE("streamed families are valid, rank-exact, and pairwise distinct") {
  std::set<std::string> keys;
  for (const auto& h : enumerate_H_r(3, 5)) {
    CHECK(validate_membership(h).in_H_r);
    CHECK(rank_profile(h).rank == 3);
    CHECK(keys.insert(canonical_form(h)).second);
  }
  CHECK_FALSE(keys.empty());
}

TEST_CASE("uniform enumeration with the prefilter finds the Fano plane") {
  EnumOptions opt;
  opt.uniform = true;
  opt.vertex_critical_prefilter = true;
  opt.max_edges = 7;
  const auto fams = enumerate_H_r(3, 7, opt);
  const std::string fano_key = canonical_form(catalog("fano").hypergraph);
  bool found = false;
  for (const auto& h : fams) {
    if (canonical_form(h) == fano_key) found = true;
    for (int v = 0; v < h.n(); ++v) CHECK(oracles::brute_qd(h, v) >= 2);
  }
  CHECK(found);
}

TEST_CASE("prefilter keeps exactly the qd>=2 families") {
  EnumOptions plain, filtered;
  plain.max_edges = filtered.max_edges = 6;
  filtered.vertex_critical_prefilter = true;
  const auto all = enumerate_H_r(3, 5, plain);
  const auto kept = enumerate_H_r(3, 5, filtered);
  std::set<std::string> kept_keys;
  for (const auto& h : kept) kept_keys.insert(canonical_form(h));
  long long expected = 0;
  for (const auto& h : all) {
    bool good = true;
    for (int v = 0; v < h.n(); ++v)
      if (oracles::brute_qd(h, v) < 2) good = false;
    if (good) {
      ++expected;
      CHECK(kept_keys.count(canonical_form(h)) == 1);
    }
  }
  CHECK(static_cast<long long>(kept.size()) == expected);
}

TEST_CASE("multi-threaded enumeration agrees with single-threaded") {
  EnumOptions serial, parallel;
  serial.max_edges = parallel.max_edges = 6;
  parallel.threads = 4;
  CHECK(enumerate_H_r(3, 5, serial) == enumerate_H_r(3, 5, parallel));
}

TEST_CASE("enumeration caps the vertex count") {
  CHECK_THROWS_AS(enumerate_H_r(3, 13), ArgumentError);
  CHECK_THROWS_AS(enumerate_H_r(1, 3), ArgumentError);
}

TEST_CASE("catalog") {
  const auto fano = catalog("fano");
  CHECK(fano.hypergraph.n() == 7);
  CHECK(fano.hypergraph.edge_count() == 7);
  for (int d : degree_profile(fano.hypergraph).degree) CHECK(d == 3);
  // lines pairwise meet in exactly one point
  for (const Edge& a : fano.hypergraph.edges())
    for (const Edge& b : fano.hypergraph.edges())
      if (!(a == b)) CHECK((a & b).size() == 1);

  const auto k35 = catalog("complete_uniform(3)");
  CHECK(k35.hypergraph.n() == 5);
  CHECK(k35.hypergraph.edge_count() == 10);

  CHECK(catalog("paper_example_4v").hypergraph ==
        Hypergraph(4, {Edge{0, 1, 2}, Edge{0, 3}, Edge{1, 3}, Edge{2, 3}}));
  CHECK(catalog("star(3)").hypergraph.edge_count() == 3);
  CHECK(catalog("triangle").hypergraph.edge_count() == 3);

  CHECK_THROWS_AS(catalog("unknown"), ArgumentError);
  CHECK_THROWS_AS(catalog("star(0)"), ArgumentError);
  CHECK_THROWS_AS(catalog("complete_uniform(1)"), ArgumentError);
}

TEST_CASE("extremal orders at rank 2") {
  for (int i = 1; i <= 5; ++i) {
    const auto rec = extremal_order(i, 2, 5);
    CHECK(rec.best_order == 3);
    CHECK(rec.exhaustive);
    REQUIRE(rec.witness);
    CHECK(canonical_form(*rec.witness) ==
          canonical_form(catalog("triangle").hypergraph));
  }
}

TEST_CASE("extremal order witness-only mode at rank 3") {
  for (int i = 1; i <= 5; ++i) {
    const auto rec = extremal_order(i, 3, 7, /*witness_only=*/true);
    CHECK(rec.best_order == 7);
    CHECK_FALSE(rec.exhaustive);
    REQUIRE(rec.witness);
    CHECK(classify(*rec.witness).in(i));
  }
}

TEST_CASE("extremal order witness-only mode reaches rank 4 by lifting") {
  const auto rec = extremal_order(4, 4, 12, /*witness_only=*/true);
  CHECK(rec.best_order >= 8);
  REQUIRE(rec.witness);
  CHECK(rank_profile(*rec.witness).rank == 4);
  CHECK(classify(*rec.witness).in(4));
}

TEST_CASE("extremal order rejects bad arguments") {
  CHECK_THROWS_AS(extremal_order(0, 2, 5), ArgumentError);
  CHECK_THROWS_AS(extremal_order(6, 2, 5), ArgumentError);
  CHECK_THROWS_AS(extremal_order(1, 4, 5), ArgumentError);  // needs witness-only
  CHECK_THROWS_AS(extremal_order(1, 2, 13), ArgumentError);
}

TEST_CASE("verify_nesting on small ranks") {
  const auto r2 = verify_nesting(2, 4);
  CHECK(r2.violations.empty());
  CHECK(r2.members > 0);
  CHECK(r2.exhaustive);

  const auto r3 = verify_nesting(3, 5);
  CHECK(r3.violations.empty());
  // the 4-vertex example separates H4 from H3
  REQUIRE(r3.separators[2]);
  CHECK(canonical_form(*r3.separators[2]) ==
        canonical_form(catalog("paper_example_4v").hypergraph));
  // K^3_5 sits in every class, so H1..H3 are non-empty here
  CHECK(r3.class_counts[0] == 1);
  CHECK(r3.class_counts[1] == 1);
  CHECK(r3.class_counts[2] == 1);

  const auto degenerate = verify_nesting(3, 2);
  CHECK(degenerate.members == 0);
  CHECK(degenerate.violations.empty());
}

TEST_CASE("vertex-critical rank-3 census peaks at seven vertices") {
  // Isomorph-free counts of 1-vertex-critical rank-3 members by order,
  // pinned from the exhaustive prefiltered enumeration. The drop to zero at
  // n = 8 confirms the extremal order 7 over the searched range.
  EnumOptions opt;
  opt.vertex_critical_prefilter = true;
  const std::vector<std::pair<int, std::size_t>> expected = {
      {4, 4}, {5, 39}, {6, 77}, {7, 6}, {8, 0}};
  for (const auto& [n, count] : expected)
    CHECK(enumerate_H_r(3, n, opt).size() == count);

  // The six extremal families all sit in H3 (hence H4, H5); the Fano plane
  // and its ten-edge sibling carry all five flags, and Fano minus one line
  // is the unique minimal member.
  const auto seven = enumerate_H_r(3, 7, opt);
  const std::string fano_key = canonical_form(catalog("fano").hypergraph);
  const auto fano6 = delete_edges(catalog("fano").hypergraph,
                                  {catalog("fano").hypergraph.edges().front()});
  int all_flags = 0, minimal = 0;
  bool saw_fano = false, saw_fano6 = false;
  for (const auto& h : seven) {
    const auto cm = classify(h);
    CHECK(cm.in(3));
    CHECK(cm.in(4));
    CHECK(cm.in(5));
    if (cm.in(1)) ++all_flags;
    if (is_minimal_vertex_critical(h).value) ++minimal;
    if (canonical_form(h) == fano_key) saw_fano = true;
    if (canonical_form(h) == canonical_form(fano6.output)) saw_fano6 = true;
  }
  CHECK(all_flags == 2);
  CHECK(minimal == 1);
  CHECK(saw_fano);
  CHECK(saw_fano6);
}

TEST_CASE("uniform edge-critical and vertex-critical extremal orders agree in range") {
  // max order of uniform H4 members vs. all H5 members over the searched
  // rank-3 corpus (non-exhaustive beyond n = 5)
  int best_uniform_h4 = 0, best_h5 = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& h : enumerate_H_r(3, n)) {
      const auto cm = classify(h);
      if (cm.in(4) && rank_profile(h).is_uniform)
        best_uniform_h4 = std::max(best_uniform_h4, n);
      if (cm.in(5)) best_h5 = std::max(best_h5, n);
    }
  }
  CHECK(best_uniform_h4 == best_h5);
  CHECK(best_h5 == 5);
}
