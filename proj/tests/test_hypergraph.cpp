#include <catch2/catch_amalgamated.hpp>

#include "hypercrit/hypergraph.hpp"
#include "hypercrit/search.hpp"
#include "hypercrit/solvers.hpp"
#include "oracles.hpp"

using namespace hypercrit;

namespace {
Hypergraph triangle() { return catalog("triangle").hypergraph; }
Hypergraph fano() { return catalog("fano").hypergraph; }
Hypergraph paper4() { return catalog("paper_example_4v").hypergraph; }
}  // namespace

TEST_CASE("edge basics and lexicographic order") {
  Edge e{0, 1, 2};
  CHECK(e.size() == 3);
  CHECK(e.contains(1));
  CHECK_FALSE(e.contains(3));
  CHECK(e.vertices() == std::vector<int>{0, 1, 2});

  CHECK(lex_less(Edge{0, 1}, Edge{0, 2}));
  CHECK(lex_less(Edge{0, 1}, Edge{0, 1, 2}));  // prefix first
  CHECK(lex_less(Edge{0, 1, 2}, Edge{0, 2}));
  CHECK(lex_less(Edge{0, 2}, Edge{1, 2}));
  CHECK_FALSE(lex_less(Edge{0, 1}, Edge{0, 1}));
}

TEST_CASE("overlapping needs two shared vertices") {
  CHECK(overlapping(Edge{0, 1, 2}, Edge{1, 2, 3}));
  CHECK_FALSE(overlapping(Edge{0, 1, 2}, Edge{2, 3, 4}));
  CHECK(overlapping(Edge{0, 1}, Edge{0, 1}));  // self-overlap
}

TEST_CASE("construction validates edges") {
  CHECK_THROWS_AS(Hypergraph(2, {Edge{0, 2}}), ArgumentError);
  CHECK_THROWS_AS(Hypergraph(3, {Edge{}}), ArgumentError);
  CHECK_THROWS_AS(Hypergraph(3, {Edge{0, 1}, Edge{0, 1}}), ArgumentError);
  CHECK_THROWS_AS(Hypergraph(65, {}), ArgumentError);
}

TEST_CASE("validate_membership") {
  CHECK(validate_membership(triangle()).in_H_r);

  const Hypergraph disjoint(4, {Edge{0, 1}, Edge{2, 3}});
  const auto rep = validate_membership(disjoint);
  CHECK_FALSE(rep.in_H_r);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].kind == "disjoint_pair");

  const Hypergraph one_edge(2, {Edge{0, 1}, Edge{0}});
  const auto rep2 = validate_membership(one_edge);
  CHECK_FALSE(rep2.in_H_r);
  CHECK(rep2.violations[0].kind == "small_edge");

  const Hypergraph isolated(3, {Edge{0, 1}});
  const auto rep3 = validate_membership(isolated);
  CHECK_FALSE(rep3.in_H_r);
  CHECK(rep3.violations[0].kind == "isolated_vertex");
  CHECK(rep3.violations[0].vertex == 2);

  CHECK_FALSE(validate_membership(Hypergraph(0, {})).in_H_r);
}

TEST_CASE("rank_profile") {
  const auto fp = rank_profile(fano());
  CHECK(fp.rank == 3);
  CHECK(fp.is_uniform);

  const auto pp = rank_profile(paper4());
  CHECK(pp.rank == 3);
  CHECK_FALSE(pp.is_uniform);
  CHECK(pp.min_edge_size == 2);

  const auto sp = rank_profile(Hypergraph(3, {Edge{0, 1, 2}}));
  CHECK(sp.rank == 3);
  CHECK(sp.is_uniform);

  CHECK_THROWS_AS(rank_profile(Hypergraph(3, {})), ArgumentError);
}

TEST_CASE("degree_profile") {
  const auto tp = degree_profile(triangle());
  CHECK(tp.degree == std::vector<int>{2, 2, 2});
  CHECK(tp.min_degree == 2);

  const auto fp = degree_profile(fano());
  for (int d : fp.degree) CHECK(d == 3);
  CHECK(fp.min_degree == 3);

  const auto pp = degree_profile(paper4());
  CHECK(pp.degree[3] == 3);
  CHECK(pp.min_degree == 2);
  CHECK(pp.isolated.empty());
}

TEST_CASE("is_intersecting") {
  CHECK(is_intersecting(catalog("complete_uniform(3)").hypergraph).intersecting);
  CHECK(is_intersecting(fano()).intersecting);

  const auto check = is_intersecting(Hypergraph(4, {Edge{0, 1}, Edge{2, 3}}));
  CHECK_FALSE(check.intersecting);
  REQUIRE(check.disjoint_witness);
  CHECK(check.disjoint_witness->first == Edge{0, 1});
  CHECK(check.disjoint_witness->second == Edge{2, 3});
}

TEST_CASE("shrink_edge") {
  // Shrinking the 3-edge of the 4-vertex example at v3 creates a matching.
  const auto rw = shrink_edge(paper4(), Edge{0, 1, 2}, 2);
  CHECK(rw.output.n() == 4);
  CHECK(rw.output.edges() ==
        std::vector<Edge>{Edge{0, 1}, Edge{0, 3}, Edge{1, 3}, Edge{2, 3}});
  CHECK(oracles::brute_alpha(rw.output) == 2);
  CHECK(replay(paper4(), rw.trace) == rw.output);

  const auto one = shrink_edge(Hypergraph(2, {Edge{0, 1}}), Edge{0, 1}, 1);
  CHECK(one.output.edges() == std::vector<Edge>{Edge{0}});

  // Merge: shrinking {0,1,2} at 0 collapses onto the existing {1,2}.
  const Hypergraph merge_in(3, {Edge{0, 1, 2}, Edge{1, 2}, Edge{0, 1}});
  const auto merged = shrink_edge(merge_in, Edge{0, 1, 2}, 0);
  CHECK(merged.output.edge_count() == 2);
  CHECK(merged.trace.steps[0].merged);
  CHECK(replay(merge_in, merged.trace) == merged.output);

  CHECK_THROWS_AS(shrink_edge(triangle(), Edge{0, 1}, 2), ArgumentError);
  CHECK_THROWS_AS(shrink_edge(triangle(), Edge{0, 1, 2}, 0), ArgumentError);
}

TEST_CASE("delete_edges") {
  const auto fano_minus = delete_edges(fano(), {fano().edges().front()});
  CHECK(fano_minus.output.n() == 7);  // every point stays on two lines
  CHECK(fano_minus.output.edge_count() == 6);
  CHECK(replay(fano(), fano_minus.trace) == fano_minus.output);

  // Triangle minus {01, 12}: vertex 1 goes, survivors re-index.
  const auto tri_minus = delete_edges(triangle(), {Edge{0, 1}, Edge{1, 2}});
  CHECK(tri_minus.output.n() == 2);
  CHECK(tri_minus.output.edges() == std::vector<Edge>{Edge{0, 1}});
  CHECK(tri_minus.vertex_map == std::vector<int>{0, -1, 1});
  CHECK(replay(triangle(), tri_minus.trace) == tri_minus.output);

  const auto all_gone = delete_edges(triangle(), triangle().edges());
  CHECK(all_gone.output.n() == 0);
  CHECK(all_gone.output.edge_count() == 0);

  CHECK_THROWS_AS(delete_edges(triangle(), {Edge{0, 1, 2}}), ArgumentError);
}

TEST_CASE("vertex_delete_and_shrink") {
  // Deleting the apex of the 4-vertex example leaves {012} plus three
  // pairwise-disjoint 1-edges; the matching number jumps from 1 to 3.
  const auto rw = vertex_delete_and_shrink(paper4(), 3);
  CHECK(rw.output.n() == 3);
  CHECK(rw.output.edges() ==
        std::vector<Edge>{Edge{0}, Edge{0, 1, 2}, Edge{1}, Edge{2}});
  CHECK(oracles::brute_alpha(rw.output) == 3);
  CHECK(replay(paper4(), rw.trace) == rw.output);

  const auto tri = vertex_delete_and_shrink(triangle(), 2);
  CHECK(tri.output.n() == 2);
  CHECK(tri.output.edges() == std::vector<Edge>{Edge{0}, Edge{0, 1}, Edge{1}});
  CHECK(oracles::brute_alpha(tri.output) == 2);

  const Hypergraph with_isolated(4, {Edge{0, 1}, Edge{1, 2}});
  const auto iso = vertex_delete_and_shrink(with_isolated, 3);
  CHECK(iso.output.n() == 3);
  CHECK(iso.output.edges() == with_isolated.edges());

  CHECK_THROWS_AS(vertex_delete_and_shrink(triangle(), 3), ArgumentError);
}

TEST_CASE("connected_components") {
  CHECK(connected_components(fano()).size() == 1);
  CHECK(connected_components(Hypergraph(4, {Edge{0, 1}, Edge{2, 3}})).size() == 2);
  const auto comps = connected_components(Hypergraph(3, {}));
  CHECK(comps.size() == 3);
}

TEST_CASE("rewrites never grow the universe and traces replay") {
  std::mt19937_64 rng(20240811);
  for (int iter = 0; iter < 200; ++iter) {
    const Hypergraph h = oracles::random_hypergraph(rng);
    if (h.edge_count() == 0) continue;
    const Edge e = h.edges()[rng() % h.edges().size()];
    if (e.size() >= 2) {
      const auto vs = e.vertices();
      const int v = vs[rng() % vs.size()];
      const auto rw = shrink_edge(h, e, v);
      CHECK(rw.output.n() == h.n());
      CHECK(replay(h, rw.trace) == rw.output);
    }
    const auto del = delete_edges(h, {e});
    CHECK(del.output.n() <= h.n());
    CHECK(replay(h, del.trace) == del.output);

    const int v = static_cast<int>(rng() % h.n());
    const auto vds = vertex_delete_and_shrink(h, v);
    CHECK(vds.output.n() == h.n() - 1);
    CHECK(replay(h, vds.trace) == vds.output);
  }
}

TEST_CASE("intersecting iff matching number one on small corpus") {
  for (int r = 2; r <= 3; ++r)
    for (int n = 2; n <= 5; ++n) {
      EnumOptions opt;
      opt.max_edges = 6;
      for (const auto& h : enumerate_H_r(r, n, opt)) {
        CHECK(is_intersecting(h).intersecting);
        CHECK(matching_number(h).alpha_prime == 1);
        CHECK(validate_membership(h).in_H_r);
        CHECK(rank_profile(h).min_edge_size >= 2);
        CHECK(degree_profile(h).min_degree >= 1);
      }
    }
  // and a non-intersecting counterpoint
  const Hypergraph two(4, {Edge{0, 1}, Edge{2, 3}});
  CHECK(matching_number(two).alpha_prime == 2);
}
