#include <catch2/catch_amalgamated.hpp>

#include "hypercrit/criticality.hpp"
#include "hypercrit/search.hpp"
#include "oracles.hpp"

using namespace hypercrit;

namespace {
Hypergraph triangle() { return catalog("triangle").hypergraph; }
Hypergraph fano() { return catalog("fano").hypergraph; }
Hypergraph paper4() { return catalog("paper_example_4v").hypergraph; }
Hypergraph k35() { return catalog("complete_uniform(3)").hypergraph; }
Hypergraph star2() { return catalog("star(2)").hypergraph; }

std::vector<Hypergraph> corpus() {
  std::vector<Hypergraph> out;
  for (int r = 2; r <= 4; ++r)
    for (int n = 2; n <= 5; ++n) {
      EnumOptions opt;
      opt.max_edges = 6;
      for (auto& h : enumerate_H_r(r, n, opt)) out.push_back(std::move(h));
    }
  return out;
}
}  // namespace

TEST_CASE("is_1_special") {
  CHECK(is_1_special(k35()).value);
  CHECK(is_1_special(triangle()).value);
  CHECK(is_1_special(fano()).value);

  const auto p = is_1_special(paper4());
  CHECK_FALSE(p.value);
  CHECK(p.short_transversal == Edge{0, 3});

  CHECK_THROWS_AS(is_1_special(Hypergraph(4, {Edge{0, 1}, Edge{2, 3}})),
                  PreconditionError);
}

TEST_CASE("is_maximal_1_special and its definitional oracle") {
  CHECK(is_maximal_1_special(k35()).value);
  CHECK(is_maximal_1_special(triangle()).value);
  CHECK(is_maximal_1_special(fano()).value);
  CHECK_FALSE(is_maximal_1_special(paper4()).value);

  CHECK(is_maximal_1_special_definitional(k35()));
  CHECK(is_maximal_1_special_definitional(fano()));

  // Fano minus a line stays 1-special but has the removed line as a
  // non-edge minimum transversal.
  const Edge line = fano().edges().front();
  const auto reduced = delete_edges(fano(), {line}).output;
  const auto check = is_maximal_1_special(reduced);
  CHECK(check.special.value);
  CHECK_FALSE(check.value);
  CHECK(check.non_edge_transversal == line);
  CHECK_FALSE(is_maximal_1_special_definitional(reduced));
}

TEST_CASE("is_edge_critical") {
  CHECK(is_edge_critical(paper4()).value);
  CHECK(is_edge_critical(fano()).value);
  CHECK(is_edge_critical(triangle()).value);

  const auto s = is_edge_critical(star2());
  CHECK_FALSE(s.value);
  REQUIRE(s.witness);
  CHECK(s.witness->first == Edge{0, 1});
  CHECK(s.witness->second == 1);

  CHECK(is_edge_critical_definitional(paper4()));
  CHECK(is_edge_critical_definitional(triangle()));
  CHECK_FALSE(is_edge_critical_definitional(star2()));
}

TEST_CASE("is_vertex_critical") {
  CHECK(is_vertex_critical(fano()).value);
  CHECK(is_vertex_critical(paper4()).value);

  const auto s = is_vertex_critical(star2());
  CHECK_FALSE(s.value);
  CHECK(s.witness_vertex == 1);

  CHECK(is_vertex_critical_definitional(fano()));
  CHECK(is_vertex_critical_definitional(triangle()));
  CHECK_FALSE(is_vertex_critical_definitional(star2()));
}

TEST_CASE("is_minimal_vertex_critical") {
  // Any line of the Fano plane can be removed: the two remaining lines
  // through each of its points still meet exactly there.
  const auto fano_check = is_minimal_vertex_critical(fano());
  CHECK_FALSE(fano_check.value);
  REQUIRE(fano_check.removable_edge);
  CHECK(*fano_check.removable_edge == fano().edges().front());

  CHECK(is_minimal_vertex_critical(triangle()).value);

  // After removing one line the other six all become essential: deleting a
  // second line leaves its intersection point with the first at qd 1.
  const auto reduced = delete_edges(fano(), {fano().edges().front()}).output;
  CHECK(is_vertex_critical(reduced).value);
  CHECK(is_minimal_vertex_critical(reduced).value);
  for (const Edge& e : reduced.edges()) {
    const auto rem = delete_edges(reduced, {e}).output;
    bool collapsed = false;
    for (int v = 0; v < rem.n(); ++v)
      if (oracles::brute_qd(rem, v) < 2) collapsed = true;
    CHECK(collapsed);
  }

  CHECK_THROWS_AS(is_minimal_vertex_critical(star2()), PreconditionError);
}

TEST_CASE("is_three_chromatic_uniform") {
  CHECK(is_three_chromatic_uniform(fano()).value);
  CHECK(is_three_chromatic_uniform(triangle()).value);

  const auto p = is_three_chromatic_uniform(paper4());
  CHECK_FALSE(p.value);
  CHECK(p.non_uniform_witness == Edge{0, 3});

  // K^3_5 minus a line-free check: the star is uniform but 2-colorable
  const auto s = is_three_chromatic_uniform(star2());
  CHECK_FALSE(s.value);
  REQUIRE(s.two_coloring);
  CHECK(verify(star2(), *s.two_coloring));
}

TEST_CASE("classify on the named examples") {
  const auto tri = classify(triangle());
  CHECK(tri.rank == 2);
  for (int i = 1; i <= 5; ++i) CHECK(tri.in(i));

  const auto f = classify(fano());
  CHECK(f.rank == 3);
  for (int i = 1; i <= 5; ++i) CHECK(f.in(i));

  const auto p = classify(paper4());
  CHECK(p.rank == 3);
  CHECK_FALSE(p.in(1));
  CHECK_FALSE(p.in(2));
  CHECK_FALSE(p.in(3));
  CHECK(p.in(4));
  CHECK(p.in(5));
  CHECK(p.h3.short_transversal == Edge{0, 3});

  CHECK_THROWS_AS(classify(Hypergraph(4, {Edge{0, 1}, Edge{2, 3}})),
                  PreconditionError);
}

TEST_CASE("characterizations equal definitional oracles on the corpus") {
  for (const auto& h : corpus()) {
    CHECK(is_edge_critical(h).value == is_edge_critical_definitional(h));
    CHECK(is_vertex_critical(h).value == is_vertex_critical_definitional(h));
    CHECK(is_maximal_1_special(h).value == is_maximal_1_special_definitional(h));
  }
}

TEST_CASE("classes nest on the corpus and 1-special forces uniformity") {
  for (const auto& h : corpus()) {
    const auto cm = classify(h);
    CHECK(cm.nesting_ok());
    if (cm.h3.value) CHECK(rank_profile(h).is_uniform);
  }
}

TEST_CASE("classify is permutation-equivariant") {
  std::mt19937_64 rng(5150);
  for (const char* name : {"triangle", "fano", "paper_example_4v",
                           "complete_uniform(3)"}) {
    const Hypergraph h = catalog(name).hypergraph;
    const auto base = classify(h);
    for (int i = 0; i < 20; ++i) {
      const auto cm =
          classify(oracles::permuted(h, oracles::random_permutation(h.n(), rng)));
      for (int c = 1; c <= 5; ++c) CHECK(cm.in(c) == base.in(c));
    }
  }
}
