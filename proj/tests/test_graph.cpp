#include <doctest.h>

#include <algorithm>
#include <set>

#include "fallkit/classify.hpp"
#include "fallkit/generators.hpp"
#include "fallkit/io.hpp"
#include "fallkit/transforms.hpp"

using namespace fallkit;

TEST_CASE("from_edges normalizes, sorts, deduplicates") {
  Graph g = Graph::from_edges(4, {{2, 0}, {0, 2}, {1, 0}, {3, 2}});
  CHECK(g.edge_count() == 3);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {2, 3}});
  CHECK(g.has_edge(2, 0));
  CHECK(!g.has_edge(1, 2));
  CHECK(g.edge_index(0, 2) == 1);
  CHECK(g.edge_index(1, 2) == -1);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("VertexSet algebra") {
  VertexSet a = VertexSet::of(70, {0, 5, 64, 69});
  VertexSet b = VertexSet::of(70, {5, 69});
  CHECK(a.size() == 4);
  CHECK(b.is_subset_of(a));
  CHECK(!a.is_subset_of(b));
  CHECK(a.set_intersection(b) == b);
  CHECK(a.set_union(b) == a);
  CHECK(a.complement().size() == 66);
  CHECK(!a.complement().intersects(a));
  a.erase(64);
  CHECK(a.to_vector() == std::vector<int>{0, 5, 69});
}

TEST_CASE("DIMACS round trip") {
  Graph g = petersen();
  Graph h = parse_dimacs(to_dimacs(g));
  CHECK(h.vertex_count() == 10);
  CHECK(h.edges() == g.edges());
  CHECK_THROWS_AS(parse_dimacs("garbage"), ParseError);
  // duplicate lines collapse
  Graph d = parse_dimacs("p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n");
  CHECK(d.edge_count() == 2);
}

TEST_CASE("JSON graph round trip keeps labels") {
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}}, {"a", "b", "c"});
  Graph h = graph_from_json(graph_to_json(g));
  CHECK(h.edges() == g.edges());
  REQUIRE(h.has_labels());
  CHECK(h.label(2) == "c");
}

TEST_CASE("subdivision sizes and parity") {
  Graph g = complete(4);
  for (int s = 1; s <= 3; ++s) {
    Graph h = subdivide(g, s);
    CHECK(h.vertex_count() == 4 + 6 * (s - 1));
    CHECK(h.edge_count() == 6 * s);
  }
  // an even-length subdivision of anything is bipartite
  CHECK(classify(subdivide(g, 2)).bipartite);
  CHECK(subdivide(g, 1).edges() == g.edges());
}

TEST_CASE("power of a subdivision recovers the original edges") {
  Graph g = gen_gnp(9, 0.4, 11);
  Graph h = power(subdivide(g, 2), 2);
  for (auto [u, v] : g.edges()) CHECK(h.has_edge(u, v));
}

TEST_CASE("power examples") {
  Graph c6sq = power(cycle(6), 2);
  CHECK(c6sq.edge_count() == 12);  // 4-regular
  CHECK(!c6sq.has_edge(0, 3));
  Graph p4full = power(path(4), 3);
  CHECK(p4full.edge_count() == 6);
}

TEST_CASE("F_k is (k-1)-regular bipartite on 2k vertices") {
  for (int k = 2; k <= 8; ++k) {
    Graph g = f_k(k);
    CHECK(g.vertex_count() == 2 * k);
    auto rep = classify(g);
    CHECK(rep.k_regular == k - 1);
    CHECK(rep.bipartite);
  }
  // (a,b) ~ (a',b') iff a != a' and b != b'
  Graph f3 = f_k(3);
  CHECK(f3.has_edge(0 * 3 + 0, 1 * 3 + 1));
  CHECK(!f3.has_edge(0 * 3 + 0, 1 * 3 + 0));
}

TEST_CASE("categorical product agrees with f_k") {
  Graph g = categorical_product(complete(2), complete(5));
  CHECK(g.edges() == f_k(5).edges());
}

TEST_CASE("cartesian product with K2 doubles the graph plus a matching") {
  Graph g = petersen();
  Graph h = cartesian_product(g, complete(2));
  CHECK(h.vertex_count() == 20);
  CHECK(h.edge_count() == 2 * g.edge_count() + g.vertex_count());
  CHECK(classify(h).k_regular == 4);
}

TEST_CASE("line graph of a k-regular graph is (2k-2)-regular") {
  Graph l = line_graph(petersen());
  CHECK(l.vertex_count() == 15);
  CHECK(classify(l).k_regular == 4);
  CHECK_THROWS_AS(line_graph(Graph::from_edges(3, {})), std::invalid_argument);
  CHECK(line_graph(complete(3)).edges() == complete(3).edges());
}

TEST_CASE("generators are deterministic in the seed") {
  CHECK(gen_random_regular(12, 3, 5).edges() == gen_random_regular(12, 3, 5).edges());
  CHECK(gen_chordal_ktree(10, 3, 5).edges() == gen_chordal_ktree(10, 3, 5).edges());
  CHECK(gen_maximal_outerplanar(9, 5).edges() == gen_maximal_outerplanar(9, 5).edges());
  CHECK(gen_gnp(10, 0.5, 5).edges() == gen_gnp(10, 0.5, 5).edges());
  CHECK(gen_gnp(10, 0.5, 5).edges() != gen_gnp(10, 0.5, 6).edges());
}

TEST_CASE("random regular generator hits the degree sequence") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = gen_random_regular(10, 3, seed);
    CHECK(classify(g).k_regular == 3);
  }
  CHECK_THROWS(gen_random_regular(7, 3, 0));  // odd nk
}

TEST_CASE("k-trees are chordal with min degree k") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = gen_chordal_ktree(11, 3, seed);
    auto rep = classify(g);
    CHECK(rep.chordal);
    CHECK(rep.min_degree == 3);
  }
}

TEST_CASE("maximal outerplanar triangulations have 2n-3 edges") {
  for (int n = 3; n <= 12; ++n) {
    Graph g = gen_maximal_outerplanar(n, 17);
    CHECK(g.edge_count() == 2 * n - 3);
    CHECK(is_chordal(g));
  }
}

TEST_CASE("classify basics") {
  auto rep = classify(cycle(5));
  CHECK(!rep.bipartite);
  CHECK(rep.triangle_free);
  CHECK(!rep.chordal);
  CHECK(rep.k_regular == 2);
  CHECK(rep.components.size() == 1);
  CHECK(classify(cycle(4)).bipartite);
  CHECK(classify(complete(4)).chordal);
  CHECK(classify(petersen()).k_regular == 3);

  auto sides = bipartition(cycle(6));
  REQUIRE(sides.has_value());
  CHECK((*sides)[0] != (*sides)[1]);
  CHECK(!bipartition(cycle(5)).has_value());
}

TEST_CASE("coloring file round trip") {
  Coloring c{3, {1, 2, 3, 1}};
  Coloring d = parse_coloring(to_coloring_text(c), 4);
  CHECK(d == c);
  CHECK_THROWS_AS(parse_coloring("0 1\n", 2), ParseError);  // vertex 1 missing
}

TEST_CASE("CNF round trip and validation") {
  CnfFormula phi = parse_dimacs_cnf("p cnf 4 2\n1 2 3 0\n-1 -2 -4 0\n");
  CHECK(phi.num_vars == 4);
  CHECK(phi.is_monotone());
  CHECK(phi.clause_positive(0));
  CHECK(!phi.clause_positive(1));
  CHECK(phi.satisfied_by({true, false, false, false}));
  CHECK(!phi.satisfied_by({true, true, true, true}));
  CnfFormula back = parse_dimacs_cnf(to_dimacs_cnf(phi));
  CHECK(back.clauses == phi.clauses);
  CHECK_THROWS(parse_dimacs_cnf("p cnf 2 1\n1 1 2 0\n"));  // repeated variable
}
