#include <doctest.h>

#include "fallkit/classify.hpp"
#include "fallkit/generators.hpp"
#include "fallkit/harness.hpp"
#include "fallkit/reductions.hpp"
#include "fallkit/solvers.hpp"
#include "fallkit/transforms.hpp"
#include "fallkit/verifier.hpp"

using namespace fallkit;

TEST_CASE("3col target sizes: 6n + m vertices, 2m + 6n edges") {
  auto [t3, tr3] = reduce_3col_to_fall3(complete(3));
  CHECK(t3.vertex_count() == 21);
  CHECK(t3.edge_count() == 24);
  CHECK(tr3.source_n == 3);
  CHECK(tr3.source_m == 3);

  auto [t4, tr4] = reduce_3col_to_fall3(complete(4));
  CHECK(t4.vertex_count() == 30);
  CHECK(t4.edge_count() == 36);

  // originals keep indices; roles are total
  CHECK(static_cast<int>(tr3.role_map.size()) == t3.vertex_count());
  for (int v = 0; v < 3; ++v) {
    CHECK(tr3.role_map[v].kind == VertexRole::Kind::kOriginal);
    CHECK(tr3.role_map[v].a == v);
  }
  CHECK(t3.max_degree() <= 6);
}

TEST_CASE("kcol target sizes: 2kn + m(1 + 2k(k-3)) vertices") {
  const int k = 4;
  Graph g = complete(4);
  auto [t, tr] = reduce_kcol_to_fallk(g, k);
  int n = 4, m = 6;
  CHECK(t.vertex_count() == 2 * k * n + m * (1 + (k - 3) * 2 * k));
  CHECK(t.max_degree() <= 3 * (k - 1));
  CHECK(tr.k == k);

  // k = 3 collapses to the 3-coloring reduction
  auto [t3a, tra] = reduce_kcol_to_fallk(g, 3);
  auto [t3b, trb] = reduce_3col_to_fall3(g);
  CHECK(t3a.edges() == t3b.edges());
  CHECK(tra.role_map == trb.role_map);
}

TEST_CASE("coloring lift round trip through the 3col reduction") {
  Graph g = cycle(5);
  auto [t, tr] = reduce_3col_to_fall3(g);
  auto c = proper_color_decide(g, 3);
  REQUIRE(c.has_value());
  c->k = 3;
  Coloring fall = lift_coloring_to_fall(g, t, tr, *c);
  CHECK(is_fall_coloring(t, fall).valid);
  Coloring back = lift_fall_to_coloring(t, tr, fall);
  CHECK(is_proper_coloring(g, back));
  CHECK(back.assignment == c->assignment);

  // an invalid certificate is rejected
  fall.assignment[0] = fall.assignment[t.neighbors(0)[0]];
  CHECK_THROWS_AS(lift_fall_to_coloring(t, tr, fall), std::invalid_argument);
}

TEST_CASE("coloring lift round trip through the k=4 reduction") {
  Graph g = complete(4);
  auto [t, tr] = reduce_kcol_to_fallk(g, 4);
  auto c = proper_color_decide(g, 4);
  REQUIRE(c.has_value());
  c->k = 4;
  Coloring fall = lift_coloring_to_fall(g, t, tr, *c);
  CHECK(is_fall_coloring(t, fall).valid);
  Coloring back = lift_fall_to_coloring(t, tr, fall);
  CHECK(is_proper_coloring(g, back));
}

TEST_CASE("edge coloring reduction targets") {
  Graph g = complete(4);  // cubic
  auto [l, trl] = reduce_edgecol_to_fallk(g, 3, false);
  CHECK(l.vertex_count() == 6);
  CHECK(classify(l).k_regular == 4);  // 2k - 2
  CHECK(fall_decide_backtrack(l, 3).feasible);

  auto [b, trb] = reduce_edgecol_to_fallk(g, 3, true);
  CHECK(b.vertex_count() == 12);
  CHECK(classify(b).k_regular == 5);  // 2k - 1
  CHECK(fall_decide_backtrack(b, 3).feasible);
  CHECK(trb.kind == ReductionKind::kEdgeColToFallKBoxK2);

  // Petersen is class two: its line graph is not fall 3-colorable
  auto [lp, trp] = reduce_edgecol_to_fallk(petersen(), 3, false);
  CHECK(!fall_decide_backtrack(lp, 3).feasible);
}

TEST_CASE("SAT reduction: sizes, shape, certificate lifts") {
  CnfFormula phi;
  phi.num_vars = 5;
  phi.clauses = {{1, 2, 3}, {-2, -4, -5}, {3, 4, 5}};
  phi.validate();
  auto [t, tr] = reduce_sat_to_2ids(phi);
  CHECK(t.vertex_count() == 8 * 5 + 3);
  CHECK(classify(t).triangle_free);
  CHECK(tr.source_n == 5);
  CHECK(tr.source_m == 3);

  std::vector<bool> tau = {true, false, true, false, false};
  REQUIRE(phi.satisfied_by(tau));
  auto [s1, s2] = lift_assignment_to_ids(t, tr, tau, phi);
  CHECK(are_disjoint_ids(t, s1, s2));

  auto back = lift_ids_to_assignment(t, tr, s1, s2, phi);
  CHECK(phi.satisfied_by(back));
}

TEST_CASE("SAT reduction: solver pair lifts to a satisfying assignment") {
  CnfFormula phi;
  phi.num_vars = 3;
  phi.clauses = {{1, 2, 3}, {-1, -2, -3}};
  auto [t, tr] = reduce_sat_to_2ids(phi);
  auto pair = two_disjoint_ids(t);
  REQUIRE(pair.has_value());
  auto tau = lift_ids_to_assignment(t, tr, pair->first, pair->second, phi);
  CHECK(phi.satisfied_by(tau));
}

TEST_CASE("trace JSON round trip") {
  auto [t, tr] = reduce_kcol_to_fallk(cycle(4), 4);
  ReductionTrace back = ReductionTrace::from_json(tr.to_json());
  CHECK(back.kind == tr.kind);
  CHECK(back.source_n == tr.source_n);
  CHECK(back.source_m == tr.source_m);
  CHECK(back.k == tr.k);
  CHECK(back.role_map == tr.role_map);
}

TEST_CASE("role strings are carried as target labels") {
  auto [t, tr] = reduce_3col_to_fall3(complete(3));
  REQUIRE(t.has_labels());
  for (int v = 0; v < t.vertex_count(); ++v)
    CHECK(t.label(v) == tr.role_map[v].to_string());
}

TEST_CASE("harness smoke runs, a few trials per family") {
  CHECK(equivalence_harness(HarnessFamily::kThreeColToFall3, 5, 6, 1).all_passed());
  CHECK(equivalence_harness(HarnessFamily::kKColToFallK, 3, 5, 1).all_passed());
  CHECK(equivalence_harness(HarnessFamily::kEdgeColToFallK, 3, 8, 1).all_passed());
  CHECK(equivalence_harness(HarnessFamily::kSatToTwoIds, 5, 5, 1).all_passed());
  // deterministic in the seed
  auto a = equivalence_harness(HarnessFamily::kThreeColToFall3, 4, 6, 9);
  auto b = equivalence_harness(HarnessFamily::kThreeColToFall3, 4, 6, 9);
  CHECK(a.to_json() == b.to_json());
}
