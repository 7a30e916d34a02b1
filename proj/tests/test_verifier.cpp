#include <doctest.h>

#include <algorithm>

#include "fallkit/classify.hpp"
#include "fallkit/generators.hpp"
#include "fallkit/solvers.hpp"
#include "fallkit/transforms.hpp"
#include "fallkit/verifier.hpp"

using namespace fallkit;

namespace {

// brute-force maximality: independent and no vertex can be added
bool brute_maximal_independent(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (s.contains(v)) continue;
    bool blocked = false;
    for (int u : g.neighbors(v)) blocked |= s.contains(u);
    if (!blocked) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("independence and domination on C5") {
  Graph g = cycle(5);
  CHECK(is_independent(g, VertexSet::of(5, {0, 2})));
  CHECK(!is_independent(g, VertexSet::of(5, {0, 1})));
  CHECK(is_dominating(g, VertexSet::of(5, {0, 2})));
  CHECK(!is_dominating(g, VertexSet::of(5, {0})));
  CHECK(is_ids(g, VertexSet::of(5, {0, 2})));
  CHECK(!is_ids(g, VertexSet::of(5, {0, 2, 4})));
  CHECK(is_independent(g, VertexSet(5)));   // empty set is independent
  CHECK(!is_dominating(g, VertexSet(5)));
}

TEST_CASE("IDS coincides with maximal independent on random graphs") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Graph g = gen_gnp(8, 0.2 + 0.08 * double(seed), seed);
    for (unsigned mask = 0; mask < 256u; ++mask) {
      VertexSet s(8);
      for (int v = 0; v < 8; ++v)
        if (mask >> v & 1) s.insert(v);
      CHECK(is_ids(g, s) == brute_maximal_independent(g, s));
    }
  }
}

TEST_CASE("fall verifier accepts the canonical C6 colorings") {
  Graph g = cycle(6);
  CHECK(is_fall_coloring(g, {2, {1, 2, 1, 2, 1, 2}}).valid);
  CHECK(is_fall_coloring(g, {3, {1, 2, 3, 1, 2, 3}}).valid);
}

TEST_CASE("fall verifier reports every violation kind") {
  Graph g = cycle(6);
  auto kinds = [](const VerifyReport& r) {
    std::vector<Violation::Kind> ks;
    for (const auto& v : r.violations) ks.push_back(v.kind);
    return ks;
  };

  auto r1 = is_fall_coloring(g, {3, {1, 1, 3, 1, 2, 3}});
  CHECK(!r1.valid);
  auto k1 = kinds(r1);
  CHECK(std::count(k1.begin(), k1.end(),
                   Violation::Kind::kMonochromaticEdge) == 1);

  // proper but vertex 2 never sees color 3
  auto r2 = is_fall_coloring(g, {3, {1, 2, 1, 2, 1, 3}});
  CHECK(!r2.valid);
  bool missing = false;
  for (auto k : kinds(r2)) missing |= k == Violation::Kind::kMissingColor;
  CHECK(missing);

  auto r3 = is_fall_coloring(g, {3, {1, 2, 1, 2, 1, 2}});
  CHECK(!r3.valid);
  CHECK(kinds(r3).front() == Violation::Kind::kEmptyClass);

  auto r4 = is_fall_coloring(g, {2, {1, 2, 1, 2, 1, 4}});
  CHECK(!r4.valid);
  CHECK(kinds(r4).front() == Violation::Kind::kBadClassIndex);

  CHECK_THROWS_AS(is_fall_coloring(g, {2, {1, 2}}), std::invalid_argument);

  for (const auto& v : r1.violations) CHECK(!v.describe().empty());
}

TEST_CASE("valid fall coloring iff every class is an IDS") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Graph g = gen_gnp(7, 0.45, seed + 100);
    const int k = 2;
    std::vector<int> a(7, 1);
    // walk all 2^7 two-colorings
    for (unsigned mask = 0; mask < 128u; ++mask) {
      VertexSet cls1(7), cls2(7);
      for (int v = 0; v < 7; ++v) {
        a[v] = (mask >> v & 1) ? 2 : 1;
        (a[v] == 1 ? cls1 : cls2).insert(v);
      }
      bool by_classes = is_ids(g, cls1) && is_ids(g, cls2) &&
                        !cls1.empty() && !cls2.empty();
      CHECK(is_fall_coloring(g, {k, a}).valid == by_classes);
    }
  }
}

TEST_CASE("disjoint IDS pairs") {
  Graph g = cycle(6);
  CHECK(are_disjoint_ids(g, VertexSet::of(6, {0, 2, 4}), VertexSet::of(6, {1, 3, 5})));
  CHECK(!are_disjoint_ids(g, VertexSet::of(6, {0, 2, 4}), VertexSet::of(6, {0, 3})));
  // {0,2} leaves vertex 4 undominated
  CHECK(!are_disjoint_ids(g, VertexSet::of(6, {0, 2}), VertexSet::of(6, {1, 4})));
}

TEST_CASE("fall validity distributes over disjoint unions") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Graph a = gen_gnp(4, 0.6, seed);
    Graph b = gen_gnp(5, 0.5, seed + 50);
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + 4, v + 4);
    Graph both = Graph::from_edges(9, edges);

    const int k = 2;
    // all 2^9 two-colorings of the union
    for (unsigned mask = 0; mask < 512u; ++mask) {
      std::vector<int> ca(4), cb(5), cu(9);
      for (int v = 0; v < 9; ++v) {
        cu[v] = (mask >> v & 1) + 1;
        if (v < 4) ca[v] = cu[v];
        else cb[v - 4] = cu[v];
      }
      bool whole = is_fall_coloring(both, {k, cu}).valid;
      bool parts = is_fall_coloring(a, {k, ca}).valid &&
                   is_fall_coloring(b, {k, cb}).valid;
      CHECK(whole == parts);
    }
  }
}

TEST_CASE("any proper 2-coloring of a connected bipartite graph is fall") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Graph g = subdivide(gen_gnp(6, 0.7, seed), 2);  // connected enough, bipartite
    auto rep = classify(g);
    if (rep.components.size() != 1 || rep.min_degree == 0) continue;
    auto sides = bipartition(g);
    REQUIRE(sides.has_value());
    std::vector<int> a;
    for (int s : *sides) a.push_back(s + 1);
    CHECK(is_fall_coloring(g, {2, a}).valid);
  }
}

TEST_CASE("proper colorings, vertex and edge") {
  Graph g = complete(3);
  CHECK(is_proper_coloring(g, {3, {1, 2, 3}}));
  CHECK(!is_proper_coloring(g, {3, {1, 2, 2}}));
  // K3 has three edges pairwise sharing endpoints
  CHECK(is_proper_edge_coloring(g, {3, {1, 2, 3}}));
  CHECK(!is_proper_edge_coloring(g, {3, {1, 2, 1}}));
  Graph c4 = cycle(4);
  CHECK(is_proper_edge_coloring(c4, {2, {1, 2, 2, 1}}));
}
