#pragma once

#include <string>
#include <vector>

#include "fallkit/graph.hpp"

namespace fallkit {

/// Total map vertex -> color class in 1..k. A fall k-coloring certificate.
struct Coloring {
  int k = 0;
  std::vector<int> assignment;  // assignment[v] in 1..k

  bool operator==(const Coloring&) const = default;
};

/// Total map edge -> color class in 1..k, indexed by the carrier graph's
/// sorted edge order.
struct EdgeColoring {
  int k = 0;
  std::vector<int> assignment;
};

struct Violation {
  enum class Kind {
    kMonochromaticEdge,   // edge uv with c(u) == c(v)
    kMissingColor,        // vertex not adjacent to some other class
    kEmptyClass,          // declared class with no member
    kBadClassIndex,       // assignment outside 1..k
  };
  Kind kind;
  int vertex = -1;  // vertex, or edge endpoint u
  int other = -1;   // edge endpoint v, or the missing/empty color
  std::string describe() const;
};

struct VerifyReport {
  bool valid = false;
  std::vector<Violation> violations;
};

bool is_independent(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s);

/// Independent dominating set; equivalently a maximal independent set.
bool is_ids(const Graph& g, const VertexSet& s);

bool are_disjoint_ids(const Graph& g, const VertexSet& s1, const VertexSet& s2);

/// Checks that c partitions V into k nonempty independent classes and that
/// every vertex is colorful (sees all other classes in its neighborhood).
/// Reports all violations, not just the first.
VerifyReport is_fall_coloring(const Graph& g, const Coloring& c);

bool is_proper_coloring(const Graph& g, const Coloring& c);
bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& h);

}  // namespace fallkit
