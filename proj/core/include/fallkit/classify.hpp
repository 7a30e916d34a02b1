#pragma once

#include <optional>
#include <vector>

#include "fallkit/graph.hpp"

namespace fallkit {

struct StructureReport {
  bool bipartite = false;
  bool triangle_free = false;
  bool chordal = false;
  std::optional<int> k_regular;  // set when all degrees equal
  int min_degree = 0;
  int max_degree = 0;
  std::vector<std::vector<int>> components;
};

StructureReport classify(const Graph& g);

/// Proper 2-coloring sides when bipartite, else nullopt. side[v] in {0,1}.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// Chordality via maximum cardinality search + perfect elimination check.
bool is_chordal(const Graph& g);

}  // namespace fallkit
