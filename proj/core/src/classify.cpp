#include "fallkit/classify.hpp"

#include <algorithm>
#include <queue>

namespace fallkit {

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int src = 0; src < n; ++src) {
    if (side[src] != -1) continue;
    side[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          q.push(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

static bool triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    // sorted lists: common neighbor = triangle
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
      if (nu[i] == nv[j]) return false;
      if (nu[i] < nv[j]) ++i; else ++j;
    }
  }
  return true;
}

bool is_chordal(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;

  // Maximum cardinality search: visit order alpha[0..n-1].
  std::vector<int> weight(n, 0), alpha;
  std::vector<char> visited(n, 0);
  alpha.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
    visited[best] = 1;
    alpha.push_back(best);
    for (int u : g.neighbors(best))
      if (!visited[u]) ++weight[u];
  }

  // Reverse visit order is a perfect elimination ordering iff chordal.
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[alpha[i]] = n - 1 - i;  // PEO position

  for (int v = 0; v < n; ++v) {
    // Later neighbors of v in the PEO must form a clique; it suffices to
    // check them against the earliest one.
    int parent = -1;
    for (int u : g.neighbors(v))
      if (pos[u] > pos[v] && (parent == -1 || pos[u] < pos[parent])) parent = u;
    if (parent == -1) continue;
    for (int u : g.neighbors(v))
      if (pos[u] > pos[parent] && !g.has_edge(parent, u)) return false;
  }
  return true;
}

StructureReport classify(const Graph& g) {
  StructureReport r;
  r.bipartite = bipartition(g).has_value();
  r.triangle_free = triangle_free(g);
  r.chordal = is_chordal(g);
  r.min_degree = g.min_degree();
  r.max_degree = g.max_degree();
  if (g.vertex_count() > 0 && r.min_degree == r.max_degree)
    r.k_regular = r.min_degree;

  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  for (int src = 0; src < n; ++src) {
    if (seen[src]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(src);
    seen[src] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          q.push(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    r.components.push_back(std::move(comp));
  }
  return r;
}

}  // namespace fallkit
