#include "fallkit/transforms.hpp"

#include <queue>
#include <stdexcept>
#include <string>

namespace fallkit {

Graph subdivide(const Graph& g, int s) {
  if (s < 1) throw std::invalid_argument("subdivision factor must be >= 1");
  if (s == 1) return g;

  const int n = g.vertex_count();
  int next = n;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels(n + (s - 1) * g.edge_count());
  if (g.has_labels())
    for (int v = 0; v < n; ++v) labels[v] = g.label(v);

  for (auto [u, v] : g.edges()) {
    int prev = u;
    for (int i = 1; i < s; ++i) {
      labels[next] = "subdivision(" + std::to_string(u) + "," +
                     std::to_string(v) + ")";
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, v);
  }
  return Graph::from_edges(next, std::move(edges), std::move(labels));
}

Graph power(const Graph& g, int s) {
  if (s < 1) throw std::invalid_argument("power must be >= 1");
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  // BFS from every vertex up to depth s.
  std::vector<int> dist(n);
  for (int src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (dist[u] == s) continue;
      for (int w : g.neighbors(u))
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
    }
    for (int v = src + 1; v < n; ++v)
      if (dist[v] >= 1 && dist[v] <= s) edges.emplace_back(src, v);
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph categorical_product(const Graph& g, const Graph& h) {
  if (g.vertex_count() == 0 || h.vertex_count() == 0)
    throw std::invalid_argument("product of empty graph");
  const int nh = h.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (auto [g1, g2] : g.edges())
    for (auto [h1, h2] : h.edges()) {
      edges.emplace_back(g1 * nh + h1, g2 * nh + h2);
      edges.emplace_back(g1 * nh + h2, g2 * nh + h1);
    }
  return Graph::from_edges(g.vertex_count() * nh, std::move(edges));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.vertex_count() == 0 || h.vertex_count() == 0)
    throw std::invalid_argument("product of empty graph");
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (auto [g1, g2] : g.edges())
    for (int v = 0; v < nh; ++v) edges.emplace_back(g1 * nh + v, g2 * nh + v);
  for (auto [h1, h2] : h.edges())
    for (int u = 0; u < ng; ++u) edges.emplace_back(u * nh + h1, u * nh + h2);
  return Graph::from_edges(ng * nh, std::move(edges));
}

Graph line_graph(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("line graph of edgeless graph");
  const auto& src_edges = g.edges();
  const int m = static_cast<int>(src_edges.size());
  std::vector<std::vector<int>> incident(g.vertex_count());
  for (int e = 0; e < m; ++e) {
    incident[src_edges[e].first].push_back(e);
    incident[src_edges[e].second].push_back(e);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& inc : incident)
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        edges.emplace_back(inc[i], inc[j]);
  return Graph::from_edges(m, std::move(edges));
}

}  // namespace fallkit
