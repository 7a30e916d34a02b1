#include "fallkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fallkit {

int VertexSet::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::intersects(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
    if (words_[i] & ~other) return false;
  }
  return true;
}

VertexSet VertexSet::set_union(const VertexSet& o) const {
  VertexSet r(std::max(n_, o.n_));
  for (std::size_t i = 0; i < r.words_.size(); ++i) {
    std::uint64_t a = i < words_.size() ? words_[i] : 0;
    std::uint64_t b = i < o.words_.size() ? o.words_[i] : 0;
    r.words_[i] = a | b;
  }
  return r;
}

VertexSet VertexSet::set_intersection(const VertexSet& o) const {
  VertexSet r(std::max(n_, o.n_));
  for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i)
    r.words_[i] = words_[i] & o.words_[i];
  return r;
}

VertexSet VertexSet::complement() const {
  VertexSet r(n_);
  for (int v = 0; v < n_; ++v)
    if (!contains(v)) r.insert(v);
  return r;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges,
                        std::vector<std::string> labels) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("labels must be total over 0..n-1");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.labels_ = std::move(labels);
  g.adj_.assign(n, {});
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges_.begin());
}

VertexSet Graph::closed_neighborhood(int v) const {
  VertexSet s(n_);
  s.insert(v);
  for (int u : adj_[v]) s.insert(u);
  return s;
}

}  // namespace fallkit
