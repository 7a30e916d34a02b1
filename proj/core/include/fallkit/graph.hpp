#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fallkit {

/// Subset of the vertices 0..n-1 of a carrier graph, stored as a bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet of(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }
  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  int universe() const { return n_; }

  void insert(int v) { words_[v >> 6] |= (std::uint64_t{1} << (v & 63)); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(int v) const {
    return v >= 0 && v < n_ && (words_[v >> 6] >> (v & 63)) & 1;
  }

  int size() const;
  bool empty() const { return size() == 0; }

  bool intersects(const VertexSet& o) const;
  bool is_subset_of(const VertexSet& o) const;
  VertexSet set_union(const VertexSet& o) const;
  VertexSet set_intersection(const VertexSet& o) const;
  VertexSet complement() const;

  std::vector<int> to_vector() const;

  bool operator==(const VertexSet& o) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Undirected simple graph on vertices 0..n-1, immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list; duplicate edges collapse, orientation is
  /// normalized to u < v, and the stored edge list is sorted.
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges,
                          std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  int min_degree() const;
  int max_degree() const;

  /// Index of edge {u,v} in the sorted edge list, or -1.
  int edge_index(int u, int v) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }

  /// Closed neighborhood N[v] as a VertexSet.
  VertexSet closed_neighborhood(int v) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
};

}  // namespace fallkit
