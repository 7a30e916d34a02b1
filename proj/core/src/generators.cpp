#include "fallkit/generators.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace fallkit {

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, std::move(edges));
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(edges));
}

Graph f_k(int k) {
  if (k < 2) throw std::invalid_argument("f_k needs k >= 2");
  // K_2 x K_k: (a1,b1) ~ (a2,b2) iff a1 != a2 and b1 != b2.
  std::vector<std::pair<int, int>> edges;
  for (int b1 = 0; b1 < k; ++b1)
    for (int b2 = 0; b2 < k; ++b2)
      if (b1 != b2) edges.emplace_back(b1, k + b2);
  return Graph::from_edges(2 * k, std::move(edges));
}

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);        // outer pentagon
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);              // spokes
  }
  return Graph::from_edges(10, std::move(edges));
}

Graph gen_random_regular(int n, int k, std::uint64_t seed) {
  if (k < 0 || k >= n || (static_cast<long long>(n) * k) % 2 != 0)
    throw std::invalid_argument("infeasible (n, k) for regular graph");
  std::mt19937_64 rng(seed);
  constexpr int kMaxRetries = 500;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<int> stubs;
    stubs.reserve(n * k);
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < k; ++i) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> edge_set;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) { ok = false; break; }
      auto e = std::minmax(u, v);
      if (!edge_set.emplace(e.first, e.second).second) { ok = false; break; }
    }
    if (!ok) continue;
    return Graph::from_edges(
        n, std::vector<std::pair<int, int>>(edge_set.begin(), edge_set.end()));
  }
  throw std::runtime_error("pairing failed to produce a simple graph");
}

Graph gen_chordal_ktree(int n, int k, std::uint64_t seed) {
  if (k < 1 || k >= n) throw std::invalid_argument("k-tree needs 1 <= k < n");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v) edges.emplace_back(u, v);

  // k-cliques available for attachment.
  std::vector<std::vector<int>> cliques;
  {
    std::vector<int> base(k + 1);
    for (int i = 0; i <= k; ++i) base[i] = i;
    for (int skip = 0; skip <= k; ++skip) {
      std::vector<int> c;
      for (int i = 0; i <= k; ++i)
        if (i != skip) c.push_back(base[i]);
      cliques.push_back(std::move(c));
    }
  }

  for (int v = k + 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
    const std::vector<int> clique = cliques[pick(rng)];
    for (int u : clique) edges.emplace_back(u, v);
    for (int skip = 0; skip < k; ++skip) {
      std::vector<int> c;
      for (int i = 0; i < k; ++i)
        if (i != skip) c.push_back(clique[i]);
      c.push_back(v);
      cliques.push_back(std::move(c));
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_maximal_outerplanar(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("maximal outerplanar needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);

  // Random triangulation: split the polygon arc i..j on a random apex.
  std::function<void(int, int)> triangulate = [&](int i, int j) {
    if (j - i < 2) return;
    std::uniform_int_distribution<int> pick(i + 1, j - 1);
    int apex = pick(rng);
    if (apex - i >= 2) edges.emplace_back(i, apex);
    if (j - apex >= 2) edges.emplace_back(apex, j);
    triangulate(i, apex);
    triangulate(apex, j);
  };
  triangulate(0, n - 1);
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("bad G(n,p) parameters");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace fallkit
