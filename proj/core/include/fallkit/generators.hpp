#pragma once

#include <cstdint>

#include "fallkit/graph.hpp"

namespace fallkit {

Graph cycle(int n);     // C_n, n >= 3
Graph complete(int n);  // K_n, n >= 1
Graph path(int n);      // P_n, n >= 1

/// F_k = K_2 x K_k: 2k vertices, (k-1)-regular, bipartite. Vertex (a, b)
/// has index a * k + b, so the anchor (0, 0) is vertex 0. k >= 2.
Graph f_k(int k);

/// The Petersen graph (3-regular, 10 vertices).
Graph petersen();

/// Random k-regular simple graph via the pairing model, retried until
/// simple. Requires n * k even and k < n. Deterministic in seed.
Graph gen_random_regular(int n, int k, std::uint64_t seed);

/// Random k-tree: K_{k+1} plus n-k-1 vertices each joined to a random
/// existing k-clique. Chordal with min degree k. Requires k < n.
Graph gen_chordal_ktree(int n, int k, std::uint64_t seed);

/// Random triangulation of an n-gon (maximal outerplanar), n >= 3.
Graph gen_maximal_outerplanar(int n, std::uint64_t seed);

/// Erdos-Renyi G(n, p) with edge probability num/den. Deterministic in seed.
Graph gen_gnp(int n, double p, std::uint64_t seed);

}  // namespace fallkit
