#pragma once

#include "fallkit/graph.hpp"

namespace fallkit {

/// G^{1/s}: every edge replaced by a path of length s through s-1 fresh
/// vertices. Fresh vertices are appended after the originals, grouped by
/// sorted edge order. subdivide(g, 1) == g.
Graph subdivide(const Graph& g, int s);

/// G^s: same vertex set, u ~ v iff 1 <= dist_g(u, v) <= s.
Graph power(const Graph& g, int s);

/// G x H: pairs adjacent iff adjacent in both coordinates.
/// Vertex (u, v) has row-major index u * |V(H)| + v.
Graph categorical_product(const Graph& g, const Graph& h);

/// G box H: pairs adjacent iff adjacent in exactly one coordinate and equal
/// in the other. Same row-major indexing as categorical_product.
Graph cartesian_product(const Graph& g, const Graph& h);

/// L(G): one vertex per edge of g (sorted edge order), adjacent iff the
/// underlying edges share an endpoint. Throws on edgeless input.
Graph line_graph(const Graph& g);

}  // namespace fallkit
