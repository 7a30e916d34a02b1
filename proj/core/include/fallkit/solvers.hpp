#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fallkit/graph.hpp"
#include "fallkit/verifier.hpp"

namespace fallkit {

struct SolverStats {
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

/// Decision/search/count result for one (G, k) query.
struct FallResult {
  int k = 0;
  bool feasible = false;
  std::optional<Coloring> witness;
  std::optional<std::uint64_t> count;  // labeled fall k-colorings
  SolverStats stats;
};

/// All k admitting a fall k-coloring; probed over 1..min_degree+1.
struct FallSet {
  std::vector<int> members;
  int probed_lo = 1;
  int probed_hi = 0;

  bool contains(int k) const;
  std::optional<int> chi_fall() const;  // min member
  std::optional<int> psi_fall() const;  // max member
};

/// Size guards; configuration, not constants.
struct SolverLimits {
  int oracle_max_n = 14;
  int incexc_max_n = 20;
  int mis_max_n = 64;       // bitset solvers: enumerate_mis, polyspace, 2-IDS
  int chromatic_max_n = 40;
};

struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration over all k^n colorings (prefix-pruned on
/// properness only). Exact count of labeled fall k-colorings; the witness
/// is the lexicographically first. The baseline oracle the other solvers
/// are checked against.
FallResult oracle_fall(const Graph& g, int k, const SolverLimits& limits = {});

/// All maximal independent sets (equivalently all IDS), deterministic order.
std::vector<VertexSet> enumerate_mis(const Graph& g, const SolverLimits& limits = {});

/// Backtracking decision solver with colorfulness propagation. Branches in
/// degeneracy order; fully deterministic.
FallResult fall_decide_backtrack(const Graph& g, int k);

/// Exact count of ordered partitions of V into k IDS by inclusion-exclusion
/// over subsets with per-cardinality IDS counts. 2^n time, 2^n space.
FallResult fall_count_incexc(const Graph& g, int k, const SolverLimits& limits = {});

/// Decision only, polynomial space: branch over the IDS containing the
/// lowest-indexed uncovered vertex, recurse with k-1 classes.
FallResult fall_decide_polyspace(const Graph& g, int k, const SolverLimits& limits = {});

/// Probes every k in 1..min_degree+1 (dispatcher first, then backtracking).
FallSet fall_set(const Graph& g, const SolverLimits& limits = {});

/// Exact chromatic number via branch and bound (greedy upper bound, clique
/// lower bound).
int chromatic_number(const Graph& g, const SolverLimits& limits = {});

/// Exact proper k-coloring decision. The returned coloring is normalized so
/// its declared k equals the number of classes actually used.
std::optional<Coloring> proper_color_decide(const Graph& g, int k,
                                            const SolverLimits& limits = {});

/// Exact edge k-coloring via proper coloring of the line graph.
std::optional<EdgeColoring> edge_color_decide(const Graph& g, int k,
                                              const SolverLimits& limits = {});

/// Polynomial special cases; definitive answer or nullopt:
///   (a) disjoint union of cycles: divisibility rules per component;
///   (b) k = 2: bipartite with min degree >= 1;
///   (c) chordal with k >= 2 and k != min_degree+1: infeasible;
///   (d) r-regular, k = r+1: chi(G^2) == r+1 (desk scale only);
///   (e) k = 1: edgeless.
std::optional<FallResult> special_case_dispatch(const Graph& g, int k,
                                                const SolverLimits& limits = {});

/// Some disjoint pair of IDS, or nullopt. Deterministic.
std::optional<std::pair<VertexSet, VertexSet>> two_disjoint_ids(
    const Graph& g, const SolverLimits& limits = {});

}  // namespace fallkit
