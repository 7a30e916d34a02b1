#include "fallkit/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <numeric>

#include "fallkit/classify.hpp"
#include "fallkit/generators.hpp"
#include "fallkit/transforms.hpp"

namespace fallkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Closed neighborhood masks; only valid for n <= 64.
std::vector<std::uint64_t> closed_nbhd_masks(const Graph& g) {
  std::vector<std::uint64_t> cn(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    cn[v] = bit(v);
    for (int u : g.neighbors(v)) cn[v] |= bit(u);
  }
  return cn;
}

// Smallest-last removal; branching happens in reverse removal order so the
// dense core is colored first.
// Most-constrained-first: descending degree, index as tie-break. Keeps the
// search in the dense part of the graph so contradictions surface before the
// sparse periphery multiplies the branching.
std::vector<int> branch_order(const Graph& g) {
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

VertexSet mask_to_set(int n, std::uint64_t mask) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) s.insert(v);
  return s;
}

}  // namespace

bool FallSet::contains(int k) const {
  return std::find(members.begin(), members.end(), k) != members.end();
}
std::optional<int> FallSet::chi_fall() const {
  if (members.empty()) return std::nullopt;
  return *std::min_element(members.begin(), members.end());
}
std::optional<int> FallSet::psi_fall() const {
  if (members.empty()) return std::nullopt;
  return *std::max_element(members.begin(), members.end());
}

FallResult oracle_fall(const Graph& g, int k, const SolverLimits& limits) {
  const int n = g.vertex_count();
  if (n > limits.oracle_max_n)
    throw GuardExceeded("oracle_fall guard exceeded: n=" + std::to_string(n));
  if (k < 1) throw std::invalid_argument("k must be >= 1");

  auto t0 = Clock::now();
  FallResult result;
  result.k = k;

  std::vector<int> colors(n, 0);
  std::vector<char> seen(k + 1);

  // Colorful + surjectivity check at a proper leaf.
  auto leaf_valid = [&]() {
    std::vector<char> used(k + 1, 0);
    for (int v = 0; v < n; ++v) used[colors[v]] = 1;
    for (int c = 1; c <= k; ++c)
      if (!used[c]) return false;
    for (int v = 0; v < n; ++v) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int u : g.neighbors(v)) seen[colors[u]] = 1;
      for (int c = 1; c <= k; ++c)
        if (c != colors[v] && !seen[c]) return false;
    }
    return true;
  };

  std::function<void(int)> enumerate = [&](int v) {
    ++result.stats.nodes;
    if (v == n) {
      if (leaf_valid()) {
        result.count = result.count.value_or(0) + 1;
        if (!result.witness) result.witness = Coloring{k, colors};
      }
      return;
    }
    for (int c = 1; c <= k; ++c) {
      bool proper = true;
      for (int u : g.neighbors(v))
        if (u < v && colors[u] == c) {
          proper = false;
          break;
        }
      if (!proper) continue;
      colors[v] = c;
      enumerate(v + 1);
      colors[v] = 0;
    }
  };
  enumerate(0);

  if (!result.count) result.count = 0;
  result.feasible = *result.count > 0;
  result.stats.elapsed_seconds = seconds_since(t0);
  return result;
}

std::vector<VertexSet> enumerate_mis(const Graph& g, const SolverLimits& limits) {
  const int n = g.vertex_count();
  if (n > limits.mis_max_n)
    throw GuardExceeded("enumerate_mis guard exceeded: n=" + std::to_string(n));
  if (n == 0) return {VertexSet(0)};

  // Bron-Kerbosch with pivoting on the complement adjacency.
  std::vector<std::uint64_t> non_nbr(n);
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (bit(n) - 1);
  for (int v = 0; v < n; ++v) {
    std::uint64_t adj = 0;
    for (int u : g.neighbors(v)) adj |= bit(u);
    non_nbr[v] = full & ~(adj | bit(v));
  }

  std::vector<std::uint64_t> found;
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> bk =
      [&](std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (p == 0 && x == 0) {
          found.push_back(r);
          return;
        }
        std::uint64_t px = p | x;
        int pivot = std::countr_zero(px);
        std::uint64_t best_cover = p & non_nbr[pivot];
        for (std::uint64_t rest = px & (px - 1); rest; rest &= rest - 1) {
          int cand = std::countr_zero(rest);
          std::uint64_t cover = p & non_nbr[cand];
          if (std::popcount(cover) > std::popcount(best_cover)) {
            pivot = cand;
            best_cover = cover;
          }
        }
        std::uint64_t ext = p & ~non_nbr[pivot];
        while (ext) {
          int v = std::countr_zero(ext);
          ext &= ext - 1;
          bk(r | bit(v), p & non_nbr[v], x & non_nbr[v]);
          p &= ~bit(v);
          x |= bit(v);
        }
      };
  bk(0, full, 0);
  std::sort(found.begin(), found.end());

  std::vector<VertexSet> out;
  out.reserve(found.size());
  for (auto mask : found) out.push_back(mask_to_set(n, mask));
  return out;
}

// ---------------------------------------------------------------------------
// Backtracking decision solver.
//
// Branches in degeneracy order. At every node it recomputes per-vertex color
// domains from properness, then iterates two propagation rules to a fixpoint:
//   - a colored vertex whose missing colors exactly fill its uncolored
//     neighborhood restricts those neighbors' domains to the missing set;
//   - a singleton domain is assigned immediately.
// Prunes when a vertex can no longer become colorful or a class must stay
// empty.
// ---------------------------------------------------------------------------
namespace {

struct BacktrackSolver {
  const Graph& g;
  int k;
  std::uint32_t full_mask;
  std::vector<int> colors;  // 0 = unassigned
  std::vector<int> order;
  std::uint64_t nodes = 0;

  BacktrackSolver(const Graph& graph, int classes)
      : g(graph),
        k(classes),
        full_mask(classes >= 32 ? ~std::uint32_t{0}
                                : (std::uint32_t{1} << classes) - 1),
        colors(graph.vertex_count(), 0),
        order(branch_order(graph)) {}

  static int popcount(std::uint32_t m) { return std::popcount(m); }

  bool solve() {
    ++nodes;
    const int n = g.vertex_count();
    std::vector<int> assigned_here;
    std::vector<std::uint32_t> dom(n, full_mask);

    // Propagation to fixpoint.
    bool progress = true;
    bool failed = false;
    while (progress && !failed) {
      progress = false;

      for (int v = 0; v < n && !failed; ++v) {
        std::uint32_t seen = 0;
        int uncolored_nbrs = 0;
        for (int u : g.neighbors(v)) {
          if (colors[u]) seen |= std::uint32_t{1} << (colors[u] - 1);
          else ++uncolored_nbrs;
        }
        if (colors[v]) {
          if (seen & (std::uint32_t{1} << (colors[v] - 1))) {
            failed = true;  // monochromatic edge
            break;
          }
          std::uint32_t miss =
              full_mask & ~seen & ~(std::uint32_t{1} << (colors[v] - 1));
          int missing = popcount(miss);
          if (missing > uncolored_nbrs) { failed = true; break; }
          if (missing == uncolored_nbrs && missing > 0) {
            for (int u : g.neighbors(v))
              if (!colors[u]) {
                dom[u] &= miss;
                if (dom[u] == 0) { failed = true; break; }
              }
          }
        } else {
          dom[v] &= ~seen;  // properness
          std::uint32_t miss = full_mask & ~seen;
          if (popcount(miss) - 1 > uncolored_nbrs) { failed = true; break; }
          if (dom[v] == 0) { failed = true; break; }
        }
      }
      if (failed) break;

      // Forced assignments.
      for (int v = 0; v < n; ++v) {
        if (colors[v] || dom[v] == 0 || (dom[v] & (dom[v] - 1))) continue;
        colors[v] = std::countr_zero(dom[v]) + 1;
        assigned_here.push_back(v);
        progress = true;
      }
    }

    if (!failed) {
      std::uint32_t used = 0;
      int uncolored = 0;
      for (int v = 0; v < n; ++v) {
        if (colors[v]) used |= std::uint32_t{1} << (colors[v] - 1);
        else ++uncolored;
      }
      if (popcount(full_mask & ~used) > uncolored) failed = true;

      if (!failed) {
        if (uncolored == 0) return true;  // propagation proved colorfulness

        int branch_v = -1;
        for (int v : order)
          if (!colors[v]) { branch_v = v; break; }

        std::uint32_t options = dom[branch_v];
        while (options) {
          int c = std::countr_zero(options) + 1;
          options &= options - 1;
          colors[branch_v] = c;
          if (solve()) return true;
          colors[branch_v] = 0;
        }
        failed = true;
      }
    }

    for (int v : assigned_here) colors[v] = 0;
    return false;
  }
};

}  // namespace

FallResult fall_decide_backtrack(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  auto t0 = Clock::now();
  FallResult result;
  result.k = k;
  if (k > g.vertex_count()) {
    result.feasible = false;
    result.stats.elapsed_seconds = seconds_since(t0);
    return result;
  }
  BacktrackSolver solver(g, k);
  result.feasible = solver.solve();
  if (result.feasible) result.witness = Coloring{k, solver.colors};
  result.stats.nodes = solver.nodes;
  result.stats.elapsed_seconds = seconds_since(t0);
  return result;
}

FallResult fall_count_incexc(const Graph& g, int k, const SolverLimits& limits) {
  const int n = g.vertex_count();
  if (n > limits.incexc_max_n || n > 63)
    throw GuardExceeded("fall_count_incexc guard exceeded: n=" + std::to_string(n));
  if (k < 1) throw std::invalid_argument("k must be >= 1");

  auto t0 = Clock::now();
  FallResult result;
  result.k = k;

  if (k > n || n == 0) {
    result.count = 0;
    result.feasible = false;
    result.stats.elapsed_seconds = seconds_since(t0);
    return result;
  }

  const auto mis = enumerate_mis(g, limits);
  const std::size_t subsets = std::size_t{1} << n;

  // Per-cardinality indicator layers, zeta-transformed so layer[j][S] is the
  // number of IDS of size j contained in S. Only cardinalities that occur
  // among the IDS are materialized.
  std::vector<int> sizes;
  for (const auto& s : mis) sizes.push_back(s.size());
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  std::vector<int> size_slot(n + 1, -1);
  for (std::size_t i = 0; i < sizes.size(); ++i) size_slot[sizes[i]] = static_cast<int>(i);

  std::vector<std::vector<std::uint64_t>> layer(
      sizes.size(), std::vector<std::uint64_t>(subsets, 0));
  for (const auto& s : mis) {
    std::uint64_t mask = 0;
    for (int v : s.to_vector()) mask |= bit(v);
    ++layer[size_slot[s.size()]][mask];
  }
  for (auto& arr : layer)
    for (int i = 0; i < n; ++i)
      for (std::size_t s = 0; s < subsets; ++s)
        if (s >> i & 1) arr[s] += arr[s ^ (std::size_t{1} << i)];

  // For each S: [x^n] (sum_j g_j(S) x^j)^k counts ordered k-tuples of IDS
  // inside S of total size n; inclusion-exclusion over S leaves exactly the
  // tuples that partition V. uint64 wraparound is harmless since the true
  // count fits.
  std::uint64_t total = 0;
  std::vector<std::uint64_t> dp(n + 1), next(n + 1);
  for (std::size_t s = 0; s < subsets; ++s) {
    std::fill(dp.begin(), dp.end(), 0);
    dp[0] = 1;
    for (int t = 0; t < k; ++t) {
      std::fill(next.begin(), next.end(), 0);
      for (int d = 0; d <= n; ++d) {
        if (!dp[d]) continue;
        for (std::size_t si = 0; si < sizes.size(); ++si) {
          int j = sizes[si];
          if (d + j > n) break;
          std::uint64_t cnt = layer[si][s];
          if (cnt) next[d + j] += dp[d] * cnt;
        }
      }
      dp.swap(next);
    }
    if ((n - std::popcount(static_cast<std::uint64_t>(s))) % 2 == 0)
      total += dp[n];
    else
      total -= dp[n];
  }

  result.count = total;
  result.feasible = total > 0;
  result.stats.nodes = subsets;
  result.stats.elapsed_seconds = seconds_since(t0);
  return result;
}

FallResult fall_decide_polyspace(const Graph& g, int k, const SolverLimits& limits) {
  const int n = g.vertex_count();
  if (n > limits.mis_max_n)
    throw GuardExceeded("fall_decide_polyspace guard exceeded: n=" + std::to_string(n));
  if (k < 1) throw std::invalid_argument("k must be >= 1");

  auto t0 = Clock::now();
  FallResult result;
  result.k = k;

  const std::uint64_t full = n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : bit(n) - 1);
  const auto cn = closed_nbhd_masks(g);
  std::uint64_t nodes = 0;
  std::vector<std::uint64_t> chosen_classes;

  // All IDS of G that contain `pivot` and lie inside `allowed_pool`.
  // A dominating independent set is automatically maximal, so generation
  // stops exactly when domination is reached.
  std::function<bool(std::uint64_t, std::uint64_t, std::uint64_t,
                     const std::function<bool(std::uint64_t)>&)>
      gen_ids = [&](std::uint64_t chosen, std::uint64_t allowed,
                    std::uint64_t dominated,
                    const std::function<bool(std::uint64_t)>& sink) -> bool {
    ++nodes;
    if (dominated == full) return sink(chosen);
    // Every undominated vertex must be reachable from remaining candidates.
    std::uint64_t undom = full & ~dominated;
    while (undom) {
      int x = std::countr_zero(undom);
      undom &= undom - 1;
      if ((cn[x] & allowed) == 0) return false;
    }
    int u = std::countr_zero(allowed);
    std::uint64_t ubit = bit(u);
    if (gen_ids(chosen | ubit, allowed & ~cn[u], dominated | cn[u], sink))
      return true;
    return gen_ids(chosen, allowed & ~ubit, dominated, sink);
  };

  std::function<bool(std::uint64_t, int)> rec = [&](std::uint64_t uncovered,
                                                    int kleft) -> bool {
    ++nodes;
    if (uncovered == 0) return kleft == 0;
    if (kleft == 0) return false;
    if (std::popcount(uncovered) < kleft) return false;
    int pivot = std::countr_zero(uncovered);
    std::uint64_t pool = uncovered & ~cn[pivot];
    return gen_ids(bit(pivot), pool, cn[pivot], [&](std::uint64_t cls) {
      chosen_classes.push_back(cls);
      if (rec(uncovered & ~cls, kleft - 1)) return true;
      chosen_classes.pop_back();
      return false;
    });
  };

  result.feasible = n > 0 ? rec(full, k) : (k == 0);
  if (result.feasible && n > 0) {
    Coloring c{k, std::vector<int>(n, 0)};
    for (std::size_t i = 0; i < chosen_classes.size(); ++i)
      for (int v = 0; v < n; ++v)
        if (chosen_classes[i] >> v & 1) c.assignment[v] = static_cast<int>(i) + 1;
    result.witness = std::move(c);
  }
  result.stats.nodes = nodes;
  result.stats.elapsed_seconds = seconds_since(t0);
  return result;
}

// ---------------------------------------------------------------------------
// Proper coloring (DSATUR branch and bound) and chromatic number.
// ---------------------------------------------------------------------------

std::optional<Coloring> proper_color_decide(const Graph& g, int k,
                                            const SolverLimits& limits) {
  const int n = g.vertex_count();
  if (n > limits.chromatic_max_n)
    throw GuardExceeded("proper_color_decide guard exceeded: n=" + std::to_string(n));
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (n == 0) return Coloring{0, {}};
  if (k == 0) return std::nullopt;

  std::vector<int> colors(n, 0);
  int max_used = 0;

  std::function<bool(int)> solve = [&](int colored) -> bool {
    if (colored == n) return true;
    // DSATUR vertex choice: max saturation, then max degree, then index.
    int best = -1, best_sat = -1;
    std::vector<char> seen(k + 1);
    for (int v = 0; v < n; ++v) {
      if (colors[v]) continue;
      std::fill(seen.begin(), seen.end(), 0);
      int sat = 0;
      for (int u : g.neighbors(v))
        if (colors[u] && !seen[colors[u]]) {
          seen[colors[u]] = 1;
          ++sat;
        }
      if (sat > best_sat ||
          (sat == best_sat && g.degree(v) > g.degree(best))) {
        best = v;
        best_sat = sat;
      }
    }
    std::uint64_t forbidden = 0;
    for (int u : g.neighbors(best))
      if (colors[u]) forbidden |= std::uint64_t{1} << colors[u];
    int limit = std::min(k, max_used + 1);  // new colors are interchangeable
    for (int c = 1; c <= limit; ++c) {
      if (forbidden >> c & 1) continue;
      colors[best] = c;
      int prev_max = max_used;
      max_used = std::max(max_used, c);
      if (solve(colored + 1)) return true;
      max_used = prev_max;
      colors[best] = 0;
    }
    return false;
  };

  if (!solve(0)) return std::nullopt;
  return Coloring{max_used, colors};
}

namespace {

int greedy_clique_bound(const Graph& g) {
  const int n = g.vertex_count();
  int best = n > 0 ? 1 : 0;
  for (int seed = 0; seed < n; ++seed) {
    std::vector<int> clique{seed};
    for (int v : g.neighbors(seed)) {
      bool fits = true;
      for (int u : clique)
        if (!g.has_edge(u, v)) { fits = false; break; }
      if (fits) clique.push_back(v);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

}  // namespace

int chromatic_number(const Graph& g, const SolverLimits& limits) {
  if (g.vertex_count() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  for (int k = greedy_clique_bound(g); ; ++k)
    if (proper_color_decide(g, k, limits)) return k;
}

std::optional<EdgeColoring> edge_color_decide(const Graph& g, int k,
                                              const SolverLimits& limits) {
  if (g.edge_count() == 0) return EdgeColoring{0, {}};
  auto c = proper_color_decide(line_graph(g), k, limits);
  if (!c) return std::nullopt;
  return EdgeColoring{c->k, c->assignment};
}

std::optional<FallResult> special_case_dispatch(const Graph& g, int k,
                                                const SolverLimits& limits) {
  const int n = g.vertex_count();
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n == 0) return std::nullopt;

  auto decided = [&](bool feasible, std::optional<Coloring> witness) {
    FallResult r;
    r.k = k;
    r.feasible = feasible;
    r.witness = std::move(witness);
    return r;
  };

  // (e) single class: V itself must be independent and dominating.
  if (k == 1) {
    if (g.edge_count() == 0)
      return decided(true, Coloring{1, std::vector<int>(n, 1)});
    return decided(false, std::nullopt);
  }

  const int delta = g.min_degree();

  // (a) disjoint union of cycles: divisibility rules per component.
  bool two_regular = delta == 2 && g.max_degree() == 2;
  if (two_regular) {
    if (k > 3) return decided(false, std::nullopt);
    // Walk each cycle; color 1..k around it when k divides its length.
    std::vector<int> colors(n, 0);
    for (int src = 0; src < n; ++src) {
      if (colors[src]) continue;
      std::vector<int> walk{src};
      int prev = src, cur = g.neighbors(src)[0];
      while (cur != src) {
        walk.push_back(cur);
        int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                              : g.neighbors(cur)[0];
        prev = cur;
        cur = nxt;
      }
      if (static_cast<int>(walk.size()) % k != 0)
        return decided(false, std::nullopt);
      for (std::size_t i = 0; i < walk.size(); ++i)
        colors[walk[i]] = static_cast<int>(i % k) + 1;
    }
    return decided(true, Coloring{k, std::move(colors)});
  }

  // (b) two classes: exactly the connected-componentwise bipartitions.
  if (k == 2) {
    auto side = bipartition(g);
    if (!side || delta < 1) return decided(false, std::nullopt);
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) colors[v] = (*side)[v] + 1;
    return decided(true, Coloring{2, std::move(colors)});
  }

  // (c) chordal: the fall set is empty or {delta+1}; k = delta+1 stays open
  // and is deferred to exact search.
  if (k != delta + 1 && is_chordal(g)) return decided(false, std::nullopt);

  // (d) r-regular with k = r+1: equivalent to chi(G^2) = r+1.
  if (g.max_degree() == delta && k == delta + 1 && n <= limits.chromatic_max_n) {
    auto c = proper_color_decide(power(g, 2), k, limits);
    if (!c) return decided(false, std::nullopt);
    // A proper (r+1)-coloring of G^2 makes every closed neighborhood of G
    // rainbow, which is exactly a fall (r+1)-coloring of G.
    return decided(true, Coloring{k, c->assignment});
  }

  return std::nullopt;
}

FallSet fall_set(const Graph& g, const SolverLimits& limits) {
  FallSet fs;
  fs.probed_lo = 1;
  fs.probed_hi = g.min_degree() + 1;
  for (int k = fs.probed_lo; k <= fs.probed_hi; ++k) {
    auto special = special_case_dispatch(g, k, limits);
    bool feasible =
        special ? special->feasible : fall_decide_backtrack(g, k).feasible;
    if (feasible) fs.members.push_back(k);
  }
  return fs;
}

std::optional<std::pair<VertexSet, VertexSet>> two_disjoint_ids(
    const Graph& g, const SolverLimits& /*limits*/) {
  const int n = g.vertex_count();
  // Labels: -1 undecided, 0 in neither set, 1 in I1, 2 in I2.
  std::vector<int> label(n, -1);

  // cn_last[v]: the point at which N[v] is fully decided under index order.
  std::vector<int> cn_last(n);
  for (int v = 0; v < n; ++v) {
    int last = v;
    for (int u : g.neighbors(v)) last = std::max(last, u);
    cn_last[v] = last;
  }

  auto dominated_by_both = [&](int v) {
    bool d1 = label[v] == 1, d2 = label[v] == 2;
    for (int u : g.neighbors(v)) {
      d1 |= label[u] == 1;
      d2 |= label[u] == 2;
    }
    return d1 && d2;
  };

  std::function<bool(int)> solve = [&](int i) -> bool {
    if (i == n) return true;
    for (int lab : {1, 2, 0}) {
      if (lab != 0) {
        bool independent = true;
        for (int u : g.neighbors(i))
          if (u < i && label[u] == lab) { independent = false; break; }
        if (!independent) continue;
      }
      label[i] = lab;
      bool ok = true;
      // Every vertex whose closed neighborhood just completed must now be
      // dominated by both sets.
      if (cn_last[i] == i && !dominated_by_both(i)) ok = false;
      if (ok)
        for (int u : g.neighbors(i))
          if (cn_last[u] == i && !dominated_by_both(u)) { ok = false; break; }
      if (ok && solve(i + 1)) return true;
      label[i] = -1;
    }
    return false;
  };

  if (n == 0 || !solve(0)) return std::nullopt;
  VertexSet s1(n), s2(n);
  for (int v = 0; v < n; ++v) {
    if (label[v] == 1) s1.insert(v);
    if (label[v] == 2) s2.insert(v);
  }
  return std::make_pair(s1, s2);
}

}  // namespace fallkit
