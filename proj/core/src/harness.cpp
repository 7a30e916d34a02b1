#include "fallkit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>

#include <json.hpp>

#include "fallkit/classify.hpp"
#include "fallkit/generators.hpp"
#include "fallkit/io.hpp"
#include "fallkit/reductions.hpp"
#include "fallkit/solvers.hpp"
#include "fallkit/transforms.hpp"
#include "fallkit/verifier.hpp"

namespace fallkit {

using nlohmann::json;

std::string harness_family_name(HarnessFamily family) {
  switch (family) {
    case HarnessFamily::kThreeColToFall3: return "3col-fall3";
    case HarnessFamily::kKColToFallK: return "kcol-fallk";
    case HarnessFamily::kEdgeColToFallK: return "edgecol-fallk";
    case HarnessFamily::kSatToTwoIds: return "sat-2ids";
  }
  return "?";
}

HarnessFamily harness_family_from_name(const std::string& name) {
  for (auto f : {HarnessFamily::kThreeColToFall3, HarnessFamily::kKColToFallK,
                 HarnessFamily::kEdgeColToFallK, HarnessFamily::kSatToTwoIds})
    if (harness_family_name(f) == name) return f;
  throw std::invalid_argument("unknown harness family: " + name);
}

std::string HarnessReport::to_json() const {
  json j;
  j["family"] = harness_family_name(family);
  j["trials"] = trials;
  j["max_n"] = max_n;
  j["seed"] = seed;
  j["passed"] = all_passed();
  j["failures"] = json::array();
  for (const auto& f : failures)
    j["failures"].push_back(
        {{"trial", f.trial}, {"reason", f.reason}, {"instance", f.instance}});
  return j.dump();
}

namespace {

// ---- brute-force source oracles (independent of the fall solvers) --------

bool brute_kcolorable(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<int> colors(n, 0);
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == n) return true;
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (int u : g.neighbors(v))
        if (u < v && colors[u] == c) { ok = false; break; }
      if (!ok) continue;
      colors[v] = c;
      if (rec(v + 1)) return true;
      colors[v] = 0;
    }
    return false;
  };
  return rec(0);
}

std::optional<Coloring> brute_kcoloring(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<int> colors(n, 0);
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == n) return true;
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (int u : g.neighbors(v))
        if (u < v && colors[u] == c) { ok = false; break; }
      if (!ok) continue;
      colors[v] = c;
      if (rec(v + 1)) return true;
      colors[v] = 0;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return Coloring{k, colors};
}

std::optional<EdgeColoring> brute_edge_kcoloring(const Graph& g, int k) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<int> colors(m, 0);
  std::function<bool(int)> rec = [&](int e) -> bool {
    if (e == m) return true;
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (int f = 0; f < e && ok; ++f)
        if (colors[f] == c &&
            (edges[f].first == edges[e].first || edges[f].first == edges[e].second ||
             edges[f].second == edges[e].first || edges[f].second == edges[e].second))
          ok = false;
      if (!ok) continue;
      colors[e] = c;
      if (rec(e + 1)) return true;
      colors[e] = 0;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return EdgeColoring{k, colors};
}

std::optional<std::vector<bool>> brute_sat(const CnfFormula& phi) {
  const int n = phi.num_vars;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::vector<bool> tau(n);
    for (int i = 0; i < n; ++i) tau[i] = bits >> i & 1;
    if (phi.satisfied_by(tau)) return tau;
  }
  return std::nullopt;
}

// ---- edge-coloring certificate translation through the trace -------------

Coloring edge_to_fall(const ReductionTrace& trace, const Graph& source,
                      const EdgeColoring& h, int k, bool boxed) {
  Coloring c;
  c.k = k;
  c.assignment.assign(trace.role_map.size(), 0);
  for (std::size_t v = 0; v < trace.role_map.size(); ++v) {
    const auto& role = trace.role_map[v];
    if (role.kind == VertexRole::Kind::kSubdivision) {
      int e = source.edge_index(role.a, role.b);
      c.assignment[v] = h.assignment[e];
    }
  }
  if (boxed) {
    // Side-1 twins take a cyclic shift, which keeps every class proper and
    // every vertex colorful.
    for (std::size_t v = 0; v < trace.role_map.size(); ++v) {
      const auto& role = trace.role_map[v];
      if (role.kind == VertexRole::Kind::kGadget)
        c.assignment[v] = c.assignment[role.a] % k + 1;
    }
  }
  return c;
}

EdgeColoring fall_to_edge(const ReductionTrace& trace, const Graph& source,
                          const Coloring& c, int k) {
  EdgeColoring h;
  h.k = k;
  h.assignment.assign(source.edge_count(), 0);
  for (std::size_t v = 0; v < trace.role_map.size(); ++v) {
    const auto& role = trace.role_map[v];
    if (role.kind == VertexRole::Kind::kSubdivision)
      h.assignment[source.edge_index(role.a, role.b)] = c.assignment[v];
  }
  return h;
}

// ---- structural assertions of the constructions ---------------------------

std::optional<std::string> check_coloring_target_structure(
    const Graph& source, const Graph& target, const ReductionTrace& trace) {
  const int n = trace.source_n, m = trace.source_m, k = trace.k;
  const int expected =
      k == 3 ? n + m + 5 * n : n * 2 * k + m * (1 + (k - 3) * 2 * k);
  if (target.vertex_count() != expected) return "size formula violated";
  if (k == 3 && target.edge_count() != 2 * m + 6 * n)
    return "edge count formula violated";
  if (!classify(target).bipartite) return "target not bipartite";

  for (int v = 0; v < target.vertex_count(); ++v) {
    const auto& role = trace.role_map[v];
    int deg = target.degree(v);
    switch (role.kind) {
      case VertexRole::Kind::kOriginal:
        if (deg != source.degree(role.a) + (k == 3 ? 2 : k - 1))
          return "original-vertex degree off at " + std::to_string(v);
        break;
      case VertexRole::Kind::kSubdivision:
        if (deg != (k == 3 ? 2 : k - 1))
          return "subdivision-vertex degree off at " + std::to_string(v);
        break;
      case VertexRole::Kind::kGadget: {
        bool pendant_anchor = k > 3 && role.b >= 2 * k && role.b % (2 * k) == 0;
        int want = k == 3 ? 2 : (pendant_anchor ? k : k - 1);
        if (deg != want) return "gadget-vertex degree off at " + std::to_string(v);
        break;
      }
      default:
        return "unexpected role in coloring trace";
    }
  }
  // Max-degree corollaries.
  if (k == 3 && source.max_degree() <= 4 && target.max_degree() > 6)
    return "max degree exceeds 6";
  if (k >= 4 && source.max_degree() <= 2 * k - 2 &&
      target.max_degree() > 3 * (k - 1))
    return "max degree exceeds 3(k-1)";
  return std::nullopt;
}

// ---- per-family trials -----------------------------------------------------

std::optional<std::string> run_coloring_trial(std::mt19937_64& rng, int max_n,
                                              int k, std::string* instance) {
  std::uniform_int_distribution<int> pick_n(k == 3 ? 3 : 4, std::max(max_n, 4));
  std::uniform_real_distribution<double> pick_p(k == 3 ? 0.2 : 0.4,
                                                k == 3 ? 0.7 : 0.9);
  Graph g = gen_gnp(pick_n(rng), pick_p(rng), rng());
  *instance = to_dimacs(g);

  auto [target, trace] = reduce_kcol_to_fallk(g, k);
  if (auto err = check_coloring_target_structure(g, target, trace)) return err;

  bool src_feasible = brute_kcolorable(g, k);
  auto tgt = fall_decide_backtrack(target, k);
  if (src_feasible != tgt.feasible)
    return std::string("equivalence violated: source ") +
           (src_feasible ? "colorable" : "uncolorable") + ", target " +
           (tgt.feasible ? "fall-colorable" : "not fall-colorable");

  if (src_feasible) {
    auto witness = brute_kcoloring(g, k);
    Coloring lifted = lift_coloring_to_fall(g, target, trace, *witness);
    if (!is_fall_coloring(target, lifted).valid)
      return "lifted fall coloring invalid";
  }
  if (tgt.feasible) {
    Coloring restricted = lift_fall_to_coloring(target, trace, *tgt.witness);
    if (!is_proper_coloring(g, restricted))
      return "restricted coloring not proper";
  }
  return std::nullopt;
}

std::optional<std::string> run_edgecol_trial(int trial, std::mt19937_64& rng,
                                             int max_n, std::string* instance) {
  constexpr int k = 3;
  Graph g;
  if (trial % 5 == 4 && max_n >= 10) {
    g = petersen();  // class-2 cubic graph: exercises the infeasible side
  } else {
    std::uniform_int_distribution<int> pick_n(2, std::max(max_n / 2, 2));
    g = gen_random_regular(2 * pick_n(rng), 3, rng());
  }
  *instance = to_dimacs(g);

  auto [target, trace] = reduce_edgecol_to_fallk(g, k, false);
  auto [boxed, boxed_trace] = reduce_edgecol_to_fallk(g, k, true);
  auto tgt_cls = classify(target);
  if (!tgt_cls.k_regular || *tgt_cls.k_regular != 2 * k - 2)
    return "line-graph target not (2k-2)-regular";
  auto box_cls = classify(boxed);
  if (!box_cls.k_regular || *box_cls.k_regular != 2 * k - 1)
    return "boxed target not (2k-1)-regular";

  auto h = brute_edge_kcoloring(g, k);
  auto tgt = fall_decide_backtrack(target, k);
  auto box = fall_decide_backtrack(boxed, k);
  if (h.has_value() != tgt.feasible)
    return "equivalence violated on line-graph target";
  if (h.has_value() != box.feasible)
    return "equivalence violated on boxed target";

  if (h) {
    if (!is_fall_coloring(target, edge_to_fall(trace, g, *h, k, false)).valid)
      return "lifted fall coloring of line graph invalid";
    if (!is_fall_coloring(boxed, edge_to_fall(boxed_trace, g, *h, k, true)).valid)
      return "lifted fall coloring of boxed target invalid";
  }
  if (tgt.feasible &&
      !is_proper_edge_coloring(g, fall_to_edge(trace, g, *tgt.witness, k)))
    return "edge coloring recovered from line graph not proper";
  if (box.feasible &&
      !is_proper_edge_coloring(g, fall_to_edge(boxed_trace, g, *box.witness, k)))
    return "edge coloring recovered from boxed target not proper";
  return std::nullopt;
}

std::optional<std::string> run_sat_trial(std::mt19937_64& rng, int max_n,
                                         std::string* instance) {
  const int max_vars = std::max(max_n, 3);
  std::uniform_int_distribution<int> pick_vars(3, max_vars);
  std::uniform_int_distribution<int> pick_clauses(1, std::max(max_n, 1));
  CnfFormula phi;
  phi.num_vars = pick_vars(rng);
  int m = pick_clauses(rng);
  std::uniform_int_distribution<int> pick_var(1, phi.num_vars);
  std::bernoulli_distribution pick_sign(0.5);
  for (int j = 0; j < m; ++j) {
    std::vector<int> vars;
    while (static_cast<int>(vars.size()) < 3) {
      int v = pick_var(rng);
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    int sign = pick_sign(rng) ? 1 : -1;
    phi.clauses.push_back({sign * vars[0], sign * vars[1], sign * vars[2]});
  }
  *instance = to_dimacs_cnf(phi);

  auto [target, trace] = reduce_sat_to_2ids(phi);
  auto cls = classify(target);
  if (!cls.triangle_free) return "SAT target not triangle-free";
  if (target.vertex_count() != 8 * phi.num_vars + m)
    return "SAT target size formula violated";

  auto tau = brute_sat(phi);
  auto pair = two_disjoint_ids(target);
  if (tau.has_value() != pair.has_value())
    return std::string("equivalence violated: formula ") +
           (tau ? "satisfiable" : "unsatisfiable") + ", target " +
           (pair ? "has" : "lacks") + " two disjoint IDS";

  if (tau) {
    auto [s1, s2] = lift_assignment_to_ids(target, trace, *tau, phi);
    if (!are_disjoint_ids(target, s1, s2)) return "lifted IDS pair invalid";
  }
  if (pair) {
    auto back = lift_ids_to_assignment(target, trace, pair->first, pair->second, phi);
    if (!phi.satisfied_by(back)) return "recovered assignment unsatisfying";
    // Gadget fact: a_i and c_i always land in the union of the two sets.
    VertexSet unions = pair->first.set_union(pair->second);
    for (std::size_t v = 0; v < trace.role_map.size(); ++v) {
      const auto& role = trace.role_map[v];
      if (role.kind == VertexRole::Kind::kGadget &&
          (role.b == 1 || role.b == 3) && !unions.contains(static_cast<int>(v)))
        return "gadget vertex a/c outside both sets";
    }
  }
  return std::nullopt;
}

int thread_cap() {
  if (const char* env = std::getenv("FALLKIT_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) return cap;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

HarnessReport equivalence_harness(HarnessFamily family, int trials, int max_n,
                                  std::uint64_t seed) {
  HarnessReport report;
  report.family = family;
  report.trials = trials;
  report.max_n = max_n;
  report.seed = seed;

  std::vector<std::optional<HarnessFailure>> results(trials);

  auto run_trial = [&](int trial) {
    std::seed_seq sseq{static_cast<std::uint64_t>(trial), seed};
    std::mt19937_64 rng(sseq);
    std::string instance;
    std::optional<std::string> err;
    try {
      switch (family) {
        case HarnessFamily::kThreeColToFall3:
          err = run_coloring_trial(rng, max_n, 3, &instance);
          break;
        case HarnessFamily::kKColToFallK:
          err = run_coloring_trial(rng, max_n, 4, &instance);
          break;
        case HarnessFamily::kEdgeColToFallK:
          err = run_edgecol_trial(trial, rng, max_n, &instance);
          break;
        case HarnessFamily::kSatToTwoIds:
          err = run_sat_trial(rng, max_n, &instance);
          break;
      }
    } catch (const std::exception& ex) {
      err = std::string("exception: ") + ex.what();
    }
    if (err) results[trial] = HarnessFailure{trial, *err, instance};
  };

  int threads = std::min(thread_cap(), std::max(trials, 1));
  if (threads <= 1) {
    for (int t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i)
      pool.emplace_back([&] {
        for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1))
          run_trial(t);
      });
    for (auto& th : pool) th.join();
  }

  for (auto& r : results)
    if (r) report.failures.push_back(std::move(*r));
  return report;
}

}  // namespace fallkit
