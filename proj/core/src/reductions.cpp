#include "fallkit/reductions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include <json.hpp>

#include "fallkit/generators.hpp"
#include "fallkit/solvers.hpp"
#include "fallkit/transforms.hpp"

namespace fallkit {

using nlohmann::json;

// --------------------------------------------------------------------------
// CnfFormula
// --------------------------------------------------------------------------

bool CnfFormula::is_monotone() const {
  for (const auto& cl : clauses) {
    bool pos = cl[0] > 0;
    for (int lit : cl)
      if ((lit > 0) != pos) return false;
  }
  return true;
}

void CnfFormula::validate() const {
  for (const auto& cl : clauses) {
    std::vector<int> vars;
    for (int lit : cl) {
      if (lit == 0) throw std::invalid_argument("zero literal in clause");
      int v = std::abs(lit);
      if (v > num_vars) throw std::invalid_argument("literal out of range");
      vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
      throw std::invalid_argument("repeated variable in clause");
  }
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
  for (const auto& cl : clauses) {
    bool sat = false;
    for (int lit : cl) {
      int v = std::abs(lit) - 1;
      if ((lit > 0) == static_cast<bool>(assignment[v])) { sat = true; break; }
    }
    if (!sat) return false;
  }
  return true;
}

// --------------------------------------------------------------------------
// Roles and traces
// --------------------------------------------------------------------------

namespace {

const char* role_kind_name(VertexRole::Kind kind) {
  switch (kind) {
    case VertexRole::Kind::kOriginal: return "original";
    case VertexRole::Kind::kSubdivision: return "subdivision";
    case VertexRole::Kind::kGadget: return "gadget";
    case VertexRole::Kind::kClause: return "clause";
    case VertexRole::Kind::kLiteral: return "literal";
    case VertexRole::Kind::kPendant: return "pendant";
  }
  return "?";
}

VertexRole::Kind role_kind_from_name(const std::string& name) {
  if (name == "original") return VertexRole::Kind::kOriginal;
  if (name == "subdivision") return VertexRole::Kind::kSubdivision;
  if (name == "gadget") return VertexRole::Kind::kGadget;
  if (name == "clause") return VertexRole::Kind::kClause;
  if (name == "literal") return VertexRole::Kind::kLiteral;
  if (name == "pendant") return VertexRole::Kind::kPendant;
  throw std::invalid_argument("unknown role kind: " + name);
}

}  // namespace

std::string VertexRole::to_string() const {
  std::string s = role_kind_name(kind);
  s += "(" + std::to_string(a);
  if (b != -1) s += "," + std::to_string(b);
  s += ")";
  return s;
}

std::string reduction_kind_name(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::kThreeColToFall3: return "3col-fall3";
    case ReductionKind::kKColToFallK: return "kcol-fallk";
    case ReductionKind::kEdgeColToFallK: return "edgecol-fallk";
    case ReductionKind::kEdgeColToFallKBoxK2: return "edgecol-fallk-boxk2";
    case ReductionKind::kSatToTwoIds: return "sat-2ids";
  }
  return "?";
}

static ReductionKind reduction_kind_from_name(const std::string& name) {
  for (auto kind : {ReductionKind::kThreeColToFall3, ReductionKind::kKColToFallK,
                    ReductionKind::kEdgeColToFallK,
                    ReductionKind::kEdgeColToFallKBoxK2,
                    ReductionKind::kSatToTwoIds})
    if (reduction_kind_name(kind) == name) return kind;
  throw std::invalid_argument("unknown reduction kind: " + name);
}

std::string ReductionTrace::to_json() const {
  json j;
  j["kind"] = reduction_kind_name(kind);
  j["params"] = {{"source_n", source_n}, {"source_m", source_m}, {"k", k}};
  j["role_map"] = json::array();
  for (const auto& role : role_map)
    j["role_map"].push_back({role_kind_name(role.kind), role.a, role.b});
  return j.dump();
}

ReductionTrace ReductionTrace::from_json(const std::string& text) {
  json j = json::parse(text);
  ReductionTrace trace;
  trace.kind = reduction_kind_from_name(j.at("kind").get<std::string>());
  trace.source_n = j.at("params").at("source_n").get<int>();
  trace.source_m = j.at("params").at("source_m").get<int>();
  trace.k = j.at("params").at("k").get<int>();
  for (const auto& r : j.at("role_map"))
    trace.role_map.push_back({role_kind_from_name(r.at(0).get<std::string>()),
                              r.at(1).get<int>(), r.at(2).get<int>()});
  return trace;
}

// --------------------------------------------------------------------------
// Coloring reductions
// --------------------------------------------------------------------------

std::pair<Graph, ReductionTrace> reduce_3col_to_fall3(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const int total = n + m + 5 * n;

  std::vector<std::pair<int, int>> edges;
  ReductionTrace trace{ReductionKind::kThreeColToFall3, n, m, 3, {}};
  trace.role_map.resize(total);

  for (int v = 0; v < n; ++v)
    trace.role_map[v] = {VertexRole::Kind::kOriginal, v};

  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    int x = n + e;
    trace.role_map[x] = {VertexRole::Kind::kSubdivision, u, v};
    edges.emplace_back(u, x);
    edges.emplace_back(v, x);
  }

  // Each original vertex becomes one corner of a fresh C_6 through
  // w_v1..w_v5.
  for (int v = 0; v < n; ++v) {
    int w = n + m + 5 * v;  // w_v1 == w, ..., w_v5 == w+4
    for (int i = 1; i <= 5; ++i)
      trace.role_map[w + i - 1] = {VertexRole::Kind::kGadget, v, i};
    edges.emplace_back(v, w);
    edges.emplace_back(v, w + 4);
    for (int i = 0; i < 4; ++i) edges.emplace_back(w + i, w + i + 1);
  }

  std::vector<std::string> labels(total);
  for (int v = 0; v < total; ++v) labels[v] = trace.role_map[v].to_string();
  return {Graph::from_edges(total, std::move(edges), std::move(labels)),
          std::move(trace)};
}

namespace {

// Local index l in 0..2k-1 of F_k maps to product vertex (l / k, l % k).
void append_fk_edges(std::vector<std::pair<int, int>>& edges, int k,
                     const std::vector<int>& vertex_of_local) {
  for (int b1 = 0; b1 < k; ++b1)
    for (int b2 = 0; b2 < k; ++b2)
      if (b1 != b2)
        edges.emplace_back(vertex_of_local[b1], vertex_of_local[k + b2]);
}

}  // namespace

std::pair<Graph, ReductionTrace> reduce_kcol_to_fallk(const Graph& g, int k) {
  if (k < 3) throw std::invalid_argument("reduction needs k >= 3");
  if (k == 3) {
    auto [target, trace] = reduce_3col_to_fall3(g);
    trace.kind = ReductionKind::kKColToFallK;
    return {std::move(target), std::move(trace)};
  }

  const int n = g.vertex_count();
  const int m = g.edge_count();
  const int copy = 2 * k;
  const int per_edge = 1 + (k - 3) * copy;
  const int total = n * copy + m * per_edge;

  std::vector<std::pair<int, int>> edges;
  ReductionTrace trace{ReductionKind::kKColToFallK, n, m, k, {}};
  trace.role_map.resize(total);

  // Original vertex v is vertex (0,0) of its own F_k; the other 2k-1
  // vertices of that copy sit at n + v*(2k-1).
  for (int v = 0; v < n; ++v) {
    trace.role_map[v] = {VertexRole::Kind::kOriginal, v};
    int base = n + v * (copy - 1);
    std::vector<int> local(copy);
    local[0] = v;
    for (int l = 1; l < copy; ++l) {
      local[l] = base + l - 1;
      trace.role_map[local[l]] = {VertexRole::Kind::kGadget, v, l};
    }
    append_fk_edges(edges, k, local);
  }

  // Subdivision vertex per source edge, then its k-3 pendant F_k copies.
  int xbase = n * copy;
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    int x = xbase + e * per_edge;
    trace.role_map[x] = {VertexRole::Kind::kSubdivision, u, v};
    edges.emplace_back(u, x);
    edges.emplace_back(v, x);
    for (int t = 0; t < k - 3; ++t) {
      std::vector<int> local(copy);
      for (int l = 0; l < copy; ++l) {
        local[l] = x + 1 + t * copy + l;
        // Pendant copy positions continue past the vertex-copy range.
        trace.role_map[local[l]] = {VertexRole::Kind::kGadget, x,
                                    (t + 1) * copy + l};
      }
      append_fk_edges(edges, k, local);
      edges.emplace_back(x, local[0]);  // anchor (0,0) of the pendant copy
    }
  }

  std::vector<std::string> labels(total);
  for (int v = 0; v < total; ++v) labels[v] = trace.role_map[v].to_string();
  return {Graph::from_edges(total, std::move(edges), std::move(labels)),
          std::move(trace)};
}

std::pair<Graph, ReductionTrace> reduce_edgecol_to_fallk(const Graph& g, int k,
                                                         bool with_box_k2) {
  if (k < 3) throw std::invalid_argument("reduction needs k >= 3");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != k)
      throw std::invalid_argument("input graph is not k-regular");

  Graph lg = line_graph(g);
  const int m = lg.vertex_count();

  if (!with_box_k2) {
    ReductionTrace trace{ReductionKind::kEdgeColToFallK, g.vertex_count(),
                         g.edge_count(), k, {}};
    trace.role_map.resize(m);
    std::vector<std::string> labels(m);
    for (int e = 0; e < m; ++e) {
      auto [u, v] = g.edges()[e];
      trace.role_map[e] = {VertexRole::Kind::kSubdivision, u, v};
      labels[e] = trace.role_map[e].to_string();
    }
    Graph target = Graph::from_edges(m, lg.edges(), std::move(labels));
    return {std::move(target), std::move(trace)};
  }

  Graph boxed = cartesian_product(lg, complete(2));
  ReductionTrace trace{ReductionKind::kEdgeColToFallKBoxK2, g.vertex_count(),
                       g.edge_count(), k, {}};
  trace.role_map.resize(boxed.vertex_count());
  std::vector<std::string> labels(boxed.vertex_count());
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    trace.role_map[2 * e] = {VertexRole::Kind::kSubdivision, u, v};
    // Side-1 twin points back at its side-0 partner.
    trace.role_map[2 * e + 1] = {VertexRole::Kind::kGadget, 2 * e, 1};
    labels[2 * e] = trace.role_map[2 * e].to_string();
    labels[2 * e + 1] = trace.role_map[2 * e + 1].to_string();
  }
  Graph target =
      Graph::from_edges(boxed.vertex_count(), boxed.edges(), std::move(labels));
  return {std::move(target), std::move(trace)};
}

std::pair<Graph, ReductionTrace> reduce_sat_to_2ids(const CnfFormula& phi) {
  phi.validate();
  if (!phi.is_monotone())
    throw std::invalid_argument("formula is not monotone");

  const int n = phi.num_vars;
  const int m = static_cast<int>(phi.clauses.size());
  const int total = 8 * n + m;

  // Variable block at 8i: [x, a, b, c, x-bar, pa, pb, pc].
  std::vector<std::pair<int, int>> edges;
  ReductionTrace trace{ReductionKind::kSatToTwoIds, n, m, 0, {}};
  trace.role_map.resize(total);

  for (int i = 0; i < n; ++i) {
    int x = 8 * i, a = x + 1, b = x + 2, c = x + 3, xbar = x + 4;
    trace.role_map[x] = {VertexRole::Kind::kLiteral, i, +1};
    trace.role_map[a] = {VertexRole::Kind::kGadget, i, 1};
    trace.role_map[b] = {VertexRole::Kind::kGadget, i, 2};
    trace.role_map[c] = {VertexRole::Kind::kGadget, i, 3};
    trace.role_map[xbar] = {VertexRole::Kind::kLiteral, i, -1};
    trace.role_map[x + 5] = {VertexRole::Kind::kPendant, a};
    trace.role_map[x + 6] = {VertexRole::Kind::kPendant, b};
    trace.role_map[x + 7] = {VertexRole::Kind::kPendant, c};
    edges.emplace_back(x, a);
    edges.emplace_back(a, b);
    edges.emplace_back(b, c);
    edges.emplace_back(c, xbar);
    edges.emplace_back(xbar, x);
    edges.emplace_back(a, x + 5);
    edges.emplace_back(b, x + 6);
    edges.emplace_back(c, x + 7);
  }

  for (int j = 0; j < m; ++j) {
    int cv = 8 * n + j;
    trace.role_map[cv] = {VertexRole::Kind::kClause, j};
    for (int lit : phi.clauses[j]) {
      int i = std::abs(lit) - 1;
      edges.emplace_back(cv, 8 * i + (lit > 0 ? 0 : 4));
    }
  }

  std::vector<std::string> labels(total);
  for (int v = 0; v < total; ++v) labels[v] = trace.role_map[v].to_string();
  return {Graph::from_edges(total, std::move(edges), std::move(labels)),
          std::move(trace)};
}

// --------------------------------------------------------------------------
// Certificate lifting
// --------------------------------------------------------------------------

namespace {

bool is_coloring_reduction(ReductionKind kind) {
  return kind == ReductionKind::kThreeColToFall3 ||
         kind == ReductionKind::kKColToFallK;
}

// The unique fall k-coloring of F_k (as local color classes), found once by
// solver search and cached.
const std::vector<int>& fk_fall_coloring(int k) {
  static std::mutex mu;
  static std::map<int, std::vector<int>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) {
    auto result = fall_decide_backtrack(f_k(k), k);
    if (!result.feasible) throw std::logic_error("F_k must be fall k-colorable");
    it = cache.emplace(k, result.witness->assignment).first;
  }
  return it->second;
}

// Relabels the cached F_k coloring so its anchor (local 0) receives
// anchor_color; the other colors are matched in ascending order.
std::vector<int> fk_coloring_anchored(int k, int anchor_color) {
  const auto& base = fk_fall_coloring(k);
  std::vector<int> remap(k + 1, 0);
  remap[base[0]] = anchor_color;
  int next = 1;
  for (int c = 1; c <= k; ++c) {
    if (c == base[0]) continue;
    while (next == anchor_color) ++next;
    remap[c] = next++;
  }
  std::vector<int> out(base.size());
  for (std::size_t l = 0; l < base.size(); ++l) out[l] = remap[base[l]];
  return out;
}

}  // namespace

Coloring lift_fall_to_coloring(const Graph& target, const ReductionTrace& trace,
                               const Coloring& c) {
  if (!is_coloring_reduction(trace.kind))
    throw std::invalid_argument("trace kind does not lift to a vertex coloring");
  if (!is_fall_coloring(target, c).valid)
    throw std::invalid_argument("certificate is not a valid fall coloring");

  Coloring out;
  out.k = trace.k;
  out.assignment.assign(trace.source_n, 0);
  for (std::size_t v = 0; v < trace.role_map.size(); ++v)
    if (trace.role_map[v].kind == VertexRole::Kind::kOriginal)
      out.assignment[trace.role_map[v].a] = c.assignment[v];
  return out;
}

Coloring lift_coloring_to_fall(const Graph& source, const Graph& target,
                               const ReductionTrace& trace, const Coloring& c) {
  if (!is_coloring_reduction(trace.kind))
    throw std::invalid_argument("trace kind does not lift to a fall coloring");
  const int k = trace.k;
  if (!is_proper_coloring(source, c))
    throw std::invalid_argument("certificate is not a proper coloring");
  for (int v = 0; v < source.vertex_count(); ++v)
    if (c.assignment[v] < 1 || c.assignment[v] > k)
      throw std::invalid_argument("coloring uses classes outside 1..k");

  const int tn = target.vertex_count();
  Coloring out{k, std::vector<int>(tn, 0)};
  for (int v = 0; v < trace.source_n; ++v) out.assignment[v] = c.assignment[v];

  // Subdivision vertices: lowest color missing from both endpoints (for
  // k = 3 that color is unique).
  for (int v = 0; v < tn; ++v) {
    const auto& role = trace.role_map[v];
    if (role.kind != VertexRole::Kind::kSubdivision) continue;
    int cu = c.assignment[role.a], cv = c.assignment[role.b];
    for (int color = 1; color <= k; ++color)
      if (color != cu && color != cv) {
        out.assignment[v] = color;
        break;
      }
  }

  if (k == 3) {
    // The C_6 around v is colored sigma, sigma+1, sigma+2 cyclically
    // starting at v's own color sigma.
    for (int v = 0; v < tn; ++v) {
      const auto& role = trace.role_map[v];
      if (role.kind != VertexRole::Kind::kGadget) continue;
      int sigma = c.assignment[role.a];
      out.assignment[v] = (sigma - 1 + role.b) % 3 + 1;
    }
    return out;
  }

  // k >= 4: pendant anchors of each subdivision vertex take the remaining
  // colors in ascending order, then every F_k copy is completed from its
  // anchor.
  const int copy = 2 * k;
  for (int v = 0; v < tn; ++v) {
    const auto& role = trace.role_map[v];
    if (role.kind != VertexRole::Kind::kGadget) continue;
    if (role.b >= copy && role.b % copy == 0) {
      // Anchor of pendant copy number role.b / copy - 1 on subdivision
      // vertex role.a.
      int x = role.a;
      int cx = out.assignment[x];
      int cu = c.assignment[trace.role_map[x].a];
      int cv = c.assignment[trace.role_map[x].b];
      int want = role.b / copy - 1;  // which remaining color, in order
      int taken = 0;
      for (int color = 1; color <= k; ++color) {
        if (color == cx || color == cu || color == cv) continue;
        if (taken++ == want) {
          out.assignment[v] = color;
          break;
        }
      }
    }
  }
  // Complete each copy from its (now colored) anchor.
  for (int v = 0; v < tn; ++v) {
    const auto& role = trace.role_map[v];
    if (role.kind != VertexRole::Kind::kGadget) continue;
    int local = role.b % copy;
    if (role.b >= copy && local == 0) continue;  // pendant anchor, done
    int anchor;
    if (role.b < copy) {
      anchor = role.a;  // original vertex owns this copy
    } else {
      anchor = v - local;  // pendant copy: anchor precedes it contiguously
    }
    out.assignment[v] =
        fk_coloring_anchored(k, out.assignment[anchor])[local];
  }
  return out;
}

std::pair<VertexSet, VertexSet> lift_assignment_to_ids(
    const Graph& target, const ReductionTrace& trace,
    const std::vector<bool>& tau, const CnfFormula& phi) {
  if (trace.kind != ReductionKind::kSatToTwoIds)
    throw std::invalid_argument("trace kind mismatch");
  if (static_cast<int>(tau.size()) != phi.num_vars)
    throw std::invalid_argument("assignment not total over variables");
  if (!phi.satisfied_by(tau))
    throw std::invalid_argument(
        "assignment does not satisfy the formula; some clause vertex would "
        "be undominated");

  const int tn = target.vertex_count();
  VertexSet s1(tn), s2(tn);
  for (int v = 0; v < tn; ++v) {
    const auto& role = trace.role_map[v];
    switch (role.kind) {
      case VertexRole::Kind::kLiteral:
        if ((role.b > 0) == static_cast<bool>(tau[role.a])) s1.insert(v);
        break;
      case VertexRole::Kind::kGadget:
        if (role.b == 2) s1.insert(v);  // b_i
        else s2.insert(v);              // a_i, c_i
        break;
      case VertexRole::Kind::kPendant: {
        // Pendants of a_i and c_i go to I1; the pendant of b_i to I2.
        const auto& owner = trace.role_map[role.a];
        if (owner.b == 2) s2.insert(v);
        else s1.insert(v);
        break;
      }
      case VertexRole::Kind::kClause:
        s2.insert(v);
        break;
      default:
        throw std::logic_error("unexpected role in SAT trace");
    }
  }
  return {s1, s2};
}

std::vector<bool> lift_ids_to_assignment(const Graph& target,
                                         const ReductionTrace& trace,
                                         const VertexSet& s1,
                                         const VertexSet& s2,
                                         const CnfFormula& phi) {
  if (trace.kind != ReductionKind::kSatToTwoIds)
    throw std::invalid_argument("trace kind mismatch");
  if (!are_disjoint_ids(target, s1, s2))
    throw std::invalid_argument("certificate is not a disjoint IDS pair");

  // Positive literal vertices in the union encode true; free variables are
  // fixed to 0.
  std::vector<bool> tau(phi.num_vars, false);
  for (std::size_t v = 0; v < trace.role_map.size(); ++v) {
    const auto& role = trace.role_map[v];
    if (role.kind == VertexRole::Kind::kLiteral && role.b > 0 &&
        (s1.contains(static_cast<int>(v)) || s2.contains(static_cast<int>(v))))
      tau[role.a] = true;
  }
  if (!phi.satisfied_by(tau))
    throw std::logic_error("disjoint IDS pair did not encode a satisfying assignment");
  return tau;
}

}  // namespace fallkit
