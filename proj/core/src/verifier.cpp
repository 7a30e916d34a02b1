#include "fallkit/verifier.hpp"

#include <stdexcept>

namespace fallkit {

std::string Violation::describe() const {
  switch (kind) {
    case Kind::kMonochromaticEdge:
      return "monochromatic edge {" + std::to_string(vertex) + "," +
             std::to_string(other) + "}";
    case Kind::kMissingColor:
      return "vertex " + std::to_string(vertex) + " misses color " +
             std::to_string(other) + " in its neighborhood";
    case Kind::kEmptyClass:
      return "color class " + std::to_string(other) + " is empty";
    case Kind::kBadClassIndex:
      return "vertex " + std::to_string(vertex) + " has class " +
             std::to_string(other) + " outside 1..k";
  }
  return {};
}

static void check_members(const Graph& g, const VertexSet& s) {
  if (s.universe() > g.vertex_count())
    throw std::out_of_range("vertex set member out of range");
}

bool is_independent(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  for (auto [u, v] : g.edges())
    if (s.contains(u) && s.contains(v)) return false;
  return true;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (s.contains(v)) continue;
    bool dominated = false;
    for (int u : g.neighbors(v))
      if (s.contains(u)) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

bool is_ids(const Graph& g, const VertexSet& s) {
  return is_independent(g, s) && is_dominating(g, s);
}

bool are_disjoint_ids(const Graph& g, const VertexSet& s1, const VertexSet& s2) {
  return !s1.intersects(s2) && is_ids(g, s1) && is_ids(g, s2);
}

VerifyReport is_fall_coloring(const Graph& g, const Coloring& c) {
  const int n = g.vertex_count();
  const int k = c.k;
  if (static_cast<int>(c.assignment.size()) != n)
    throw std::invalid_argument("coloring not total over V");
  if (k < 1) throw std::invalid_argument("class count must be >= 1");

  VerifyReport report;
  std::vector<int> class_size(k + 1, 0);
  for (int v = 0; v < n; ++v) {
    int cv = c.assignment[v];
    if (cv < 1 || cv > k) {
      report.violations.push_back(
          {Violation::Kind::kBadClassIndex, v, cv});
      continue;
    }
    ++class_size[cv];
  }
  if (!report.violations.empty()) return report;  // indices unusable below

  for (int cls = 1; cls <= k; ++cls)
    if (class_size[cls] == 0)
      report.violations.push_back({Violation::Kind::kEmptyClass, -1, cls});

  for (auto [u, v] : g.edges())
    if (c.assignment[u] == c.assignment[v])
      report.violations.push_back({Violation::Kind::kMonochromaticEdge, u, v});

  // Colorful check: each vertex must see every class other than its own.
  std::vector<char> seen(k + 1);
  for (int v = 0; v < n; ++v) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int u : g.neighbors(v)) seen[c.assignment[u]] = 1;
    for (int cls = 1; cls <= k; ++cls)
      if (cls != c.assignment[v] && !seen[cls])
        report.violations.push_back({Violation::Kind::kMissingColor, v, cls});
  }

  report.valid = report.violations.empty();
  return report;
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.assignment.size()) != g.vertex_count())
    throw std::invalid_argument("coloring not total over V");
  for (auto [u, v] : g.edges())
    if (c.assignment[u] == c.assignment[v]) return false;
  return true;
}

bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& h) {
  const auto& edges = g.edges();
  if (h.assignment.size() != edges.size())
    throw std::invalid_argument("edge coloring not total over E");
  // Adjacent edges share an endpoint.
  std::vector<std::vector<int>> incident(g.vertex_count());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].first].push_back(static_cast<int>(e));
    incident[edges[e].second].push_back(static_cast<int>(e));
  }
  for (const auto& inc : incident)
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        if (h.assignment[inc[i]] == h.assignment[inc[j]]) return false;
  return true;
}

}  // namespace fallkit
