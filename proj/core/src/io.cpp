#include "fallkit/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fallkit {

using nlohmann::json;

Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1, declared_m = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string fmt;
      if (!(ls >> fmt >> n >> declared_m) || (fmt != "edge" && fmt != "col"))
        throw ParseError("malformed problem line: " + line);
      continue;
    }
    if (tag == "e") {
      if (n < 0) throw ParseError("edge line before header");
      int u, v;
      if (!(ls >> u >> v)) throw ParseError("malformed edge line: " + line);
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError("vertex index out of range: " + line);
      if (u == v) throw ParseError("self-loop: " + line);
      edges.emplace_back(u - 1, v - 1);
      continue;
    }
    throw ParseError("unrecognized line: " + line);
  }
  if (n < 0) throw ParseError("missing DIMACS header");
  return Graph::from_edges(n, std::move(edges));
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (g.has_labels()) j["labels"] = g.labels();
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return Graph::from_edges(j.at("n").get<int>(), std::move(edges), std::move(labels));
}

Coloring parse_coloring(const std::string& text, int n) {
  std::istringstream in(text);
  std::string line;
  Coloring c;
  c.assignment.assign(n, 0);
  std::vector<char> assigned(n, 0);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    int v, color;
    if (!(ls >> v)) continue;
    if (!(ls >> color)) throw ParseError("malformed coloring line: " + line);
    if (v < 0 || v >= n) throw ParseError("vertex out of range: " + line);
    if (color < 1) throw ParseError("colors are 1-indexed: " + line);
    c.assignment[v] = color;
    assigned[v] = 1;
    c.k = std::max(c.k, color);
  }
  for (int v = 0; v < n; ++v)
    if (!assigned[v]) throw ParseError("vertex " + std::to_string(v) + " uncolored");
  return c;
}

std::string to_coloring_text(const Coloring& c) {
  std::ostringstream out;
  for (std::size_t v = 0; v < c.assignment.size(); ++v)
    out << v << " " << c.assignment[v] << "\n";
  return out.str();
}

CnfFormula parse_dimacs_cnf(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CnfFormula phi;
  bool seen_header = false;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string fmt;
      int m;
      if (!(ls >> fmt >> phi.num_vars >> m) || fmt != "cnf")
        throw ParseError("malformed cnf problem line: " + line);
      seen_header = true;
      continue;
    }
    if (!seen_header) throw ParseError("clause before cnf header");
    int lit = std::stoi(tag);
    do {
      if (lit == 0) {
        if (pending.size() != 3) throw ParseError("clause is not a 3-clause");
        phi.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    } while (ls >> lit);
  }
  if (!pending.empty()) throw ParseError("unterminated clause");
  phi.validate();
  if (!phi.is_monotone()) throw ParseError("formula is not monotone");
  return phi;
}

std::string to_dimacs_cnf(const CnfFormula& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.num_vars << " " << phi.clauses.size() << "\n";
  for (const auto& cl : phi.clauses)
    out << cl[0] << " " << cl[1] << " " << cl[2] << " 0\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename into " + path);
}

}  // namespace fallkit
