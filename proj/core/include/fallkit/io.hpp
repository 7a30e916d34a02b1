#pragma once

#include <stdexcept>
#include <string>

#include "fallkit/cnf.hpp"
#include "fallkit/graph.hpp"
#include "fallkit/verifier.hpp"

namespace fallkit {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// DIMACS edge format: "p edge n m" header, "e u v" lines, 1-indexed on
/// disk. Duplicate edge lines collapse; an m mismatch is tolerated.
Graph parse_dimacs(const std::string& text);
std::string to_dimacs(const Graph& g);

/// JSON graph dump {"n": ..., "edges": [[u,v],...], "labels"?: [...]}.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

/// Coloring file: one line per vertex, "v c" (0-indexed vertex,
/// 1-indexed color). k defaults to the maximum color seen.
Coloring parse_coloring(const std::string& text, int n);
std::string to_coloring_text(const Coloring& c);

/// DIMACS CNF ("p cnf n m", clause lines terminated by 0).
CnfFormula parse_dimacs_cnf(const std::string& text);
std::string to_dimacs_cnf(const CnfFormula& phi);

std::string read_file(const std::string& path);
/// Writes via a temp file + rename so readers never see partial output.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace fallkit
