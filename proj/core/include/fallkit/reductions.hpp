#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fallkit/cnf.hpp"
#include "fallkit/graph.hpp"
#include "fallkit/verifier.hpp"

namespace fallkit {

/// Role of one target vertex relative to the source instance.
struct VertexRole {
  enum class Kind {
    kOriginal,     // original(v): a = source vertex
    kSubdivision,  // subdivision(u,v): a,b = source edge endpoints
    kGadget,       // gadget(owner,position): a = anchor vertex, b = position
    kClause,       // clause(j): a = clause index
    kLiteral,      // literal(i,sign): a = variable, b = +1/-1
    kPendant,      // pendant(owner): a = owned vertex
  };
  Kind kind;
  int a = -1;
  int b = -1;

  std::string to_string() const;
  bool operator==(const VertexRole&) const = default;
};

enum class ReductionKind {
  kThreeColToFall3,
  kKColToFallK,
  kEdgeColToFallK,
  kEdgeColToFallKBoxK2,
  kSatToTwoIds,
};

std::string reduction_kind_name(ReductionKind kind);

/// Bidirectional vertex-role map linking a source instance to its reduced
/// instance; the handle certificate lifting works through.
struct ReductionTrace {
  ReductionKind kind;
  int source_n = 0;  // vertices, or variables for SAT
  int source_m = 0;  // edges, or clauses for SAT
  int k = 0;         // color count where applicable
  std::vector<VertexRole> role_map;  // total over target vertices

  std::string to_json() const;
  static ReductionTrace from_json(const std::string& text);
};

/// 3-Coloring -> Fall 3-Coloring: subdivide every edge once and identify
/// every original vertex with a copy of C_6. Originals keep their indices;
/// subdivision vertices follow in sorted edge order; C_6 completions last.
std::pair<Graph, ReductionTrace> reduce_3col_to_fall3(const Graph& g);

/// k-Coloring -> Fall k-Coloring (k >= 3). For k = 3 this is exactly
/// reduce_3col_to_fall3. For k >= 4 every original vertex is identified
/// with vertex (0,0) of a fresh F_k, and every subdivision vertex gains
/// k-3 pendant F_k copies attached at their (0,0) vertices.
std::pair<Graph, ReductionTrace> reduce_kcol_to_fallk(const Graph& g, int k);

/// Edge k-Coloring of a k-regular graph -> Fall k-Coloring of the line
/// graph ((2k-2)-regular); with_box_k2 appends the Cartesian product with
/// K_2 ((2k-1)-regular, same fall set).
std::pair<Graph, ReductionTrace> reduce_edgecol_to_fallk(const Graph& g, int k,
                                                         bool with_box_k2 = false);

/// Planar Monotone 3-SAT -> two disjoint IDS: one 8-vertex gadget per
/// variable (5-cycle x, a, b, c, x-bar plus pendants on a, b, c) and one
/// vertex per clause joined to its three literal vertices.
std::pair<Graph, ReductionTrace> reduce_sat_to_2ids(const CnfFormula& phi);

/// Restricts a valid fall k-coloring of the target to the original
/// vertices; guaranteed proper for the source. Throws on an invalid
/// certificate or a trace kind mismatch.
Coloring lift_fall_to_coloring(const Graph& target, const ReductionTrace& trace,
                               const Coloring& c);

/// Extends a proper k-coloring of the source to a fall k-coloring of the
/// target (subdivision vertices take the lowest color missing from both
/// endpoints; gadget copies are completed by the unique fall coloring of
/// F_k given their anchor).
Coloring lift_coloring_to_fall(const Graph& source, const Graph& target,
                               const ReductionTrace& trace, const Coloring& c);

/// Satisfying assignment -> two disjoint IDS of the SAT reduction target.
std::pair<VertexSet, VertexSet> lift_assignment_to_ids(
    const Graph& target, const ReductionTrace& trace,
    const std::vector<bool>& tau, const CnfFormula& phi);

/// Two disjoint IDS -> satisfying assignment (free variables set to 0).
std::vector<bool> lift_ids_to_assignment(const Graph& target,
                                         const ReductionTrace& trace,
                                         const VertexSet& s1,
                                         const VertexSet& s2,
                                         const CnfFormula& phi);

}  // namespace fallkit
