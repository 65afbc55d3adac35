#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ryser/graph_algorithms.hpp"
#include "ryser/hypergraph.hpp"

namespace ryser {

enum class ComponentKind { cycle, complete, general };

std::string to_string(ComponentKind kind);

// Cycle when connected and 2-regular (so K_3 is a cycle), complete when every
// pair is adjacent (K_2 included), general otherwise. `vertices` must span a
// connected subgraph.
ComponentKind classify_component(const SimpleGraph& g, const std::vector<int>& vertices);

// State of the dual after removing the cardinality-one edges.
struct DualReduction {
  // On all dual vertices; removed vertices are isolated.
  SimpleGraph graph;
  // Graph edge -> smallest dual edge id (an original vertex) realizing it.
  std::map<GraphEdge, EdgeId> edge_source;
  std::vector<EdgeId> forced_cover;          // one per removed vertex
  std::vector<VertexId> removed_vertices;
  std::vector<EdgeId> absorbed;              // cardinality-one edges inside a pair
  std::vector<VertexId> remaining;           // dual vertices left in the graph
  std::vector<std::vector<int>> components;  // of graph restricted to remaining
  std::vector<ComponentKind> component_kinds;
};

// Dual edges must have at most two vertices (PreconditionError "not a Δ≤2
// dual" otherwise). Empty dual edges come from isolated vertices and are
// ignored. A single-vertex edge {e} is absorbed when some pair contains e;
// otherwise e occurs in no pair, its edge must be in every edge cover, and e
// is removed. No removal creates a new single-vertex edge, so one pass
// reaches the fixpoint.
DualReduction reduce_dual(const Hypergraph& dual);

struct GraphComponentCover {
  ComponentKind kind = ComponentKind::general;
  std::vector<int> vertices;
  std::vector<GraphEdge> edges;
  int alpha = 0;
};

struct EdgeCoverResult {
  std::vector<GraphEdge> edges;
  std::vector<GraphComponentCover> components;
  int alpha = 0;  // independence number of the whole graph
};

// Edge cover of every vertex of g, built per component: alternating edges on
// a cycle, a pairing on a complete graph, and on other components
// I ∪ M ∪ (matching of Y into I) with I a maximum independent set, M a
// maximum matching of G - I and Y the vertices of G - I missed by M.
// Checks the per-component size against (r-1) α, which needs maximum degree
// at most r (true for the dual of an r-uniform Δ≤2 hypergraph). Throws
// PreconditionError on an isolated vertex or a degree above r, and
// InternalError if Y cannot be matched into I.
EdgeCoverResult edge_cover_graph(const SimpleGraph& g, int r);

struct Delta2Result {
  std::vector<VertexId> cover;  // sorted vertices of H
  DualReduction reduction;
  EdgeCoverResult graph_cover;  // on the vertices reduction.remaining, renumbered
  int nu = 0;                   // |forced| + α(graph)
  std::int64_t bound = 0;       // (r-1) nu
  std::vector<std::string> trace;
};

// Vertex cover of an r-uniform H with r >= 3 and maximum degree at most 2
// of size at most (r-1) ν(H). H need not be r-partite.
Delta2Result ryser_delta2(const Hypergraph& h);

}  // namespace ryser
