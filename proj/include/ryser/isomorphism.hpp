#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ryser/colored_graph.hpp"
#include "ryser/hypergraph.hpp"

namespace ryser {

// Simple undirected graph with an integer label per node.
struct LabeledGraph {
  std::vector<int> labels;
  std::vector<std::vector<int>> adjacency;
};

// Label-preserving isomorphism a -> b, or nullopt. Exact: color refinement
// prunes a backtracking search. Throws LimitExceeded once `node_budget`
// search nodes have been expanded.
std::optional<std::vector<int>> find_isomorphism(const LabeledGraph& a, const LabeledGraph& b,
                                                 std::size_t node_budget = 20'000'000);

// Bipartite vertex/edge incidence graph; edge instances become separate
// nodes, so multiplicities are respected. Names and classes are ignored.
LabeledGraph incidence_graph(const Hypergraph& h);

// Vertices, one node per color, one node per component of size >= 2 joined
// to its members and its color. For transitive colorings this determines
// every color set. With `color_labels` each color node gets its own label,
// which forbids permuting colors.
LabeledGraph component_graph(const ColoredCompleteGraph& g, bool color_labels = false);

// Isomorphism of the vertex/edge-multiset structure.
bool isomorphic(const Hypergraph& a, const Hypergraph& b);

// Isomorphism up to vertex relabeling and, optionally, color relabeling.
// Both graphs must be transitive (PreconditionError otherwise).
bool isomorphic(const ColoredCompleteGraph& a, const ColoredCompleteGraph& b, bool permute_colors = true);

}  // namespace ryser
