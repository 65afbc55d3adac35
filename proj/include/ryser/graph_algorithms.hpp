#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ryser {

using GraphEdge = std::pair<int, int>;  // first < second

// Undirected simple graph on 0..n-1. Loops and repeated edges are ignored.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : adjacency_(n) {}

  int n() const { return static_cast<int>(adjacency_.size()); }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  const std::vector<GraphEdge>& edges() const { return edges_; }

  // Vertex sets of the connected components, each sorted, ordered by
  // smallest vertex.
  std::vector<std::vector<int>> connected_components() const;
  // Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  SimpleGraph induced(const std::vector<int>& vertices) const;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<GraphEdge> edges_;
};

// Maximum matching of a general graph (Edmonds' blossom algorithm).
std::vector<GraphEdge> maximum_matching(const SimpleGraph& g);

// Maximum matching restricted to edges between `left` and `right`
// (augmenting paths). Both lists hold vertex ids of g.
std::vector<GraphEdge> bipartite_matching(const SimpleGraph& g, const std::vector<int>& left,
                                          const std::vector<int>& right);

// Exact maximum independent set, sorted. Branch and bound over 64-bit masks;
// throws LimitExceeded for more than 64 vertices. Deterministic.
std::vector<int> maximum_independent_set(const SimpleGraph& g);

// Same, over a graph given by neighbor masks (n <= 64).
std::uint64_t maximum_independent_set_mask(const std::vector<std::uint64_t>& neighbors);

}  // namespace ryser
