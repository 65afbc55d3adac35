#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ryser/colored_graph.hpp"
#include "ryser/hypergraph.hpp"

namespace ryser {

// Size limits for the exact searches. Masks are 64 bits wide, so neither
// limit may exceed 64.
struct OracleLimits {
  std::size_t max_vertices = 40;
  std::size_t max_edges = 64;
  // Upper bound on maximal components for min_component_cover.
  std::size_t max_components = 64;
  // Upper bound on component tuples enumerated by max_partial_cover_distinct.
  std::uint64_t max_tuples = 10'000'000;
};

struct HypergraphParams {
  int tau = 0;                  // vertex cover number
  int nu = 0;                   // matching number
  std::optional<int> rho;       // edge cover number; undefined with uncovered vertices
  int delta = 0;                // maximum degree
  int alpha = 0;                // independence number (no edge inside)
  int alpha_prime = 0;          // strong independence number (<= 1 vertex per edge)
  int t_level = 0;              // largest t with h t-intersecting; 0 if two edges are disjoint

  friend bool operator==(const HypergraphParams&, const HypergraphParams&) = default;
};

// Exact values of every parameter. Throws LimitExceeded naming the limit.
HypergraphParams parameters_exact(const Hypergraph& h, const OracleLimits& limits = {});

// The individual searches. Edges that are empty can never be covered, so
// vertex_cover_number throws PreconditionError on them.
int vertex_cover_number(const Hypergraph& h, const OracleLimits& limits = {});
std::vector<VertexId> minimum_vertex_cover(const Hypergraph& h, const OracleLimits& limits = {});
int matching_number(const Hypergraph& h, const OracleLimits& limits = {});
std::optional<int> edge_cover_number(const Hypergraph& h, const OracleLimits& limits = {});
int strong_independence_number(const Hypergraph& h, const OracleLimits& limits = {});

// Plain subset enumeration by increasing size (|V| <= 20); used to check the
// branch and bound.
int vertex_cover_number_by_enumeration(const Hypergraph& h);

// Minimum number of monochromatic components covering V(G). Components that
// are contained in another component are dropped first; the limit applies to
// what remains. Ties resolve toward smaller (color, smallest vertex).
ComponentCover min_component_cover(const ColoredCompleteGraph& g, const OracleLimits& limits = {});

struct PartialCoverOptimum {
  ComponentCover cover;  // r - 1 parts of pairwise distinct colors
  Color omitted_color = 0;
  std::size_t covered = 0;
};

// Exact maximum coverage by r - 1 components of pairwise distinct colors.
// Requires r >= 2 and n <= 64.
PartialCoverOptimum max_partial_cover_distinct(const ColoredCompleteGraph& g, const OracleLimits& limits = {});

}  // namespace ryser
