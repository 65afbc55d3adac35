#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ryser/colored_graph.hpp"
#include "ryser/oracles.hpp"
#include "ryser/planes.hpp"

namespace ryser {

// Counting statistics of a colored complete graph. Index colors 1..r through
// the accessors.
struct ColorStats {
  int n = 0;
  int r = 0;
  std::vector<std::vector<int>> single_degree;  // [v][c - 1]: neighbors joined to v by color c alone
  std::vector<std::int64_t> single_edges;       // [c - 1]: pairs whose color set is {c}
  std::vector<std::int64_t> edges_with;         // [c - 1]: pairs having color c
  std::vector<int> component_count;             // [c - 1]
  std::vector<std::vector<std::size_t>> component_sizes;
  std::int64_t multi_edge_count = 0;            // pairs with at least two colors

  int d(VertexId v, Color c) const { return single_degree[v][c - 1]; }
  std::int64_t m(Color c) const { return single_edges[c - 1]; }
  std::int64_t M(Color c) const { return edges_with[c - 1]; }
  int k(Color c) const { return component_count[c - 1]; }
};

ColorStats color_stats(const ColoredCompleteGraph& g);

// Σ over C of color i, C' of color j of |C - C'|.
std::int64_t component_difference_sum(const ColoredCompleteGraph& g, Color i, Color j);
// The sum above equals (k_j - 1) n.
bool difference_identity_holds(const ColoredCompleteGraph& g, Color i, Color j);
// M_c >= n^2 / (2 k_c) - n / 2, compared as 2 k_c M_c >= n^2 - k_c n.
bool component_pair_bound_holds(const ColorStats& stats, Color c);

// (1 - (r-2)/(r-1)^2) n = n ((r-1)^2 - r + 2) / (r-1)^2, rounded up.
std::int64_t partial_cover_bound(std::int64_t n, int r);
bool partial_cover_bound_is_integral(std::int64_t n, int r);

struct PartialCoverResult {
  ComponentCover cover;  // r - 1 parts, distinct colors, common vertex
  Color omitted_color = 0;
  std::string route;     // nonspanning, two-colors, spanning-component, case1 or case2
  std::int64_t bound = 0;
};

// r - 1 components of pairwise distinct colors sharing a vertex that cover
// at least the bound above. Requires a transitive coloring and r >= 2.
PartialCoverResult partial_cover_distinct(const ColoredCompleteGraph& g);

struct BlowupWitness {
  AffinePlane plane;  // points "p<i>", lines = monochromatic components
  BlowupMap map;
};

// Recovers (plane, b, f) when g is a blowup of an affine plane of order
// r - 1; nullopt otherwise.
std::optional<BlowupWitness> is_affine_blowup(const ColoredCompleteGraph& g);

struct SharpnessReport {
  bool is_sharp = false;
  bool integral = false;        // the bound is an integer
  bool in_scope = false;        // integral and r >= 3
  std::int64_t bound = 0;
  std::int64_t oracle_max = 0;
  std::optional<BlowupWitness> blowup;
  std::string note;
};

// Compares the exact optimum with the bound. In scope, sharpness must
// coincide with being a blowup; a mismatch throws InternalError
// ("characterization violated").
SharpnessReport check_sharpness(const ColoredCompleteGraph& g, const OracleLimits& limits = {});

}  // namespace ryser
