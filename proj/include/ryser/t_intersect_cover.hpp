#pragma once

#include <string>
#include <vector>

#include "ryser/colored_graph.hpp"

namespace ryser {

enum class LemmaKind {
  exact,  // every pair has exactly t colors
  wide,   // t < |col(xy)| < r
};

// Which of the two counting arguments handles an edge xy, and its color sets.
struct LemmaPlan {
  LemmaKind kind = LemmaKind::exact;
  VertexId x = 0;
  VertexId y = 0;
  ColorSet pair_colors;  // I = col(xy)
  int ell = 0;           // |I|
  ColorSet extra;        // J
  int j = 0;             // |J|
  bool spread = false;   // false: J ⊆ I and the cover is 𝒞(x,J); true: J ∩ I = ∅, 𝒞(x,I) ∪ 𝒞(x,J) ∪ 𝒞(y,J)

  int part_count() const { return spread ? ell + 2 * j : j; }
};

struct CommonTriangle {
  int k = 0;  // largest number of colors shared by all three sides
  VertexId x = 0, y = 0, z = 0;
};

// Color bookkeeping of the r = 4t - 1 triangle argument.
struct TrianglePartition {
  int case_id = 0;  // 0, 1 or 2
  CommonTriangle triangle;
  ColorSet common;  // K = col(xy) ∩ col(yz) ∩ col(zx)
  ColorSet x_side;  // X = col(yz) - K
  ColorSet y_side;  // Y = col(xz) - K
  ColorSet z_side;  // Z = col(xy) - K
  ColorSet spare;   // S = [r] - (K ∪ X ∪ Y ∪ Z)
  ColorSet x_pick, y_pick, z_pick;  // X', Y', Z'
};

struct TCoverResult {
  ComponentCover cover;
  std::vector<std::string> trace;  // which base case, lemma or triangle case fired
};

// Covers V(G) with at most r - t monochromatic components, for a transitive
// coloring where every pair has at least t colors and r - 1 >= t > r/4.
// Throws PreconditionError naming the violated hypothesis, and
// HypothesisViolation if a construction leaves a vertex uncovered.
TCoverResult cover_t(const ColoredCompleteGraph& g, int t);

// Plans the cover for edge xy. Wide when t < |col(xy)| < r (needs
// t + 1 <= r <= 4t - 1); exact when |col(xy)| = t and every pair has
// exactly t colors (needs t + 1 <= r <= 4t - 2).
LemmaPlan plan_lemma(const ColoredCompleteGraph& g, int t, VertexId x, VertexId y);
ComponentCover lemma_cover(const ColoredCompleteGraph& g, int t, VertexId x, VertexId y);

// Maximum common-color triangle, lexicographically smallest witness.
CommonTriangle max_common_triangle(const ColoredCompleteGraph& g);
// Reference version over explicit color lists.
CommonTriangle max_common_triangle_naive(const ColoredCompleteGraph& g);

TrianglePartition plan_triangle_case(const ColoredCompleteGraph& g, int t, const CommonTriangle& triangle);
// r = 4t - 1 and every pair has exactly t colors.
ComponentCover triangle_case_cover(const ColoredCompleteGraph& g, int t, const CommonTriangle& triangle);

}  // namespace ryser
