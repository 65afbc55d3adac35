#pragma once

#include <string>
#include <vector>

#include "ryser/colored_graph.hpp"
#include "ryser/hypergraph.hpp"

namespace ryser {

// Finite field of a supported order, elements 0..q-1. Prime orders use
// modular arithmetic; 4, 8 and 9 use the irreducible polynomials
// x^2+x+1, x^3+x+1 (over GF(2)) and x^2+1 (over GF(3)).
class GaloisField {
 public:
  // Throws PreconditionError("unsupported order") outside {2,3,4,5,7,8,9}.
  explicit GaloisField(int q);

  int order() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }

  static bool supported(int q);

 private:
  int q_;
  std::vector<int> add_;
  std::vector<int> mul_;
};

// Points 0..point_count-1 and lines as sorted point lists.
struct IncidenceStructure {
  int point_count = 0;
  std::vector<std::vector<int>> lines;
};

struct AffinePlane {
  int order = 0;  // q = r - 1
  std::vector<std::string> point_labels;
  std::vector<std::vector<int>> lines;
  // q + 1 classes of q pairwise disjoint lines; class i has color i + 1.
  std::vector<std::vector<int>> parallel_classes;

  int point_count() const { return static_cast<int>(point_labels.size()); }
  IncidenceStructure incidence() const { return {point_count(), lines}; }
  // Color of every line.
  std::vector<Color> line_colors() const;
};

// Clone assignment of a blowup: vertex v is a copy of point f[v].
struct BlowupMap {
  int b = 0;
  std::vector<int> point_of;
};

// AG(2, q): points GF(q)^2 labelled "(a,b)", lines y = mx + c grouped by
// slope m (colors 1..q) and x = c (color q + 1).
AffinePlane affine_plane(int q);

// Projective plane of order q with the point (0:1:0) and its q + 1 lines
// removed. Vertices "(a,b)" and "(inf,m)"; edges are the lines y = mx + c
// plus their point at infinity. Classes 1..q are the removed vertical lines
// x = a, class q + 1 is the rest of the line at infinity.
Hypergraph truncated_projective_plane(int q);

// n = b q^2 vertices, vertex v a copy of point v / b. i ∈ col(u,v) iff f(u)
// and f(v) lie on a common line of color i (all colors when f(u) = f(v)).
ColoredCompleteGraph blowup_graph(const AffinePlane& plane, int b);
BlowupMap blowup_map(const AffinePlane& plane, int b);

// Checks the five affine plane axioms. (v) needs the order: the maximum
// number of pairwise parallel lines must be `order`.
//   (i)   every two points lie on exactly one common line
//   (ii)  unique parallel through an outside point
//   (iii) every line has at least 2 points
//   (iv)  every point lies on at least 3 lines
//   (v)   at most `order` pairwise parallel lines, attained
ValidationReport verify_affine_axioms(const IncidenceStructure& s, int order);

}  // namespace ryser
