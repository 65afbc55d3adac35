#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ryser/color_set.hpp"
#include "ryser/hypergraph.hpp"

namespace ryser {

// Symmetric n x n table of color sets. The diagonal is unused.
class ColorMatrix {
 public:
  ColorMatrix() = default;
  explicit ColorMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {}

  int n() const { return n_; }
  ColorSet get(VertexId u, VertexId v) const { return cells_[index(u, v)]; }
  void set(VertexId u, VertexId v, ColorSet s) {
    cells_[index(u, v)] = s;
    cells_[index(v, u)] = s;
  }

  friend bool operator==(const ColorMatrix&, const ColorMatrix&) = default;

 private:
  std::size_t index(VertexId u, VertexId v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_ = 0;
  std::vector<ColorSet> cells_;
};

struct CoverPart {
  Color color = 0;
  std::vector<VertexId> vertices;  // sorted

  friend bool operator==(const CoverPart&, const CoverPart&) = default;
};

// A family of monochromatic components, with covered-vertex accounting.
struct ComponentCover {
  std::vector<CoverPart> parts;
  std::size_t covered_count = 0;
  std::optional<VertexId> common_vertex;

  std::size_t size() const { return parts.size(); }
  std::vector<VertexId> uncovered(int n) const;
};

// Drops repeated (color, component) parts and recomputes covered_count.
ComponentCover make_cover(std::vector<CoverPart> parts, std::optional<VertexId> common_vertex = std::nullopt);

// Per color: the partition of all vertices into components of that color.
// Vertices without an edge of the color are singleton components.
// Components are listed by their smallest vertex.
class ComponentIndex {
 public:
  ComponentIndex() = default;
  ComponentIndex(int r, const ColorMatrix& colors);

  int count(Color c) const { return static_cast<int>(components_[c - 1].size()); }
  const std::vector<std::vector<VertexId>>& components(Color c) const { return components_[c - 1]; }
  int component_id(Color c, VertexId v) const { return component_id_[c - 1][v]; }
  const std::vector<VertexId>& component_of(Color c, VertexId v) const {
    return components_[c - 1][component_id_[c - 1][v]];
  }
  std::vector<std::size_t> sizes(Color c) const;

 private:
  std::vector<std::vector<std::vector<VertexId>>> components_;
  std::vector<std::vector<int>> component_id_;
};

// Complete graph whose every pair carries a nonempty subset of [r].
// Transitivity is recorded, not required; the cover algorithms check it.
// The component index is built eagerly, so concurrent readers are safe.
class ColoredCompleteGraph {
 public:
  // Throws PreconditionError if some pair has no color or a color outside [r].
  ColoredCompleteGraph(int r, ColorMatrix colors);

  int n() const { return colors_.n(); }
  int r() const { return r_; }
  ColorSet all_colors() const { return ColorSet::range(r_); }
  ColorSet colors(VertexId u, VertexId v) const { return colors_.get(u, v); }
  const ColorMatrix& matrix() const { return colors_; }
  bool is_transitive() const { return transitive_; }

  const ComponentIndex& components() const { return index_; }
  // 𝒞(x, I): the components of colors in I that contain x; common vertex x.
  // Throws PreconditionError for a color outside [r].
  ComponentCover components_of(VertexId x, ColorSet colors) const;

  // Smallest number of colors on any pair (r for n < 2).
  int min_pair_colors() const;

  friend bool operator==(const ColoredCompleteGraph& a, const ColoredCompleteGraph& b) {
    return a.r_ == b.r_ && a.colors_ == b.colors_;
  }

 private:
  int r_;
  ColorMatrix colors_;
  bool transitive_;
  ComponentIndex index_;
};

// Gyárfás graph of a non-intersecting hypergraph: some pairs have no color.
struct PartialColoredGraph {
  int r = 0;
  ColorMatrix colors;
  std::vector<std::pair<VertexId, VertexId>> missing_pairs;
};

using GyarfasResult = std::variant<ColoredCompleteGraph, PartialColoredGraph>;

// One vertex per edge instance of h; a pair gets the class indices where the
// two edges share a vertex. Complete iff h is intersecting. Throws
// PreconditionError unless h is a valid r-partite r-uniform hypergraph.
GyarfasResult gyarfas_graph(const Hypergraph& h);

// i ∈ col'(u, v) iff u and v lie in the same component of color i.
ColoredCompleteGraph transitive_closure(const ColoredCompleteGraph& g);
// Same, from a raw table; throws PreconditionError("not complete") if a pair
// has no color.
ColoredCompleteGraph transitive_closure(int r, const ColorMatrix& colors);

// Result of merging every class of vertices joined by full-color pairs.
struct Contraction {
  ColoredCompleteGraph graph;
  std::vector<std::vector<VertexId>> classes;  // contracted vertex -> originals

  // Expands every part to the original vertices; the part count is unchanged.
  ComponentCover lift(const ComponentCover& cover) const;
};

// Requires a transitive graph. Under transitivity "col(u,v) = [r]" is an
// equivalence relation and every vertex outside a class sees the whole class
// with the same color set, so all classes can be merged at once. That
// agreement is checked, not assumed (InternalError on disagreement).
Contraction contract_full_color_classes(const ColoredCompleteGraph& g);

// Removes color c from every pair; colors above c shift down by one so the
// result uses [r-1]. Throws PreconditionError("deletion empties an edge").
ColoredCompleteGraph delete_color(const ColoredCompleteGraph& g, Color c);

// Subgraph on `vertices` (distinct), renumbered in the given order.
// Transitivity is inherited.
ColoredCompleteGraph induced_subgraph(const ColoredCompleteGraph& g, const std::vector<VertexId>& vertices);

// CGF text format.
//   colored n <int> r <int>
//   e <u> <v> <c1,c2,...>
// 0-based u < v, 1-based colors; every pair exactly once.
struct CgfData {
  int r = 0;
  ColorMatrix colors;
};
CgfData parse_cgf(std::istream& in);
// Parses and builds the graph, optionally applying the transitive closure.
ColoredCompleteGraph load_cgf(std::istream& in, bool closure = false);
ColoredCompleteGraph load_cgf_string(const std::string& text, bool closure = false);
void write_cgf(std::ostream& out, const ColoredCompleteGraph& g);
std::string to_cgf_string(const ColoredCompleteGraph& g);

}  // namespace ryser
