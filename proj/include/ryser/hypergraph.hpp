#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ryser {

using VertexId = int;
using EdgeId = int;

// Sorted vertex ids. Duplicates inside one edge are kept so that validate()
// can report them.
using Edge = std::vector<VertexId>;

struct Violation {
  std::string invariant;
  std::string witness;
};

using ValidationReport = std::vector<Violation>;

// A hypergraph over opaque vertex names, densely renumbered 0..n-1.
//
// Edges form a multiset: a repeated edge is a distinct instance with its own
// EdgeId. Vertices contained in no edge are allowed. `rank` is the declared
// uniformity r; it is only checked by validate(), so non-uniform hypergraphs
// (duals, for instance) can be represented too.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int rank, std::vector<std::string> vertex_names, std::vector<Edge> edges,
             std::optional<std::vector<std::vector<VertexId>>> classes = std::nullopt);

  // Convenience builder over vertex names; vertices are numbered in order of
  // first appearance (classes first, then edges).
  static Hypergraph from_names(int rank, const std::vector<std::vector<std::string>>& edges,
                               const std::optional<std::vector<std::vector<std::string>>>& classes =
                                   std::nullopt);

  int rank() const { return rank_; }
  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::string& name(VertexId v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find_vertex(const std::string& name) const;

  bool has_classes() const { return classes_.has_value(); }
  const std::vector<std::vector<VertexId>>& classes() const { return *classes_; }
  // 1-based class index of v, if classes are declared and v is in one.
  std::optional<int> class_of(VertexId v) const;

  // Edge instances containing v, ascending.
  const std::vector<EdgeId>& star(VertexId v) const { return stars_[v]; }
  std::size_t degree(VertexId v) const { return stars_[v].size(); }
  std::size_t max_degree() const;

  bool is_uniform() const;
  std::string edge_to_string(EdgeId e) const;

 private:
  int rank_ = 0;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::optional<std::vector<std::vector<VertexId>>> classes_;
  std::vector<std::vector<EdgeId>> stars_;
  std::vector<int> class_of_;
};

// Checks r-uniformity, repeated vertices inside an edge, and (when classes
// are declared) that the classes are r disjoint sets covering every edge with
// no edge meeting a class twice. Empty report iff everything holds.
ValidationReport validate(const Hypergraph& h);

// Dual hypergraph: one vertex per edge instance of `h` (named "e<index>"),
// one edge per vertex of `h` (its star, possibly empty), in vertex order.
// The rank of the result is the largest star size.
Hypergraph dual(const Hypergraph& h);

// Minimum |e ∩ f| over pairs of distinct edge instances; the rank when there
// is a single edge. Throws PreconditionError("empty hypergraph") without edges.
int intersection_level(const Hypergraph& h);

// HGF text format.
//   r <int>
//   class <index 1..r> <vertex> ...
//   edge <vertex> x r
// '#' starts a comment. Throws InputError with a line number on bad input.
Hypergraph parse_hgf(std::istream& in);
Hypergraph parse_hgf_string(const std::string& text);
void write_hgf(std::ostream& out, const Hypergraph& h);
std::string to_hgf_string(const Hypergraph& h);

}  // namespace ryser
