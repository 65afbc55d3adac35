#pragma once

#include <cstdint>
#include <string>

#include "ryser/colored_graph.hpp"
#include "ryser/hypergraph.hpp"

namespace ryser {

// SplitMix64. Each call adds 0x9E3779B97F4A7C15 to the state and returns
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z ^ (z >> 31)
// of the new state. below(b) is next() % b.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  // Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

 private:
  std::uint64_t state_;
};

// Per color an independent random partition of the n vertices; a pair gets
// the colors whose partition puts it in one block. While some pair has fewer
// than min_colors colors, the first such pair (lexicographic) has its two
// blocks merged in the color that lifts the most deficient pairs (lowest
// color on ties). The result is transitive.
//
// Block counts are uniform in [1, n]. With `spanning` they are uniform in
// [1, n/2] and every block gets at least two vertices, so every vertex sees
// every color.
//
// Requires 1 <= min_colors < r and n >= 2 (PreconditionError); throws
// InternalError if the repair exceeds 10 r n merges.
ColoredCompleteGraph gen_transitive_colored(int n, int r, int min_colors, std::uint64_t seed, bool spanning = false);

struct GeneratedHypergraph {
  Hypergraph hypergraph;
  bool reached = true;  // false when fewer than m edges were accepted
};

// Vertices "c<i>_<j>" for class i in 1..r and j < class_size, all declared as
// classes. A candidate copies a random accepted edge and redraws a random
// number (at most r - t) of its coordinates; it is accepted iff it shares at
// least t vertices with every accepted edge. Stops after m edges or
// 200 m + 1000 candidates. With `exact`, candidates redraw exactly r - t
// coordinates to new values and must share exactly t vertices with every
// accepted edge. Requires 1 <= t < r, class_size >= 2, m >= 1.
GeneratedHypergraph gen_t_intersecting_hypergraph(int r, int t, int m, int class_size, std::uint64_t seed,
                                                  bool exact = false);

enum class Delta2Mode { mixed, disjoint, cycle, chain };

// Parses "mixed", "disjoint", "cycle" or "chain"; throws InputError.
Delta2Mode parse_delta2_mode(const std::string& name);

// r-uniform hypergraph with m edges over vertices "v<i>", each vertex in at
// most two edges. disjoint: pairwise disjoint edges. cycle: edge i meets edge
// i + 1 (mod m) in one vertex (two edges sharing two vertices when m = 2).
// chain: the same without closing. mixed: every edge reuses a random number
// of vertices that so far lie in one edge and fills up with fresh ones.
// Requires r >= 3, m >= 0.
Hypergraph gen_delta2(int r, int m, std::uint64_t seed, Delta2Mode mode = Delta2Mode::mixed);

// Merges two random components of color c (adds c to every pair between
// them). Keeps a transitive coloring transitive. Requires at least two
// components of color c.
ColoredCompleteGraph coarsen_color(const ColoredCompleteGraph& g, Color c, std::uint64_t seed);

}  // namespace ryser
