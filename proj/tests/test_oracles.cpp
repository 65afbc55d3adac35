#include <doctest.h>

#include "reference.hpp"
#include "ryser/error.hpp"
#include "ryser/generators.hpp"
#include "ryser/oracles.hpp"
#include "ryser/planes.hpp"
#include "support.hpp"

using namespace ryser;
using support::hyp;

namespace {

// Small random hypergraph with up to 12 vertices and 12 edges.
Hypergraph random_hypergraph(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int r = static_cast<int>(rng.between(1, 4));
  const int n = static_cast<int>(rng.between(r, 12));
  const int m = static_cast<int>(rng.between(0, 12));
  std::vector<std::vector<std::string>> edges;
  for (int e = 0; e < m; ++e) {
    std::vector<std::string> edge;
    while (static_cast<int>(edge.size()) < r) {
      const std::string name = "v" + std::to_string(rng.below(n));
      if (std::find(edge.begin(), edge.end(), name) == edge.end()) edge.push_back(name);
    }
    edges.push_back(edge);
  }
  return Hypergraph::from_names(r, edges);
}

}  // namespace

TEST_CASE("parameters of the truncated Fano plane") {
  const Hypergraph h = truncated_projective_plane(2);
  const HypergraphParams p = parameters_exact(h);
  CHECK(p.tau == 2);
  CHECK(p.nu == 1);
  CHECK(p.delta == 2);
  CHECK(p.t_level == 1);
  // Any two lines meet, so two of them cover at most 5 of the 6 points.
  CHECK(p.rho == 3);
  CHECK(p.alpha_prime == ref::alpha_prime(h));
  CHECK(p.alpha == 4);
}

TEST_CASE("parameters of a single edge") {
  const HypergraphParams p = parameters_exact(hyp(3, {{"a", "b", "c"}}));
  CHECK(p.tau == 1);
  CHECK(p.nu == 1);
  CHECK(p.rho == 1);
  CHECK(p.delta == 1);
  CHECK(p.alpha == 2);
  CHECK(p.alpha_prime == 1);
  CHECK(p.t_level == 3);
}

TEST_CASE("edge cover is undefined with an uncovered vertex") {
  const Hypergraph h = Hypergraph::from_names(2, {{"a", "b"}}, {{{"a", "z"}, {"b"}}});
  CHECK_FALSE(edge_cover_number(h).has_value());
}

TEST_CASE("exact searches agree with exhaustive enumeration") {
  for (int i = 0; i < 300; ++i) {
    const Hypergraph h = random_hypergraph(10'000 + i);
    const HypergraphParams p = parameters_exact(h);
    CHECK(p.tau == ref::tau(h));
    CHECK(p.tau == vertex_cover_number_by_enumeration(h));
    CHECK(p.nu == ref::nu(h));
    CHECK(p.rho.value_or(-1) == ref::rho(h));
    CHECK(p.alpha_prime == ref::alpha_prime(h));
    CHECK(p.alpha == ref::alpha(h));
    CHECK(p.nu <= p.tau);
    CHECK(p.tau <= h.rank() * p.nu);
    const auto cover = minimum_vertex_cover(h);
    CHECK(static_cast<int>(cover.size()) == p.tau);
    for (const Edge& e : h.edges()) {
      bool hit = false;
      for (VertexId v : cover) hit = hit || std::binary_search(e.begin(), e.end(), v);
      CHECK(hit);
    }
  }
}

TEST_CASE("exact searches on Delta 2 hypergraphs") {
  for (int i = 0; i < 60; ++i) {
    const Hypergraph h = gen_delta2(3, 1 + i % 8, 300 + i);
    if (h.vertex_count() > 20) continue;
    CHECK(vertex_cover_number(h) == ref::tau(h));
    CHECK(matching_number(h) == ref::nu(h));
  }
}

TEST_CASE("limits are enforced") {
  OracleLimits small;
  small.max_vertices = 3;
  CHECK_THROWS_AS(vertex_cover_number(hyp(2, {{"a", "b"}, {"c", "d"}}), small), LimitExceeded);
  small = {};
  small.max_edges = 1;
  CHECK_THROWS_AS(matching_number(hyp(2, {{"a", "b"}, {"c", "d"}}), small), LimitExceeded);
  small = {};
  small.max_components = 2;
  CHECK_THROWS_AS(min_component_cover(blowup_graph(affine_plane(3), 1), small), LimitExceeded);
  small = {};
  small.max_tuples = 10;
  CHECK_THROWS_AS(max_partial_cover_distinct(blowup_graph(affine_plane(3), 1), small), LimitExceeded);
}

TEST_CASE("empty edges cannot be covered") {
  const Hypergraph h(1, {"a"}, {Edge{}});
  CHECK_THROWS_AS(vertex_cover_number(h), PreconditionError);
}

TEST_CASE("minimum component cover agrees with exhaustive search") {
  for (int i = 0; i < 150; ++i) {
    const auto g = gen_transitive_colored(2 + i % 14, 2 + i % 5, 1, 20'000 + i, i % 3 == 0);
    const ComponentCover c = min_component_cover(g);
    CHECK(support::covers_all(c, g.n()));
    CHECK(static_cast<int>(c.size()) == ref::min_component_cover(g));
    for (const auto& p : c.parts) CHECK(p.vertices == g.components().component_of(p.color, p.vertices.front()));
  }
}

TEST_CASE("affine planes need q components to cover") {
  // Parallel lines partition the points, and fewer than q lines leave a point
  // uncovered.
  for (int q : {2, 3}) CHECK(min_component_cover(blowup_graph(affine_plane(q), 1)).size() == static_cast<std::size_t>(q));
}

TEST_CASE("maximum partial cover agrees with exhaustive search") {
  for (int i = 0; i < 150; ++i) {
    const auto g = gen_transitive_colored(2 + i % 12, 2 + i % 4, 1, 30'000 + i);
    const PartialCoverOptimum opt = max_partial_cover_distinct(g);
    CHECK(static_cast<int>(opt.covered) == ref::max_partial_cover(g));
    CHECK(opt.cover.covered_count == opt.covered);
    CHECK(static_cast<int>(opt.cover.size()) == g.r() - 1);
    std::set<Color> colors;
    for (const auto& p : opt.cover.parts) {
      colors.insert(p.color);
      CHECK(p.color != opt.omitted_color);
    }
    CHECK(static_cast<int>(colors.size()) == g.r() - 1);
  }
}

TEST_CASE("three concurrent lines cover seven points of AG(2,3)") {
  const PartialCoverOptimum opt = max_partial_cover_distinct(blowup_graph(affine_plane(3), 1));
  CHECK(opt.covered == 7);
  CHECK(opt.cover.common_vertex.has_value());
}

TEST_CASE("partial cover needs two colors") {
  const auto g = support::colored(2, 1, [](int, int) { return ColorSet::single(1); });
  CHECK_THROWS_AS(max_partial_cover_distinct(g), PreconditionError);
}
