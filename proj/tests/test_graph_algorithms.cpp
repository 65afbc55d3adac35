#include <doctest.h>

#include <set>

#include "reference.hpp"
#include "ryser/error.hpp"
#include "ryser/generators.hpp"
#include "ryser/graph_algorithms.hpp"

using namespace ryser;

namespace {

SimpleGraph random_graph(int n, int percent, std::uint64_t seed) {
  SplitMix64 rng(seed);
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<int>(rng.below(100)) < percent) g.add_edge(u, v);
    }
  }
  return g;
}

SimpleGraph petersen() {
  SimpleGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

bool is_matching(const SimpleGraph& g, const std::vector<GraphEdge>& m) {
  std::set<int> used;
  for (auto [a, b] : m) {
    if (!g.has_edge(a, b) || !used.insert(a).second || !used.insert(b).second) return false;
  }
  return true;
}

bool is_independent(const SimpleGraph& g, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.has_edge(s[i], s[j])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("simple graph ignores loops and repeated edges") {
  SimpleGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(2, 2);
  CHECK(g.edges().size() == 1);
  CHECK(g.degree(2) == 0);
  CHECK(g.max_degree() == 1);
  CHECK(g.connected_components() == std::vector<std::vector<int>>{{0, 1}, {2}});
}

TEST_CASE("induced subgraph renumbers vertices") {
  const SimpleGraph g = petersen();
  const SimpleGraph outer = g.induced({0, 1, 2, 3, 4});
  CHECK(outer.edges().size() == 5);
  CHECK(outer.max_degree() == 2);
}

TEST_CASE("blossom matching on small graphs") {
  SimpleGraph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK(maximum_matching(c5).size() == 2);
  CHECK(maximum_matching(petersen()).size() == 5);
  CHECK(maximum_matching(SimpleGraph(4)).empty());
}

TEST_CASE("blossom matching agrees with exhaustive search") {
  for (int i = 0; i < 300; ++i) {
    const SimpleGraph g = random_graph(1 + i % 14, 10 + i % 60, 2000 + i);
    const auto m = maximum_matching(g);
    CHECK(is_matching(g, m));
    CHECK(static_cast<int>(m.size()) == ref::matching_size(g));
  }
}

TEST_CASE("bipartite matching respects the sides") {
  SimpleGraph g(6);
  g.add_edge(0, 3);
  g.add_edge(0, 4);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(0, 1);  // inside the left side, must be ignored
  const auto m = bipartite_matching(g, {0, 1, 2}, {3, 4, 5});
  CHECK(m.size() == 2);
  CHECK(is_matching(g, m));
  for (auto [a, b] : m) CHECK_FALSE((a <= 2 && b <= 2));
}

TEST_CASE("bipartite matching agrees with exhaustive search on bipartite graphs") {
  for (int i = 0; i < 200; ++i) {
    const int left = 1 + i % 6;
    const int right = 1 + (i / 6) % 6;
    SplitMix64 rng(4000 + i);
    SimpleGraph g(left + right);
    for (int u = 0; u < left; ++u) {
      for (int v = 0; v < right; ++v) {
        if (rng.below(100) < 40) g.add_edge(u, left + v);
      }
    }
    std::vector<int> l, r;
    for (int u = 0; u < left; ++u) l.push_back(u);
    for (int v = 0; v < right; ++v) r.push_back(left + v);
    const auto m = bipartite_matching(g, l, r);
    CHECK(is_matching(g, m));
    CHECK(static_cast<int>(m.size()) == ref::matching_size(g));
  }
}

TEST_CASE("maximum independent set") {
  CHECK(maximum_independent_set(petersen()).size() == 4);
  CHECK(maximum_independent_set(SimpleGraph(0)).empty());
  for (int i = 0; i < 200; ++i) {
    const SimpleGraph g = random_graph(1 + i % 16, 10 + i % 70, 6000 + i);
    const auto s = maximum_independent_set(g);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(is_independent(g, s));
    CHECK(static_cast<int>(s.size()) == ref::independence_number(g));
  }
  CHECK_THROWS_AS(maximum_independent_set(SimpleGraph(65)), LimitExceeded);
}

TEST_CASE("maximum independent set is deterministic") {
  const SimpleGraph g = random_graph(30, 20, 77);
  CHECK(maximum_independent_set(g) == maximum_independent_set(g));
}
