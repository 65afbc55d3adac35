// Plain exhaustive versions of the exact searches, for cross-checking.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "ryser/colored_graph.hpp"
#include "ryser/graph_algorithms.hpp"
#include "ryser/hypergraph.hpp"

namespace ref {

using namespace ryser;

inline std::uint64_t edge_mask(const Edge& e) {
  std::uint64_t m = 0;
  for (VertexId v : e) m |= std::uint64_t{1} << v;
  return m;
}

// Smallest vertex set meeting every edge, over all subsets (|V| <= 20).
inline int tau(const Hypergraph& h) {
  const int n = static_cast<int>(h.vertex_count());
  int best = n;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) >= best) continue;
    bool ok = true;
    for (const Edge& e : h.edges()) ok = ok && (edge_mask(e) & s) != 0;
    if (ok) best = std::popcount(s);
  }
  return best;
}

// Largest family of pairwise disjoint edge instances (|E| <= 20).
inline int nu(const Hypergraph& h) {
  const int m = static_cast<int>(h.edge_count());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (std::popcount(s) <= best) continue;
    std::uint64_t used = 0;
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      if (!((s >> e) & 1u)) continue;
      const std::uint64_t em = edge_mask(h.edge(e));
      ok = (used & em) == 0;
      used |= em;
    }
    if (ok) best = std::popcount(s);
  }
  return best;
}

// Fewest edges covering every vertex; -1 if impossible (|E| <= 20).
inline int rho(const Hypergraph& h) {
  const int m = static_cast<int>(h.edge_count());
  const std::uint64_t all = h.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << h.vertex_count()) - 1;
  int best = -1;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (best != -1 && std::popcount(s) >= best) continue;
    std::uint64_t used = 0;
    for (int e = 0; e < m; ++e) {
      if ((s >> e) & 1u) used |= edge_mask(h.edge(e));
    }
    if (used == all) best = std::popcount(s);
  }
  return best;
}

// Largest vertex set meeting every edge at most once (|V| <= 20).
inline int alpha_prime(const Hypergraph& h) {
  const int n = static_cast<int>(h.vertex_count());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) <= best) continue;
    bool ok = true;
    for (const Edge& e : h.edges()) ok = ok && std::popcount(edge_mask(e) & s) <= 1;
    if (ok) best = std::popcount(s);
  }
  return best;
}

// Largest vertex set containing no edge (|V| <= 20).
inline int alpha(const Hypergraph& h) {
  const int n = static_cast<int>(h.vertex_count());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) <= best) continue;
    bool ok = true;
    for (const Edge& e : h.edges()) ok = ok && (edge_mask(e) & ~static_cast<std::uint64_t>(s)) != 0;
    if (ok) best = std::popcount(s);
  }
  return best;
}

// Maximum matching size of a simple graph by recursion on the lowest
// unmatched vertex (n <= 14).
inline int matching_size(const SimpleGraph& g) {
  const int n = g.n();
  auto rec = [&](auto&& self, std::uint32_t used) -> int {
    int v = 0;
    while (v < n && ((used >> v) & 1u)) ++v;
    if (v == n) return 0;
    int best = self(self, used | (1u << v));
    for (int w : g.neighbors(v)) {
      if (!((used >> w) & 1u)) best = std::max(best, 1 + self(self, used | (1u << v) | (1u << w)));
    }
    return best;
  };
  return rec(rec, 0);
}

inline int independence_number(const SimpleGraph& g) {
  const int n = g.n();
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) <= best) continue;
    bool ok = true;
    for (auto [a, b] : g.edges()) ok = ok && !(((s >> a) & 1u) && ((s >> b) & 1u));
    if (ok) best = std::popcount(s);
  }
  return best;
}

// Components by direct search, as (color, sorted vertices), all colors.
inline std::vector<std::pair<Color, std::vector<VertexId>>> components(const ColoredCompleteGraph& g) {
  std::vector<std::pair<Color, std::vector<VertexId>>> out;
  for (Color c = 1; c <= g.r(); ++c) {
    std::vector<char> seen(g.n(), 0);
    for (VertexId s = 0; s < g.n(); ++s) {
      if (seen[s]) continue;
      std::vector<VertexId> comp, stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (VertexId w = 0; w < g.n(); ++w) {
          if (!seen[w] && w != v && g.colors(v, w).contains(c)) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.emplace_back(c, comp);
    }
  }
  return out;
}

// Fewest components covering every vertex, by subsets of increasing size.
inline int min_component_cover(const ColoredCompleteGraph& g) {
  std::vector<std::uint64_t> masks;
  for (const auto& [c, comp] : components(g)) masks.push_back(edge_mask(comp));
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  const std::uint64_t all = (std::uint64_t{1} << g.n()) - 1;
  for (int k = 1;; ++k) {
    std::vector<int> pick(k);
    auto rec = [&](auto&& self, int depth, int from, std::uint64_t covered) -> bool {
      if (depth == k) return covered == all;
      for (int i = from; i < static_cast<int>(masks.size()); ++i) {
        if (self(self, depth + 1, i + 1, covered | masks[i])) return true;
      }
      return false;
    };
    if (rec(rec, 0, 0, 0)) return k;
  }
}

// Best coverage by one component from each of r - 1 distinct colors, over
// every omitted color and every tuple.
inline int max_partial_cover(const ColoredCompleteGraph& g) {
  std::vector<std::vector<std::uint64_t>> by_color(g.r() + 1);
  for (const auto& [c, comp] : components(g)) by_color[c].push_back(edge_mask(comp));
  int best = 0;
  for (Color omit = 1; omit <= g.r(); ++omit) {
    std::vector<Color> colors;
    for (Color c = 1; c <= g.r(); ++c) {
      if (c != omit) colors.push_back(c);
    }
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t covered) -> void {
      if (i == colors.size()) {
        best = std::max(best, std::popcount(covered));
        return;
      }
      for (std::uint64_t m : by_color[colors[i]]) self(self, i + 1, covered | m);
    };
    rec(rec, 0, 0);
  }
  return best;
}

// True iff i ∈ col(uv) ∩ col(vw) ⇒ i ∈ col(uw) for all triples.
inline bool transitive(const ColoredCompleteGraph& g) {
  for (VertexId u = 0; u < g.n(); ++u) {
    for (VertexId v = 0; v < g.n(); ++v) {
      for (VertexId w = 0; w < g.n(); ++w) {
        if (u == v || v == w || u == w) continue;
        if (!(g.colors(u, v) & g.colors(v, w)).subset_of(g.colors(u, w))) return false;
      }
    }
  }
  return true;
}

}  // namespace ref
