#include "ryser/graph_algorithms.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "ryser/error.hpp"

namespace ryser {

void SimpleGraph::add_edge(int u, int v) {
  if (u == v || has_edge(u, v)) return;
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  std::sort(adjacency_[u].begin(), adjacency_[u].end());
  std::sort(adjacency_[v].begin(), adjacency_[v].end());
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

bool SimpleGraph::has_edge(int u, int v) const {
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

int SimpleGraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<std::vector<int>> SimpleGraph::connected_components() const {
  std::vector<int> seen(n(), 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n(); ++s) {
    if (seen[s]) continue;
    auto& comp = out.emplace_back();
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : adjacency_[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
  }
  return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const {
  std::vector<int> local(n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  SimpleGraph out(static_cast<int>(vertices.size()));
  for (const auto& [u, v] : edges_) {
    if (local[u] >= 0 && local[v] >= 0) out.add_edge(local[u], local[v]);
  }
  return out;
}

namespace {

class Blossom {
 public:
  explicit Blossom(const SimpleGraph& g) : g_(g), n_(g.n()), match_(n_, -1) {}

  std::vector<GraphEdge> run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int end = find_path(v);
      while (end != -1) {
        int pv = parent_[end];
        int next = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = next;
      }
    }
    std::vector<GraphEdge> out;
    for (int v = 0; v < n_; ++v) {
      if (match_[v] > v) out.emplace_back(v, match_[v]);
    }
    return out;
  }

 private:
  int lowest_common_ancestor(int a, int b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(n_, 0);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int cur = lowest_common_ancestor(v, to);
          in_blossom_.assign(n_, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const SimpleGraph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

}  // namespace

std::vector<GraphEdge> maximum_matching(const SimpleGraph& g) { return Blossom(g).run(); }

std::vector<GraphEdge> bipartite_matching(const SimpleGraph& g, const std::vector<int>& left,
                                          const std::vector<int>& right) {
  std::vector<char> is_right(g.n(), 0);
  for (int v : right) is_right[v] = 1;
  std::vector<int> mate(g.n(), -1);
  std::vector<char> visited;

  auto augment = [&](auto&& self, int v) -> bool {
    for (int u : g.neighbors(v)) {
      if (!is_right[u] || visited[u]) continue;
      visited[u] = 1;
      if (mate[u] == -1 || self(self, mate[u])) {
        mate[u] = v;
        mate[v] = u;
        return true;
      }
    }
    return false;
  };
  for (int v : left) {
    visited.assign(g.n(), 0);
    augment(augment, v);
  }
  std::vector<GraphEdge> out;
  for (int v : left) {
    if (mate[v] != -1) out.emplace_back(std::min(v, mate[v]), std::max(v, mate[v]));
  }
  return out;
}

namespace {

struct IndependentSetSearch {
  const std::vector<std::uint64_t>& neighbors;
  std::uint64_t best = 0;
  int best_size = 0;

  // Greedy partition of `candidates` into cliques; the count bounds the
  // independent set that can still be added.
  int clique_cover_bound(std::uint64_t candidates) const {
    int cliques = 0;
    while (candidates) {
      int v = std::countr_zero(candidates);
      std::uint64_t clique_room = neighbors[v] & candidates;
      candidates &= ~(std::uint64_t{1} << v);
      while (clique_room) {
        int u = std::countr_zero(clique_room);
        candidates &= ~(std::uint64_t{1} << u);
        clique_room &= neighbors[u] & ~(std::uint64_t{1} << u);
      }
      ++cliques;
    }
    return cliques;
  }

  void search(std::uint64_t chosen, int chosen_size, std::uint64_t candidates) {
    // Vertices of degree <= 1 inside the candidates belong to some maximum
    // independent set, so take them without branching.
    bool reduced = true;
    while (reduced) {
      reduced = false;
      for (std::uint64_t rest = candidates; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        if (!((candidates >> v) & 1)) continue;
        if (std::popcount(neighbors[v] & candidates) <= 1) {
          chosen |= std::uint64_t{1} << v;
          ++chosen_size;
          candidates &= ~(neighbors[v] | (std::uint64_t{1} << v));
          reduced = true;
        }
      }
    }
    if (candidates == 0) {
      if (chosen_size > best_size) {
        best_size = chosen_size;
        best = chosen;
      }
      return;
    }
    if (chosen_size + clique_cover_bound(candidates) <= best_size) return;

    int pivot = -1;
    int pivot_degree = -1;
    for (std::uint64_t rest = candidates; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      int d = std::popcount(neighbors[v] & candidates);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    const std::uint64_t bit = std::uint64_t{1} << pivot;
    search(chosen | bit, chosen_size + 1, candidates & ~(neighbors[pivot] | bit));
    search(chosen, chosen_size, candidates & ~bit);
  }
};

}  // namespace

std::uint64_t maximum_independent_set_mask(const std::vector<std::uint64_t>& neighbors) {
  if (neighbors.size() > 64) throw LimitExceeded("independent set search is limited to 64 vertices");
  const std::uint64_t all = neighbors.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << neighbors.size()) - 1;
  IndependentSetSearch search{neighbors};
  search.search(0, 0, all);
  return search.best;
}

std::vector<int> maximum_independent_set(const SimpleGraph& g) {
  if (g.n() > 64) throw LimitExceeded("independent set search is limited to 64 vertices");
  std::vector<std::uint64_t> masks(g.n(), 0);
  for (const auto& [u, v] : g.edges()) {
    masks[u] |= std::uint64_t{1} << v;
    masks[v] |= std::uint64_t{1} << u;
  }
  std::uint64_t best = maximum_independent_set_mask(masks);
  std::vector<int> out;
  for (; best; best &= best - 1) out.push_back(std::countr_zero(best));
  return out;
}

}  // namespace ryser
