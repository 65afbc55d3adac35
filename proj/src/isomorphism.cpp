#include "ryser/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "ryser/error.hpp"

namespace ryser {

namespace {

// Joint color refinement over the disjoint union of a and b.
std::vector<int> refine(const LabeledGraph& a, const LabeledGraph& b) {
  const int na = static_cast<int>(a.labels.size());
  const int n = na + static_cast<int>(b.labels.size());
  auto neighbors = [&](int v) -> const std::vector<int>& {
    return v < na ? a.adjacency[v] : b.adjacency[v - na];
  };
  auto offset = [&](int v) { return v < na ? 0 : na; };

  std::vector<int> color(n);
  {
    std::map<int, int> ids;
    for (int v = 0; v < n; ++v) {
      int label = v < na ? a.labels[v] : b.labels[v - na];
      color[v] = ids.emplace(label, static_cast<int>(ids.size())).first->second;
    }
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> signature{color[v]};
      for (int u : neighbors(v)) signature.push_back(color[u + offset(v)]);
      std::sort(signature.begin() + 1, signature.end());
      next[v] = ids.emplace(std::move(signature), static_cast<int>(ids.size())).first->second;
    }
    color = std::move(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return color;
}

class Matcher {
 public:
  Matcher(const LabeledGraph& a, const LabeledGraph& b, std::vector<int> color, std::size_t budget)
      : a_(a), b_(b), n_(static_cast<int>(a.labels.size())), color_(std::move(color)), budget_(budget) {
    adj_a_ = matrix(a_);
    adj_b_ = matrix(b_);
    order_search();
  }

  std::optional<std::vector<int>> run() {
    map_.assign(n_, -1);
    used_.assign(n_, 0);
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static std::vector<std::vector<char>> matrix(const LabeledGraph& g) {
    const auto n = g.labels.size();
    std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
    for (std::size_t v = 0; v < n; ++v) {
      for (int u : g.adjacency[v]) m[v][u] = 1;
    }
    return m;
  }

  void order_search() {
    std::map<int, int> class_size;
    for (int v = 0; v < n_; ++v) ++class_size[color_[v]];
    std::vector<char> placed(n_, 0);
    std::vector<int> mapped_neighbors(n_, 0);
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (best == -1 || mapped_neighbors[v] > mapped_neighbors[best] ||
            (mapped_neighbors[v] == mapped_neighbors[best] && class_size[color_[v]] < class_size[color_[best]])) {
          best = v;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
      for (int u : a_.adjacency[best]) ++mapped_neighbors[u];
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (++expanded_ > budget_) throw LimitExceeded("isomorphism search exceeded its node budget");
    const int v = order_[depth];
    for (int w = 0; w < n_; ++w) {
      if (used_[w] || color_[n_ + w] != color_[v]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        int u = order_[k];
        consistent = adj_a_[v][u] == adj_b_[w][map_[u]];
      }
      if (!consistent) continue;
      map_[v] = w;
      used_[w] = 1;
      if (extend(depth + 1)) return true;
      used_[w] = 0;
      map_[v] = -1;
    }
    return false;
  }

  const LabeledGraph& a_;
  const LabeledGraph& b_;
  int n_;
  std::vector<int> color_;
  std::size_t budget_;
  std::size_t expanded_ = 0;
  std::vector<std::vector<char>> adj_a_, adj_b_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const LabeledGraph& a, const LabeledGraph& b,
                                                 std::size_t node_budget) {
  if (a.labels.size() != b.labels.size()) return std::nullopt;
  const int n = static_cast<int>(a.labels.size());
  std::vector<int> color = refine(a, b);
  std::map<int, int> histogram;
  for (int v = 0; v < n; ++v) ++histogram[color[v]];
  for (int v = 0; v < n; ++v) --histogram[color[n + v]];
  for (const auto& [c, count] : histogram) {
    if (count != 0) return std::nullopt;
  }
  return Matcher(a, b, std::move(color), node_budget).run();
}

LabeledGraph incidence_graph(const Hypergraph& h) {
  const int nv = static_cast<int>(h.vertex_count());
  const int ne = static_cast<int>(h.edge_count());
  LabeledGraph g;
  g.labels.assign(nv, 0);
  g.labels.resize(nv + ne, 1);
  g.adjacency.resize(nv + ne);
  for (EdgeId e = 0; e < ne; ++e) {
    const Edge& edge = h.edge(e);
    for (std::size_t i = 0; i < edge.size(); ++i) {
      if (i > 0 && edge[i] == edge[i - 1]) continue;
      g.adjacency[nv + e].push_back(edge[i]);
      g.adjacency[edge[i]].push_back(nv + e);
    }
  }
  return g;
}

LabeledGraph component_graph(const ColoredCompleteGraph& g, bool color_labels) {
  const int n = g.n();
  LabeledGraph out;
  out.labels.assign(n, 0);
  out.adjacency.resize(n);
  std::vector<int> color_node(g.r() + 1);
  for (Color c = 1; c <= g.r(); ++c) {
    color_node[c] = static_cast<int>(out.labels.size());
    out.labels.push_back(color_labels ? 1 + c : 1);
    out.adjacency.emplace_back();
  }
  for (Color c = 1; c <= g.r(); ++c) {
    for (const auto& comp : g.components().components(c)) {
      if (comp.size() < 2) continue;
      const int node = static_cast<int>(out.labels.size());
      out.labels.push_back(-1);
      out.adjacency.emplace_back();
      out.adjacency[node].push_back(color_node[c]);
      out.adjacency[color_node[c]].push_back(node);
      for (VertexId v : comp) {
        out.adjacency[node].push_back(v);
        out.adjacency[v].push_back(node);
      }
    }
  }
  return out;
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return find_isomorphism(incidence_graph(a), incidence_graph(b)).has_value();
}

bool isomorphic(const ColoredCompleteGraph& a, const ColoredCompleteGraph& b, bool permute_colors) {
  if (!a.is_transitive() || !b.is_transitive()) {
    throw PreconditionError("colored graph isomorphism needs transitive colorings");
  }
  if (a.n() != b.n() || a.r() != b.r()) return false;
  return find_isomorphism(component_graph(a, !permute_colors), component_graph(b, !permute_colors)).has_value();
}

}  // namespace ryser
