#include "ryser/delta2_cover.hpp"

#include <algorithm>

#include "ryser/error.hpp"

namespace ryser {

std::string to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::cycle:
      return "cycle";
    case ComponentKind::complete:
      return "complete";
    case ComponentKind::general:
      return "general";
  }
  return "general";
}

ComponentKind classify_component(const SimpleGraph& g, const std::vector<int>& vertices) {
  const int m = static_cast<int>(vertices.size());
  bool two_regular = m >= 3;
  bool complete = true;
  for (int v : vertices) {
    if (g.degree(v) != 2) two_regular = false;
    if (g.degree(v) != m - 1) complete = false;
  }
  if (two_regular) return ComponentKind::cycle;
  if (complete) return ComponentKind::complete;
  return ComponentKind::general;
}

DualReduction reduce_dual(const Hypergraph& dual) {
  const int n = static_cast<int>(dual.vertex_count());
  DualReduction red;
  red.graph = SimpleGraph(n);
  std::vector<char> in_pair(n, 0);
  for (EdgeId e = 0; e < static_cast<EdgeId>(dual.edge_count()); ++e) {
    const Edge& edge = dual.edge(e);
    if (edge.size() > 2) throw PreconditionError("not a Δ≤2 dual: edge " + std::to_string(e) + " has " +
                                                 std::to_string(edge.size()) + " vertices");
    if (edge.size() == 2) {
      const GraphEdge key{edge[0], edge[1]};
      red.graph.add_edge(key.first, key.second);
      red.edge_source.emplace(key, e);
      in_pair[edge[0]] = in_pair[edge[1]] = 1;
    }
  }
  std::vector<char> removed(n, 0);
  for (EdgeId e = 0; e < static_cast<EdgeId>(dual.edge_count()); ++e) {
    const Edge& edge = dual.edge(e);
    if (edge.size() != 1) continue;
    const VertexId v = edge[0];
    if (in_pair[v]) {
      red.absorbed.push_back(e);
    } else if (!removed[v]) {
      removed[v] = 1;
      red.removed_vertices.push_back(v);
      red.forced_cover.push_back(e);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (in_pair[v]) red.remaining.push_back(v);
  }
  for (const auto& comp : red.graph.connected_components()) {
    if (comp.size() == 1 && !in_pair[comp[0]]) continue;
    red.component_kinds.push_back(classify_component(red.graph, comp));
    red.components.push_back(comp);
  }
  return red;
}

namespace {

// Vertices of a cycle component in traversal order.
std::vector<int> cycle_order(const SimpleGraph& g, const std::vector<int>& vertices) {
  std::vector<int> order{vertices.front()};
  int previous = -1;
  while (true) {
    const int here = order.back();
    const auto& nb = g.neighbors(here);
    const int next = nb[0] != previous ? nb[0] : nb[1];
    if (next == order.front()) break;
    previous = here;
    order.push_back(next);
  }
  return order;
}

GraphEdge ordered(int u, int v) { return u < v ? GraphEdge{u, v} : GraphEdge{v, u}; }

}  // namespace

EdgeCoverResult edge_cover_graph(const SimpleGraph& g, int r) {
  EdgeCoverResult out;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) throw PreconditionError("isolated vertex " + std::to_string(v));
  }
  if (g.max_degree() > r) {
    throw PreconditionError("maximum degree " + std::to_string(g.max_degree()) + " exceeds r = " + std::to_string(r));
  }
  for (const auto& vertices : g.connected_components()) {
    GraphComponentCover part;
    part.vertices = vertices;
    part.kind = classify_component(g, vertices);
    const SimpleGraph local = g.induced(vertices);
    part.alpha = static_cast<int>(maximum_independent_set(local).size());
    const int m = static_cast<int>(vertices.size());

    if (part.kind == ComponentKind::cycle) {
      const std::vector<int> order = cycle_order(g, vertices);
      for (int i = 0; i + 1 < m; i += 2) part.edges.push_back(ordered(order[i], order[i + 1]));
      if (m % 2 == 1) part.edges.push_back(ordered(order[m - 1], order[0]));
    } else if (part.kind == ComponentKind::complete) {
      for (int i = 0; i + 1 < m; i += 2) part.edges.push_back(ordered(vertices[i], vertices[i + 1]));
      if (m % 2 == 1) part.edges.push_back(ordered(vertices[m - 1], vertices[0]));
    } else {
      const std::vector<int> independent = maximum_independent_set(local);
      std::vector<char> in_i(m, 0);
      for (int v : independent) in_i[v] = 1;
      std::vector<int> rest;
      for (int v = 0; v < m; ++v) {
        if (!in_i[v]) rest.push_back(v);
      }
      const SimpleGraph outside = local.induced(rest);
      std::vector<char> touched(m, 0);
      std::vector<GraphEdge> local_edges;
      for (auto [a, b] : maximum_matching(outside)) {
        local_edges.push_back(ordered(rest[a], rest[b]));
        touched[rest[a]] = touched[rest[b]] = 1;
      }
      // Y is independent: an edge inside it would extend M.
      std::vector<int> y;
      for (int v : rest) {
        if (!touched[v]) y.push_back(v);
      }
      const auto into_i = bipartite_matching(local, y, independent);
      if (into_i.size() != y.size()) {
        throw InternalError("internal invariant violated: " + std::to_string(y.size() - into_i.size()) +
                            " vertices of Y cannot be matched into I");
      }
      for (auto [a, b] : into_i) {
        local_edges.push_back(ordered(a, b));
        touched[a] = touched[b] = 1;
      }
      for (int v : independent) {
        if (!touched[v]) {
          local_edges.push_back(ordered(v, local.neighbors(v).front()));
          touched[v] = 1;
        }
      }
      for (auto [a, b] : local_edges) part.edges.push_back(ordered(vertices[a], vertices[b]));
    }

    if (static_cast<std::int64_t>(part.edges.size()) > static_cast<std::int64_t>(r - 1) * part.alpha) {
      throw InternalError("edge cover of a " + to_string(part.kind) + " component uses " +
                          std::to_string(part.edges.size()) + " edges, above (r-1) alpha = " +
                          std::to_string((r - 1) * part.alpha));
    }
    out.alpha += part.alpha;
    out.edges.insert(out.edges.end(), part.edges.begin(), part.edges.end());
    out.components.push_back(std::move(part));
  }
  std::vector<char> hit(g.n(), 0);
  for (auto [a, b] : out.edges) hit[a] = hit[b] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) throw InternalError("edge cover misses a vertex");
  return out;
}

Delta2Result ryser_delta2(const Hypergraph& h) {
  const int r = h.rank();
  if (r < 3) throw PreconditionError("rank must be at least 3");
  for (EdgeId e = 0; e < static_cast<EdgeId>(h.edge_count()); ++e) {
    const Edge& edge = h.edge(e);
    if (static_cast<int>(edge.size()) != r || std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw PreconditionError("edge " + h.edge_to_string(e) + " does not have " + std::to_string(r) +
                              " distinct vertices");
    }
  }
  if (h.max_degree() > 2) throw PreconditionError("maximum degree " + std::to_string(h.max_degree()) + " exceeds 2");

  Delta2Result out;
  const Hypergraph d = dual(h);
  out.reduction = reduce_dual(d);
  const DualReduction& red = out.reduction;

  std::vector<VertexId> cover;
  for (std::size_t i = 0; i < red.forced_cover.size(); ++i) {
    const VertexId v = red.forced_cover[i];
    cover.push_back(v);
    out.trace.push_back("forced " + h.name(v) + " for edge " + std::to_string(red.removed_vertices[i]));
  }

  const SimpleGraph rest = red.graph.induced(red.remaining);
  out.graph_cover = edge_cover_graph(rest, r);
  for (const auto& part : out.graph_cover.components) {
    std::string line = to_string(part.kind) + "(" + std::to_string(part.vertices.size()) + ") alpha=" +
                       std::to_string(part.alpha) + " edges=" + std::to_string(part.edges.size()) + " picks";
    for (auto [a, b] : part.edges) {
      const VertexId v = red.edge_source.at(ordered(red.remaining[a], red.remaining[b]));
      cover.push_back(v);
      line += " " + h.name(v);
    }
    out.trace.push_back(line);
  }
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  out.cover = std::move(cover);
  out.nu = static_cast<int>(red.forced_cover.size()) + out.graph_cover.alpha;
  out.bound = static_cast<std::int64_t>(r - 1) * out.nu;

  std::vector<char> in_cover(h.vertex_count(), 0);
  for (VertexId v : out.cover) in_cover[v] = 1;
  for (EdgeId e = 0; e < static_cast<EdgeId>(h.edge_count()); ++e) {
    const Edge& edge = h.edge(e);
    if (std::none_of(edge.begin(), edge.end(), [&](VertexId v) { return in_cover[v]; })) {
      throw InternalError("edge " + h.edge_to_string(e) + " is not covered");
    }
  }
  if (static_cast<std::int64_t>(out.cover.size()) > out.bound) {
    throw InternalError("cover of size " + std::to_string(out.cover.size()) + " exceeds (r-1) nu = " +
                        std::to_string(out.bound));
  }
  return out;
}

}  // namespace ryser
