#include "ryser/oracles.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "ryser/error.hpp"
#include "ryser/graph_algorithms.hpp"

namespace ryser {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

void check_limits(const Hypergraph& h, const OracleLimits& limits) {
  const std::size_t vmax = std::min<std::size_t>(limits.max_vertices, 64);
  const std::size_t emax = std::min<std::size_t>(limits.max_edges, 64);
  if (h.vertex_count() > vmax) {
    throw LimitExceeded("hypergraph has " + std::to_string(h.vertex_count()) + " vertices; limit max_vertices=" +
                        std::to_string(vmax));
  }
  if (h.edge_count() > emax) {
    throw LimitExceeded("hypergraph has " + std::to_string(h.edge_count()) + " edges; limit max_edges=" +
                        std::to_string(emax));
  }
}

// Per-vertex masks of incident edges and per-edge masks of vertices.
struct Incidence {
  std::vector<Mask> star;
  std::vector<Mask> members;
};

Incidence incidence(const Hypergraph& h) {
  Incidence inc{std::vector<Mask>(h.vertex_count(), 0), std::vector<Mask>(h.edge_count(), 0)};
  for (EdgeId e = 0; e < static_cast<EdgeId>(h.edge_count()); ++e) {
    for (VertexId v : h.edge(e)) {
      inc.star[v] |= bit(e);
      inc.members[e] |= bit(v);
    }
  }
  return inc;
}

// Branch and bound for a minimum transversal. Branches on the vertices of an
// uncovered edge that holds the vertex of largest uncovered degree; earlier
// siblings are forbidden in later branches. A greedy set of disjoint
// uncovered edges is the lower bound.
class TransversalSearch {
 public:
  explicit TransversalSearch(const Hypergraph& h) : inc_(incidence(h)), all_edges_(low_bits(h.edge_count())) {}

  Mask solve() {
    greedy();
    std::vector<int> chosen;
    search(0, 0, chosen);
    Mask out = 0;
    for (int v : best_) out |= bit(v);
    return out;
  }

 private:
  void greedy() {
    Mask covered = 0;
    best_.clear();
    while (covered != all_edges_) {
      int pick = -1;
      int gain = -1;
      for (std::size_t v = 0; v < inc_.star.size(); ++v) {
        int g = std::popcount(inc_.star[v] & ~covered);
        if (g > gain) {
          gain = g;
          pick = static_cast<int>(v);
        }
      }
      best_.push_back(pick);
      covered |= inc_.star[pick];
    }
  }

  void search(Mask covered, Mask forbidden, std::vector<int>& chosen) {
    if (covered == all_edges_) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    const Mask uncovered = all_edges_ & ~covered;
    int lower = 0;
    Mask used = 0;
    for (Mask rest = uncovered; rest; rest &= rest - 1) {
      int e = std::countr_zero(rest);
      const Mask open = inc_.members[e] & ~forbidden;
      if (open == 0) return;
      if ((inc_.members[e] & used) == 0) {
        ++lower;
        used |= inc_.members[e];
      }
    }
    if (chosen.size() + lower >= best_.size()) return;

    int top_vertex = -1;
    int top_degree = -1;
    for (std::size_t v = 0; v < inc_.star.size(); ++v) {
      if ((forbidden >> v) & 1) continue;
      int d = std::popcount(inc_.star[v] & uncovered);
      if (d > top_degree) {
        top_degree = d;
        top_vertex = static_cast<int>(v);
      }
    }
    const int edge = std::countr_zero(inc_.star[top_vertex] & uncovered);
    std::vector<int> branch;
    for (Mask rest = inc_.members[edge] & ~forbidden; rest; rest &= rest - 1) branch.push_back(std::countr_zero(rest));
    std::stable_sort(branch.begin(), branch.end(), [&](int a, int b) {
      return std::popcount(inc_.star[a] & uncovered) > std::popcount(inc_.star[b] & uncovered);
    });
    Mask excluded = forbidden;
    for (int v : branch) {
      chosen.push_back(v);
      search(covered | inc_.star[v], excluded, chosen);
      chosen.pop_back();
      excluded |= bit(v);
    }
  }

  Incidence inc_;
  Mask all_edges_;
  std::vector<int> best_;
};

// Branch and bound for a minimum edge cover of the vertex set.
class EdgeCoverSearch {
 public:
  EdgeCoverSearch(const Incidence& inc, std::size_t n) : inc_(inc), all_(low_bits(n)) {
    for (Mask m : inc_.members) widest_ = std::max(widest_, std::popcount(m));
  }

  int solve() {
    Mask covered = 0;
    best_ = 0;
    while (covered != all_) {
      int pick = 0;
      int gain = -1;
      for (std::size_t e = 0; e < inc_.members.size(); ++e) {
        int g = std::popcount(inc_.members[e] & ~covered);
        if (g > gain) {
          gain = g;
          pick = static_cast<int>(e);
        }
      }
      covered |= inc_.members[pick];
      ++best_;
    }
    search(0, 0);
    return best_;
  }

 private:
  void search(Mask covered, int used) {
    if (covered == all_) {
      best_ = std::min(best_, used);
      return;
    }
    const int missing = std::popcount(all_ & ~covered);
    if (used + (missing + widest_ - 1) / widest_ >= best_) return;
    int pivot = -1;
    int options = 1 << 30;
    for (Mask rest = all_ & ~covered; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      int o = std::popcount(inc_.star[v]);
      if (o < options) {
        options = o;
        pivot = v;
      }
    }
    std::vector<int> branch;
    for (Mask rest = inc_.star[pivot]; rest; rest &= rest - 1) branch.push_back(std::countr_zero(rest));
    std::stable_sort(branch.begin(), branch.end(), [&](int a, int b) {
      return std::popcount(inc_.members[a] & ~covered) > std::popcount(inc_.members[b] & ~covered);
    });
    for (int e : branch) search(covered | inc_.members[e], used + 1);
  }

  const Incidence& inc_;
  Mask all_;
  int widest_ = 1;
  int best_ = 0;
};

std::vector<Mask> edge_conflicts(const Incidence& inc) {
  std::vector<Mask> out(inc.members.size(), 0);
  for (std::size_t e = 0; e < inc.members.size(); ++e) {
    for (std::size_t f = 0; f < inc.members.size(); ++f) {
      if (e != f && (inc.members[e] & inc.members[f])) out[e] |= bit(static_cast<int>(f));
    }
  }
  return out;
}

}  // namespace

std::vector<VertexId> minimum_vertex_cover(const Hypergraph& h, const OracleLimits& limits) {
  check_limits(h, limits);
  for (EdgeId e = 0; e < static_cast<EdgeId>(h.edge_count()); ++e) {
    if (h.edge(e).empty()) throw PreconditionError("empty edge " + std::to_string(e) + " cannot be covered");
  }
  Mask cover = TransversalSearch(h).solve();
  std::vector<VertexId> out;
  for (; cover; cover &= cover - 1) out.push_back(std::countr_zero(cover));
  return out;
}

int vertex_cover_number(const Hypergraph& h, const OracleLimits& limits) {
  return static_cast<int>(minimum_vertex_cover(h, limits).size());
}

int vertex_cover_number_by_enumeration(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  if (n > 20) throw LimitExceeded("subset enumeration is limited to 20 vertices");
  if (h.edge_count() > 64) throw LimitExceeded("subset enumeration is limited to 64 edges");
  const Incidence inc = incidence(h);
  const Mask all_edges = low_bits(h.edge_count());
  for (std::size_t k = 0; k <= n; ++k) {
    if (k == 0) {
      if (all_edges == 0) return 0;
      continue;
    }
    // Gosper's hack over k-subsets of an n-set.
    std::uint32_t subset = (std::uint32_t{1} << k) - 1;
    const std::uint32_t limit = std::uint32_t{1} << n;
    while (subset < limit) {
      Mask covered = 0;
      for (std::uint32_t rest = subset; rest; rest &= rest - 1) covered |= inc.star[std::countr_zero(rest)];
      if (covered == all_edges) return static_cast<int>(k);
      std::uint32_t low = subset & (~subset + 1);
      std::uint32_t ripple = subset + low;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
    }
  }
  throw PreconditionError("no vertex cover exists (empty edge)");
}

int matching_number(const Hypergraph& h, const OracleLimits& limits) {
  check_limits(h, limits);
  return std::popcount(maximum_independent_set_mask(edge_conflicts(incidence(h))));
}

std::optional<int> edge_cover_number(const Hypergraph& h, const OracleLimits& limits) {
  check_limits(h, limits);
  const Incidence inc = incidence(h);
  for (Mask s : inc.star) {
    if (s == 0) return std::nullopt;
  }
  if (h.vertex_count() == 0) return 0;
  return EdgeCoverSearch(inc, h.vertex_count()).solve();
}

int strong_independence_number(const Hypergraph& h, const OracleLimits& limits) {
  check_limits(h, limits);
  const Incidence inc = incidence(h);
  std::vector<Mask> neighbors(h.vertex_count(), 0);
  for (VertexId v = 0; v < static_cast<VertexId>(h.vertex_count()); ++v) {
    for (Mask rest = inc.star[v]; rest; rest &= rest - 1) neighbors[v] |= inc.members[std::countr_zero(rest)];
    neighbors[v] &= ~bit(v);
  }
  return std::popcount(maximum_independent_set_mask(neighbors));
}

HypergraphParams parameters_exact(const Hypergraph& h, const OracleLimits& limits) {
  check_limits(h, limits);
  HypergraphParams p;
  p.tau = vertex_cover_number(h, limits);
  p.nu = matching_number(h, limits);
  p.rho = edge_cover_number(h, limits);
  p.delta = static_cast<int>(h.max_degree());
  // X contains no edge iff V - X meets every edge.
  p.alpha = static_cast<int>(h.vertex_count()) - p.tau;
  p.alpha_prime = strong_independence_number(h, limits);
  p.t_level = h.edge_count() == 0 ? 0 : intersection_level(h);
  return p;
}

namespace {

struct Candidate {
  Color color;
  int first;  // smallest vertex
  Mask vertices;
};

std::vector<VertexId> to_vertices(Mask m) {
  std::vector<VertexId> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Mask to_mask(const std::vector<VertexId>& vertices) {
  Mask m = 0;
  for (VertexId v : vertices) m |= bit(v);
  return m;
}

class SetCoverSearch {
 public:
  SetCoverSearch(std::vector<Candidate> candidates, Mask all) : candidates_(std::move(candidates)), all_(all) {
    for (const auto& c : candidates_) widest_ = std::max(widest_, std::popcount(c.vertices));
  }

  std::vector<int> solve() {
    Mask covered = 0;
    while (covered != all_) {
      int pick = 0;
      int gain = -1;
      for (std::size_t i = 0; i < candidates_.size(); ++i) {
        int g = std::popcount(candidates_[i].vertices & ~covered);
        if (g > gain) {
          gain = g;
          pick = static_cast<int>(i);
        }
      }
      best_.push_back(pick);
      covered |= candidates_[pick].vertices;
    }
    std::vector<int> chosen;
    search(0, chosen);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void search(Mask covered, std::vector<int>& chosen) {
    if (covered == all_) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    const int missing = std::popcount(all_ & ~covered);
    if (chosen.size() + (missing + widest_ - 1) / widest_ >= best_.size()) return;
    int pivot = -1;
    int options = 1 << 30;
    for (Mask rest = all_ & ~covered; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      int o = 0;
      for (const auto& c : candidates_) o += (c.vertices >> v) & 1;
      if (o < options) {
        options = o;
        pivot = v;
      }
    }
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      if (!((candidates_[i].vertices >> pivot) & 1)) continue;
      chosen.push_back(static_cast<int>(i));
      search(covered | candidates_[i].vertices, chosen);
      chosen.pop_back();
    }
  }

  std::vector<Candidate> candidates_;
  Mask all_;
  int widest_ = 1;
  std::vector<int> best_;
};

}  // namespace

ComponentCover min_component_cover(const ColoredCompleteGraph& g, const OracleLimits& limits) {
  if (g.n() > 64) throw LimitExceeded("min_component_cover is limited to 64 vertices");
  if (g.n() == 0) return {};
  std::vector<Candidate> all;
  for (Color c = 1; c <= g.r(); ++c) {
    for (const auto& comp : g.components().components(c)) all.push_back({c, comp.front(), to_mask(comp)});
  }
  // Candidates are already ordered by (color, smallest vertex); keep the
  // first of equal vertex sets and drop strict subsets.
  std::vector<Candidate> kept;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < all.size() && !dominated; ++j) {
      if (i == j) continue;
      const Mask a = all[i].vertices;
      const Mask b = all[j].vertices;
      if ((a & ~b) == 0 && (a != b || j < i)) dominated = true;
    }
    if (!dominated) kept.push_back(all[i]);
  }
  if (kept.size() > limits.max_components) {
    throw LimitExceeded(std::to_string(kept.size()) + " maximal components; limit max_components=" +
                        std::to_string(limits.max_components));
  }
  std::vector<int> picks = SetCoverSearch(kept, low_bits(g.n())).solve();
  std::vector<CoverPart> parts;
  for (int i : picks) parts.push_back({kept[i].color, to_vertices(kept[i].vertices)});
  return make_cover(std::move(parts));
}

PartialCoverOptimum max_partial_cover_distinct(const ColoredCompleteGraph& g, const OracleLimits& limits) {
  if (g.r() < 2) throw PreconditionError("partial covers need r >= 2");
  if (g.n() > 64) throw LimitExceeded("max_partial_cover_distinct is limited to 64 vertices");
  if (g.n() == 0) return {};
  const int r = g.r();
  std::vector<std::vector<Mask>> comps(r + 1);
  std::vector<int> widest(r + 1, 0);
  for (Color c = 1; c <= r; ++c) {
    for (const auto& comp : g.components().components(c)) {
      comps[c].push_back(to_mask(comp));
      widest[c] = std::max(widest[c], static_cast<int>(comp.size()));
    }
  }
  for (Color omitted = 1; omitted <= r; ++omitted) {
    std::uint64_t product = 1;
    for (Color c = 1; c <= r; ++c) {
      if (c == omitted) continue;
      product *= comps[c].size();
      if (product > limits.max_tuples) {
        throw LimitExceeded("more than max_tuples=" + std::to_string(limits.max_tuples) + " component tuples");
      }
    }
  }

  int best = -1;
  Color best_omitted = 0;
  std::vector<int> best_pick;
  std::vector<int> pick;
  std::vector<Color> order;

  auto dfs = [&](auto&& self, std::size_t depth, Mask covered) -> void {
    const int now = std::popcount(covered);
    if (depth == order.size()) {
      if (now > best) {
        best = now;
        best_pick = pick;
        best_omitted = 0;
      }
      return;
    }
    int optimistic = now;
    for (std::size_t k = depth; k < order.size(); ++k) optimistic += widest[order[k]];
    if (optimistic <= best || best == g.n()) return;
    for (std::size_t i = 0; i < comps[order[depth]].size(); ++i) {
      pick.push_back(static_cast<int>(i));
      self(self, depth + 1, covered | comps[order[depth]][i]);
      pick.pop_back();
    }
  };

  std::vector<Color> best_order;
  for (Color omitted = 1; omitted <= r; ++omitted) {
    order.clear();
    for (Color c = 1; c <= r; ++c) {
      if (c != omitted) order.push_back(c);
    }
    const int before = best;
    dfs(dfs, 0, 0);
    if (best > before) {
      best_omitted = omitted;
      best_order = order;
    }
  }

  PartialCoverOptimum out;
  out.omitted_color = best_omitted;
  out.covered = static_cast<std::size_t>(best);
  std::vector<CoverPart> parts;
  Mask common = low_bits(g.n());
  for (std::size_t k = 0; k < best_order.size(); ++k) {
    Mask m = comps[best_order[k]][best_pick[k]];
    common &= m;
    parts.push_back({best_order[k], to_vertices(m)});
  }
  std::optional<VertexId> common_vertex;
  if (common) common_vertex = std::countr_zero(common);
  out.cover = make_cover(std::move(parts), common_vertex);
  return out;
}

}  // namespace ryser
