#include "ryser/t_intersect_cover.hpp"

#include <algorithm>
#include <sstream>

#include "ryser/error.hpp"

namespace ryser {

namespace {

std::string set_text(ColorSet s) { return "{" + (s.empty() ? std::string() : s.to_string()) + "}"; }

bool all_pairs_have_exactly(const ColoredCompleteGraph& g, int t) {
  for (VertexId u = 0; u < g.n(); ++u) {
    for (VertexId v = u + 1; v < g.n(); ++v) {
      if (g.colors(u, v).size() != t) return false;
    }
  }
  return true;
}

ComponentCover union_of(const ColoredCompleteGraph& g,
                        std::initializer_list<std::pair<VertexId, ColorSet>> pieces) {
  std::vector<CoverPart> parts;
  for (const auto& [v, colors] : pieces) {
    for (auto& part : g.components_of(v, colors).parts) parts.push_back(std::move(part));
  }
  return make_cover(std::move(parts));
}

// Every vertex must be covered; otherwise the input broke a hypothesis.
void require_covered(const ColoredCompleteGraph& g, const ComponentCover& cover, std::vector<VertexId> anchors,
                     const std::string& stage, const std::string& extra = {}) {
  auto missing = cover.uncovered(g.n());
  if (missing.empty()) return;
  const VertexId w = missing.front();
  std::ostringstream msg;
  msg << "input violates hypothesis: " << stage << " leaves vertex " << w << " uncovered;";
  for (VertexId a : anchors) {
    if (a != w) msg << " col(" << a << "," << w << ")=" << set_text(g.colors(a, w));
  }
  if (!g.is_transitive()) msg << "; coloring is not transitive";
  msg << extra;
  throw HypothesisViolation(msg.str());
}

void check_hypotheses(const ColoredCompleteGraph& g, int t) {
  const int r = g.r();
  if (t < 1) throw PreconditionError("t must be at least 1");
  if (t > r - 1) throw PreconditionError("t must satisfy t <= r - 1 (t=" + std::to_string(t) + ", r=" +
                                         std::to_string(r) + ")");
  if (4 * t <= r) throw PreconditionError("t must exceed r/4 (t=" + std::to_string(t) + ", r=" +
                                          std::to_string(r) + ")");
  if (!g.is_transitive()) throw PreconditionError("coloring is not transitive");
  for (VertexId u = 0; u < g.n(); ++u) {
    for (VertexId v = u + 1; v < g.n(); ++v) {
      if (g.colors(u, v).size() < t) {
        throw PreconditionError("pair (" + std::to_string(u) + "," + std::to_string(v) + ") has fewer than t=" +
                                std::to_string(t) + " colors");
      }
    }
  }
}

ComponentCover cover_without_full_pairs(const ColoredCompleteGraph& g, int t, std::vector<std::string>& trace) {
  const int r = g.r();
  const int n = g.n();
  if (n <= 2) {
    trace.push_back("base n=" + std::to_string(n));
    if (n == 0) return {};
    if (n == 1) return make_cover({{1, {0}}});
    const Color c = g.colors(0, 1).min();
    return make_cover({{c, g.components().component_of(c, 0)}});
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (g.colors(u, v).size() > t) {
        LemmaPlan plan = plan_lemma(g, t, u, v);
        trace.push_back("wide x=" + std::to_string(u) + " y=" + std::to_string(v) + " I=" +
                        set_text(plan.pair_colors) + " J=" + set_text(plan.extra) +
                        (plan.spread ? " spread" : " inside"));
        return lemma_cover(g, t, u, v);
      }
    }
  }
  if (r <= 4 * t - 2) {
    LemmaPlan plan = plan_lemma(g, t, 0, 1);
    trace.push_back("exact x=0 y=1 I=" + set_text(plan.pair_colors) + " J=" + set_text(plan.extra) +
                    (plan.spread ? " spread" : " inside"));
    return lemma_cover(g, t, 0, 1);
  }
  const CommonTriangle triangle = max_common_triangle(g);
  const TrianglePartition partition = plan_triangle_case(g, t, triangle);
  trace.push_back("triangle case" + std::to_string(partition.case_id) + " k=" + std::to_string(triangle.k) +
                  " xyz=(" + std::to_string(triangle.x) + "," + std::to_string(triangle.y) + "," +
                  std::to_string(triangle.z) + ")");
  return triangle_case_cover(g, t, triangle);
}

ComponentCover cover_recursive(const ColoredCompleteGraph& g, int t, std::vector<std::string>& trace) {
  if (g.n() > 2) {
    Contraction contraction = contract_full_color_classes(g);
    if (contraction.graph.n() < g.n()) {
      trace.push_back("contract " + std::to_string(g.n()) + " -> " + std::to_string(contraction.graph.n()));
      return contraction.lift(cover_without_full_pairs(contraction.graph, t, trace));
    }
  }
  return cover_without_full_pairs(g, t, trace);
}

}  // namespace

TCoverResult cover_t(const ColoredCompleteGraph& g, int t) {
  check_hypotheses(g, t);
  TCoverResult result;
  result.cover = cover_recursive(g, t, result.trace);
  require_covered(g, result.cover, {}, "cover_t");
  if (static_cast<int>(result.cover.size()) > g.r() - t) {
    throw InternalError("cover_t produced " + std::to_string(result.cover.size()) + " parts, more than r - t = " +
                        std::to_string(g.r() - t));
  }
  return result;
}

LemmaPlan plan_lemma(const ColoredCompleteGraph& g, int t, VertexId x, VertexId y) {
  const int r = g.r();
  if (x == y || x < 0 || y < 0 || x >= g.n() || y >= g.n()) throw PreconditionError("lemma needs two distinct vertices");
  LemmaPlan plan;
  plan.x = x;
  plan.y = y;
  plan.pair_colors = g.colors(x, y);
  plan.ell = plan.pair_colors.size();
  const ColorSet outside = g.all_colors() - plan.pair_colors;

  if (plan.ell > t && plan.ell < r) {
    if (r < t + 1 || r > 4 * t - 1) throw PreconditionError("the wide pair case needs t + 1 <= r <= 4t - 1");
    plan.kind = LemmaKind::wide;
    if (r <= t + plan.ell) {
      plan.extra = plan.pair_colors.smallest(r - t);
    } else {
      plan.spread = true;
      plan.extra = outside.smallest((r - t - plan.ell) / 2);
    }
  } else if (plan.ell == t) {
    if (r < t + 1 || r > 4 * t - 2) throw PreconditionError("the exact-t case needs t + 1 <= r <= 4t - 2");
    if (!all_pairs_have_exactly(g, t)) throw PreconditionError("the exact-t case needs every pair to have exactly t colors");
    plan.kind = LemmaKind::exact;
    if (r <= 2 * t) {
      plan.extra = plan.pair_colors.smallest(r - t);
    } else {
      plan.spread = true;
      plan.extra = outside.smallest(std::max(0, r / 2 - t));
    }
  } else {
    throw PreconditionError("edge (" + std::to_string(x) + "," + std::to_string(y) + ") has " +
                            std::to_string(plan.ell) + " colors; the lemmas need t or strictly between t and r");
  }
  plan.j = plan.extra.size();
  return plan;
}

ComponentCover lemma_cover(const ColoredCompleteGraph& g, int t, VertexId x, VertexId y) {
  const LemmaPlan plan = plan_lemma(g, t, x, y);
  ComponentCover cover = plan.spread
                             ? union_of(g, {{x, plan.pair_colors}, {x, plan.extra}, {y, plan.extra}})
                             : union_of(g, {{x, plan.extra}});
  require_covered(g, cover, {x, y}, plan.kind == LemmaKind::exact ? "exact-t cover" : "wide pair cover");
  if (static_cast<int>(cover.size()) > g.r() - t) {
    throw InternalError("lemma cover has more than r - t parts");
  }
  return cover;
}

CommonTriangle max_common_triangle(const ColoredCompleteGraph& g) {
  CommonTriangle best;
  const int n = g.n();
  if (n < 3) throw PreconditionError("a triangle needs three vertices");
  best.k = -1;
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) {
      const ColorSet xy = g.colors(x, y);
      if (xy.size() <= best.k) continue;
      for (VertexId z = y + 1; z < n; ++z) {
        const int k = (xy & g.colors(y, z) & g.colors(x, z)).size();
        if (k > best.k) best = {k, x, y, z};
      }
    }
  }
  return best;
}

CommonTriangle max_common_triangle_naive(const ColoredCompleteGraph& g) {
  CommonTriangle best{-1, 0, 0, 0};
  const int n = g.n();
  if (n < 3) throw PreconditionError("a triangle needs three vertices");
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) {
      for (VertexId z = y + 1; z < n; ++z) {
        const auto a = g.colors(x, y).colors();
        const auto b = g.colors(y, z).colors();
        const auto c = g.colors(x, z).colors();
        std::vector<Color> ab;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ab));
        std::vector<Color> abc;
        std::set_intersection(ab.begin(), ab.end(), c.begin(), c.end(), std::back_inserter(abc));
        if (static_cast<int>(abc.size()) > best.k) best = {static_cast<int>(abc.size()), x, y, z};
      }
    }
  }
  return best;
}

TrianglePartition plan_triangle_case(const ColoredCompleteGraph& g, int t, const CommonTriangle& triangle) {
  const auto [k, x, y, z] = triangle;
  TrianglePartition p;
  p.triangle = triangle;
  p.common = g.colors(x, y) & g.colors(y, z) & g.colors(z, x);
  p.x_side = g.colors(y, z) - p.common;
  p.y_side = g.colors(x, z) - p.common;
  p.z_side = g.colors(x, y) - p.common;
  p.spare = g.all_colors() - (p.common | p.x_side | p.y_side | p.z_side);
  if (p.common.size() != k || p.x_side.size() != t - k || p.y_side.size() != t - k || p.z_side.size() != t - k) {
    throw HypothesisViolation("input violates hypothesis: triangle (" + std::to_string(x) + "," + std::to_string(y) +
                              "," + std::to_string(z) + ") does not have exactly t colors per side");
  }
  if (k == 0) {
    p.case_id = 0;
  } else if (3 * k <= t) {
    p.case_id = 1;
    const int need = t + k - 1;
    p.y_pick = p.y_side.smallest(need);
    p.z_pick = p.z_side.smallest(need - p.y_pick.size());
  } else {
    p.case_id = 2;
    const int need = std::min(2 * k - 1, 3 * t - 3 * k);
    p.x_pick = p.x_side.smallest(need);
    p.y_pick = p.y_side.smallest(need - p.x_pick.size());
    p.z_pick = p.z_side.smallest(need - p.x_pick.size() - p.y_pick.size());
  }
  return p;
}

ComponentCover triangle_case_cover(const ColoredCompleteGraph& g, int t, const CommonTriangle& triangle) {
  const int r = g.r();
  const int n = g.n();
  if (r != 4 * t - 1) throw PreconditionError("triangle case needs r = 4t - 1");
  if (!all_pairs_have_exactly(g, t)) throw PreconditionError("triangle case needs exactly t colors on every pair");
  const TrianglePartition p = plan_triangle_case(g, t, triangle);
  const auto [k, x, y, z] = triangle;

  ComponentCover cover;
  if (p.case_id == 0) {
    if (n > r + 1) {
      throw HypothesisViolation("input violates hypothesis: no triangle shares a color, yet n=" + std::to_string(n) +
                                " exceeds r + 1");
    }
    std::vector<CoverPart> parts;
    for (VertexId u = 0; u + 1 < n; u += 2) {
      const Color c = g.colors(u, u + 1).min();
      parts.push_back({c, g.components().component_of(c, u)});
    }
    if (n % 2 == 1) {
      const Color c = g.colors(n - 2, n - 1).min();
      parts.push_back({c, g.components().component_of(c, n - 1)});
    }
    cover = make_cover(std::move(parts));
  } else if (p.case_id == 1) {
    cover = union_of(g, {{x, p.common | p.y_side | p.z_side}, {y, p.y_pick}, {z, p.z_pick}});
  } else {
    cover = union_of(g, {{x, p.common | p.x_pick | p.y_side | p.z_side}, {y, p.y_pick}, {z, p.x_side | p.z_pick}});
  }

  std::string extra;
  if (auto missing = cover.uncovered(n); !missing.empty() && p.case_id != 0) {
    const VertexId w = missing.front();
    const int shared = (g.colors(y, w) & g.colors(z, w)).size();
    extra = "; |col(yw) ∩ col(zw)|=" + std::to_string(shared) + (shared > k ? " exceeds" : " within") + " k=" +
            std::to_string(k);
  }
  require_covered(g, cover, {x, y, z}, "triangle case " + std::to_string(p.case_id), extra);
  if (static_cast<int>(cover.size()) > r - t) throw InternalError("triangle cover has more than r - t parts");
  return cover;
}

}  // namespace ryser
