#include <doctest.h>

#include <map>

#include "reference.hpp"
#include "ryser/error.hpp"
#include "ryser/generators.hpp"
#include "ryser/planes.hpp"
#include "ryser/t_intersect_cover.hpp"
#include "support.hpp"

using namespace ryser;
using support::colored;

namespace {

ColoredCompleteGraph gyarfas_of(int r, int t, int m, int class_size, std::uint64_t seed, bool exact) {
  const Hypergraph h = gen_t_intersecting_hypergraph(r, t, m, class_size, seed, exact).hypergraph;
  return std::get<ColoredCompleteGraph>(gyarfas_graph(h));
}

// Every part is a whole component, the parts cover V and there are at most
// r - t of them.
void check_cover(const ColoredCompleteGraph& g, int t, const ComponentCover& cover) {
  CHECK(support::covers_all(cover, g.n()));
  CHECK(static_cast<int>(cover.size()) <= g.r() - t);
  for (const auto& p : cover.parts) CHECK(p.vertices == g.components().component_of(p.color, p.vertices.front()));
}

std::string first_step(const TCoverResult& res, const std::string& prefix) {
  for (const auto& s : res.trace) {
    if (s.rfind(prefix, 0) == 0) return s;
  }
  return {};
}

}  // namespace

TEST_CASE("base cases") {
  const auto one = colored(1, 3, [](int, int) { return ColorSet(); });
  CHECK(cover_t(one, 2).cover.size() == 1);
  const auto two = colored(2, 3, [](int, int) { return ColorSet::of({2, 3}); });
  const TCoverResult res = cover_t(two, 2);
  CHECK(res.cover.size() == 1);
  CHECK(res.cover.parts[0].color == 2);
  CHECK(res.trace.front() == "base n=2");
  CHECK(cover_t(colored(0, 3, [](int, int) { return ColorSet(); }), 1).cover.size() == 0);
}

TEST_CASE("full pairs are contracted first") {
  const auto g = colored(5, 3, [](int, int) { return ColorSet::range(3); });
  const TCoverResult res = cover_t(g, 1);
  CHECK(res.trace.front() == "contract 5 -> 1");
  CHECK(res.cover.size() == 1);
  CHECK(res.cover.covered_count == 5);
}

TEST_CASE("lemma plan with every pair at exactly t colors and r <= 2t") {
  // r = 5, t = 3: J is r - t = 2 colors of col(xy), giving two components.
  const auto g = gyarfas_of(5, 3, 6, 3, 11, true);
  REQUIRE(g.n() >= 3);
  const LemmaPlan plan = plan_lemma(g, 3, 0, 1);
  CHECK(plan.kind == LemmaKind::exact);
  CHECK_FALSE(plan.spread);
  CHECK(plan.j == 2);
  CHECK(plan.extra.subset_of(plan.pair_colors));
  CHECK(plan.part_count() == 2);
  check_cover(g, 3, lemma_cover(g, 3, 0, 1));
}

TEST_CASE("lemma plan for a pair strictly between t and r colors") {
  // r = 7, t = 2, l = 4: r > t + l, so J lies outside I with |J| = 0 and the
  // cover is the four components of I at x.
  const auto g = colored(2, 7, [](int, int) { return ColorSet::of({1, 2, 3, 4}); });
  const LemmaPlan plan = plan_lemma(g, 2, 0, 1);
  CHECK(plan.kind == LemmaKind::wide);
  CHECK(plan.ell == 4);
  CHECK(plan.spread);
  CHECK(plan.j == 0);
  CHECK(plan.part_count() == 4);
  CHECK(lemma_cover(g, 2, 0, 1).size() == 4);
}

TEST_CASE("wide pair with r <= t + l keeps J inside I") {
  const auto g = colored(2, 5, [](int, int) { return ColorSet::of({1, 2, 4}); });
  const LemmaPlan plan = plan_lemma(g, 2, 0, 1);
  CHECK(plan.kind == LemmaKind::wide);
  CHECK_FALSE(plan.spread);
  CHECK(plan.extra == ColorSet::of({1, 2, 4}));
  CHECK(plan.part_count() == 3);
}

TEST_CASE("lemma preconditions") {
  const auto g = colored(2, 3, [](int, int) { return ColorSet::range(3); });
  CHECK_THROWS_AS(plan_lemma(g, 1, 0, 1), PreconditionError);  // full pair
  CHECK_THROWS_AS(plan_lemma(g, 1, 0, 0), PreconditionError);
  const auto seven = colored(2, 7, [](int, int) { return ColorSet::of({1, 2}); });
  CHECK_THROWS_AS(plan_lemma(seven, 2, 0, 1), PreconditionError);  // exact-t needs r <= 4t - 2
  const auto mixed = colored(3, 4, [](int u, int v) { return u == 0 && v == 1 ? ColorSet::of({1, 2}) : ColorSet::of({1, 2, 3}); });
  CHECK_THROWS_AS(plan_lemma(mixed, 2, 0, 1), PreconditionError);  // not every pair has exactly t
}

TEST_CASE("triangle case 0 on the affine plane of order 2") {
  // Each pair of AG(2,2) carries one color and no triangle shares one.
  const auto g = blowup_graph(affine_plane(2), 1);
  const TCoverResult res = cover_t(g, 1);
  CHECK(first_step(res, "triangle") == "triangle case0 k=0 xyz=(0,1,2)");
  CHECK(res.cover.size() == 2);
  check_cover(g, 1, res.cover);
}

TEST_CASE("triangle case 0 fails loudly on a non-transitive pentagon coloring") {
  // K5 as two 5-cycles, colors 1 and 2: no triangle shares a color, n > r + 1.
  const auto g = colored(5, 3, [](int u, int v) { return (v - u == 1 || v - u == 4) ? ColorSet::single(1) : ColorSet::single(2); });
  const CommonTriangle tri = max_common_triangle(g);
  CHECK(tri.k == 0);
  CHECK_THROWS_AS(triangle_case_cover(g, 1, tri), HypothesisViolation);
  CHECK_THROWS_AS(cover_t(g, 1), PreconditionError);
}

TEST_CASE("triangle case 2 with r = 3") {
  // One monochromatic triangle. With a single color per pair no fourth vertex
  // fits transitively, since it would need three further colors.
  const auto g = support::from_partitions(3, {{0, 0, 0}, {0, 1, 2}, {0, 1, 2}});
  REQUIRE(g.is_transitive());
  const TCoverResult res = cover_t(g, 1);
  CHECK(first_step(res, "triangle").rfind("triangle case2 k=1", 0) == 0);
  check_cover(g, 1, res.cover);
}

TEST_CASE("triangle partitions follow the case rules") {
  std::map<int, int> seen;
  for (int i = 0; i < 150; ++i) {
    const int t = 1 + i % 3;
    const int r = 4 * t - 1;
    const auto g = gyarfas_of(r, t, 4 + (i / 3) % 12, 2 + i % 3, 500 + i, true);
    const Contraction c = contract_full_color_classes(g);
    if (c.graph.n() < 3) continue;
    const CommonTriangle tri = max_common_triangle(c.graph);
    const TrianglePartition p = plan_triangle_case(c.graph, t, tri);
    ++seen[p.case_id];
    CHECK(p.common.size() == tri.k);
    CHECK((p.common | p.x_side | p.y_side | p.z_side | p.spare) == c.graph.all_colors());
    CHECK(p.spare.size() == r - 3 * t + 2 * tri.k);
    if (p.case_id == 1) {
      CHECK(3 * tri.k <= t);
      CHECK(p.y_pick.size() + p.z_pick.size() == t + tri.k - 1);
    }
    if (p.case_id == 2) {
      CHECK(3 * tri.k > t);
      CHECK(p.x_pick.size() + p.y_pick.size() + p.z_pick.size() == std::min(2 * tri.k - 1, 3 * t - 3 * tri.k));
    }
    const ComponentCover cover = triangle_case_cover(c.graph, t, tri);
    check_cover(c.graph, t, cover);
  }
  CHECK(seen[0] > 0);
  CHECK(seen[1] > 0);
  CHECK(seen[2] > 0);
}

TEST_CASE("max common triangle agrees with the naive search") {
  for (int i = 0; i < 100; ++i) {
    const auto g = gen_transitive_colored(3 + i % 10, 2 + i % 6, 1, 900 + i);
    const CommonTriangle a = max_common_triangle(g);
    const CommonTriangle b = max_common_triangle_naive(g);
    CHECK(a.k == b.k);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    CHECK(a.z == b.z);
  }
  CHECK_THROWS_AS(max_common_triangle(colored(2, 2, [](int, int) { return ColorSet::single(1); })), PreconditionError);
}

TEST_CASE("cover_t preconditions") {
  const auto g = gen_transitive_colored(6, 4, 2, 3);
  CHECK_THROWS_AS(cover_t(g, 0), PreconditionError);
  CHECK_THROWS_AS(cover_t(g, 4), PreconditionError);
  CHECK_THROWS_AS(cover_t(g, 1), PreconditionError);  // 4t <= r
  CHECK_THROWS_AS(cover_t(g, 3), PreconditionError);  // pairs with two colors
  const auto path = colored(3, 2, [](int u, int v) { return u == 0 && v == 2 ? ColorSet::single(2) : ColorSet::single(1); });
  try {
    cover_t(path, 1);
    FAIL("no exception");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()) == "coloring is not transitive");
  }
}

TEST_CASE("cover_t on Gyarfas graphs of t-intersecting hypergraphs") {
  for (int i = 0; i < 300; ++i) {
    const int r = 2 + i % 10;
    const int t = r / 4 + 1 + (i / 10) % std::max(1, r - 1 - r / 4);
    if (t > r - 1) continue;
    const auto g = gyarfas_of(r, t, 3 + i % 14, 2 + i % 3, 40'000 + i, i % 2 == 0);
    const TCoverResult res = cover_t(g, t);
    check_cover(g, t, res.cover);
    CHECK(static_cast<int>(res.cover.size()) >= ref::min_component_cover(g));
  }
}

TEST_CASE("cover_t on random transitive colorings") {
  for (int i = 0; i < 300; ++i) {
    const int r = 2 + i % 9;
    const int t = std::min(r - 1, r / 4 + 1 + i % 3);
    const auto g = gen_transitive_colored(2 + i % 15, r, t, 50'000 + i, i % 4 == 0);
    const TCoverResult res = cover_t(g, t);
    check_cover(g, t, res.cover);
    CHECK_FALSE(res.trace.empty());
  }
}

TEST_CASE("a cover after deleting a color is a cover of the original") {
  // Colors above the deleted one shift down, so color c' of the smaller graph
  // is color c' or c' + 1 of the original, with the same components.
  int tried = 0;
  for (int i = 0; i < 200 && tried < 60; ++i) {
    const int r = 4 + i % 5;
    const int t = std::min(r - 1, r / 4 + 2);
    if (4 * (t - 1) <= r - 1) continue;
    const auto g = gen_transitive_colored(3 + i % 10, r, t, 70'000 + i);
    const Color del = 1 + static_cast<Color>(i % r);
    ColoredCompleteGraph d = g;
    try {
      d = delete_color(g, del);
    } catch (const PreconditionError&) {
      continue;
    }
    ++tried;
    const TCoverResult res = cover_t(d, t - 1);
    CHECK(static_cast<int>(res.cover.size()) <= r - t);
    std::vector<CoverPart> parts;
    for (const auto& p : res.cover.parts) {
      const Color orig = p.color < del ? p.color : p.color + 1;
      CHECK(p.vertices == g.components().component_of(orig, p.vertices.front()));
      parts.push_back({orig, p.vertices});
    }
    CHECK(support::covers_all(make_cover(parts), g.n()));
  }
  CHECK(tried >= 30);
}

TEST_CASE("a color on every pair gives one part") {
  // Color 1 spans, color 2 splits by parity.
  const auto g = support::from_partitions(2, {{0, 0, 0, 0, 0, 0}, {0, 1, 0, 1, 0, 1}});
  REQUIRE(g.is_transitive());
  const TCoverResult res = cover_t(g, 1);
  CHECK(res.cover.size() == 1);
  CHECK(res.cover.parts[0].color == 1);
}

TEST_CASE("max common triangle on uniform and rainbow colorings") {
  CHECK(max_common_triangle(colored(5, 3, [](int, int) { return ColorSet::of({1, 2}); })).k == 2);
  // Lines of AG(2,2) have two points, so no triangle is monochromatic.
  const CommonTriangle rainbow = max_common_triangle(blowup_graph(affine_plane(2), 1));
  CHECK(rainbow.k == 0);
  CHECK(rainbow.x == 0);
  CHECK(rainbow.y == 1);
  CHECK(rainbow.z == 2);
  // Lines of AG(2,3) have three points.
  CHECK(max_common_triangle(blowup_graph(affine_plane(3), 1)).k == 1);
}
