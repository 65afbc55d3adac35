#include <doctest.h>

#include "reference.hpp"
#include "ryser/error.hpp"
#include "ryser/isomorphism.hpp"
#include "ryser/oracles.hpp"
#include "ryser/partial_cover.hpp"
#include "ryser/planes.hpp"

using namespace ryser;

namespace {

bool has_violation(const ValidationReport& report, const std::string& prefix) {
  for (const auto& v : report) {
    if (v.invariant.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("field tables satisfy the field axioms") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const GaloisField f(q);
    CHECK(f.order() == q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      int negatives = 0, inverses = 0;
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        negatives += f.add(a, b) == 0;
        inverses += f.mul(a, b) == 1;
        for (int c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
      CHECK(negatives == 1);
      CHECK(inverses == (a == 0 ? 0 : 1));
    }
  }
}

TEST_CASE("unsupported orders") {
  for (int q : {0, 1, 6, 10, 11}) CHECK_FALSE(GaloisField::supported(q));
  try {
    affine_plane(6);
    FAIL("no exception");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("unsupported order") != std::string::npos);
  }
  CHECK_THROWS_AS(truncated_projective_plane(6), PreconditionError);
}

TEST_CASE("affine plane counts and axioms") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const AffinePlane a = affine_plane(q);
    CHECK(a.order == q);
    CHECK(a.point_count() == q * q);
    CHECK(static_cast<int>(a.lines.size()) == q * q + q);
    CHECK(static_cast<int>(a.parallel_classes.size()) == q + 1);
    for (const auto& cls : a.parallel_classes) CHECK(static_cast<int>(cls.size()) == q);
    for (const auto& line : a.lines) CHECK(static_cast<int>(line.size()) == q);
    CHECK(verify_affine_axioms(a.incidence(), q).empty());
  }
  const AffinePlane a2 = affine_plane(2);
  CHECK(a2.point_labels.front() == "(0,0)");
}

TEST_CASE("axiom violations are reported") {
  IncidenceStructure s = affine_plane(2).incidence();
  s.lines.pop_back();
  CHECK(has_violation(verify_affine_axioms(s, 2), "(i)"));

  IncidenceStructure lonely = affine_plane(3).incidence();
  lonely.point_count += 1;
  lonely.lines.push_back({lonely.point_count - 1});
  CHECK(has_violation(verify_affine_axioms(lonely, 3), "(iii)"));

  // AG(2,3) claimed to have order 2: parallel classes of three lines.
  CHECK(has_violation(verify_affine_axioms(affine_plane(3).incidence(), 2), "(v)"));
}

TEST_CASE("truncated projective planes") {
  for (int q : {2, 3, 4, 5}) {
    const Hypergraph h = truncated_projective_plane(q);
    CHECK(h.rank() == q + 1);
    CHECK(static_cast<int>(h.vertex_count()) == q * q + q);
    CHECK(static_cast<int>(h.edge_count()) == q * q);
    CHECK(validate(h).empty());
    CHECK(intersection_level(h) == 1);
  }
  const HypergraphParams p2 = parameters_exact(truncated_projective_plane(2));
  CHECK(p2.tau == 2);
  CHECK(p2.nu == 1);
  const Hypergraph h3 = truncated_projective_plane(3);
  CHECK(vertex_cover_number(h3) == 3);
  CHECK(ref::tau(h3) == 3);
  CHECK(matching_number(h3) == 1);
}

TEST_CASE("blowups") {
  const auto closure = transitive_closure(std::get<ColoredCompleteGraph>(gyarfas_graph(truncated_projective_plane(2))));
  CHECK(isomorphic(blowup_graph(affine_plane(2), 1), closure));
  // The Gyarfas graph of a truncated plane is the order-q affine plane.
  for (int q : {3, 4}) {
    const auto g = std::get<ColoredCompleteGraph>(gyarfas_graph(truncated_projective_plane(q)));
    CHECK(isomorphic(g, blowup_graph(affine_plane(q), 1)));
  }

  const auto b2 = blowup_graph(affine_plane(2), 2);
  CHECK(b2.n() == 8);
  CHECK(b2.is_transitive());
  for (Color c = 1; c <= 3; ++c) CHECK(b2.components().count(c) == 2);
  for (Color i = 1; i <= 3; ++i) {
    for (Color j = i + 1; j <= 3; ++j) {
      for (const auto& ci : b2.components().components(i)) {
        for (const auto& cj : b2.components().components(j)) {
          std::vector<VertexId> common;
          std::set_intersection(ci.begin(), ci.end(), cj.begin(), cj.end(), std::back_inserter(common));
          CHECK(common.size() == 2);
        }
      }
    }
  }
  const BlowupMap map = blowup_map(affine_plane(2), 2);
  CHECK(map.point_of == std::vector<int>{0, 0, 1, 1, 2, 2, 3, 3});
  CHECK(b2.colors(0, 1) == ColorSet::range(3));
  CHECK(b2.colors(0, 2).size() == 1);
  CHECK_THROWS_AS(blowup_graph(affine_plane(2), 0), PreconditionError);
}

TEST_CASE("line colors follow the parallel classes") {
  const AffinePlane a = affine_plane(3);
  const auto colors = a.line_colors();
  REQUIRE(colors.size() == a.lines.size());
  for (std::size_t c = 0; c < a.parallel_classes.size(); ++c) {
    for (int l : a.parallel_classes[c]) CHECK(colors[l] == static_cast<Color>(c + 1));
  }
}
