#include <doctest.h>

#include <sstream>

#include "reference.hpp"
#include "ryser/error.hpp"
#include "ryser/generators.hpp"
#include "ryser/hypergraph.hpp"
#include "ryser/isomorphism.hpp"
#include "ryser/planes.hpp"
#include "support.hpp"

using namespace ryser;
using support::hyp;

TEST_CASE("validate accepts a single partite edge") {
  const Hypergraph h = Hypergraph::from_names(3, {{"a", "b", "c"}}, {{{"a"}, {"b"}, {"c"}}});
  CHECK(validate(h).empty());
}

TEST_CASE("validate reports a short edge") {
  const Hypergraph h = hyp(3, {{"a", "b"}});
  const auto report = validate(h);
  REQUIRE(report.size() == 1);
  CHECK(report[0].invariant == "not r-uniform");
  CHECK(report[0].witness == "{a,b}");
}

TEST_CASE("validate reports two vertices of one class in an edge") {
  const Hypergraph h = Hypergraph::from_names(3, {{"a", "b", "c"}}, {{{"a", "b"}, {"c"}, {"d"}}});
  const auto report = validate(h);
  REQUIRE(report.size() == 1);
  CHECK(report[0].invariant == "not r-partite");
  CHECK(report[0].witness == "(a,b)");
}

TEST_CASE("validate reports overlapping classes and vertices outside classes") {
  const Hypergraph h = Hypergraph::from_names(2, {{"a", "x"}}, {{{"a"}, {"a"}}});
  const auto report = validate(h);
  std::vector<std::string> names;
  for (const auto& v : report) names.push_back(v.invariant);
  CHECK(std::find(names.begin(), names.end(), "classes overlap") != names.end());
  CHECK(std::find(names.begin(), names.end(), "edge vertex outside classes") != names.end());
}

TEST_CASE("repeated edges are separate instances") {
  const Hypergraph h = hyp(2, {{"a", "b"}, {"a", "b"}});
  CHECK(h.edge_count() == 2);
  CHECK(h.degree(0) == 2);
  CHECK(intersection_level(h) == 2);
}

TEST_CASE("dual of two disjoint triples") {
  const Hypergraph d = dual(hyp(3, {{"a", "b", "c"}, {"d", "e", "f"}}));
  CHECK(d.vertex_count() == 2);
  CHECK(d.edge_count() == 6);
  for (const Edge& e : d.edges()) CHECK(e.size() == 1);
  CHECK(d.name(0) == "e0");
}

TEST_CASE("dual degrees are edge sizes") {
  const Hypergraph h = truncated_projective_plane(2);
  const Hypergraph d = dual(h);
  CHECK(d.max_degree() == 3);
  for (VertexId v = 0; v < static_cast<VertexId>(d.vertex_count()); ++v) CHECK(d.degree(v) == 3);
  // Every vertex of the truncated Fano plane lies on at most two lines.
  CHECK(h.max_degree() == 2);
  for (const Edge& e : d.edges()) CHECK((e.size() == 1 || e.size() == 2));
}

TEST_CASE("dual of the empty hypergraph is empty") {
  const Hypergraph d = dual(Hypergraph(3, {}, {}));
  CHECK(d.vertex_count() == 0);
  CHECK(d.edge_count() == 0);
}

TEST_CASE("second dual is isomorphic to the original on random hypergraphs") {
  for (int i = 0; i < 50; ++i) {
    const int r = 2 + i % 3;
    const Hypergraph h = gen_t_intersecting_hypergraph(r, 1, 1 + i % 7, 2 + i % 3, 100 + i).hypergraph;
    CHECK(isomorphic(dual(dual(h)), h));
  }
}

TEST_CASE("isomorphism tells apart hypergraphs with equal degree sequences") {
  // Two triangles versus a hexagon, as 2-uniform hypergraphs.
  const Hypergraph two = hyp(2, {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "e"}, {"e", "f"}, {"f", "d"}});
  const Hypergraph six = hyp(2, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"f", "a"}});
  CHECK_FALSE(isomorphic(two, six));
  CHECK(isomorphic(six, hyp(2, {{"1", "3"}, {"3", "5"}, {"5", "2"}, {"2", "4"}, {"4", "6"}, {"6", "1"}})));
}

TEST_CASE("intersection level") {
  CHECK(intersection_level(hyp(4, {{"a", "b", "c", "d"}})) == 4);
  CHECK(intersection_level(hyp(4, {{"a", "b", "c", "d"}, {"a", "b", "x", "y"}})) == 2);
  CHECK(intersection_level(hyp(2, {{"a", "b"}, {"c", "d"}})) == 0);
  CHECK_THROWS_AS(intersection_level(Hypergraph(3, {}, {})), PreconditionError);
  for (int q : {2, 3, 4, 5}) CHECK(intersection_level(truncated_projective_plane(q)) == 1);
}

TEST_CASE("positive intersection level means every pair of edges meets") {
  for (int i = 0; i < 30; ++i) {
    const Hypergraph h = gen_t_intersecting_hypergraph(4, 1 + i % 3, 6, 3, 500 + i).hypergraph;
    if (intersection_level(h) < 1) continue;
    for (std::size_t a = 0; a < h.edge_count(); ++a) {
      for (std::size_t b = a + 1; b < h.edge_count(); ++b) {
        CHECK((ref::edge_mask(h.edge(a)) & ref::edge_mask(h.edge(b))) != 0);
      }
    }
  }
}

TEST_CASE("HGF round trip") {
  const std::string text =
      "# comment\n"
      "r 3\n"
      "class 1 a x\n"
      "class 2 b\n"
      "class 3 c\n"
      "edge a b c\n"
      "edge x b c  # trailing comment\n"
      "edge a b c\n";
  const Hypergraph h = parse_hgf_string(text);
  CHECK(h.rank() == 3);
  CHECK(h.edge_count() == 3);
  CHECK(h.has_classes());
  CHECK(validate(h).empty());
  const Hypergraph again = parse_hgf_string(to_hgf_string(h));
  CHECK(again.names() == h.names());
  CHECK(again.edges() == h.edges());
  CHECK(again.classes() == h.classes());
}

TEST_CASE("HGF rejects malformed input") {
  CHECK_THROWS_AS(parse_hgf_string("r 3\nedge a b\n"), InputError);
  CHECK_THROWS_AS(parse_hgf_string("r 3\nedge a a b\n"), InputError);
  CHECK_THROWS_AS(parse_hgf_string("r 2\nclass 3 a\n"), InputError);
  CHECK_THROWS_AS(parse_hgf_string("r 2\nclass 1 a\nclass 1 b\n"), InputError);
  CHECK_THROWS_AS(parse_hgf_string("r 2\nclass 1 a\nedge a b\n"), InputError);
  CHECK_THROWS_AS(parse_hgf_string("edge a b\n"), InputError);
  CHECK_THROWS_AS(parse_hgf_string("r x\n"), InputError);
  CHECK_THROWS_AS(parse_hgf_string("r 2\nfoo a b\n"), InputError);
  try {
    parse_hgf_string("r 3\n\nedge a b\n");
    FAIL("no exception");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("trivial bound tau <= r nu on random hypergraphs") {
  for (int i = 0; i < 40; ++i) {
    const Hypergraph h = gen_delta2(3 + i % 2, 1 + i % 5, 900 + i);
    CHECK(ref::tau(h) <= h.rank() * ref::nu(h));
  }
}
