#include "ryser/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <variant>

#include "ryser/delta2_cover.hpp"
#include "ryser/error.hpp"
#include "ryser/generators.hpp"
#include "ryser/isomorphism.hpp"
#include "ryser/oracles.hpp"
#include "ryser/partial_cover.hpp"
#include "ryser/planes.hpp"
#include "ryser/t_intersect_cover.hpp"

namespace ryser {

namespace {

struct Tally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first;

  void fail(const std::string& what) {
    if (failures++ == 0) first = what;
  }
  // Runs one instance; an exception is a failure.
  void run(const std::string& label, const std::function<void()>& body) {
    ++checked;
    try {
      body();
    } catch (const std::exception& e) {
      fail(label + ": " + e.what());
    }
  }
};

struct TInstance {
  ColoredCompleteGraph graph;
  int t;
  std::string label;
};

std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) {
  SplitMix64 rng(a * 1'000'003 + b * 10'007 + c);
  return rng.next();
}

std::vector<TInstance> t_instances() {
  std::vector<TInstance> out;
  for (int r = 2; r <= 7; ++r) {
    for (int t = 1; t <= r - 1; ++t) {
      if (4 * t <= r) continue;
      for (int i = 0; i < 200; ++i) {
        const std::uint64_t seed = mix(r, t, i);
        SplitMix64 rng(seed);
        const int n = rng.between(2, 24);
        out.push_back({gen_transitive_colored(n, r, t, seed, i % 2 == 1), t,
                       "r=" + std::to_string(r) + " t=" + std::to_string(t) + " #" + std::to_string(i)});
      }
    }
  }
  return out;
}

struct BlowupInstance {
  int q;
  int b;
  ColoredCompleteGraph graph;
};

std::vector<BlowupInstance> blowups() {
  std::vector<BlowupInstance> out;
  for (int q = 2; q <= 4; ++q) {
    const AffinePlane plane = affine_plane(q);
    for (int b = 1; b <= 3; ++b) out.push_back({q, b, blowup_graph(plane, b)});
  }
  return out;
}

std::string ratio(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

// Coverage at least n((r-1)^2 - r + 2)/(r-1)^2, in integers.
bool meets_bound(std::int64_t covered, std::int64_t n, int r) {
  const std::int64_t q2 = static_cast<std::int64_t>(r - 1) * (r - 1);
  return covered * q2 >= n * (q2 - r + 2);
}

// 1. Truncated projective planes are sharp for Ryser's bound.
void criterion_planes(Tally& tally) {
  for (int q = 2; q <= 5; ++q) {
    tally.run("q=" + std::to_string(q), [&] {
      const Hypergraph h = truncated_projective_plane(q);
      const HypergraphParams p = parameters_exact(h);
      if (p.tau != q || p.nu != 1 || p.tau != (h.rank() - 1) * p.nu) {
        tally.fail("q=" + std::to_string(q) + ": tau=" + std::to_string(p.tau) + " nu=" + std::to_string(p.nu));
      }
    });
  }
}

// 2. Covers by at most r - t components.
void criterion_t_cover(Tally& tally) {
  for (const auto& inst : t_instances()) {
    tally.run(inst.label, [&] {
      const TCoverResult res = cover_t(inst.graph, inst.t);
      const int r = inst.graph.r();
      if (auto problem = check_components(inst.graph, res.cover)) {
        tally.fail(inst.label + ": " + *problem);
      } else if (static_cast<int>(res.cover.covered_count) != inst.graph.n()) {
        tally.fail(inst.label + ": covers " + ratio(res.cover.covered_count, inst.graph.n()));
      } else if (static_cast<int>(res.cover.size()) > r - inst.t) {
        tally.fail(inst.label + ": " + std::to_string(res.cover.size()) + " parts > r - t");
      } else if (inst.graph.n() <= 12) {
        const ComponentCover best = min_component_cover(inst.graph);
        if (best.size() > res.cover.size()) tally.fail(inst.label + ": optimum larger than construction");
      }
    });
  }
}

// 3. Partial covers by r - 1 distinct colors.
void criterion_partial(Tally& tally) {
  const auto instances = partial_cover_instances();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& g = instances[i];
    const std::string label = "instance " + std::to_string(i) + " (r=" + std::to_string(g.r()) +
                              " n=" + std::to_string(g.n()) + ")";
    tally.run(label, [&] {
      const PartialCoverResult res = partial_cover_distinct(g);
      const auto& parts = res.cover.parts;
      std::set<Color> colors;
      for (const auto& p : parts) colors.insert(p.color);
      bool common = res.cover.common_vertex.has_value();
      if (common) {
        for (const auto& p : parts) {
          common = common && std::binary_search(p.vertices.begin(), p.vertices.end(), *res.cover.common_vertex);
        }
      }
      std::vector<char> hit(g.n(), 0);
      for (const auto& p : parts) {
        for (VertexId v : p.vertices) hit[v] = 1;
      }
      const auto covered = std::count(hit.begin(), hit.end(), 1);
      if (auto problem = check_components(g, res.cover)) {
        tally.fail(label + ": " + *problem);
      } else if (static_cast<int>(parts.size()) != g.r() - 1 || static_cast<int>(colors.size()) != g.r() - 1) {
        tally.fail(label + ": parts or colors not r - 1");
      } else if (!common) {
        tally.fail(label + ": no common vertex");
      } else if (!meets_bound(covered, g.n(), g.r())) {
        tally.fail(label + ": covers " + std::to_string(covered) + ", below the bound");
      }
    });
  }
}

// 4. Blowups attain the bound and are recognized.
void criterion_blowups(Tally& tally) {
  for (const auto& inst : blowups()) {
    const std::string label = "q=" + std::to_string(inst.q) + " b=" + std::to_string(inst.b);
    tally.run(label, [&] {
      const auto& g = inst.graph;
      const int r = g.r();
      const std::int64_t q2 = static_cast<std::int64_t>(r - 1) * (r - 1);
      const std::int64_t exact = g.n() * (q2 - r + 2);
      const std::int64_t best = static_cast<std::int64_t>(max_partial_cover_distinct(g).covered);
      const auto witness = is_affine_blowup(g);
      if (exact % q2 != 0 || best * q2 != exact) {
        tally.fail(label + ": optimum " + std::to_string(best) + " differs from the bound");
      } else if (!witness) {
        tally.fail(label + ": not recognized as a blowup");
      } else if (witness->map.b != inst.b || witness->plane.order != inst.q) {
        tally.fail(label + ": recovered wrong parameters");
      } else {
        for (VertexId u = 0; u < g.n(); ++u) {
          for (VertexId v = 0; v < g.n(); ++v) {
            if ((witness->map.point_of[u] == witness->map.point_of[v]) != (u / inst.b == v / inst.b)) {
              tally.fail(label + ": point map disagrees with the construction");
              return;
            }
          }
        }
      }
    });
  }
}

// 5. Coarsened blowups are not sharp.
void criterion_coarsened(Tally& tally) {
  const auto instances = coarsened_blowup_instances();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& g = instances[i];
    const std::string label = "perturbation " + std::to_string(i);
    tally.run(label, [&] {
      const SharpnessReport report = check_sharpness(g);
      if (!(report.oracle_max > report.bound)) {
        tally.fail(label + ": optimum does not exceed the bound");
      } else if (report.blowup || report.is_sharp) {
        tally.fail(label + ": reported as a blowup");
      }
    });
  }
}

// 6. Counting identities on everything generated for 2 to 5.
void criterion_counting(Tally& tally) {
  std::vector<ColoredCompleteGraph> all;
  for (auto&& family : {t_cover_instances(), partial_cover_instances(), blowup_instances(),
                        coarsened_blowup_instances()}) {
    all.insert(all.end(), family.begin(), family.end());
  }
  for (std::size_t idx = 0; idx < all.size(); ++idx) {
    const auto& g = all[idx];
    const std::string label = "instance " + std::to_string(idx);
    tally.run(label, [&] {
      const int n = g.n();
      const int r = g.r();
      const ColorStats s = color_stats(g);
      std::int64_t single_total = 0;
      for (Color i = 1; i <= r; ++i) {
        std::int64_t degree_sum = 0;
        for (VertexId v = 0; v < n; ++v) degree_sum += s.d(v, i);
        single_total += s.m(i);
        if (degree_sum != 2 * s.m(i) || s.m(i) > s.M(i)) tally.fail(label + ": degree count of color " + std::to_string(i));
        if (!component_pair_bound_holds(s, i)) tally.fail(label + ": pair bound fails for color " + std::to_string(i));
        for (Color j = 1; j <= r; ++j) {
          if (i != j && !difference_identity_holds(g, i, j)) {
            tally.fail(label + ": difference identity fails for (" + std::to_string(i) + "," + std::to_string(j) + ")");
          }
        }
      }
      if (single_total != static_cast<std::int64_t>(n) * (n - 1) / 2 - s.multi_edge_count) {
        tally.fail(label + ": single-color pairs do not add up");
      }
    });
  }
}

// 7. Degree-two hypergraphs.
void criterion_delta2(Tally& tally) {
  OracleLimits limits;
  limits.max_vertices = 64;
  const Delta2Mode modes[] = {Delta2Mode::mixed, Delta2Mode::mixed, Delta2Mode::cycle, Delta2Mode::chain,
                              Delta2Mode::disjoint};
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t seed = mix(7, i);
    SplitMix64 rng(seed);
    const int r = 3 + i % 3;
    const int m = rng.between(1, 12);
    const Hypergraph h = gen_delta2(r, m, seed, modes[i % 5]);
    const std::string label = "instance " + std::to_string(i) + " (r=" + std::to_string(r) + " m=" +
                              std::to_string(m) + ")";
    tally.run(label, [&] {
      const Delta2Result res = ryser_delta2(h);
      std::vector<char> in(h.vertex_count(), 0);
      for (VertexId v : res.cover) in[v] = 1;
      for (const Edge& e : h.edges()) {
        if (std::none_of(e.begin(), e.end(), [&](VertexId v) { return in[v]; })) {
          tally.fail(label + ": an edge is not covered");
          return;
        }
      }
      const int tau = vertex_cover_number(h, limits);
      const int nu = matching_number(h, limits);
      const int size = static_cast<int>(res.cover.size());
      if (tau > size || size > (r - 1) * nu) {
        tally.fail(label + ": tau=" + std::to_string(tau) + " |T|=" + std::to_string(size) + " nu=" + std::to_string(nu));
      } else if (strong_independence_number(dual(h), limits) != nu || res.nu != nu) {
        tally.fail(label + ": matching number of H and the dual disagree");
      }
    });
  }
}

// 8. Dualities and the Gyárfás correspondence.
void criterion_dualities(Tally& tally) {
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t seed = mix(8, i);
    SplitMix64 rng(seed);
    const int r = 3 + i % 2;
    const int class_size = 2 + (i / 2) % 2;
    const int m = rng.between(1, 8);
    const Hypergraph h = gen_t_intersecting_hypergraph(r, 1, m, class_size, seed).hypergraph;
    const std::string label = "instance " + std::to_string(i);
    tally.run(label, [&] {
      const Hypergraph d = dual(h);
      if (!isomorphic(dual(d), h)) return tally.fail(label + ": second dual not isomorphic");
      const int tau = vertex_cover_number(h);
      const int nu = matching_number(h);
      if (strong_independence_number(d) != nu) return tally.fail(label + ": alpha'(dual) != nu");
      if (edge_cover_number(d) != tau) return tally.fail(label + ": rho(dual) != tau");

      const auto gy = gyarfas_graph(h);
      if (!std::holds_alternative<ColoredCompleteGraph>(gy)) return tally.fail(label + ": not intersecting");
      const auto& g = std::get<ColoredCompleteGraph>(gy);
      // Components are stars of class vertices.
      for (Color c = 1; c <= r; ++c) {
        for (const auto& comp : g.components().components(c)) {
          VertexId center = -1;
          for (VertexId x : h.edge(comp[0])) {
            if (h.class_of(x) == c) center = x;
          }
          if (center == -1 || h.star(center) != comp) return tally.fail(label + ": component is not a star");
        }
      }
      const int nv = static_cast<int>(h.vertex_count());
      for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
        bool covers_edges = true;
        for (const Edge& e : h.edges()) {
          covers_edges = covers_edges && std::any_of(e.begin(), e.end(), [&](VertexId v) { return (mask >> v) & 1u; });
        }
        std::vector<char> hit(g.n(), 0);
        for (VertexId v = 0; v < nv; ++v) {
          if ((mask >> v) & 1u) {
            for (EdgeId e : h.star(v)) hit[e] = 1;
          }
        }
        const bool covers_graph = std::find(hit.begin(), hit.end(), 0) == hit.end();
        if (covers_edges != covers_graph) return tally.fail(label + ": correspondence fails for a vertex set");
      }
      if (static_cast<int>(min_component_cover(g).size()) != tau) {
        return tally.fail(label + ": minimum component cover differs from tau");
      }
    });
  }
}

// 9. Duality between truncated projective planes and affine planes.
void criterion_duality_planes(Tally& tally) {
  for (int q = 2; q <= 5; ++q) {
    tally.run("q=" + std::to_string(q), [&] {
      const auto gy = gyarfas_graph(truncated_projective_plane(q));
      const auto closed = transitive_closure(std::get<ColoredCompleteGraph>(gy));
      if (!isomorphic(closed, blowup_graph(affine_plane(q), 1))) {
        tally.fail("q=" + std::to_string(q) + ": not isomorphic");
      }
    });
  }
}

struct Criterion {
  const char* title;
  double budget;
  void (*body)(Tally&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"truncated projective planes: tau = (r-1) nu", 10, criterion_planes},
    {"t-intersecting covers with at most r-t components", 60, criterion_t_cover},
    {"partial cover bound by r-1 distinct colors", 30, criterion_partial},
    {"affine plane blowups attain the bound", 60, criterion_blowups},
    {"coarsened blowups exceed the bound", 60, criterion_coarsened},
    {"counting identities", 30, criterion_counting},
    {"maximum degree two covers", 60, criterion_delta2},
    {"dualities and Gyarfas correspondence", 30, criterion_dualities},
    {"closure of Gyarfas graph of truncated plane is the affine blowup", 10, criterion_duality_planes},
};

}  // namespace

std::optional<std::string> check_components(const ColoredCompleteGraph& g, const ComponentCover& cover) {
  for (const auto& part : cover.parts) {
    if (part.color < 1 || part.color > g.r()) return "color " + std::to_string(part.color) + " out of range";
    if (part.vertices.empty()) return std::string("empty part");
    // Component of the part's color through its first vertex, by search.
    std::vector<char> seen(g.n(), 0);
    std::vector<VertexId> stack{part.vertices[0]};
    seen[part.vertices[0]] = 1;
    std::vector<VertexId> comp;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w = 0; w < g.n(); ++w) {
        if (!seen[w] && w != v && g.colors(v, w).contains(part.color)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    if (comp != part.vertices) return "part of color " + std::to_string(part.color) + " is not a component";
  }
  return std::nullopt;
}

std::vector<ColoredCompleteGraph> t_cover_instances() {
  std::vector<ColoredCompleteGraph> out;
  for (auto& inst : t_instances()) out.push_back(std::move(inst.graph));
  return out;
}

std::vector<ColoredCompleteGraph> partial_cover_instances() {
  std::vector<ColoredCompleteGraph> out;
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t seed = mix(3, i);
    SplitMix64 rng(seed);
    if (i % 2 == 0) {
      const int r = 2 + (i / 2) % 4;
      const int n = rng.between(2, 40);
      out.push_back(gen_transitive_colored(n, r, 1, seed, i % 4 == 0));
      continue;
    }
    // Blowups with some vertices removed and some colors coarsened reach
    // the counting cases.
    const int q = 2 + (i / 2) % 3;
    const int b = rng.between(1, 40 / (q * q));
    ColoredCompleteGraph g = blowup_graph(affine_plane(q), b);
    const int merges = rng.between(0, 2);
    for (int k = 0; k < merges; ++k) {
      const Color c = rng.between(1, g.r());
      if (g.components().count(c) >= 2) g = coarsen_color(g, c, rng.next());
    }
    std::vector<VertexId> keep;
    const int drop_per_mille = rng.between(0, 400);
    for (VertexId v = 0; v < g.n(); ++v) {
      if (static_cast<int>(rng.below(1000)) >= drop_per_mille) keep.push_back(v);
    }
    if (keep.size() < 2) keep = {0, 1};
    out.push_back(induced_subgraph(g, keep));
  }
  return out;
}

std::vector<ColoredCompleteGraph> blowup_instances() {
  std::vector<ColoredCompleteGraph> out;
  for (auto& inst : blowups()) out.push_back(std::move(inst.graph));
  return out;
}

std::vector<ColoredCompleteGraph> coarsened_blowup_instances() {
  const auto base = blowups();
  std::vector<ColoredCompleteGraph> out;
  for (int i = 0; i < 50; ++i) {
    const auto& g = base[i % base.size()].graph;
    const std::uint64_t seed = mix(5, i);
    SplitMix64 rng(seed);
    const Color c = rng.between(1, g.r());
    out.push_back(coarsen_color(g, c, seed));
  }
  return out;
}

CriterionResult run_criterion(int id) {
  CriterionResult result;
  result.id = id;
  if (id < 1 || id > kCriterionCount) {
    result.detail = "no such criterion";
    return result;
  }
  const Criterion& c = kCriteria[id - 1];
  result.title = c.title;
  result.budget_seconds = c.budget;
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.body(tally);
  } catch (const std::exception& e) {
    tally.fail(std::string("aborted: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.checked = tally.checked;
  result.failures = tally.failures;
  const bool in_time = result.seconds <= result.budget_seconds;
  result.passed = tally.failures == 0 && tally.checked > 0 && in_time;
  if (tally.failures > 0) {
    result.detail = std::to_string(tally.failures) + " failures, first: " + tally.first;
  } else if (!in_time) {
    result.detail = "over the time budget";
  } else {
    result.detail = "all checks hold";
  }
  return result;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << " (" << r.checked << " checked, "
      << r.seconds << " s <= " << r.budget_seconds << " s) " << r.detail;
  return out.str();
}

}  // namespace ryser
