#include "ryser/partial_cover.hpp"

#include <algorithm>
#include <map>

#include "ryser/error.hpp"

namespace ryser {

ColorStats color_stats(const ColoredCompleteGraph& g) {
  ColorStats s;
  s.n = g.n();
  s.r = g.r();
  s.single_degree.assign(s.n, std::vector<int>(s.r, 0));
  s.single_edges.assign(s.r, 0);
  s.edges_with.assign(s.r, 0);
  for (VertexId u = 0; u < s.n; ++u) {
    for (VertexId v = u + 1; v < s.n; ++v) {
      const ColorSet colors = g.colors(u, v);
      for (Color c : colors.colors()) ++s.edges_with[c - 1];
      if (colors.size() == 1) {
        const Color c = colors.min();
        ++s.single_edges[c - 1];
        ++s.single_degree[u][c - 1];
        ++s.single_degree[v][c - 1];
      } else {
        ++s.multi_edge_count;
      }
    }
  }
  for (Color c = 1; c <= s.r; ++c) {
    s.component_count.push_back(g.components().count(c));
    s.component_sizes.push_back(g.components().sizes(c));
  }
  return s;
}

std::int64_t component_difference_sum(const ColoredCompleteGraph& g, Color i, Color j) {
  // |C - C'| summed over all pairs: a vertex of C lies outside every
  // component of color j except its own.
  std::int64_t total = 0;
  const auto& index = g.components();
  for (const auto& c : index.components(i)) {
    for (std::size_t other = 0; other < index.components(j).size(); ++other) {
      for (VertexId v : c) total += index.component_id(j, v) != static_cast<int>(other);
    }
  }
  return total;
}

bool difference_identity_holds(const ColoredCompleteGraph& g, Color i, Color j) {
  return component_difference_sum(g, i, j) ==
         static_cast<std::int64_t>(g.components().count(j) - 1) * g.n();
}

bool component_pair_bound_holds(const ColorStats& stats, Color c) {
  const std::int64_t n = stats.n;
  const std::int64_t k = stats.k(c);
  return 2 * k * stats.M(c) >= n * n - k * n;
}

std::int64_t partial_cover_bound(std::int64_t n, int r) {
  const std::int64_t q2 = static_cast<std::int64_t>(r - 1) * (r - 1);
  const std::int64_t numerator = n * (q2 - r + 2);
  return (numerator + q2 - 1) / q2;
}

bool partial_cover_bound_is_integral(std::int64_t n, int r) {
  const std::int64_t q2 = static_cast<std::int64_t>(r - 1) * (r - 1);
  return (n * (q2 - r + 2)) % q2 == 0;
}

namespace {

PartialCoverResult finish(const ColoredCompleteGraph& g, VertexId x, Color omitted, std::string route) {
  PartialCoverResult out;
  out.cover = g.components_of(x, g.all_colors() - ColorSet::single(omitted));
  out.omitted_color = omitted;
  out.route = std::move(route);
  out.bound = partial_cover_bound(g.n(), g.r());
  return out;
}

struct Candidate {
  VertexId x = -1;
  Color omitted = 0;
  std::size_t covered = 0;
};

}  // namespace

PartialCoverResult partial_cover_distinct(const ColoredCompleteGraph& g) {
  const int r = g.r();
  const int n = g.n();
  if (r < 2) throw PreconditionError("partial covers need r >= 2");
  if (!g.is_transitive()) throw PreconditionError("coloring is not transitive");
  if (n == 0) return PartialCoverResult{{}, r, "empty", 0};
  const auto& index = g.components();

  PartialCoverResult result;
  bool found = false;

  // A vertex with no edge of color i: every other vertex is reached through
  // some other color.
  for (VertexId v = 0; v < n && !found; ++v) {
    for (Color i = 1; i <= r; ++i) {
      if (index.component_of(i, v).size() == 1) {
        result = finish(g, v, i, "nonspanning");
        found = true;
        break;
      }
    }
  }

  // Two colors: if color 1 is disconnected, any two vertices in different
  // color-1 components are joined by color 2 alone, and any two in the same
  // one share a color-2 neighbor in another component; so color 2 spans.
  if (!found && r == 2) {
    const Color spanning = index.count(1) == 1 ? 1 : 2;
    if (index.count(spanning) != 1) throw InternalError("no spanning component with two colors");
    result = finish(g, 0, 3 - spanning, "two-colors");
    found = true;
  }

  if (!found) {
    for (Color i = 1; i <= r; ++i) {
      if (index.count(i) == 1) {
        const Color omitted = i == 1 ? 2 : 1;
        result = finish(g, 0, omitted, "spanning-component");
        found = true;
        break;
      }
    }
  }

  if (!found) {
    const ColorStats stats = color_stats(g);
    Color most = 1;
    for (Color c = 2; c <= r; ++c) {
      if (stats.k(c) > stats.k(most)) most = c;
    }
    Color fewest = most == 1 ? 2 : 1;
    for (Color c = 1; c <= r; ++c) {
      if (c != most && stats.k(c) < stats.k(fewest)) fewest = c;
    }

    // Case 1 family: a vertex in C ∩ C' for the pair minimizing |C - C'|,
    // C of the color with most components, C' of the color with fewest.
    Candidate case1;
    {
      std::int64_t smallest = -1;
      const auto& big = index.components(most);
      const auto& small = index.components(fewest);
      for (std::size_t a = 0; a < big.size(); ++a) {
        for (std::size_t b = 0; b < small.size(); ++b) {
          std::int64_t diff = 0;
          VertexId meet = -1;
          for (VertexId v : big[a]) {
            if (index.component_id(fewest, v) == static_cast<int>(b)) {
              if (meet == -1) meet = v;
            } else {
              ++diff;
            }
          }
          if (smallest == -1 || diff < smallest) {
            smallest = diff;
            if (meet == -1) throw InternalError("minimizing pair of components is disjoint");
            case1 = {meet, most, static_cast<std::size_t>(n - diff)};
          }
        }
      }
    }
    // Case 2 family: the vertex and color minimizing d_i(v).
    Candidate case2;
    {
      int smallest = -1;
      for (Color i = 1; i <= r; ++i) {
        for (VertexId v = 0; v < n; ++v) {
          if (smallest == -1 || stats.d(v, i) < smallest) {
            smallest = stats.d(v, i);
            case2 = {v, i, static_cast<std::size_t>(n - smallest)};
          }
        }
      }
    }
    const Candidate& pick = case2.covered > case1.covered ? case2 : case1;
    result = finish(g, pick.x, pick.omitted, &pick == &case1 ? "case1" : "case2");
  }

  if (static_cast<int>(result.cover.size()) != r - 1 || result.cover.common_vertex == std::nullopt) {
    throw InternalError("partial cover does not have r - 1 parts through a common vertex");
  }
  if (static_cast<std::int64_t>(result.cover.covered_count) < result.bound) {
    throw InternalError("partial cover covers " + std::to_string(result.cover.covered_count) +
                        " vertices, below the bound " + std::to_string(result.bound));
  }
  return result;
}

std::optional<BlowupWitness> is_affine_blowup(const ColoredCompleteGraph& g) {
  const int r = g.r();
  const int n = g.n();
  if (r < 3 || n == 0 || !g.is_transitive()) return std::nullopt;
  const int q = r - 1;
  const auto& index = g.components();
  for (Color c = 1; c <= r; ++c) {
    if (index.count(c) != q) return std::nullopt;
  }
  const ColorSet all = g.all_colors();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const ColorSet s = g.colors(u, v);
      if (s.size() != 1 && s != all) return std::nullopt;
    }
  }
  if (n % (q * q) != 0) return std::nullopt;
  const int b = n / (q * q);
  for (Color i = 1; i <= r; ++i) {
    for (Color j = i + 1; j <= r; ++j) {
      std::vector<int> meet(q * q, 0);
      for (VertexId v = 0; v < n; ++v) ++meet[index.component_id(i, v) * q + index.component_id(j, v)];
      if (std::any_of(meet.begin(), meet.end(), [b](int m) { return m != b; })) return std::nullopt;
    }
  }

  // Points: the nonempty intersections of one component per color.
  std::map<std::vector<int>, int> point_ids;
  BlowupMap map{b, std::vector<int>(n)};
  std::vector<std::vector<int>> signature_of_point;
  for (VertexId v = 0; v < n; ++v) {
    std::vector<int> signature;
    for (Color c = 1; c <= r; ++c) signature.push_back(index.component_id(c, v));
    auto [it, inserted] = point_ids.emplace(signature, static_cast<int>(signature_of_point.size()));
    if (inserted) signature_of_point.push_back(signature);
    map.point_of[v] = it->second;
  }
  std::vector<int> clones(signature_of_point.size(), 0);
  for (int p : map.point_of) ++clones[p];
  if (std::any_of(clones.begin(), clones.end(), [b](int c) { return c != b; })) return std::nullopt;

  AffinePlane plane;
  plane.order = q;
  for (std::size_t p = 0; p < signature_of_point.size(); ++p) plane.point_labels.push_back("p" + std::to_string(p));
  for (Color c = 1; c <= r; ++c) {
    auto& cls = plane.parallel_classes.emplace_back();
    for (int comp = 0; comp < q; ++comp) {
      std::vector<int> line;
      for (std::size_t p = 0; p < signature_of_point.size(); ++p) {
        if (signature_of_point[p][c - 1] == comp) line.push_back(static_cast<int>(p));
      }
      cls.push_back(static_cast<int>(plane.lines.size()));
      plane.lines.push_back(std::move(line));
    }
  }
  if (!verify_affine_axioms(plane.incidence(), q).empty()) return std::nullopt;

  // Lines are disjoint exactly when their components share a color.
  const std::vector<Color> line_color = plane.line_colors();
  for (std::size_t a = 0; a < plane.lines.size(); ++a) {
    for (std::size_t c = a + 1; c < plane.lines.size(); ++c) {
      std::vector<int> common;
      std::set_intersection(plane.lines[a].begin(), plane.lines[a].end(), plane.lines[c].begin(),
                            plane.lines[c].end(), std::back_inserter(common));
      if (common.empty() != (line_color[a] == line_color[c])) return std::nullopt;
    }
  }
  // Colors agree with the plane: i ∈ col(u,v) iff f(u), f(v) share a line of color i.
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      ColorSet expected;
      for (std::size_t l = 0; l < plane.lines.size(); ++l) {
        const auto& line = plane.lines[l];
        if (std::binary_search(line.begin(), line.end(), map.point_of[u]) &&
            std::binary_search(line.begin(), line.end(), map.point_of[v])) {
          expected.insert(line_color[l]);
        }
      }
      if (expected != g.colors(u, v)) return std::nullopt;
    }
  }
  return BlowupWitness{std::move(plane), std::move(map)};
}

SharpnessReport check_sharpness(const ColoredCompleteGraph& g, const OracleLimits& limits) {
  SharpnessReport report;
  report.bound = partial_cover_bound(g.n(), g.r());
  report.integral = partial_cover_bound_is_integral(g.n(), g.r());
  report.in_scope = report.integral && g.r() >= 3;
  report.oracle_max = static_cast<std::int64_t>(max_partial_cover_distinct(g, limits).covered);
  report.blowup = is_affine_blowup(g);
  if (!report.integral) {
    report.note = "outside characterization: bound is not an integer";
  } else if (g.r() < 3) {
    report.note = "outside characterization: fewer than 3 colors";
  }
  report.is_sharp = report.in_scope && report.oracle_max == report.bound;
  if (report.in_scope && report.is_sharp != report.blowup.has_value()) {
    throw InternalError(std::string("characterization violated: ") +
                        (report.is_sharp ? "sharp but not a blowup" : "blowup but not sharp"));
  }
  return report;
}

}  // namespace ryser
