#include "ryser/planes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "ryser/error.hpp"
#include "ryser/graph_algorithms.hpp"

namespace ryser {

namespace {

struct FieldSpec {
  int q, p, k;
  std::vector<int> low;  // monic modulus x^k + low[k-1] x^{k-1} + ... + low[0]
};

const FieldSpec* find_spec(int q) {
  static const std::vector<FieldSpec> specs = {
      {2, 2, 1, {0}},    {3, 3, 1, {0}},       {4, 2, 2, {1, 1}}, {5, 5, 1, {0}},
      {7, 7, 1, {0}},    {8, 2, 3, {1, 1, 0}}, {9, 3, 2, {1, 0}},
  };
  for (const auto& s : specs) {
    if (s.q == q) return &s;
  }
  return nullptr;
}

}  // namespace

bool GaloisField::supported(int q) { return find_spec(q) != nullptr; }

GaloisField::GaloisField(int q) : q_(q), add_(q * q), mul_(q * q) {
  const FieldSpec* spec = find_spec(q);
  if (!spec) throw PreconditionError("unsupported order " + std::to_string(q));
  const int p = spec->p;
  const int k = spec->k;
  auto digits = [&](int e) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i, e /= p) d[i] = e % p;
    return d;
  };
  auto value = [&](const std::vector<int>& d) {
    int e = 0;
    for (int i = k - 1; i >= 0; --i) e = e * p + d[i];
    return e;
  };
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b);
      std::vector<int> sum(k);
      for (int i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = value(sum);

      std::vector<int> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      }
      if (k == 1) {
        mul_[a * q + b] = prod[0];
        continue;
      }
      for (int d = 2 * k - 2; d >= k; --d) {
        const int coef = prod[d];
        if (coef == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < k; ++i) prod[d - k + i] = ((prod[d - k + i] - coef * spec->low[i]) % p + p) % p;
      }
      prod.resize(k);
      mul_[a * q + b] = value(prod);
    }
  }
}

std::vector<Color> AffinePlane::line_colors() const {
  std::vector<Color> out(lines.size(), 0);
  for (std::size_t c = 0; c < parallel_classes.size(); ++c) {
    for (int line : parallel_classes[c]) out[line] = static_cast<Color>(c) + 1;
  }
  return out;
}

AffinePlane affine_plane(int q) {
  const GaloisField field(q);
  AffinePlane plane;
  plane.order = q;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) plane.point_labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  auto point = [q](int x, int y) { return x * q + y; };
  for (int m = 0; m < q; ++m) {
    auto& cls = plane.parallel_classes.emplace_back();
    for (int c = 0; c < q; ++c) {
      std::vector<int> line;
      for (int x = 0; x < q; ++x) line.push_back(point(x, field.add(field.mul(m, x), c)));
      std::sort(line.begin(), line.end());
      cls.push_back(static_cast<int>(plane.lines.size()));
      plane.lines.push_back(std::move(line));
    }
  }
  auto& vertical = plane.parallel_classes.emplace_back();
  for (int c = 0; c < q; ++c) {
    std::vector<int> line;
    for (int y = 0; y < q; ++y) line.push_back(point(c, y));
    vertical.push_back(static_cast<int>(plane.lines.size()));
    plane.lines.push_back(std::move(line));
  }
  if (auto report = verify_affine_axioms(plane.incidence(), q); !report.empty()) {
    throw InternalError("affine_plane(" + std::to_string(q) + ") fails " + report.front().invariant);
  }
  return plane;
}

Hypergraph truncated_projective_plane(int q) {
  const GaloisField field(q);
  std::vector<std::string> names;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) names.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  for (int m = 0; m < q; ++m) names.push_back("(inf," + std::to_string(m) + ")");
  auto point = [q](int x, int y) { return x * q + y; };
  std::vector<Edge> edges;
  for (int m = 0; m < q; ++m) {
    for (int c = 0; c < q; ++c) {
      Edge e;
      for (int x = 0; x < q; ++x) e.push_back(point(x, field.add(field.mul(m, x), c)));
      e.push_back(q * q + m);
      edges.push_back(std::move(e));
    }
  }
  std::vector<std::vector<VertexId>> classes;
  for (int a = 0; a < q; ++a) {
    auto& cls = classes.emplace_back();
    for (int b = 0; b < q; ++b) cls.push_back(point(a, b));
  }
  auto& infinity = classes.emplace_back();
  for (int m = 0; m < q; ++m) infinity.push_back(q * q + m);
  return Hypergraph(q + 1, std::move(names), std::move(edges), std::move(classes));
}

BlowupMap blowup_map(const AffinePlane& plane, int b) {
  if (b < 1) throw PreconditionError("blowup factor must be positive");
  BlowupMap map{b, {}};
  for (int p = 0; p < plane.point_count(); ++p) map.point_of.insert(map.point_of.end(), b, p);
  return map;
}

ColoredCompleteGraph blowup_graph(const AffinePlane& plane, int b) {
  const BlowupMap map = blowup_map(plane, b);
  const int points = plane.point_count();
  const std::vector<Color> line_color = plane.line_colors();
  std::vector<Color> joining(static_cast<std::size_t>(points) * points, 0);
  for (std::size_t l = 0; l < plane.lines.size(); ++l) {
    for (int p : plane.lines[l]) {
      for (int p2 : plane.lines[l]) joining[p * points + p2] = line_color[l];
    }
  }
  const int r = plane.order + 1;
  const int n = static_cast<int>(map.point_of.size());
  ColorMatrix colors(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const int pu = map.point_of[u];
      const int pv = map.point_of[v];
      colors.set(u, v, pu == pv ? ColorSet::range(r) : ColorSet::single(joining[pu * points + pv]));
    }
  }
  return ColoredCompleteGraph(r, std::move(colors));
}

ValidationReport verify_affine_axioms(const IncidenceStructure& s, int order) {
  ValidationReport report;
  const int np = s.point_count;
  const int nl = static_cast<int>(s.lines.size());
  std::vector<std::vector<char>> on(nl, std::vector<char>(np, 0));
  std::vector<int> point_degree(np, 0);
  for (int l = 0; l < nl; ++l) {
    for (int p : s.lines[l]) {
      if (p < 0 || p >= np) {
        report.push_back({"line refers to an unknown point", "line " + std::to_string(l)});
        return report;
      }
      if (!on[l][p]) ++point_degree[p];
      on[l][p] = 1;
    }
  }
  auto disjoint = [&](int a, int b) {
    for (int p : s.lines[a]) {
      if (on[b][p]) return false;
    }
    return true;
  };

  // (i)
  for (int p = 0; p < np; ++p) {
    for (int p2 = p + 1; p2 < np; ++p2) {
      int common = 0;
      for (int l = 0; l < nl; ++l) common += on[l][p] && on[l][p2];
      if (common != 1) {
        report.push_back({"(i) points not joined by exactly one line",
                          "(" + std::to_string(p) + "," + std::to_string(p2) + ") on " + std::to_string(common)});
      }
    }
  }
  // (ii)
  bool playfair = true;
  for (int p = 0; p < np; ++p) {
    for (int l = 0; l < nl; ++l) {
      if (on[l][p]) continue;
      int parallels = 0;
      for (int l2 = 0; l2 < nl; ++l2) parallels += on[l2][p] && disjoint(l, l2);
      if (parallels != 1) {
        playfair = false;
        report.push_back({"(ii) parallel through an outside point is not unique",
                          "point " + std::to_string(p) + ", line " + std::to_string(l) + ": " +
                              std::to_string(parallels)});
      }
    }
  }
  // (iii)
  for (int l = 0; l < nl; ++l) {
    if (s.lines[l].size() < 2) report.push_back({"(iii) line with fewer than 2 points", "line " + std::to_string(l)});
  }
  // (iv)
  for (int p = 0; p < np; ++p) {
    if (point_degree[p] < 3) report.push_back({"(iv) point on fewer than 3 lines", "point " + std::to_string(p)});
  }
  // (v): largest family of pairwise disjoint lines.
  int most_parallel = -1;
  if (nl <= 64) {
    std::vector<std::uint64_t> meets(nl, 0);
    for (int a = 0; a < nl; ++a) {
      for (int b = 0; b < nl; ++b) {
        if (a != b && !disjoint(a, b)) meets[a] |= std::uint64_t{1} << b;
      }
    }
    most_parallel = std::popcount(maximum_independent_set_mask(meets));
  } else if (playfair) {
    // With (ii), "equal or disjoint" is an equivalence; a pairwise disjoint
    // family lies inside one class.
    std::vector<int> cls(nl, -1);
    int next = 0;
    for (int a = 0; a < nl; ++a) {
      if (cls[a] != -1) continue;
      cls[a] = next;
      int size = 1;
      for (int b = a + 1; b < nl; ++b) {
        if (cls[b] == -1 && disjoint(a, b)) {
          cls[b] = next;
          ++size;
        }
      }
      most_parallel = std::max(most_parallel, size);
      ++next;
    }
  }
  if (most_parallel == -1) {
    report.push_back({"(v) not evaluated", "more than 64 lines without (ii)"});
  } else if (most_parallel != order) {
    report.push_back({"(v) maximum number of pairwise parallel lines differs from the order",
                      std::to_string(most_parallel) + " != " + std::to_string(order)});
  }
  return report;
}

}  // namespace ryser
