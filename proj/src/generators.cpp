#include "ryser/generators.hpp"

#include <algorithm>
#include <numeric>

#include "ryser/error.hpp"

namespace ryser {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
}

std::vector<int> random_partition(int n, SplitMix64& rng, bool spanning) {
  std::vector<int> block(n);
  if (!spanning) {
    const int k = rng.between(1, n);
    for (int v = 0; v < n; ++v) block[v] = static_cast<int>(rng.below(k));
  } else {
    const int k = rng.between(1, std::max(1, n / 2));
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    shuffle(order, rng);
    for (int i = 0; i < n; ++i) block[order[i]] = i < 2 * k ? i / 2 : static_cast<int>(rng.below(k));
  }
  return block;
}

}  // namespace

ColoredCompleteGraph gen_transitive_colored(int n, int r, int min_colors, std::uint64_t seed, bool spanning) {
  if (n < 2) throw PreconditionError("need n >= 2");
  if (r < 1 || r > kMaxColors) throw PreconditionError("r out of range");
  if (min_colors < 1 || min_colors >= r) throw PreconditionError("need 1 <= min-colors < r");
  SplitMix64 rng(seed);
  std::vector<std::vector<int>> block(r);
  for (int c = 0; c < r; ++c) block[c] = random_partition(n, rng, spanning);

  std::vector<std::vector<int>> count(n, std::vector<int>(n, 0));
  for (int c = 0; c < r; ++c) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) count[u][v] += block[c][u] == block[c][v];
    }
  }
  const int guard = 10 * r * n;
  for (int merges = 0;; ++merges) {
    int du = -1;
    int dv = -1;
    for (int u = 0; u < n && du == -1; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (count[u][v] < min_colors) {
          du = u;
          dv = v;
          break;
        }
      }
    }
    if (du == -1) break;
    if (merges >= guard) throw InternalError("color repair did not terminate");
    int best_color = -1;
    int best_gain = -1;
    for (int c = 0; c < r; ++c) {
      const int a = block[c][du];
      const int b = block[c][dv];
      if (a == b) continue;
      int gain = 0;
      for (int x = 0; x < n; ++x) {
        if (block[c][x] != a) continue;
        for (int y = 0; y < n; ++y) {
          if (block[c][y] == b && count[std::min(x, y)][std::max(x, y)] < min_colors) ++gain;
        }
      }
      if (gain > best_gain) {
        best_gain = gain;
        best_color = c;
      }
    }
    const int a = block[best_color][du];
    const int b = block[best_color][dv];
    for (int x = 0; x < n; ++x) {
      if (block[best_color][x] != a) continue;
      for (int y = 0; y < n; ++y) {
        if (block[best_color][y] == b) ++count[std::min(x, y)][std::max(x, y)];
      }
    }
    for (int x = 0; x < n; ++x) {
      if (block[best_color][x] == b) block[best_color][x] = a;
    }
  }

  ColorMatrix colors(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      ColorSet s;
      for (int c = 0; c < r; ++c) {
        if (block[c][u] == block[c][v]) s.insert(c + 1);
      }
      colors.set(u, v, s);
    }
  }
  return ColoredCompleteGraph(r, std::move(colors));
}

GeneratedHypergraph gen_t_intersecting_hypergraph(int r, int t, int m, int class_size, std::uint64_t seed,
                                                  bool exact) {
  if (t < 1 || t >= r) throw PreconditionError("need 1 <= t < r");
  if (class_size < 2) throw PreconditionError("need class size >= 2");
  if (m < 1) throw PreconditionError("need at least one edge");
  SplitMix64 rng(seed);
  std::vector<std::vector<int>> accepted;  // coordinate per class
  auto random_tuple = [&] {
    std::vector<int> tuple(r);
    for (int& x : tuple) x = static_cast<int>(rng.below(class_size));
    return tuple;
  };
  accepted.push_back(random_tuple());
  const long budget = 200L * m + 1000;
  for (long tries = 0; static_cast<int>(accepted.size()) < m && tries < budget; ++tries) {
    std::vector<int> candidate = accepted[rng.below(accepted.size())];
    std::vector<int> coords(r);
    std::iota(coords.begin(), coords.end(), 0);
    shuffle(coords, rng);
    if (exact) {
      for (int i = 0; i < r - t; ++i) {
        int& x = candidate[coords[i]];
        x = (x + 1 + static_cast<int>(rng.below(class_size - 1))) % class_size;
      }
    } else {
      const int changes = rng.between(0, r - t);
      for (int i = 0; i < changes; ++i) candidate[coords[i]] = static_cast<int>(rng.below(class_size));
    }
    const bool ok = std::all_of(accepted.begin(), accepted.end(), [&](const std::vector<int>& e) {
      int shared = 0;
      for (int i = 0; i < r; ++i) shared += e[i] == candidate[i];
      return exact ? shared == t : shared >= t;
    });
    if (ok) accepted.push_back(std::move(candidate));
  }

  auto name = [](int cls, int j) { return "c" + std::to_string(cls + 1) + "_" + std::to_string(j); };
  std::vector<std::vector<std::string>> classes(r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < class_size; ++j) classes[i].push_back(name(i, j));
  }
  std::vector<std::vector<std::string>> edges;
  for (const auto& tuple : accepted) {
    auto& e = edges.emplace_back();
    for (int i = 0; i < r; ++i) e.push_back(name(i, tuple[i]));
  }
  const bool reached = static_cast<int>(accepted.size()) == m;
  return {Hypergraph::from_names(r, edges, classes), reached};
}

Delta2Mode parse_delta2_mode(const std::string& name) {
  if (name == "mixed") return Delta2Mode::mixed;
  if (name == "disjoint") return Delta2Mode::disjoint;
  if (name == "cycle") return Delta2Mode::cycle;
  if (name == "chain") return Delta2Mode::chain;
  throw InputError("unknown mode '" + name + "'");
}

Hypergraph gen_delta2(int r, int m, std::uint64_t seed, Delta2Mode mode) {
  if (r < 3) throw PreconditionError("need r >= 3");
  if (m < 0) throw PreconditionError("need m >= 0");
  SplitMix64 rng(seed);
  int next_vertex = 0;
  std::vector<Edge> edges(m);
  auto fresh = [&] { return next_vertex++; };

  if (mode == Delta2Mode::disjoint || m <= 1) {
    for (auto& e : edges) {
      for (int i = 0; i < r; ++i) e.push_back(fresh());
    }
  } else if (mode == Delta2Mode::cycle || mode == Delta2Mode::chain) {
    // shared[i] joins edge i and edge i + 1 (mod m).
    const int links = mode == Delta2Mode::cycle ? m : m - 1;
    std::vector<int> shared(links);
    for (int& s : shared) s = fresh();
    for (int i = 0; i < m; ++i) {
      Edge& e = edges[i];
      if (i < links) e.push_back(shared[i]);
      if (mode == Delta2Mode::cycle) {
        e.push_back(shared[(i + m - 1) % m]);
      } else if (i > 0) {
        e.push_back(shared[i - 1]);
      }
      while (static_cast<int>(e.size()) < r) e.push_back(fresh());
    }
  } else {
    std::vector<int> once;  // vertices lying in exactly one edge so far
    for (auto& e : edges) {
      const int reuse = rng.between(0, std::min<int>(r, static_cast<int>(once.size())));
      shuffle(once, rng);
      for (int i = 0; i < reuse; ++i) e.push_back(once[i]);
      once.erase(once.begin(), once.begin() + reuse);
      while (static_cast<int>(e.size()) < r) {
        const int v = fresh();
        e.push_back(v);
        once.push_back(v);
      }
    }
  }

  std::vector<std::string> names;
  for (int v = 0; v < next_vertex; ++v) names.push_back("v" + std::to_string(v));
  for (auto& e : edges) std::sort(e.begin(), e.end());
  return Hypergraph(r, std::move(names), std::move(edges));
}

ColoredCompleteGraph coarsen_color(const ColoredCompleteGraph& g, Color c, std::uint64_t seed) {
  const auto& comps = g.components().components(c);
  if (comps.size() < 2) throw PreconditionError("color " + std::to_string(c) + " has a single component");
  SplitMix64 rng(seed);
  const std::size_t a = rng.below(comps.size());
  std::size_t b = rng.below(comps.size() - 1);
  if (b >= a) ++b;
  ColorMatrix colors = g.matrix();
  for (VertexId x : comps[a]) {
    for (VertexId y : comps[b]) {
      ColorSet s = colors.get(x, y);
      s.insert(c);
      colors.set(x, y, s);
    }
  }
  return ColoredCompleteGraph(g.r(), std::move(colors));
}

}  // namespace ryser
