#include "ryser/colored_graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ryser/error.hpp"

namespace ryser {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::vector<VertexId> ComponentCover::uncovered(int n) const {
  std::vector<char> hit(n, 0);
  for (const auto& part : parts) {
    for (VertexId v : part.vertices) {
      if (v >= 0 && v < n) hit[v] = 1;
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (!hit[v]) out.push_back(v);
  }
  return out;
}

ComponentCover make_cover(std::vector<CoverPart> parts, std::optional<VertexId> common_vertex) {
  ComponentCover cover;
  cover.common_vertex = common_vertex;
  VertexId top = -1;
  for (auto& part : parts) {
    std::sort(part.vertices.begin(), part.vertices.end());
    if (std::find(cover.parts.begin(), cover.parts.end(), part) != cover.parts.end()) continue;
    if (!part.vertices.empty()) top = std::max(top, part.vertices.back());
    cover.parts.push_back(std::move(part));
  }
  std::vector<char> hit(static_cast<std::size_t>(top + 1), 0);
  for (const auto& part : cover.parts) {
    for (VertexId v : part.vertices) {
      if (!hit[v]) {
        hit[v] = 1;
        ++cover.covered_count;
      }
    }
  }
  return cover;
}

ComponentIndex::ComponentIndex(int r, const ColorMatrix& colors) {
  const int n = colors.n();
  components_.resize(r);
  component_id_.assign(r, std::vector<int>(n, -1));
  for (Color c = 1; c <= r; ++c) {
    DisjointSets sets(n);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (colors.get(u, v).contains(c)) sets.unite(u, v);
      }
    }
    auto& ids = component_id_[c - 1];
    auto& comps = components_[c - 1];
    for (VertexId v = 0; v < n; ++v) {
      int root = sets.find(v);
      if (ids[root] == -1) {
        ids[root] = static_cast<int>(comps.size());
        comps.emplace_back();
      }
      ids[v] = ids[root];
      comps[ids[v]].push_back(v);
    }
  }
}

std::vector<std::size_t> ComponentIndex::sizes(Color c) const {
  std::vector<std::size_t> out;
  for (const auto& comp : components(c)) out.push_back(comp.size());
  return out;
}

ColoredCompleteGraph::ColoredCompleteGraph(int r, ColorMatrix colors) : r_(r), colors_(std::move(colors)) {
  if (r_ < 1 || r_ > kMaxColors) {
    throw PreconditionError("color count must be in 1.." + std::to_string(kMaxColors));
  }
  const int n = colors_.n();
  const ColorSet all = ColorSet::range(r_);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      ColorSet s = colors_.get(u, v);
      if (s.empty()) {
        throw PreconditionError("not complete: pair (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has no color");
      }
      if (!s.subset_of(all)) {
        throw PreconditionError("pair (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has a color outside [" + std::to_string(r_) + "]");
      }
    }
  }
  transitive_ = true;
  for (VertexId u = 0; u < n && transitive_; ++u) {
    for (VertexId v = u + 1; v < n && transitive_; ++v) {
      for (VertexId w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if (!(colors_.get(u, w) & colors_.get(w, v)).subset_of(colors_.get(u, v))) {
          transitive_ = false;
          break;
        }
      }
    }
  }
  index_ = ComponentIndex(r_, colors_);
}

ComponentCover ColoredCompleteGraph::components_of(VertexId x, ColorSet colors) const {
  if (!colors.subset_of(all_colors())) {
    throw PreconditionError("color set {" + colors.to_string() + "} is not inside [" + std::to_string(r_) + "]");
  }
  if (x < 0 || x >= n()) throw PreconditionError("vertex " + std::to_string(x) + " out of range");
  std::vector<CoverPart> parts;
  for (Color c : colors.colors()) parts.push_back({c, index_.component_of(c, x)});
  return make_cover(std::move(parts), x);
}

int ColoredCompleteGraph::min_pair_colors() const {
  int best = r_;
  for (VertexId u = 0; u < n(); ++u) {
    for (VertexId v = u + 1; v < n(); ++v) best = std::min(best, colors(u, v).size());
  }
  return best;
}

GyarfasResult gyarfas_graph(const Hypergraph& h) {
  if (!h.has_classes()) throw PreconditionError("Gyárfás graph needs declared partite classes");
  if (auto report = validate(h); !report.empty()) {
    throw PreconditionError("hypergraph is not r-partite r-uniform: " + report.front().invariant + " " +
                            report.front().witness);
  }
  if (h.rank() > kMaxColors) throw PreconditionError("too many classes for a color mask");
  const int n = static_cast<int>(h.edge_count());
  ColorMatrix colors(n);
  std::vector<std::pair<VertexId, VertexId>> missing;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      ColorSet s;
      const Edge& a = h.edge(u);
      const Edge& b = h.edge(v);
      for (VertexId x : a) {
        if (std::binary_search(b.begin(), b.end(), x)) s.insert(*h.class_of(x));
      }
      colors.set(u, v, s);
      if (s.empty()) missing.emplace_back(u, v);
    }
  }
  if (!missing.empty()) return PartialColoredGraph{h.rank(), std::move(colors), std::move(missing)};
  return ColoredCompleteGraph(h.rank(), std::move(colors));
}

ColoredCompleteGraph transitive_closure(int r, const ColorMatrix& colors) {
  const int n = colors.n();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (colors.get(u, v).empty()) {
        throw PreconditionError("not complete: pair (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has no color");
      }
    }
  }
  ComponentIndex index(r, colors);
  ColorMatrix closed(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      ColorSet s;
      for (Color c = 1; c <= r; ++c) {
        if (index.component_id(c, u) == index.component_id(c, v)) s.insert(c);
      }
      closed.set(u, v, s);
    }
  }
  return ColoredCompleteGraph(r, std::move(closed));
}

ColoredCompleteGraph transitive_closure(const ColoredCompleteGraph& g) {
  return transitive_closure(g.r(), g.matrix());
}

ComponentCover Contraction::lift(const ComponentCover& cover) const {
  std::vector<CoverPart> parts;
  for (const auto& part : cover.parts) {
    CoverPart expanded{part.color, {}};
    for (VertexId v : part.vertices) {
      expanded.vertices.insert(expanded.vertices.end(), classes[v].begin(), classes[v].end());
    }
    parts.push_back(std::move(expanded));
  }
  std::optional<VertexId> common;
  if (cover.common_vertex) common = classes[*cover.common_vertex].front();
  return make_cover(std::move(parts), common);
}

Contraction contract_full_color_classes(const ColoredCompleteGraph& g) {
  if (!g.is_transitive()) throw PreconditionError("contraction needs a transitive coloring");
  const int n = g.n();
  const ColorSet all = g.all_colors();
  DisjointSets sets(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (g.colors(u, v) == all) sets.unite(u, v);
    }
  }
  std::vector<int> class_id(n, -1);
  std::vector<std::vector<VertexId>> classes;
  for (VertexId v = 0; v < n; ++v) {
    int root = sets.find(v);
    if (class_id[root] == -1) {
      class_id[root] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    class_id[v] = class_id[root];
    classes[class_id[v]].push_back(v);
  }
  const int m = static_cast<int>(classes.size());
  ColorMatrix colors(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) colors.set(a, b, g.colors(classes[a].front(), classes[b].front()));
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      int a = class_id[u];
      int b = class_id[v];
      ColorSet expected = a == b ? all : colors.get(a, b);
      if (g.colors(u, v) != expected) {
        throw InternalError("contracted colors are not well defined at pair (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
      }
    }
  }
  return Contraction{ColoredCompleteGraph(g.r(), std::move(colors)), std::move(classes)};
}

ColoredCompleteGraph delete_color(const ColoredCompleteGraph& g, Color c) {
  if (c < 1 || c > g.r()) throw PreconditionError("color " + std::to_string(c) + " outside [r]");
  if (g.r() < 2) throw PreconditionError("cannot delete the only color");
  const std::uint32_t low_mask = (std::uint32_t{1} << (c - 1)) - 1;
  ColorMatrix colors(g.n());
  for (VertexId u = 0; u < g.n(); ++u) {
    for (VertexId v = u + 1; v < g.n(); ++v) {
      const std::uint32_t bits = g.colors(u, v).bits();
      ColorSet reduced((bits & low_mask) | ((bits >> c) << (c - 1)));
      if (reduced.empty()) {
        throw PreconditionError("deletion empties an edge: pair (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has only color " + std::to_string(c));
      }
      colors.set(u, v, reduced);
    }
  }
  return ColoredCompleteGraph(g.r() - 1, std::move(colors));
}

ColoredCompleteGraph induced_subgraph(const ColoredCompleteGraph& g, const std::vector<VertexId>& vertices) {
  ColorMatrix colors(static_cast<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (vertices[a] == vertices[b]) throw PreconditionError("repeated vertex " + std::to_string(vertices[a]));
      colors.set(static_cast<VertexId>(a), static_cast<VertexId>(b), g.colors(vertices[a], vertices[b]));
    }
  }
  return ColoredCompleteGraph(g.r(), std::move(colors));
}

CgfData parse_cgf(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto fail = [&line_no](const std::string& what) -> InputError {
    return InputError("CGF line " + std::to_string(line_no) + ": " + what);
  };
  auto parse_int = [&](const std::string& token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw fail("expected an integer, got '" + token + "'");
    }
    if (used != token.size()) throw fail("expected an integer, got '" + token + "'");
    return value;
  };

  CgfData data;
  bool have_header = false;
  std::vector<char> seen;
  std::size_t pair_count = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> tok;
    for (std::string t; tokens >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "colored") {
      if (have_header) throw fail("header given twice");
      if (tok.size() != 5 || tok[1] != "n" || tok[3] != "r") throw fail("expected 'colored n <int> r <int>'");
      int n = parse_int(tok[2]);
      data.r = parse_int(tok[4]);
      if (n < 0) throw fail("n must be nonnegative");
      if (data.r < 1 || data.r > kMaxColors) throw fail("r must be in 1.." + std::to_string(kMaxColors));
      data.colors = ColorMatrix(n);
      seen.assign(static_cast<std::size_t>(n) * n, 0);
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) throw fail("'e' before header");
      if (tok.size() != 4) throw fail("expected 'e <u> <v> <c1,c2,...>'");
      int u = parse_int(tok[1]);
      int v = parse_int(tok[2]);
      const int n = data.colors.n();
      if (u < 0 || v < 0 || u >= n || v >= n) throw fail("vertex out of range 0.." + std::to_string(n - 1));
      if (u >= v) throw fail("pairs must be listed with u < v");
      if (seen[static_cast<std::size_t>(u) * n + v]) throw fail("pair listed twice");
      seen[static_cast<std::size_t>(u) * n + v] = 1;
      ++pair_count;
      ColorSet s;
      std::istringstream list(tok[3]);
      for (std::string item; std::getline(list, item, ',');) {
        int c = parse_int(item);
        if (c < 1 || c > data.r) throw fail("color " + item + " outside 1.." + std::to_string(data.r));
        s.insert(c);
      }
      if (s.empty()) throw fail("empty color list");
      data.colors.set(u, v, s);
    } else {
      throw fail("unknown keyword '" + tok[0] + "'");
    }
  }
  if (!have_header) throw InputError("CGF: missing 'colored' header");
  const std::size_t n = data.colors.n();
  if (pair_count != n * (n - (n > 0 ? 1 : 0)) / 2) {
    throw InputError("CGF: expected " + std::to_string(n * (n > 0 ? n - 1 : 0) / 2) + " pairs, got " +
                     std::to_string(pair_count));
  }
  return data;
}

ColoredCompleteGraph load_cgf(std::istream& in, bool closure) {
  CgfData data = parse_cgf(in);
  if (closure) return transitive_closure(data.r, data.colors);
  return ColoredCompleteGraph(data.r, std::move(data.colors));
}

ColoredCompleteGraph load_cgf_string(const std::string& text, bool closure) {
  std::istringstream in(text);
  return load_cgf(in, closure);
}

void write_cgf(std::ostream& out, const ColoredCompleteGraph& g) {
  out << "colored n " << g.n() << " r " << g.r() << '\n';
  for (VertexId u = 0; u < g.n(); ++u) {
    for (VertexId v = u + 1; v < g.n(); ++v) out << "e " << u << ' ' << v << ' ' << g.colors(u, v).to_string() << '\n';
  }
}

std::string to_cgf_string(const ColoredCompleteGraph& g) {
  std::ostringstream out;
  write_cgf(out, g);
  return out.str();
}

}  // namespace ryser
