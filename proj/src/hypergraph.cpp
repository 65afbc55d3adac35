#include "ryser/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "ryser/error.hpp"

namespace ryser {

Hypergraph::Hypergraph(int rank, std::vector<std::string> vertex_names, std::vector<Edge> edges,
                       std::optional<std::vector<std::vector<VertexId>>> classes)
    : rank_(rank), names_(std::move(vertex_names)), edges_(std::move(edges)), classes_(std::move(classes)) {
  if (rank_ < 0) throw PreconditionError("rank must be nonnegative");
  const auto n = static_cast<VertexId>(names_.size());
  auto check_id = [n](VertexId v) {
    if (v < 0 || v >= n) throw PreconditionError("vertex id " + std::to_string(v) + " out of range");
  };
  stars_.assign(names_.size(), {});
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
    auto& edge = edges_[e];
    std::sort(edge.begin(), edge.end());
    for (std::size_t i = 0; i < edge.size(); ++i) {
      check_id(edge[i]);
      if (i == 0 || edge[i] != edge[i - 1]) stars_[edge[i]].push_back(e);
    }
  }
  class_of_.assign(names_.size(), 0);
  if (classes_) {
    for (std::size_t c = 0; c < classes_->size(); ++c) {
      auto& members = (*classes_)[c];
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      for (VertexId v : members) {
        check_id(v);
        if (class_of_[v] == 0) class_of_[v] = static_cast<int>(c) + 1;
      }
    }
  }
}

Hypergraph Hypergraph::from_names(int rank, const std::vector<std::vector<std::string>>& edges,
                                  const std::optional<std::vector<std::vector<std::string>>>& classes) {
  std::vector<std::string> names;
  std::map<std::string, VertexId> ids;
  auto id_of = [&](const std::string& name) {
    auto [it, inserted] = ids.emplace(name, static_cast<VertexId>(names.size()));
    if (inserted) names.push_back(name);
    return it->second;
  };
  std::optional<std::vector<std::vector<VertexId>>> class_ids;
  if (classes) {
    class_ids.emplace();
    for (const auto& cls : *classes) {
      auto& out = class_ids->emplace_back();
      for (const auto& name : cls) out.push_back(id_of(name));
    }
  }
  std::vector<Edge> edge_ids;
  for (const auto& edge : edges) {
    auto& out = edge_ids.emplace_back();
    for (const auto& name : edge) out.push_back(id_of(name));
  }
  return Hypergraph(rank, std::move(names), std::move(edge_ids), std::move(class_ids));
}

std::optional<VertexId> Hypergraph::find_vertex(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

std::optional<int> Hypergraph::class_of(VertexId v) const {
  if (!classes_ || class_of_[v] == 0) return std::nullopt;
  return class_of_[v];
}

std::size_t Hypergraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& s : stars_) best = std::max(best, s.size());
  return best;
}

bool Hypergraph::is_uniform() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [this](const Edge& e) { return static_cast<int>(e.size()) == rank_; });
}

std::string Hypergraph::edge_to_string(EdgeId e) const {
  std::string out = "{";
  for (std::size_t i = 0; i < edges_[e].size(); ++i) {
    if (i) out += ',';
    out += names_[edges_[e][i]];
  }
  return out + "}";
}

ValidationReport validate(const Hypergraph& h) {
  ValidationReport report;
  if (h.has_classes()) {
    const auto& classes = h.classes();
    if (static_cast<int>(classes.size()) != h.rank()) {
      report.push_back({"class count differs from r", std::to_string(classes.size())});
    }
    std::vector<int> seen(h.vertex_count(), 0);
    for (const auto& cls : classes) {
      for (VertexId v : cls) {
        if (++seen[v] == 2) report.push_back({"classes overlap", h.name(v)});
      }
    }
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(h.edge_count()); ++e) {
    const Edge& edge = h.edge(e);
    if (static_cast<int>(edge.size()) != h.rank()) {
      report.push_back({"not r-uniform", h.edge_to_string(e)});
    }
    for (std::size_t i = 1; i < edge.size(); ++i) {
      if (edge[i] == edge[i - 1]) report.push_back({"repeated vertex in edge", h.edge_to_string(e)});
    }
    if (!h.has_classes()) continue;
    for (std::size_t i = 0; i < edge.size(); ++i) {
      auto ci = h.class_of(edge[i]);
      if (!ci) {
        report.push_back({"edge vertex outside classes", h.name(edge[i])});
        continue;
      }
      for (std::size_t j = i + 1; j < edge.size(); ++j) {
        if (edge[j] != edge[i] && h.class_of(edge[j]) == ci) {
          report.push_back({"not r-partite", "(" + h.name(edge[i]) + "," + h.name(edge[j]) + ")"});
        }
      }
    }
  }
  return report;
}

Hypergraph dual(const Hypergraph& h) {
  std::vector<std::string> names;
  names.reserve(h.edge_count());
  for (std::size_t e = 0; e < h.edge_count(); ++e) names.push_back("e" + std::to_string(e));
  std::vector<Edge> edges;
  edges.reserve(h.vertex_count());
  std::size_t rank = 0;
  for (VertexId v = 0; v < static_cast<VertexId>(h.vertex_count()); ++v) {
    edges.push_back(h.star(v));
    rank = std::max(rank, h.star(v).size());
  }
  return Hypergraph(static_cast<int>(rank), std::move(names), std::move(edges));
}

namespace {

std::size_t intersection_size(const Edge& a, const Edge& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

int intersection_level(const Hypergraph& h) {
  if (h.edge_count() == 0) throw PreconditionError("empty hypergraph");
  if (h.edge_count() == 1) return h.rank();
  std::size_t level = h.edge(0).size();
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    for (std::size_t f = e + 1; f < h.edge_count(); ++f) {
      level = std::min(level, intersection_size(h.edge(e), h.edge(f)));
    }
  }
  return static_cast<int>(level);
}

Hypergraph parse_hgf(std::istream& in) {
  int rank = -1;
  std::vector<std::string> names;
  std::map<std::string, VertexId> ids;
  auto id_of = [&](const std::string& name) {
    auto [it, inserted] = ids.emplace(name, static_cast<VertexId>(names.size()));
    if (inserted) names.push_back(name);
    return it->second;
  };
  std::map<int, std::vector<VertexId>> classes;
  std::vector<Edge> edges;

  std::string line;
  int line_no = 0;
  auto fail = [&line_no](const std::string& what) -> InputError {
    return InputError("HGF line " + std::to_string(line_no) + ": " + what);
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

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> tok;
    for (std::string t; tokens >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "r") {
      if (tok.size() != 2) throw fail("'r' takes exactly one value");
      if (rank != -1) throw fail("'r' given twice");
      rank = parse_int(tok[1]);
      if (rank < 1) throw fail("r must be positive");
    } else if (tok[0] == "class") {
      if (rank == -1) throw fail("'class' before 'r'");
      if (tok.size() < 2) throw fail("'class' needs an index");
      int index = parse_int(tok[1]);
      if (index < 1 || index > rank) throw fail("class index out of range 1.." + std::to_string(rank));
      if (classes.count(index)) throw fail("class " + std::to_string(index) + " given twice");
      auto& members = classes[index];
      for (std::size_t i = 2; i < tok.size(); ++i) members.push_back(id_of(tok[i]));
    } else if (tok[0] == "edge") {
      if (rank == -1) throw fail("'edge' before 'r'");
      if (static_cast<int>(tok.size()) - 1 != rank) {
        throw fail("edge has " + std::to_string(tok.size() - 1) + " vertices, expected " + std::to_string(rank));
      }
      Edge edge;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        for (std::size_t j = 1; j < i; ++j) {
          if (tok[j] == tok[i]) throw fail("repeated vertex '" + tok[i] + "' within an edge");
        }
        edge.push_back(id_of(tok[i]));
      }
      edges.push_back(std::move(edge));
    } else {
      throw fail("unknown keyword '" + tok[0] + "'");
    }
  }
  if (rank == -1) throw InputError("HGF: missing 'r' line");

  std::optional<std::vector<std::vector<VertexId>>> class_list;
  if (!classes.empty()) {
    if (static_cast<int>(classes.size()) != rank) {
      throw InputError("HGF: class block has " + std::to_string(classes.size()) + " lines, expected " +
                       std::to_string(rank));
    }
    class_list.emplace();
    for (auto& [index, members] : classes) class_list->push_back(std::move(members));
  }
  return Hypergraph(rank, std::move(names), std::move(edges), std::move(class_list));
}

Hypergraph parse_hgf_string(const std::string& text) {
  std::istringstream in(text);
  return parse_hgf(in);
}

void write_hgf(std::ostream& out, const Hypergraph& h) {
  out << "r " << h.rank() << '\n';
  if (h.has_classes()) {
    for (std::size_t c = 0; c < h.classes().size(); ++c) {
      out << "class " << c + 1;
      for (VertexId v : h.classes()[c]) out << ' ' << h.name(v);
      out << '\n';
    }
  }
  for (const Edge& edge : h.edges()) {
    out << "edge";
    for (VertexId v : edge) out << ' ' << h.name(v);
    out << '\n';
  }
}

std::string to_hgf_string(const Hypergraph& h) {
  std::ostringstream out;
  write_hgf(out, h);
  return out.str();
}

}  // namespace ryser
