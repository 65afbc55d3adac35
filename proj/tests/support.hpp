#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ryser/colored_graph.hpp"
#include "ryser/hypergraph.hpp"

namespace support {

using namespace ryser;

inline ColoredCompleteGraph colored(int n, int r, const std::function<ColorSet(int, int)>& col) {
  ColorMatrix m(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) m.set(u, v, col(u, v));
  }
  return ColoredCompleteGraph(r, std::move(m));
}

// Graph whose color c is the partition blocks[c - 1] (block id per vertex).
inline ColoredCompleteGraph from_partitions(int r, const std::vector<std::vector<int>>& blocks) {
  const int n = static_cast<int>(blocks.front().size());
  return colored(n, r, [&](int u, int v) {
    ColorSet s;
    for (int c = 0; c < static_cast<int>(blocks.size()); ++c) {
      if (blocks[c][u] == blocks[c][v]) s.insert(c + 1);
    }
    return s;
  });
}

inline Hypergraph hyp(int r, const std::vector<std::vector<std::string>>& edges) {
  return Hypergraph::from_names(r, edges);
}

inline bool covers_all(const ComponentCover& cover, int n) {
  std::vector<char> hit(n, 0);
  for (const auto& p : cover.parts) {
    for (VertexId v : p.vertices) hit[v] = 1;
  }
  for (char h : hit) {
    if (!h) return false;
  }
  return true;
}

}  // namespace support
