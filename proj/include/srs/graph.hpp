#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srs/errors.hpp"

namespace srs {

// Simple undirected graph. Vertices are 0-indexed internally; the PACE text
// format is 1-indexed.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists, symmetric

  static Graph empty(int n);
  static Graph fromEdges(int n, const std::vector<std::pair<int, int>>& edges);

  // PACE-style .gr text: comment lines start with 'c', header "p tw <n> <m>",
  // then edge lines "<u> <v>". Duplicate edges are dropped, loops rejected.
  static Graph parse(std::string_view text);

  bool hasEdge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  long long edgeCount() const;
  std::vector<std::pair<int, int>> edges() const;
  std::vector<std::vector<int>> components() const;

  std::string toGr() const;
};

Graph pathGraph(int n);
Graph cycleGraph(int n);
Graph completeGraph(int n);
Graph gridGraph(int rows, int cols);
Graph gnpGraph(int n, double p, unsigned long long seed);
// Uniform random tree from a random attachment sequence.
Graph randomTree(int n, unsigned long long seed);

}  // namespace srs
