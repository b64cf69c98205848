#include "srs/graph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace srs {

Graph Graph::empty(int n) {
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  return g;
}

Graph Graph::fromEdges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g = empty(n);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("vertex index out of range");
    if (u == v) throw ParseError("self-loops are not allowed");
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second) continue;
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& list : g.adj) std::sort(list.begin(), list.end());
  return g;
}

Graph Graph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  long long m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      std::string kind;
      if (!(ls >> kind >> n >> m) || kind != "tw" || n < 0 || m < 0) {
        throw ParseError("bad .gr header");
      }
      continue;
    }
    if (n < 0) throw ParseError("edge line before .gr header");
    int u = 0, v = 0;
    std::istringstream es(line);
    if (!(es >> u >> v)) throw ParseError("bad edge line '" + line + "'");
    if (u < 1 || v < 1 || u > n || v > n) throw ParseError("vertex index out of range");
    if (u == v) throw ParseError("self-loops are not allowed");
    edges.push_back({u - 1, v - 1});
  }
  if (n < 0) throw ParseError("missing .gr header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("edge count does not match header");
  }
  return fromEdges(n, edges);
}

bool Graph::hasEdge(int u, int v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

long long Graph::edgeCount() const {
  long long twice = 0;
  for (const auto& list : adj) twice += static_cast<long long>(list.size());
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u) {
    for (int v : adj[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> stack{start}, comp;
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::string Graph::toGr() const {
  std::ostringstream out;
  out << "p tw " << n << ' ' << edgeCount() << '\n';
  for (auto [u, v] : edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph pathGraph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::fromEdges(n, edges);
}

Graph cycleGraph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  if (n >= 3) edges.push_back({n - 1, 0});
  return Graph::fromEdges(n, edges);
}

Graph completeGraph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph::fromEdges(n, edges);
}

Graph gridGraph(int rows, int cols) {
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Graph::fromEdges(rows * cols, edges);
}

Graph gnpGraph(int n, double p, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  // Draw raw engine output so files are byte-identical across platforms.
  auto coin = [&rng, p]() { return (rng() % 1000000) < static_cast<unsigned long long>(p * 1000000.0); };
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin()) edges.push_back({i, j});
    }
  }
  return Graph::fromEdges(n, edges);
}

Graph randomTree(int n, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    edges.push_back({static_cast<int>(rng() % v), v});
  }
  return Graph::fromEdges(n, edges);
}

}  // namespace srs
