#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "srs/graph.hpp"

namespace srs {

// An unrooted tree of bags in PACE .td form, validated against a graph:
// every vertex occurs in a bag, every edge is covered by a bag, and the bags
// containing a fixed vertex form a subtree.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;     // sorted vertex lists
  std::vector<std::vector<int>> treeAdj;  // adjacency between bag indices

  int width() const;

  static TreeDecomposition parse(std::string_view text, const Graph& g);
  void validate(const Graph& g) const;  // throws InvariantError with a witness

  std::string toTd(int graphN) const;
};

// Min-degree elimination ordering; valid but with no width-optimality promise.
TreeDecomposition heuristicDecomposition(const Graph& g);

// The sliding-window path decomposition of a rows x cols grid, width = rows.
TreeDecomposition gridPathDecomposition(int rows, int cols);

struct NiceNode {
  enum class Type { Leaf, Introduce, Forget, Join };
  Type type = Type::Leaf;
  int vertex = -1;           // for Introduce/Forget
  std::vector<int> bag;      // sorted
  int child1 = -1, child2 = -1;
};

// Rooted decomposition with empty root and leaf bags whose internal nodes
// introduce one vertex, forget one vertex, or join two equal-bag children.
// Nodes are stored with children before parents; the root is the last node.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;

  int root() const { return static_cast<int>(nodes.size()) - 1; }
  int width() const;
  int nodeCount() const { return static_cast<int>(nodes.size()); }

  void validate(const Graph& g) const;
};

NiceTreeDecomposition makeNice(const TreeDecomposition& td, const Graph& g);

}  // namespace srs
