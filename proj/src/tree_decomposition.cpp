#include "srs/tree_decomposition.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace srs {

int TreeDecomposition::width() const {
  size_t largest = 0;
  for (const auto& bag : bags) largest = std::max(largest, bag.size());
  return static_cast<int>(largest) - 1;
}

TreeDecomposition TreeDecomposition::parse(std::string_view text, const Graph& g) {
  std::istringstream in{std::string(text)};
  std::string line;
  int numBags = -1, maxBagSize = -1, n = -1;
  TreeDecomposition td;
  std::vector<std::pair<int, int>> treeEdges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "s") {
      std::string kind;
      if (!(ls >> kind >> numBags >> maxBagSize >> n) || kind != "td" || numBags < 1) {
        throw ParseError("bad .td header");
      }
      td.bags.assign(numBags, {});
      td.treeAdj.assign(numBags, {});
      continue;
    }
    if (numBags < 0) throw ParseError("content before .td header");
    if (first == "b") {
      int id = 0;
      if (!(ls >> id) || id < 1 || id > numBags) throw ParseError("bad bag id");
      int v = 0;
      std::vector<int> bag;
      while (ls >> v) {
        if (v < 1 || v > n) throw ParseError("bag vertex out of range");
        bag.push_back(v - 1);
      }
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      td.bags[id - 1] = std::move(bag);
      continue;
    }
    int a = 0, b = 0;
    std::istringstream es(line);
    if (!(es >> a >> b) || a < 1 || b < 1 || a > numBags || b > numBags) {
      throw ParseError("bad tree edge '" + line + "'");
    }
    treeEdges.push_back({a - 1, b - 1});
  }
  if (numBags < 0) throw ParseError("missing .td header");
  if (n != g.n) throw ParseError(".td vertex count does not match graph");
  for (auto [a, b] : treeEdges) {
    td.treeAdj[a].push_back(b);
    td.treeAdj[b].push_back(a);
  }
  td.validate(g);
  return td;
}

void TreeDecomposition::validate(const Graph& g) const {
  const int k = static_cast<int>(bags.size());
  if (k == 0) throw InvariantError("decomposition has no bags");

  long long treeEdges = 0;
  for (const auto& list : treeAdj) treeEdges += static_cast<long long>(list.size());
  if (treeEdges / 2 != k - 1) throw InvariantError("bag connections do not form a tree");
  {
    std::vector<char> seen(k, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 0;
    while (!q.empty()) {
      int b = q.front();
      q.pop();
      ++reached;
      for (int c : treeAdj[b]) {
        if (!seen[c]) {
          seen[c] = 1;
          q.push(c);
        }
      }
    }
    if (reached != k) throw InvariantError("bag connections do not form a tree");
  }

  std::vector<std::vector<int>> bagsOf(g.n);
  for (int b = 0; b < k; ++b) {
    for (int v : bags[b]) {
      if (v < 0 || v >= g.n) throw InvariantError("bag vertex out of range");
      bagsOf[v].push_back(b);
    }
  }
  for (int v = 0; v < g.n; ++v) {
    if (bagsOf[v].empty()) {
      throw InvariantError("vertex " + std::to_string(v + 1) + " is in no bag");
    }
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int b : bagsOf[u]) {
      if (std::binary_search(bags[b].begin(), bags[b].end(), v)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      throw InvariantError("edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                           ") is covered by no bag");
    }
  }
  // Connectivity of each vertex's bag set.
  for (int v = 0; v < g.n; ++v) {
    std::set<int> mine(bagsOf[v].begin(), bagsOf[v].end());
    std::queue<int> q;
    q.push(*mine.begin());
    std::set<int> seen{*mine.begin()};
    while (!q.empty()) {
      int b = q.front();
      q.pop();
      for (int c : treeAdj[b]) {
        if (mine.count(c) && !seen.count(c)) {
          seen.insert(c);
          q.push(c);
        }
      }
    }
    if (seen.size() != mine.size()) {
      throw InvariantError("bags containing vertex " + std::to_string(v + 1) +
                           " are disconnected");
    }
  }
}

std::string TreeDecomposition::toTd(int graphN) const {
  std::ostringstream out;
  out << "s td " << bags.size() << ' ' << width() + 1 << ' ' << graphN << '\n';
  for (size_t b = 0; b < bags.size(); ++b) {
    out << "b " << b + 1;
    for (int v : bags[b]) out << ' ' << v + 1;
    out << '\n';
  }
  for (size_t b = 0; b < bags.size(); ++b) {
    for (int c : treeAdj[b]) {
      if (static_cast<int>(b) < c) out << b + 1 << ' ' << c + 1 << '\n';
    }
  }
  return out.str();
}

TreeDecomposition heuristicDecomposition(const Graph& g) {
  TreeDecomposition td;
  if (g.n == 0) {
    td.bags.push_back({});
    td.treeAdj.push_back({});
    return td;
  }

  std::vector<std::set<int>> work(g.n);
  for (int v = 0; v < g.n; ++v) work[v] = {g.adj[v].begin(), g.adj[v].end()};
  std::vector<char> eliminated(g.n, 0);
  std::vector<int> order;
  std::vector<int> positionOf(g.n, -1);
  std::vector<std::vector<int>> bagOfStep(g.n);

  for (int step = 0; step < g.n; ++step) {
    int best = -1;
    for (int v = 0; v < g.n; ++v) {
      if (eliminated[v]) continue;
      if (best == -1 || work[v].size() < work[best].size()) best = v;
    }
    eliminated[best] = 1;
    positionOf[best] = step;
    order.push_back(best);
    std::vector<int> bag(work[best].begin(), work[best].end());
    bag.push_back(best);
    std::sort(bag.begin(), bag.end());
    bagOfStep[step] = bag;
    // Turn the remaining neighborhood into a clique, then drop the vertex.
    std::vector<int> nbrs(work[best].begin(), work[best].end());
    for (size_t i = 0; i < nbrs.size(); ++i) {
      work[nbrs[i]].erase(best);
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        work[nbrs[i]].insert(nbrs[j]);
        work[nbrs[j]].insert(nbrs[i]);
      }
    }
  }

  td.bags = bagOfStep;
  td.treeAdj.assign(g.n, {});
  for (int step = 0; step < g.n; ++step) {
    // Attach to the bag of the earliest-eliminated vertex in this bag, other
    // than the eliminated vertex itself; isolated bags chain to the next one.
    int parentStep = -1;
    for (int v : bagOfStep[step]) {
      if (v == order[step]) continue;
      if (parentStep == -1 || positionOf[v] < parentStep) parentStep = positionOf[v];
    }
    if (parentStep == -1 && step + 1 < g.n) parentStep = step + 1;
    if (parentStep != -1) {
      td.treeAdj[step].push_back(parentStep);
      td.treeAdj[parentStep].push_back(step);
    }
  }
  td.validate(g);
  return td;
}

TreeDecomposition gridPathDecomposition(int rows, int cols) {
  auto id = [cols](int r, int c) { return r * cols + c; };
  TreeDecomposition td;
  for (int c = 0; c + 1 < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      std::vector<int> bag;
      for (int i = r; i < rows; ++i) bag.push_back(id(i, c));
      for (int i = 0; i <= r; ++i) bag.push_back(id(i, c + 1));
      std::sort(bag.begin(), bag.end());
      td.bags.push_back(bag);
    }
  }
  if (td.bags.empty()) {
    std::vector<int> bag(rows * cols);
    for (int i = 0; i < rows * cols; ++i) bag[i] = i;
    td.bags.push_back(bag);
  }
  td.treeAdj.assign(td.bags.size(), {});
  for (size_t b = 0; b + 1 < td.bags.size(); ++b) {
    td.treeAdj[b].push_back(static_cast<int>(b + 1));
    td.treeAdj[b + 1].push_back(static_cast<int>(b));
  }
  return td;
}

int NiceTreeDecomposition::width() const {
  size_t largest = 0;
  for (const auto& node : nodes) largest = std::max(largest, node.bag.size());
  return static_cast<int>(largest) - 1;
}

void NiceTreeDecomposition::validate(const Graph& g) const {
  if (nodes.empty()) throw InvariantError("empty nice decomposition");
  std::vector<char> isChild(nodes.size(), 0);
  std::vector<char> introduced(g.n, 0);
  for (size_t i = 0; i < nodes.size(); ++i) {
    const NiceNode& node = nodes[i];
    if (!std::is_sorted(node.bag.begin(), node.bag.end())) {
      throw InvariantError("bag not sorted");
    }
    auto bagOf = [&](int idx) -> const std::vector<int>& { return nodes[idx].bag; };
    switch (node.type) {
      case NiceNode::Type::Leaf:
        if (!node.bag.empty()) throw InvariantError("leaf bag not empty");
        if (node.child1 != -1 || node.child2 != -1) throw InvariantError("leaf with children");
        break;
      case NiceNode::Type::Introduce: {
        if (node.child1 < 0 || node.child1 >= static_cast<int>(i) || node.child2 != -1) {
          throw InvariantError("bad introduce children");
        }
        std::vector<int> expected = bagOf(node.child1);
        if (std::binary_search(expected.begin(), expected.end(), node.vertex)) {
          throw InvariantError("introduced vertex already in child bag");
        }
        expected.push_back(node.vertex);
        std::sort(expected.begin(), expected.end());
        if (expected != node.bag) throw InvariantError("introduce bag mismatch");
        introduced[node.vertex] = 1;
        break;
      }
      case NiceNode::Type::Forget: {
        if (node.child1 < 0 || node.child1 >= static_cast<int>(i) || node.child2 != -1) {
          throw InvariantError("bad forget children");
        }
        std::vector<int> expected;
        bool found = false;
        for (int v : bagOf(node.child1)) {
          if (v == node.vertex) {
            found = true;
          } else {
            expected.push_back(v);
          }
        }
        if (!found) throw InvariantError("forgotten vertex not in child bag");
        if (expected != node.bag) throw InvariantError("forget bag mismatch");
        break;
      }
      case NiceNode::Type::Join:
        if (node.child1 < 0 || node.child2 < 0 || node.child1 >= static_cast<int>(i) ||
            node.child2 >= static_cast<int>(i)) {
          throw InvariantError("bad join children");
        }
        if (bagOf(node.child1) != node.bag || bagOf(node.child2) != node.bag) {
          throw InvariantError("join bags differ");
        }
        break;
    }
    if (node.child1 != -1) isChild[node.child1] = 1;
    if (node.child2 != -1) isChild[node.child2] = 1;
  }
  if (!nodes.back().bag.empty()) throw InvariantError("root bag not empty");
  if (isChild[nodes.size() - 1]) throw InvariantError("root is not last");
  for (int v = 0; v < g.n; ++v) {
    if (!introduced[v]) throw InvariantError("vertex never introduced");
  }

  // The nice form is itself a tree decomposition; reuse the axiom checks.
  TreeDecomposition flat;
  flat.bags.reserve(nodes.size());
  flat.treeAdj.assign(nodes.size(), {});
  for (size_t i = 0; i < nodes.size(); ++i) {
    flat.bags.push_back(nodes[i].bag);
    for (int c : {nodes[i].child1, nodes[i].child2}) {
      if (c != -1) {
        flat.treeAdj[i].push_back(c);
        flat.treeAdj[c].push_back(static_cast<int>(i));
      }
    }
  }
  flat.validate(g);
}

namespace {

class NiceBuilder {
 public:
  NiceBuilder(const TreeDecomposition& td, const Graph& g) : td_(td), g_(g) {}

  NiceTreeDecomposition build() {
    int top = buildSubtree(0, -1);
    // Forget the root bag down to the empty bag.
    std::vector<int> bag = out_.nodes[top].bag;
    for (auto it = bag.rbegin(); it != bag.rend(); ++it) top = addForget(top, *it);
    return std::move(out_);
  }

 private:
  int addNode(NiceNode node) {
    out_.nodes.push_back(std::move(node));
    return static_cast<int>(out_.nodes.size()) - 1;
  }

  int addIntroduce(int child, int v) {
    NiceNode node;
    node.type = NiceNode::Type::Introduce;
    node.vertex = v;
    node.child1 = child;
    node.bag = out_.nodes[child].bag;
    node.bag.insert(std::upper_bound(node.bag.begin(), node.bag.end(), v), v);
    return addNode(std::move(node));
  }

  int addForget(int child, int v) {
    NiceNode node;
    node.type = NiceNode::Type::Forget;
    node.vertex = v;
    node.child1 = child;
    for (int w : out_.nodes[child].bag) {
      if (w != v) node.bag.push_back(w);
    }
    return addNode(std::move(node));
  }

  // Build a nice subtree for td bag `b`, ending at a node whose bag equals
  // bags[b]. Children are adapted to b's bag and joined left-heavy.
  int buildSubtree(int b, int parent) {
    const std::vector<int>& bag = td_.bags[b];
    std::vector<int> branches;
    for (int c : td_.treeAdj[b]) {
      if (c == parent) continue;
      int sub = buildSubtree(c, b);
      // forget what leaves the bag, then introduce what enters it
      for (int v : difference(td_.bags[c], bag)) sub = addForget(sub, v);
      for (int v : difference(bag, td_.bags[c])) sub = addIntroduce(sub, v);
      branches.push_back(sub);
    }
    if (branches.empty()) {
      int cur = addNode(NiceNode{});  // leaf, empty bag
      for (int v : bag) cur = addIntroduce(cur, v);
      return cur;
    }
    int acc = branches[0];
    for (size_t i = 1; i < branches.size(); ++i) {
      NiceNode node;
      node.type = NiceNode::Type::Join;
      node.child1 = acc;
      node.child2 = branches[i];
      node.bag = bag;
      acc = addNode(std::move(node));
    }
    return acc;
  }

  static std::vector<int> difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  const TreeDecomposition& td_;
  const Graph& g_;
  NiceTreeDecomposition out_;
};

}  // namespace

NiceTreeDecomposition makeNice(const TreeDecomposition& td, const Graph& g) {
  NiceBuilder builder(td, g);
  return builder.build();
}

}  // namespace srs
