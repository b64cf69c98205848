#include "srs/dp.hpp"

#include <chrono>

#include "srs/oracle.hpp"

namespace srs {

namespace {

BigInt powBig(long long base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// Class-size ceiling for finite pairs with at least two residue classes.
BigInt classBound(const ProblemPair& pair, int m, size_t bagSize) {
  bool widened = m == 2 && pair.tTop() % 2 == 0 && pair.sTop() == pair.rTop();
  return powBig(pair.tTop() + (widened ? 2 : 1), static_cast<int>(bagSize));
}

template <typename Ops>
void checkTable(const DpTable<Ops>& table, const ProblemPair& pair, size_t bagSize, int node) {
  if (!pair.bothFinite() || table.m < 2) return;
  BigInt bound = classBound(pair, table.m, bagSize);
  for (int i = 0; i < table.m; ++i) {
    const auto& language = table.classes[i];
    if (BigInt(language.size()) > bound) {
      throw InvariantError("class size bound violated at node " + std::to_string(node));
    }
    if (language.size() <= 200) {
      for (auto it = language.begin(); it != language.end(); ++it) {
        for (auto jt = std::next(it); jt != language.end(); ++jt) {
          if (!relationHolds(it->first, jt->first, table.m)) {
            throw InvariantError("pair relation violated at node " + std::to_string(node));
          }
        }
      }
    }
  }
}

template <typename Ops>
Joiner<Ops> makeJoiner(const Graph& g, const ProblemPair& pair, int m, const DpOptions& opts) {
  switch (opts.join) {
    case JoinKind::Naive:
      return [&pair](const LanguageOf<Ops>& x, const LanguageOf<Ops>& y) {
        return combineLanguagesNaive<Ops>(x, y, pair);
      };
    case JoinKind::Structured:
      return [&g, &pair, m, opts](const LanguageOf<Ops>& x, const LanguageOf<Ops>& y) {
        return fastJoin<Ops>(x, y, pair, m, g.n, opts.fastJoin);
      };
    case JoinKind::Checked:
      return [&g, &pair, m, opts](const LanguageOf<Ops>& x, const LanguageOf<Ops>& y) {
        auto fast = fastJoin<Ops>(x, y, pair, m, g.n, opts.fastJoin);
        auto naive = combineLanguagesNaive<Ops>(x, y, pair);
        if (fast != naive) {
          throw InvariantError("structured join disagrees with the naive join");
        }
        return fast;
      };
  }
  throw InvariantError("unknown join kind");
}

template <typename Ops>
DpTable<Ops> runDp(const Graph& g, const NiceTreeDecomposition& td, const ProblemPair& pair,
                   int m, const DpOptions& opts) {
  auto joiner = makeJoiner<Ops>(g, pair, m, opts);
  std::vector<DpTable<Ops>> tables(td.nodes.size(), DpTable<Ops>(0));
  for (size_t i = 0; i < td.nodes.size(); ++i) {
    const NiceNode& node = td.nodes[i];
    switch (node.type) {
      case NiceNode::Type::Leaf:
        tables[i] = leafTable<Ops>(m);
        break;
      case NiceNode::Type::Introduce:
        tables[i] = introduceStep<Ops>(tables[node.child1], td.nodes[node.child1].bag,
                                       node.vertex, g, pair);
        tables[node.child1] = DpTable<Ops>(0);
        break;
      case NiceNode::Type::Forget:
        tables[i] = forgetStep<Ops>(tables[node.child1], td.nodes[node.child1].bag, node.vertex,
                                    pair);
        tables[node.child1] = DpTable<Ops>(0);
        break;
      case NiceNode::Type::Join: {
        auto adjusted = joinAdjust<Ops>(tables[node.child1], node.bag, g, pair);
        tables[i] = joinStep<Ops>(adjusted, tables[node.child2], joiner);
        tables[node.child1] = DpTable<Ops>(0);
        tables[node.child2] = DpTable<Ops>(0);
        break;
      }
    }
    if (opts.checkInvariants) checkTable(tables[i], pair, node.bag.size(), static_cast<int>(i));
    if (opts.onNode) {
      std::vector<size_t> sizes;
      for (const auto& language : tables[i].classes) sizes.push_back(language.size());
      opts.onNode(static_cast<int>(i), sizes);
    }
  }
  return std::move(tables[td.root()]);
}

template <typename Ops>
typename Ops::Value rootValue(const DpTable<Ops>& root) {
  typename Ops::Value merged{};
  bool any = false;
  for (const auto& language : root.classes) {
    auto it = language.find(StateString{});
    if (it != language.end()) {
      if (!any) {
        merged = it->second;
        any = true;
      } else {
        Ops::merge(merged, it->second);
      }
    }
  }
  if (!any) return {};
  return merged;
}

}  // namespace

SolveResult solveDp(const Graph& g, const NiceTreeDecomposition& td, const ProblemPair& pair,
                    Mode mode, const DpOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  const int m = pair.residueModulus();

  SolveResult result;
  result.mode = mode;
  result.width = td.width();
  result.nodeCount = td.nodeCount();

  switch (mode) {
    case Mode::Decide: {
      auto root = runDp<DecideOps>(g, td, pair, m, opts);
      result.decision = false;
      for (const auto& language : root.classes) {
        if (language.count(StateString{})) result.decision = true;
      }
      break;
    }
    case Mode::Count: {
      auto root = runDp<CountOps>(g, td, pair, m, opts);
      result.countsBySize = rootValue<CountOps>(root);
      for (const auto& [size, count] : result.countsBySize) result.total += count;
      result.decision = result.total > 0;
      break;
    }
    case Mode::Minimize:
    case Mode::Maximize: {
      auto root = runDp<ReachOps>(g, td, pair, m, opts);
      auto sizes = rootValue<ReachOps>(root);
      if (!sizes.empty()) {
        result.best = mode == Mode::Minimize ? *sizes.begin() : *sizes.rbegin();
      }
      result.decision = result.best.has_value();
      break;
    }
  }

  result.elapsedMs =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

BigInt trivialCount(const Graph& g, const ProblemPair& pair) {
  BigInt total = 0;
  for (const auto& [size, count] : trivialCountsBySize(g, pair)) total += count;
  return total;
}

std::map<int, BigInt> trivialCountsBySize(const Graph& g, const ProblemPair& pair) {
  if (!pair.isTrivial()) throw InvariantError("pair is not trivial");
  std::map<int, BigInt> counts;
  if (pair.sigma() == DegreeSet::all() && pair.rho() == DegreeSet::all()) {
    // Every subset qualifies.
    std::vector<BigInt> binomial(g.n + 1, 0);
    binomial[0] = 1;
    for (int row = 1; row <= g.n; ++row) {
      for (int k = row; k >= 1; --k) binomial[k] += binomial[k - 1];
    }
    for (int k = 0; k <= g.n; ++k) counts[k] = binomial[k];
    return counts;
  }
  // rho = {0}: solutions are unions of components whose every degree lies in
  // sigma.
  std::vector<int> goodSizes;
  for (const auto& comp : g.components()) {
    bool good = true;
    for (int v : comp) {
      if (!pair.sigma().contains(g.degree(v))) {
        good = false;
        break;
      }
    }
    if (good) goodSizes.push_back(static_cast<int>(comp.size()));
  }
  std::map<int, BigInt> poly{{0, BigInt(1)}};
  for (int size : goodSizes) {
    std::map<int, BigInt> next = poly;
    for (const auto& [k, c] : poly) next[k + size] += c;
    poly = std::move(next);
  }
  return poly;
}

}  // namespace srs
