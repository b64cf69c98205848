#pragma once

#include <functional>
#include <map>
#include <optional>

#include "srs/degree_set.hpp"
#include "srs/graph.hpp"
#include "srs/states.hpp"
#include "srs/structured_join.hpp"
#include "srs/tree_decomposition.hpp"

namespace srs {

enum class Mode { Decide, Count, Minimize, Maximize };
enum class JoinKind {
  Naive,
  Structured,
  // Compute joins both ways and fail loudly on any disagreement.
  Checked,
};

// Residue-partitioned table: classes[i] holds strings witnessed by a partial
// solution whose forgotten part has size = i (mod m).
template <typename Ops>
struct DpTable {
  int m = 1;
  std::vector<LanguageOf<Ops>> classes;

  explicit DpTable(int m = 1) : m(m), classes(m) {}
};

template <typename Ops>
DpTable<Ops> leafTable(int m) {
  DpTable<Ops> table(m);
  table.classes[0].emplace(StateString{}, Ops::leaf());
  return table;
}

template <typename Ops>
void mergeInto(LanguageOf<Ops>& into, StateString key, typename Ops::Value value) {
  auto slot = into.find(key);
  if (slot == into.end()) {
    into.emplace(std::move(key), std::move(value));
  } else {
    Ops::merge(slot->second, value);
  }
}

// Drop the forgotten position. Strings survive when the vertex is happy;
// selected survivors move up one residue class and one size unit.
template <typename Ops>
DpTable<Ops> forgetStep(const DpTable<Ops>& child, const std::vector<int>& childBag, int vertex,
                        const ProblemPair& pair) {
  const size_t pos =
      std::lower_bound(childBag.begin(), childBag.end(), vertex) - childBag.begin();
  DpTable<Ops> out(child.m);
  for (int i = 0; i < child.m; ++i) {
    for (const auto& [x, value] : child.classes[i]) {
      const State st = x[pos];
      const DegreeSet& set = st.isSigma() ? pair.sigma() : pair.rho();
      const int top = st.isSigma() ? pair.sTop() : pair.rTop();
      if (!clampedMember(set, st.index, top)) continue;
      StateString projected = x.withErased(pos);
      if (st.isSigma()) {
        mergeInto<Ops>(out.classes[(i + 1) % child.m], std::move(projected),
                       Ops::shifted(value));
      } else {
        mergeInto<Ops>(out.classes[i], std::move(projected), value);
      }
    }
  }
  return out;
}

// Extend every string by the two selection choices for the new vertex. On a
// finite side an index beyond the top kills the extension; on a cofinite
// side indices saturate.
template <typename Ops>
DpTable<Ops> introduceStep(const DpTable<Ops>& child, const std::vector<int>& childBag,
                           int vertex, const Graph& g, const ProblemPair& pair) {
  std::vector<int> newBag = childBag;
  const size_t pos =
      std::lower_bound(newBag.begin(), newBag.end(), vertex) - newBag.begin();
  newBag.insert(newBag.begin() + pos, vertex);
  std::vector<size_t> nbrPositions;
  for (size_t j = 0; j < childBag.size(); ++j) {
    if (g.hasEdge(vertex, childBag[j])) nbrPositions.push_back(j);
  }

  DpTable<Ops> out(child.m);
  for (int i = 0; i < child.m; ++i) {
    for (const auto& [x, value] : child.classes[i]) {
      int selectedNbrs = 0;
      for (size_t j : nbrPositions) selectedNbrs += x[j].isSigma() ? 1 : 0;

      // Unselected extension: only the new position is added.
      {
        int idx = selectedNbrs;
        bool alive = true;
        if (idx > pair.rTop()) {
          if (pair.rho().isCofinite()) {
            idx = pair.rTop();
          } else {
            alive = false;
          }
        }
        if (alive) {
          mergeInto<Ops>(out.classes[i], x.withInserted(pos, State::rho(idx)), value);
        }
      }

      // Selected extension: neighbors gain one selected neighbor each.
      {
        bool alive = true;
        int own = selectedNbrs;
        if (own > pair.sTop()) {
          if (pair.sigma().isCofinite()) {
            own = pair.sTop();
          } else {
            alive = false;
          }
        }
        StateString extended = x;
        for (size_t j : nbrPositions) {
          if (!alive) break;
          State st = extended[j];
          const int top = st.isSigma() ? pair.sTop() : pair.rTop();
          const DegreeSet& set = st.isSigma() ? pair.sigma() : pair.rho();
          if (st.index + 1 > top) {
            if (set.isCofinite()) continue;  // already saturated
            alive = false;
            break;
          }
          extended[j] = State{st.side, st.index + 1};
        }
        if (alive) {
          mergeInto<Ops>(out.classes[i], extended.withInserted(pos, State::sigma(own)), value);
        }
      }
    }
  }
  return out;
}

// Rewrite one join child so indices no longer count selected bag vertices;
// saturated cofinite indices stay saturated.
template <typename Ops>
DpTable<Ops> joinAdjust(const DpTable<Ops>& child, const std::vector<int>& bag, const Graph& g,
                        const ProblemPair& pair) {
  std::vector<std::vector<size_t>> bagNbrs(bag.size());
  for (size_t p = 0; p < bag.size(); ++p) {
    for (size_t q = 0; q < bag.size(); ++q) {
      if (p != q && g.hasEdge(bag[p], bag[q])) bagNbrs[p].push_back(q);
    }
  }
  DpTable<Ops> out(child.m);
  for (int i = 0; i < child.m; ++i) {
    for (const auto& [x, value] : child.classes[i]) {
      StateString adjusted = x;
      for (size_t p = 0; p < bag.size(); ++p) {
        int sub = 0;
        for (size_t q : bagNbrs[p]) sub += x[q].isSigma() ? 1 : 0;
        State st = adjusted[p];
        const DegreeSet& set = st.isSigma() ? pair.sigma() : pair.rho();
        const int top = st.isSigma() ? pair.sTop() : pair.rTop();
        if (set.isCofinite() && st.index == top) continue;
        if (st.index - sub < 0) {
          throw InvariantError("join adjustment underflow; table is inconsistent");
        }
        adjusted[p] = State{st.side, st.index - sub};
      }
      mergeInto<Ops>(out.classes[i], std::move(adjusted), value);
    }
  }
  return out;
}

template <typename Ops>
using Joiner =
    std::function<LanguageOf<Ops>(const LanguageOf<Ops>&, const LanguageOf<Ops>&)>;

// Class-convolving join; the left table must already be adjusted.
template <typename Ops>
DpTable<Ops> joinStep(const DpTable<Ops>& left, const DpTable<Ops>& right,
                      const Joiner<Ops>& joiner) {
  if (left.m != right.m) throw InvariantError("join of tables with different moduli");
  DpTable<Ops> out(left.m);
  for (int j = 0; j < left.m; ++j) {
    if (left.classes[j].empty()) continue;
    for (int k = 0; k < right.m; ++k) {
      if (right.classes[k].empty()) continue;
      auto combined = joiner(left.classes[j], right.classes[k]);
      int target = (j + k) % left.m;
      for (auto& [key, value] : combined) {
        mergeInto<Ops>(out.classes[target], key, std::move(value));
      }
    }
  }
  return out;
}

struct DpOptions {
  JoinKind join = JoinKind::Naive;
  // Per-node class-size bound and pair-relation assertions.
  bool checkInvariants = false;
  FastJoinOptions fastJoin;
  // Observer invoked after each node with the table's per-class sizes.
  std::function<void(int node, const std::vector<size_t>& classSizes)> onNode;
};

struct SolveResult {
  Mode mode = Mode::Decide;
  bool decision = false;
  std::map<int, BigInt> countsBySize;  // count mode
  BigInt total = 0;
  std::optional<int> best;  // minimize / maximize
  int width = -1;
  int nodeCount = 0;
  double elapsedMs = 0.0;
};

SolveResult solveDp(const Graph& g, const NiceTreeDecomposition& td, const ProblemPair& pair,
                    Mode mode, const DpOptions& opts = {});

// Polynomial shortcuts for rho = {0} and the all/all pair.
BigInt trivialCount(const Graph& g, const ProblemPair& pair);
std::map<int, BigInt> trivialCountsBySize(const Graph& g, const ProblemPair& pair);

}  // namespace srs
