#pragma once

#include <set>
#include <vector>

#include "srs/degree_set.hpp"
#include "srs/graph.hpp"
#include "srs/states.hpp"
#include "srs/tree_decomposition.hpp"

namespace srs {

using Tuple = std::vector<int>;
using TupleSet = std::vector<Tuple>;

// Edge predicate between non-negative tuples of arity k + l: sums must avoid
// every forbidden set and hit every positive set.
struct CompatibilitySpec {
  std::vector<std::vector<int>> forbidden;  // F_1..F_k
  std::vector<std::vector<int>> positive;   // P_1..P_l

  int arity() const { return static_cast<int>(forbidden.size() + positive.size()); }
  bool edge(const Tuple& a, const Tuple& b) const;
};

// A subset S' of S preserving, for every tuple b, whether some element of S
// is compatible with b. Output size is at most prod_i (|F_i| + 1).
TupleSet repSetForbidden(const TupleSet& tuples, const std::vector<std::vector<int>>& forbidden);

// Mixed variant: isolated tuples (a positive coordinate beyond its set's
// maximum) are dropped, the rest are split by their positive coordinates and
// reduced per class. Output size is at most (t+1)^(k+l).
TupleSet repSetMixed(const TupleSet& tuples, const std::vector<std::vector<int>>& forbidden,
                     const std::vector<std::vector<int>>& positive);

// Per-position reduction spec in bag order, used by the tree dynamic program.
struct PositionSpec {
  bool isForbidden = false;
  std::vector<int> set;  // forbidden elements, or the positive membership set
};

// Indices (ascending) of a representative subset of `tuples` under the
// in-order position specs.
std::vector<size_t> repSetReduceIndices(const TupleSet& tuples,
                                        const std::vector<PositionSpec>& specs);

bool dpDecideRepSets(const Graph& g, const NiceTreeDecomposition& td, const ProblemPair& pair);

// Exact set of solution sizes witnessed through size-stratified
// representative tables.
std::set<int> repSetSolutionSizes(const Graph& g, const NiceTreeDecomposition& td,
                                  const ProblemPair& pair);

// Size at most k (minimize) or at least k (maximize).
bool dpOptimizeRepSets(const Graph& g, const NiceTreeDecomposition& td, const ProblemPair& pair,
                       bool maximize, int k);

}  // namespace srs
