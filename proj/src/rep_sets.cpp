#include "srs/rep_sets.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "srs/bigint.hpp"

namespace srs {

namespace {

bool setContains(const std::vector<int>& set, int value) {
  return std::binary_search(set.begin(), set.end(), value);
}

// Coefficients of prod_{f in F}(x + y - f) as a polynomial in y; length
// |F| + 1. A tuple coordinate x avoids F against b exactly when the value at
// y = b is non-zero.
std::vector<BigInt> coordinateCoeffs(int x, const std::vector<int>& f) {
  std::vector<BigInt> coeffs{1};
  for (int forbidden : f) {
    BigInt constant = x - forbidden;
    std::vector<BigInt> next(coeffs.size() + 1, 0);
    for (size_t i = 0; i < coeffs.size(); ++i) {
      next[i] += coeffs[i] * constant;
      next[i + 1] += coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

std::vector<BigInt> tupleVector(const Tuple& a, const std::vector<std::vector<int>>& forbidden) {
  std::vector<BigInt> vec{1};
  for (size_t i = 0; i < forbidden.size(); ++i) {
    auto coeffs = coordinateCoeffs(a[i], forbidden[i]);
    std::vector<BigInt> next(vec.size() * coeffs.size());
    for (size_t u = 0; u < vec.size(); ++u) {
      for (size_t c = 0; c < coeffs.size(); ++c) next[u * coeffs.size() + c] = vec[u] * coeffs[c];
    }
    vec = std::move(next);
  }
  return vec;
}

void normalizeRow(std::vector<BigInt>& row) {
  BigInt g = 0;
  for (const auto& entry : row) g = boost::multiprecision::gcd(g, entry);
  if (g == 0) return;
  for (auto& entry : row) entry /= g;
}

// Greedy row basis over exact integers: a tuple is kept when its vector is
// linearly independent of the vectors kept so far.
class RowBasis {
 public:
  bool tryInsert(std::vector<BigInt> row) {
    normalizeRow(row);
    for (const auto& [pivot, basisRow] : rows_) {
      if (row[pivot] == 0) continue;
      BigInt a = basisRow[pivot];
      BigInt b = row[pivot];
      for (size_t i = 0; i < row.size(); ++i) row[i] = row[i] * a - basisRow[i] * b;
      normalizeRow(row);
    }
    size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (pivot == row.size()) return false;
    rows_.emplace(pivot, std::move(row));
    return true;
  }

  size_t rank() const { return rows_.size(); }

 private:
  std::map<size_t, std::vector<BigInt>> rows_;  // pivot column -> reduced row
};

std::vector<size_t> forbiddenBasisIndices(const TupleSet& tuples,
                                          const std::vector<std::vector<int>>& forbidden,
                                          const std::vector<int>& coords) {
  size_t dim = 1;
  for (const auto& f : forbidden) dim *= f.size() + 1;

  RowBasis basis;
  std::vector<size_t> kept;
  for (size_t idx = 0; idx < tuples.size(); ++idx) {
    if (basis.rank() == dim) break;
    Tuple projected;
    projected.reserve(coords.size());
    for (int c : coords) projected.push_back(tuples[idx][c]);
    if (basis.tryInsert(tupleVector(projected, forbidden))) kept.push_back(idx);
  }
  return kept;
}

}  // namespace

bool CompatibilitySpec::edge(const Tuple& a, const Tuple& b) const {
  const size_t k = forbidden.size();
  for (size_t i = 0; i < k; ++i) {
    if (setContains(forbidden[i], a[i] + b[i])) return false;
  }
  for (size_t j = 0; j < positive.size(); ++j) {
    if (!setContains(positive[j], a[k + j] + b[k + j])) return false;
  }
  return true;
}

TupleSet repSetForbidden(const TupleSet& tuples, const std::vector<std::vector<int>>& forbidden) {
  std::vector<int> coords(forbidden.size());
  std::iota(coords.begin(), coords.end(), 0);
  TupleSet out;
  for (size_t idx : forbiddenBasisIndices(tuples, forbidden, coords)) out.push_back(tuples[idx]);
  return out;
}

TupleSet repSetMixed(const TupleSet& tuples, const std::vector<std::vector<int>>& forbidden,
                     const std::vector<std::vector<int>>& positive) {
  std::vector<PositionSpec> specs;
  for (const auto& f : forbidden) specs.push_back({true, f});
  for (const auto& p : positive) specs.push_back({false, p});
  TupleSet out;
  for (size_t idx : repSetReduceIndices(tuples, specs)) out.push_back(tuples[idx]);
  return out;
}

std::vector<size_t> repSetReduceIndices(const TupleSet& tuples,
                                        const std::vector<PositionSpec>& specs) {
  std::vector<int> forbiddenCoords, positiveCoords;
  std::vector<std::vector<int>> forbiddenSets;
  for (size_t i = 0; i < specs.size(); ++i) {
    if (specs[i].isForbidden) {
      forbiddenCoords.push_back(static_cast<int>(i));
      forbiddenSets.push_back(specs[i].set);
    } else {
      positiveCoords.push_back(static_cast<int>(i));
    }
  }

  // Tuples whose positive coordinate exceeds its set's maximum are isolated
  // and carry no information; group the rest by their positive coordinates.
  std::map<std::vector<int>, std::vector<size_t>> classes;
  for (size_t idx = 0; idx < tuples.size(); ++idx) {
    bool isolated = false;
    std::vector<int> key;
    key.reserve(positiveCoords.size());
    for (int c : positiveCoords) {
      const auto& set = specs[c].set;
      if (set.empty() || tuples[idx][c] > set.back()) {
        isolated = true;
        break;
      }
      key.push_back(tuples[idx][c]);
    }
    if (!isolated) classes[std::move(key)].push_back(idx);
  }

  std::vector<size_t> kept;
  for (const auto& [key, members] : classes) {
    TupleSet classTuples;
    classTuples.reserve(members.size());
    for (size_t idx : members) classTuples.push_back(tuples[idx]);
    for (size_t local : forbiddenBasisIndices(classTuples, forbiddenSets, forbiddenCoords)) {
      kept.push_back(members[local]);
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

namespace {

// Tables of the representative-set program: per sigma-vector (and, when size
// strata are on, per partial-solution size) a set of exact weight tuples
// over the unclamped alphabet.
using StratumKey = std::pair<SigVec, int>;
using RepTable = std::map<StratumKey, std::set<WeightVec>>;

class RepSetEngine {
 public:
  RepSetEngine(const Graph& g, const NiceTreeDecomposition& td, const ProblemPair& pair,
               bool trackSizes)
      : g_(g), td_(td), pair_(pair), trackSizes_(trackSizes) {}

  std::set<int> run() {
    std::vector<RepTable> tables(td_.nodes.size());
    for (size_t i = 0; i < td_.nodes.size(); ++i) {
      const NiceNode& node = td_.nodes[i];
      switch (node.type) {
        case NiceNode::Type::Leaf:
          tables[i] = leaf();
          break;
        case NiceNode::Type::Introduce:
          tables[i] = introduce(tables[node.child1], td_.nodes[node.child1].bag, node);
          tables[node.child1].clear();
          break;
        case NiceNode::Type::Forget:
          tables[i] = forget(tables[node.child1], td_.nodes[node.child1].bag, node);
          tables[node.child1].clear();
          break;
        case NiceNode::Type::Join:
          tables[i] = join(tables[node.child1], tables[node.child2], node);
          tables[node.child1].clear();
          tables[node.child2].clear();
          break;
      }
      reduce(tables[i], node.bag);
    }
    std::set<int> sizes;
    for (const auto& [key, tuples] : tables[td_.root()]) {
      if (!tuples.empty()) sizes.insert(key.second);
    }
    return sizes;
  }

 private:
  RepTable leaf() const {
    RepTable t;
    t[{SigVec{}, 0}].insert(WeightVec{});
    return t;
  }

  RepTable introduce(const RepTable& child, const std::vector<int>& childBag,
                     const NiceNode& node) const {
    const int v = node.vertex;
    size_t pos = std::lower_bound(node.bag.begin(), node.bag.end(), v) - node.bag.begin();
    std::vector<size_t> nbrPositions;
    for (size_t j = 0; j < childBag.size(); ++j) {
      if (g_.hasEdge(v, childBag[j])) nbrPositions.push_back(j);
    }

    RepTable out;
    for (const auto& [key, tuples] : child) {
      const auto& [sig, size] = key;
      int selectedNbrs = 0;
      for (size_t j : nbrPositions) selectedNbrs += sig[j] ? 1 : 0;

      SigVec rhoSig = sig, sigSig = sig;
      rhoSig.insert(rhoSig.begin() + pos, 0);
      sigSig.insert(sigSig.begin() + pos, 1);
      auto& rhoSlot = out[{std::move(rhoSig), size}];
      auto& sigSlot = out[{std::move(sigSig), size}];
      for (const auto& w : tuples) {
        WeightVec rhoW = w;
        rhoW.insert(rhoW.begin() + pos, selectedNbrs);
        rhoSlot.insert(std::move(rhoW));

        WeightVec sigW = w;
        for (size_t j : nbrPositions) ++sigW[j];
        sigW.insert(sigW.begin() + pos, selectedNbrs);
        sigSlot.insert(std::move(sigW));
      }
    }
    return out;
  }

  RepTable forget(const RepTable& child, const std::vector<int>& childBag,
                  const NiceNode& node) const {
    const int v = node.vertex;
    size_t pos = std::lower_bound(childBag.begin(), childBag.end(), v) - childBag.begin();
    RepTable out;
    for (const auto& [key, tuples] : child) {
      const auto& [sig, size] = key;
      const bool selected = sig[pos] != 0;
      const DegreeSet& happySet = selected ? pair_.sigma() : pair_.rho();
      SigVec projectedSig = sig;
      projectedSig.erase(projectedSig.begin() + pos);
      int newSize = size + (selected && trackSizes_ ? 1 : 0);
      auto& slot = out[{std::move(projectedSig), newSize}];
      for (const auto& w : tuples) {
        if (!happySet.contains(w[pos])) continue;
        WeightVec projected = w;
        projected.erase(projected.begin() + pos);
        slot.insert(std::move(projected));
      }
    }
    // Drop strata that ended up empty after the happiness filter.
    for (auto it = out.begin(); it != out.end();) {
      it = it->second.empty() ? out.erase(it) : std::next(it);
    }
    return out;
  }

  RepTable join(const RepTable& left, const RepTable& right, const NiceNode& node) const {
    // Selected bag neighbors are counted by both children; subtract one copy.
    RepTable out;
    for (const auto& [keyL, tuplesL] : left) {
      const auto& [sig, sizeL] = keyL;
      std::vector<int> sharedSelected(node.bag.size(), 0);
      for (size_t j = 0; j < node.bag.size(); ++j) {
        for (size_t h = 0; h < node.bag.size(); ++h) {
          if (sig[h] && g_.hasEdge(node.bag[j], node.bag[h])) ++sharedSelected[j];
        }
      }
      for (const auto& [keyR, tuplesR] : right) {
        if (keyR.first != sig) continue;
        auto& slot = out[{sig, sizeL + keyR.second}];
        for (const auto& wl : tuplesL) {
          for (const auto& wr : tuplesR) {
            WeightVec sum(wl.size());
            for (size_t j = 0; j < wl.size(); ++j) sum[j] = wl[j] + wr[j] - sharedSelected[j];
            slot.insert(std::move(sum));
          }
        }
      }
    }
    return out;
  }

  void reduce(RepTable& table, const std::vector<int>& bag) const {
    if (bag.empty()) return;
    for (auto& [key, tuples] : table) {
      const SigVec& sig = key.first;
      std::vector<PositionSpec> specs(bag.size());
      for (size_t j = 0; j < bag.size(); ++j) {
        const DegreeSet& set = sig[j] ? pair_.sigma() : pair_.rho();
        specs[j].isForbidden = set.isCofinite();
        specs[j].set = set.members();
      }
      TupleSet ordered(tuples.begin(), tuples.end());
      auto keptIdx = repSetReduceIndices(ordered, specs);
      std::set<WeightVec> kept;
      for (size_t idx : keptIdx) kept.insert(ordered[idx]);
      tuples = std::move(kept);
    }
  }

  const Graph& g_;
  const NiceTreeDecomposition& td_;
  const ProblemPair& pair_;
  bool trackSizes_;
};

}  // namespace

bool dpDecideRepSets(const Graph& g, const NiceTreeDecomposition& td, const ProblemPair& pair) {
  RepSetEngine engine(g, td, pair, false);
  return !engine.run().empty();
}

std::set<int> repSetSolutionSizes(const Graph& g, const NiceTreeDecomposition& td,
                                  const ProblemPair& pair) {
  RepSetEngine engine(g, td, pair, true);
  return engine.run();
}

bool dpOptimizeRepSets(const Graph& g, const NiceTreeDecomposition& td, const ProblemPair& pair,
                       bool maximize, int k) {
  auto sizes = repSetSolutionSizes(g, td, pair);
  if (sizes.empty()) return false;
  return maximize ? *sizes.rbegin() >= k : *sizes.begin() <= k;
}

}  // namespace srs
