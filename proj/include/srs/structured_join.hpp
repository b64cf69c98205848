#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "srs/convolution.hpp"
#include "srs/degree_set.hpp"
#include "srs/states.hpp"

namespace srs {

// An inclusion-minimal position set whose values determine the whole
// sigma-vector within a collection, with per-position witness pairs (w1, w0)
// that agree on the set except at that position.
struct SigmaDefiningSet {
  std::vector<int> positions;  // sorted
  std::vector<std::pair<SigVec, SigVec>> witnesses;  // aligned with positions
};

SigmaDefiningSet sigmaDefiningSet(const std::vector<SigVec>& vectors);

// sum over positions outside S of (u[i] - o[i]) * (w1[i] - w0[i]).
long long remainderAt(const WeightVec& u, const WeightVec& o,
                      const std::pair<SigVec, SigVec>& witness, const std::vector<int>& sBar);

// Reindexing of the weight vectors of one sigma-vector group relative to an
// origin, with two checksums that expose wrap-arounds after additions.
class Compression {
 public:
  Compression(const SigmaDefiningSet& defining, SigVec sig, std::vector<int> caps,
              WeightVec origin, int m, int tTop);

  int coordCount() const { return n_ + 2; }
  const std::vector<long long>& coordModuli() const { return moduli_; }

  std::vector<long long> compress(const WeightVec& z) const;
  // Empty result means the coordinates are not the image of any weight
  // vector: a checksum or capacity screen failed.
  std::optional<WeightVec> decompress(const std::vector<long long>& c) const;

 private:
  int n_;
  int m_;
  int t_top_;
  std::vector<int> sPositions_;
  std::vector<int> sBar_;
  std::vector<std::pair<SigVec, SigVec>> witnesses_;
  SigVec sig_;
  std::vector<int> caps_;
  WeightVec origin_;
  long long checksumModulus_;
  std::vector<long long> moduli_;
};

struct FastJoinOptions {
  // Run the compressed convolution even where pairwise merging is cheaper.
  bool forceConvolution = false;
  // Rotates which group element acts as the origin; any choice yields the
  // same output.
  int originChoice = 0;
  // Quadratic pre-check of the pair relation on both inputs.
  bool checkRelation = false;
};

namespace detail {

void checkPairRelation(const std::vector<const StateString*>& strings, int m);

template <typename Ops>
void mergeGroupNaive(const std::map<WeightVec, const typename LanguageOf<Ops>::value_type*>& ga,
                     const std::map<WeightVec, const typename LanguageOf<Ops>::value_type*>& gb,
                     const ProblemPair& pair, LanguageOf<Ops>& out) {
  for (const auto& [wa, ea] : ga) {
    for (const auto& [wb, eb] : gb) {
      auto z = combine(ea->first, eb->first, pair);
      if (!z) continue;
      auto value = Ops::combined(ea->second, eb->second);
      auto slot = out.find(*z);
      if (slot == out.end()) {
        out.emplace(std::move(*z), std::move(value));
      } else {
        Ops::merge(slot->second, value);
      }
    }
  }
}

}  // namespace detail

// Combination of two languages over the same bag, computed per shared
// sigma-vector through compressed convolutions. Output equals the naive
// combination exactly, including per-size multiplicities.
template <typename Ops>
LanguageOf<Ops> fastJoin(const LanguageOf<Ops>& a, const LanguageOf<Ops>& b,
                         const ProblemPair& pair, int m, int graphN,
                         const FastJoinOptions& opts = {}) {
  if (!pair.bothFinite()) {
    throw InvariantError("fast join requires finite sigma and rho");
  }
  LanguageOf<Ops> out;
  if (a.empty() || b.empty()) return out;
  const size_t bagSize = a.begin()->first.size();
  if (bagSize == 0 || (!opts.forceConvolution && (a.size() == 1 || b.size() == 1))) {
    return combineLanguagesNaive<Ops>(a, b, pair);
  }
  if (opts.checkRelation) {
    std::vector<const StateString*> sa, sb;
    for (const auto& e : a) sa.push_back(&e.first);
    for (const auto& e : b) sb.push_back(&e.first);
    detail::checkPairRelation(sa, m);
    detail::checkPairRelation(sb, m);
  }

  using Entry = typename LanguageOf<Ops>::value_type;
  std::map<SigVec, std::map<WeightVec, const Entry*>> groupsA, groupsB;
  for (const auto& entry : a) {
    groupsA[sigmaVectorOf(entry.first)][weightVectorOf(entry.first)] = &entry;
  }
  for (const auto& entry : b) {
    groupsB[sigmaVectorOf(entry.first)][weightVectorOf(entry.first)] = &entry;
  }

  std::vector<SigVec> shared;
  for (const auto& [sig, group] : groupsA) {
    if (groupsB.count(sig)) shared.push_back(sig);
  }
  if (shared.empty()) return out;

  SigmaDefiningSet defining = sigmaDefiningSet(shared);

  for (const SigVec& sig : shared) {
    const auto& groupA = groupsA[sig];
    const auto& groupB = groupsB[sig];
    std::vector<int> caps = capacities(sig, pair);

    auto pickOrigin = [&](const std::map<WeightVec, const Entry*>& group) {
      auto it = group.begin();
      std::advance(it, static_cast<size_t>(opts.originChoice) % group.size());
      return it->first;
    };
    WeightVec originA = pickOrigin(groupA);
    WeightVec originB = pickOrigin(groupB);
    WeightVec originSum(bagSize);
    for (size_t i = 0; i < bagSize; ++i) originSum[i] = originA[i] + originB[i];

    Compression compA(defining, sig, caps, originA, m, pair.tTop());
    Compression compB(defining, sig, caps, originB, m, pair.tTop());
    Compression compOut(defining, sig, caps, originSum, m, pair.tTop());

    // Coordinates whose modulus is 1 are constant and stay out of the
    // convolution; a trailing axis carries partial-solution sizes.
    std::vector<int> liveCoords;
    std::vector<int> axisModuli;
    for (int c = 0; c < compA.coordCount(); ++c) {
      if (compA.coordModuli()[c] >= 2) {
        liveCoords.push_back(c);
        axisModuli.push_back(static_cast<int>(compA.coordModuli()[c]));
      }
    }
    const bool sizeAxis = Ops::tracksSizes && graphN >= 1;
    if (sizeAxis) axisModuli.push_back(graphN + 1);
    if (axisModuli.empty()) axisModuli.push_back(2);  // degenerate single-point group

    CyclicDomain domain(std::move(axisModuli));
    const long long domainSize = domain.size();

    if (!opts.forceConvolution &&
        static_cast<long long>(groupA.size()) * static_cast<long long>(groupB.size()) <
            domainSize) {
      detail::mergeGroupNaive<Ops>(groupA, groupB, pair, out);
      continue;
    }

    std::vector<BigInt> fa(domainSize, 0), fb(domainSize, 0);
    BigInt sumA = 0, sumB = 0;
    auto scatter = [&](const std::map<WeightVec, const Entry*>& group, const Compression& comp,
                       std::vector<BigInt>& f, BigInt& total) {
      std::vector<int> coords(domain.moduli().size());
      for (const auto& [weights, entry] : group) {
        auto compressed = comp.compress(weights);
        for (size_t i = 0; i < liveCoords.size(); ++i) {
          coords[i] = static_cast<int>(compressed[liveCoords[i]]);
        }
        Ops::forEachTerm(entry->second, [&](int size, const BigInt& count) {
          if (sizeAxis) coords.back() = size;
          f[domain.indexOf(coords)] += count;
          total += count;
        });
      }
    };
    scatter(groupA, compA, fa, sumA);
    scatter(groupB, compB, fb, sumB);
    if (sumA == 0 || sumB == 0) continue;

    std::vector<BigInt> h;
    if (Ops::exactCounts) {
      h = convolveExact(fa, fb, domain, sumA * sumB);
    } else {
      // Indicator inputs: every non-zero image is 1, so any point value is
      // below the domain size and a single prime above it is exact.
      PrimePlan plan = findPrimePlan(domain, BigInt(domainSize));
      std::vector<long long> ra(domainSize), rb(domainSize);
      for (long long i = 0; i < domainSize; ++i) {
        ra[i] = static_cast<long long>(fa[i]);
        rb[i] = static_cast<long long>(fb[i]);
      }
      auto hp = convolveModP(ra, rb, domain, plan);
      h.assign(domainSize, 0);
      for (long long i = 0; i < domainSize; ++i) h[i] = hp[i];
    }

    std::vector<long long> fullCoords(compA.coordCount(), 0);
    for (long long idx = 0; idx < domainSize; ++idx) {
      if (h[idx] == 0) continue;
      auto tuple = domain.tupleOf(idx);
      for (size_t i = 0; i < liveCoords.size(); ++i) fullCoords[liveCoords[i]] = tuple[i];
      auto weights = compOut.decompress(fullCoords);
      if (!weights) continue;
      int size = sizeAxis ? tuple.back() : 0;
      Ops::addTerm(out[stringFromVectors(sig, *weights)], size, h[idx]);
    }
  }
  return out;
}

}  // namespace srs
