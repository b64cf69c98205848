#include "srs/oracle.hpp"

#include <algorithm>
#include <string>

namespace srs {

namespace {

std::vector<uint32_t> adjacencyMasks(const Graph& g) {
  std::vector<uint32_t> masks(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    for (int w : g.adj[v]) masks[v] |= uint32_t{1} << w;
  }
  return masks;
}

void checkGuard(int n, int guard, const char* what) {
  if (n > guard) {
    throw InvariantError(std::string(what) + ": size " + std::to_string(n) +
                         " exceeds guard " + std::to_string(guard));
  }
}

}  // namespace

std::map<int, BigInt> bruteSolutions(const Graph& g, const ProblemPair& pair, int guard) {
  checkGuard(g.n, guard, "bruteSolutions");
  auto masks = adjacencyMasks(g);
  std::map<int, BigInt> counts;
  const uint32_t limit = g.n >= 32 ? 0 : (uint32_t{1} << g.n);
  for (uint32_t subset = 0;; ++subset) {
    bool good = true;
    for (int v = 0; v < g.n && good; ++v) {
      int selectedNbrs = __builtin_popcount(masks[v] & subset);
      const DegreeSet& set = (subset >> v) & 1 ? pair.sigma() : pair.rho();
      good = set.contains(selectedNbrs);
    }
    if (good) counts[__builtin_popcount(subset)] += 1;
    if (subset + 1 == limit || g.n == 0) break;
  }
  return counts;
}

bool bruteDecide(const Graph& g, const ProblemPair& pair, int guard) {
  for (const auto& [size, count] : bruteSolutions(g, pair, guard)) {
    if (count > 0) return true;
  }
  return false;
}

std::optional<int> bruteBest(const Graph& g, const ProblemPair& pair, bool maximize, int guard) {
  auto counts = bruteSolutions(g, pair, guard);
  std::optional<int> best;
  for (const auto& [size, count] : counts) {
    if (count == 0) continue;
    if (!best || (maximize ? size > *best : size < *best)) best = size;
  }
  return best;
}

std::vector<Language> realizedLanguage(const Graph& g, const std::vector<int>& portals,
                                       const ProblemPair& pair, const RealizedOptions& opts) {
  checkGuard(g.n, opts.guard, "realizedLanguage");
  if (opts.m < 1) throw InvariantError("residue modulus must be positive");
  auto masks = adjacencyMasks(g);

  uint32_t portalMask = 0;
  for (int v : portals) portalMask |= uint32_t{1} << v;

  std::vector<Language> classes(opts.m);
  const uint32_t limit = g.n >= 32 ? 0 : (uint32_t{1} << g.n);
  for (uint32_t subset = 0;; ++subset) {
    bool partial = true;
    for (int v = 0; v < g.n && partial; ++v) {
      if ((portalMask >> v) & 1) continue;
      int selectedNbrs = __builtin_popcount(masks[v] & subset);
      const DegreeSet& set = (subset >> v) & 1 ? pair.sigma() : pair.rho();
      partial = set.contains(selectedNbrs);
    }
    if (partial) {
      StateString trace;
      bool representable = true;
      for (int v : portals) {
        int selectedNbrs = __builtin_popcount(masks[v] & subset);
        bool selected = (subset >> v) & 1;
        int top = selected ? pair.sTop() : pair.rTop();
        if (opts.clamped) {
          const DegreeSet& set = selected ? pair.sigma() : pair.rho();
          if (selectedNbrs > top) {
            if (set.isCofinite()) {
              selectedNbrs = top;
            } else {
              representable = false;
              break;
            }
          }
        }
        trace.push_back(selected ? State::sigma(selectedNbrs) : State::rho(selectedNbrs));
      }
      if (representable) {
        int outside = __builtin_popcount(subset & ~portalMask);
        classes[outside % opts.m][trace][outside] += 1;
      }
    }
    if (subset + 1 == limit || g.n == 0) break;
  }
  return classes;
}

std::vector<BigInt> naiveConvolve(const std::vector<BigInt>& f, const std::vector<BigInt>& g,
                                  const CyclicDomain& domain) {
  const long long size = domain.size();
  std::vector<BigInt> h(size, 0);
  const auto& moduli = domain.moduli();
  for (long long i = 0; i < size; ++i) {
    if (f[i] == 0) continue;
    auto a = domain.tupleOf(i);
    for (long long j = 0; j < size; ++j) {
      if (g[j] == 0) continue;
      auto b = domain.tupleOf(j);
      std::vector<int> sum(a.size());
      for (size_t t = 0; t < a.size(); ++t) sum[t] = (a[t] + b[t]) % moduli[t];
      h[domain.indexOf(sum)] += f[i] * g[j];
    }
  }
  return h;
}

RepCheckResult bruteRepresentativeCheck(const TupleSet& s, const TupleSet& sPrime,
                                        const CompatibilitySpec& spec) {
  const int arity = spec.arity();
  // Values above a coordinate set's maximum all behave the same; one value
  // past the maximum stands in for them.
  std::vector<int> ceilings(arity);
  for (size_t i = 0; i < spec.forbidden.size(); ++i) {
    ceilings[i] = spec.forbidden[i].empty() ? 1 : spec.forbidden[i].back() + 1;
  }
  for (size_t j = 0; j < spec.positive.size(); ++j) {
    ceilings[spec.forbidden.size() + j] =
        spec.positive[j].empty() ? 1 : spec.positive[j].back() + 1;
  }

  Tuple b(arity, 0);
  while (true) {
    bool inS = false, inSPrime = false;
    for (const auto& a : s) {
      if (spec.edge(a, b)) {
        inS = true;
        break;
      }
    }
    for (const auto& a : sPrime) {
      if (spec.edge(a, b)) {
        inSPrime = true;
        break;
      }
    }
    if (inS != inSPrime) return {false, b};

    int pos = 0;
    while (pos < arity && b[pos] == ceilings[pos]) {
      b[pos] = 0;
      ++pos;
    }
    if (pos == arity) break;
    ++b[pos];
  }
  return {true, {}};
}

}  // namespace srs
