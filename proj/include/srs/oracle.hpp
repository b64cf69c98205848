#pragma once

#include <map>
#include <optional>
#include <vector>

#include "srs/bigint.hpp"
#include "srs/convolution.hpp"
#include "srs/degree_set.hpp"
#include "srs/graph.hpp"
#include "srs/rep_sets.hpp"
#include "srs/states.hpp"

namespace srs {

// Exact solution counts by size via subset enumeration.
std::map<int, BigInt> bruteSolutions(const Graph& g, const ProblemPair& pair, int guard = 24);

bool bruteDecide(const Graph& g, const ProblemPair& pair, int guard = 24);
std::optional<int> bruteBest(const Graph& g, const ProblemPair& pair, bool maximize,
                             int guard = 24);

struct RealizedOptions {
  bool clamped = true;   // cap indices at the side tops; exact over-cap traces are dropped
  int m = 1;             // number of residue classes by |S \ U|
  int guard = 20;
};

// classes[i]: strings realized over the portal set with a witness S whose
// outside part has |S \ U| = i (mod m); per-string counts are keyed by
// |S \ U|. With clamped = false the full unclamped alphabet is used.
std::vector<Language> realizedLanguage(const Graph& g, const std::vector<int>& portals,
                                       const ProblemPair& pair, const RealizedOptions& opts = {});

// Quadratic-time reference convolution over exact integers.
std::vector<BigInt> naiveConvolve(const std::vector<BigInt>& f, const std::vector<BigInt>& g,
                                  const CyclicDomain& domain);

struct RepCheckResult {
  bool ok = true;
  Tuple witness;  // a tuple b separating S from S' when !ok
};

// Checks the representativity equivalence over all canonical partners b;
// values beyond each coordinate set's maximum collapse to one sentinel.
RepCheckResult bruteRepresentativeCheck(const TupleSet& s, const TupleSet& sPrime,
                                        const CompatibilitySpec& spec);

}  // namespace srs
