#include "srs/structured_join.hpp"

#include <algorithm>
#include <set>

namespace srs {

namespace {

std::vector<uint8_t> project(const SigVec& v, const std::vector<int>& positions) {
  std::vector<uint8_t> out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(v[p]);
  return out;
}

bool allDistinct(const std::vector<SigVec>& vectors, const std::vector<int>& positions) {
  std::set<std::vector<uint8_t>> seen;
  for (const auto& v : vectors) {
    if (!seen.insert(project(v, positions)).second) return false;
  }
  return true;
}

}  // namespace

SigmaDefiningSet sigmaDefiningSet(const std::vector<SigVec>& vectors) {
  if (vectors.empty()) throw InvariantError("sigma-defining set of an empty collection");
  const int n = static_cast<int>(vectors[0].size());

  std::vector<SigVec> distinct;
  {
    std::set<SigVec> seen(vectors.begin(), vectors.end());
    distinct.assign(seen.begin(), seen.end());
  }

  std::vector<int> positions(n);
  for (int i = 0; i < n; ++i) positions[i] = i;

  // Repeatedly drop any position whose removal keeps the projections
  // pairwise distinct.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < positions.size();) {
      std::vector<int> without = positions;
      without.erase(without.begin() + i);
      if (allDistinct(distinct, without)) {
        positions = std::move(without);
        changed = true;
      } else {
        ++i;
      }
    }
  }

  SigmaDefiningSet result;
  result.positions = positions;
  for (size_t i = 0; i < positions.size(); ++i) {
    // Minimality guarantees two vectors agreeing on the other kept positions
    // and differing here.
    std::vector<int> others = positions;
    others.erase(others.begin() + i);
    std::map<std::vector<uint8_t>, std::vector<const SigVec*>> byProjection;
    for (const auto& v : distinct) byProjection[project(v, others)].push_back(&v);
    const SigVec* w1 = nullptr;
    const SigVec* w0 = nullptr;
    for (const auto& [key, group] : byProjection) {
      for (const SigVec* v : group) {
        if ((*v)[positions[i]]) {
          w1 = v;
        } else {
          w0 = v;
        }
      }
      if (w1 && w0) break;
      w1 = w0 = nullptr;
    }
    if (!w1 || !w0) throw InvariantError("witness pair missing for a defining position");
    result.witnesses.push_back({*w1, *w0});
  }
  return result;
}

long long remainderAt(const WeightVec& u, const WeightVec& o,
                      const std::pair<SigVec, SigVec>& witness, const std::vector<int>& sBar) {
  long long sum = 0;
  for (int i : sBar) {
    sum += static_cast<long long>(u[i] - o[i]) *
           (static_cast<int>(witness.first[i]) - static_cast<int>(witness.second[i]));
  }
  return sum;
}

Compression::Compression(const SigmaDefiningSet& defining, SigVec sig, std::vector<int> caps,
                         WeightVec origin, int m, int tTop)
    : n_(static_cast<int>(sig.size())),
      m_(m),
      t_top_(tTop),
      sPositions_(defining.positions),
      witnesses_(defining.witnesses),
      sig_(std::move(sig)),
      caps_(std::move(caps)),
      origin_(std::move(origin)) {
  std::vector<char> inS(n_, 0);
  for (int p : sPositions_) inS[p] = 1;
  for (int i = 0; i < n_; ++i) {
    if (!inS[i]) sBar_.push_back(i);
  }
  checksumModulus_ = 2LL * n_ * (t_top_ + 1);

  moduli_.assign(n_ + 2, 0);
  for (int i : sBar_) moduli_[i] = t_top_ + 1;
  for (int i : sPositions_) moduli_[i] = (caps_[i] + m_) / m_;  // ceil((cap+1)/m)
  moduli_[n_] = checksumModulus_;
  moduli_[n_ + 1] = checksumModulus_;
}

std::vector<long long> Compression::compress(const WeightVec& z) const {
  std::vector<long long> c(n_ + 2, 0);
  for (int i : sBar_) c[i] = z[i] % (t_top_ + 1);
  for (size_t s = 0; s < sPositions_.size(); ++s) {
    const int i = sPositions_[s];
    long long numerator = z[i] - origin_[i] + remainderAt(z, origin_, witnesses_[s], sBar_);
    if (numerator % m_ != 0) {
      throw InvariantError("weight vector violates the residue relation of its group");
    }
    long long q = numerator / m_;
    long long modulus = moduli_[i];
    c[i] = ((q % modulus) + modulus) % modulus;
  }
  long long sumBar = 0, sumS = 0;
  for (int i : sBar_) sumBar += z[i];
  for (int i : sPositions_) sumS += z[i];
  c[n_] = sumBar % checksumModulus_;
  c[n_ + 1] = sumS % checksumModulus_;
  return c;
}

std::optional<WeightVec> Compression::decompress(const std::vector<long long>& c) const {
  WeightVec z(n_, 0);
  for (int i : sBar_) {
    if (c[i] > caps_[i]) return std::nullopt;
    z[i] = static_cast<int>(c[i]);
  }
  for (size_t s = 0; s < sPositions_.size(); ++s) {
    const int i = sPositions_[s];
    long long rem = remainderAt(z, origin_, witnesses_[s], sBar_);
    long long span = static_cast<long long>(m_) * moduli_[i];
    long long value = (m_ * c[i] + origin_[i] - rem) % span;
    if (value < 0) value += span;
    if (value > caps_[i]) return std::nullopt;
    z[i] = static_cast<int>(value);
  }
  long long sumBar = 0, sumS = 0;
  for (int i : sBar_) sumBar += z[i];
  for (int i : sPositions_) sumS += z[i];
  if (sumBar % checksumModulus_ != c[n_] || sumS % checksumModulus_ != c[n_ + 1]) {
    return std::nullopt;
  }
  return z;
}

namespace detail {

void checkPairRelation(const std::vector<const StateString*>& strings, int m) {
  if (strings.size() > 200) return;  // quadratic; only sensible on small inputs
  for (size_t i = 0; i < strings.size(); ++i) {
    for (size_t j = i + 1; j < strings.size(); ++j) {
      if (!relationHolds(*strings[i], *strings[j], m)) {
        throw InvariantError("input language violates the pair relation: " +
                             strings[i]->toString() + " vs " + strings[j]->toString());
      }
    }
  }
}

}  // namespace detail

}  // namespace srs
