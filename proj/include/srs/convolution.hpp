#pragma once

#include <span>
#include <vector>

#include "srs/bigint.hpp"
#include "srs/errors.hpp"

namespace srs {

// Index space Z_{d_1} x ... x Z_{d_n} with every d_i >= 2, laid out
// little-endian: index = sum tuple[i] * prod_{j<i} d_j.
class CyclicDomain {
 public:
  explicit CyclicDomain(std::vector<int> moduli);

  const std::vector<int>& moduli() const { return moduli_; }
  long long size() const { return size_; }
  long long indexOf(std::span<const int> tuple) const;
  std::vector<int> tupleOf(long long index) const;

 private:
  std::vector<int> moduli_;
  std::vector<long long> strides_;
  long long size_ = 1;
};

struct PrimePlan {
  long long prime = 0;
  std::vector<long long> roots;  // per axis, order moduli[i] in F_prime
};

// A prime p > M with p = 1 (mod product of the distinct moduli), together
// with a root of unity of exact order d_i for every axis.
PrimePlan findPrimePlan(const CyclicDomain& domain, const BigInt& m);

// Cyclic convolution h(a) = sum_{a1+a2=a} f(a1) g(a2) over F_p via per-axis
// DFTs. Inputs are residues in [0, p).
std::vector<long long> convolveModP(const std::vector<long long>& f,
                                    const std::vector<long long>& g, const CyclicDomain& domain,
                                    const PrimePlan& plan);

// Exact integer convolution by combining enough primes p = 1 (mod product of
// distinct moduli) to exceed M, which must bound every image of f, g, and h.
std::vector<BigInt> convolveExact(const std::vector<BigInt>& f, const std::vector<BigInt>& g,
                                  const CyclicDomain& domain, const BigInt& m);

bool isPrime64(unsigned long long n);
long long powMod(long long base, long long exp, long long mod);

}  // namespace srs
