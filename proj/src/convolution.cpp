#include "srs/convolution.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <thread>

namespace srs {

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulMod(u64 a, u64 b, u64 mod) { return static_cast<u64>(u128(a) * b % mod); }

u64 powModU(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = mulMod(result, base, mod);
    base = mulMod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

}  // namespace

long long powMod(long long base, long long exp, long long mod) {
  return static_cast<long long>(powModU(static_cast<u64>(base % mod + mod), static_cast<u64>(exp),
                                        static_cast<u64>(mod)));
}

bool isPrime64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // Deterministic witness set for 64-bit inputs.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powModU(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulMod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

CyclicDomain::CyclicDomain(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  strides_.reserve(moduli_.size());
  for (int d : moduli_) {
    if (d < 2) throw InvariantError("cyclic domain modulus must be at least 2");
    strides_.push_back(size_);
    if (size_ > (1LL << 40) / d) throw InvariantError("cyclic domain too large");
    size_ *= d;
  }
}

long long CyclicDomain::indexOf(std::span<const int> tuple) const {
  long long idx = 0;
  for (size_t i = 0; i < moduli_.size(); ++i) idx += strides_[i] * tuple[i];
  return idx;
}

std::vector<int> CyclicDomain::tupleOf(long long index) const {
  std::vector<int> tuple(moduli_.size());
  for (size_t i = 0; i < moduli_.size(); ++i) {
    tuple[i] = static_cast<int>(index % moduli_[i]);
    index /= moduli_[i];
  }
  return tuple;
}

namespace {

std::vector<int> distinctModuli(const CyclicDomain& domain) {
  std::set<int> s(domain.moduli().begin(), domain.moduli().end());
  return {s.begin(), s.end()};
}

// Scan x = 2, 3, ... until x^(dprod/d) has exact order d in F_p.
long long rootOfOrder(long long p, long long dprod, int d) {
  for (long long x = 2; x < p; ++x) {
    long long y = powMod(x, dprod / d, p);
    if (powMod(y, d, p) != 1) continue;
    bool exact = true;
    long long acc = 1;
    for (int j = 1; j < d; ++j) {
      acc = static_cast<long long>(mulMod(acc, y, p));
      if (acc == 1) {
        exact = false;
        break;
      }
    }
    if (exact) return y;
  }
  throw InvariantError("no root of unity of order " + std::to_string(d) + " found");
}

PrimePlan planForPrime(const CyclicDomain& domain, long long p, long long dprod) {
  PrimePlan plan;
  plan.prime = p;
  std::map<int, long long> cache;
  for (int d : domain.moduli()) {
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, rootOfOrder(p, dprod, d)).first;
    plan.roots.push_back(it->second);
  }
  return plan;
}

// Primes of the form 1 + dprod * j, ascending, starting above `lowerBound`.
class PrimeStream {
 public:
  // Candidates 1 + dprod * j strictly above `lowerBound`.
  PrimeStream(long long dprod, const BigInt& lowerBound) : dprod_(dprod) {
    BigInt j = lowerBound >= 1 ? (lowerBound - 1) / dprod_ + 1 : BigInt(1);
    if (j < 1) j = 1;
    if (j > (1LL << 61) / dprod_) throw InvariantError("prime search bound too large");
    next_ = static_cast<long long>(j);
  }

  long long next() {
    for (long long j = next_;; ++j) {
      if (j > (1LL << 61) / dprod_) throw InvariantError("prime pool exhausted");
      long long candidate = 1 + dprod_ * j;
      if (isPrime64(static_cast<u64>(candidate))) {
        next_ = j + 1;
        return candidate;
      }
    }
  }

 private:
  long long dprod_;
  long long next_ = 1;
};

void dftAxes(std::vector<long long>& data, const CyclicDomain& domain, const PrimePlan& plan,
             bool inverse) {
  const long long p = plan.prime;
  const auto& moduli = domain.moduli();
  long long stride = 1;
  std::vector<long long> line, powers;
  for (size_t axis = 0; axis < moduli.size(); ++axis) {
    const int d = moduli[axis];
    long long omega = plan.roots[axis];
    if (inverse) omega = powMod(omega, d - 1, p);
    powers.assign(d, 1);
    for (int j = 1; j < d; ++j) {
      powers[j] = static_cast<long long>(mulMod(powers[j - 1], omega, p));
    }
    const long long block = stride * d;
    line.assign(d, 0);
    for (long long base = 0; base < domain.size(); base += block) {
      for (long long off = 0; off < stride; ++off) {
        long long* cell = data.data() + base + off;
        for (int j = 0; j < d; ++j) line[j] = cell[static_cast<long long>(j) * stride];
        for (int k = 0; k < d; ++k) {
          u64 acc = 0;
          int jk = 0;
          for (int j = 0; j < d; ++j) {
            acc += mulMod(static_cast<u64>(line[j]), static_cast<u64>(powers[jk]),
                          static_cast<u64>(p));
            if (acc >= static_cast<u64>(p)) acc -= p;
            jk += k;
            if (jk >= d) jk -= d;
          }
          cell[static_cast<long long>(k) * stride] = static_cast<long long>(acc);
        }
      }
    }
    stride = block;
  }
}

}  // namespace

PrimePlan findPrimePlan(const CyclicDomain& domain, const BigInt& m) {
  if (m < domain.size()) throw InvariantError("prime bound below domain size");
  long long dprod = 1;
  for (int d : distinctModuli(domain)) dprod *= d;
  PrimeStream primes(dprod, m);
  return planForPrime(domain, primes.next(), dprod);
}

std::vector<long long> convolveModP(const std::vector<long long>& f,
                                    const std::vector<long long>& g, const CyclicDomain& domain,
                                    const PrimePlan& plan) {
  const long long p = plan.prime;
  std::vector<long long> fh = f, gh = g;
  dftAxes(fh, domain, plan, false);
  dftAxes(gh, domain, plan, false);
  for (long long i = 0; i < domain.size(); ++i) {
    fh[i] = static_cast<long long>(
        mulMod(static_cast<u64>(fh[i]), static_cast<u64>(gh[i]), static_cast<u64>(p)));
  }
  dftAxes(fh, domain, plan, true);
  // Undo the factor D introduced by forward-then-inverse transforms.
  long long scale = powMod(domain.size() % p, p - 2, p);
  for (auto& value : fh) {
    value = static_cast<long long>(
        mulMod(static_cast<u64>(value), static_cast<u64>(scale), static_cast<u64>(p)));
  }
  return fh;
}

namespace {

int threadBudget() {
  if (const char* env = std::getenv("SRS_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

}  // namespace

std::vector<BigInt> convolveExact(const std::vector<BigInt>& f, const std::vector<BigInt>& g,
                                  const CyclicDomain& domain, const BigInt& m) {
  long long dprod = 1;
  for (int d : distinctModuli(domain)) dprod *= d;
  PrimeStream stream(dprod, BigInt(0));
  std::vector<long long> primes;
  BigInt product = 1;
  while (product <= m) {
    long long p = stream.next();
    primes.push_back(p);
    product *= p;
  }

  const long long size = domain.size();
  std::vector<std::vector<long long>> perPrime(primes.size());
  auto runPrime = [&](size_t pi) {
    long long p = primes[pi];
    PrimePlan plan = planForPrime(domain, p, dprod);
    std::vector<long long> fr(size), gr(size);
    for (long long i = 0; i < size; ++i) {
      fr[i] = static_cast<long long>(f[i] % p);
      gr[i] = static_cast<long long>(g[i] % p);
    }
    perPrime[pi] = convolveModP(fr, gr, domain, plan);
  };

  int budget = std::min<int>(threadBudget(), static_cast<int>(primes.size()));
  if (budget <= 1) {
    for (size_t pi = 0; pi < primes.size(); ++pi) runPrime(pi);
  } else {
    std::vector<std::thread> workers;
    std::atomic<size_t> cursor{0};
    for (int t = 0; t < budget; ++t) {
      workers.emplace_back([&] {
        for (size_t pi = cursor.fetch_add(1); pi < primes.size(); pi = cursor.fetch_add(1)) {
          runPrime(pi);
        }
      });
    }
    for (auto& w : workers) w.join();
  }

  // Incremental reconstruction: maintain the unique residue below the prime
  // product seen so far.
  std::vector<BigInt> result(size, 0);
  BigInt acc = 1;
  for (size_t pi = 0; pi < primes.size(); ++pi) {
    long long p = primes[pi];
    if (pi == 0) {
      for (long long i = 0; i < size; ++i) result[i] = perPrime[pi][i];
      acc = p;
      continue;
    }
    long long accModP = static_cast<long long>(acc % p);
    long long accInv = powMod(accModP, p - 2, p);
    for (long long i = 0; i < size; ++i) {
      long long current = static_cast<long long>(result[i] % p);
      long long delta = (perPrime[pi][i] - current) % p;
      if (delta < 0) delta += p;
      long long factor = static_cast<long long>(
          mulMod(static_cast<u64>(delta), static_cast<u64>(accInv), static_cast<u64>(p)));
      result[i] += acc * factor;
    }
    acc *= p;
  }
  return result;
}

}  // namespace srs
