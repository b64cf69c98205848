#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "srs/errors.hpp"

namespace srs {

// A finite or cofinite subset of the non-negative integers.
//
// For a finite set, members() holds the elements; for a cofinite set it holds
// the (finite) complement. The empty finite set is representable so that test
// layers can exercise it, but solver entry points reject it.
class DegreeSet {
 public:
  static DegreeSet makeFinite(std::vector<int> elements);
  static DegreeSet makeCofinite(std::vector<int> missing);
  static DegreeSet all() { return makeCofinite({}); }

  // Grammar: "{a,b,...}" finite, "co{a,b,...}" cofinite by complement,
  // ">=k" for {k,k+1,...}, "all" for the full set. Whitespace-insensitive.
  static DegreeSet parse(std::string_view text);

  bool isCofinite() const { return cofinite_; }
  bool isEmpty() const { return !cofinite_ && members_.empty(); }
  bool isSingleton() const { return !cofinite_ && members_.size() == 1; }
  bool contains(long long value) const;

  // Elements for a finite set, the complement for a cofinite one.
  const std::vector<int>& members() const { return members_; }

  // Smallest element of the set itself.
  int minValue() const;

  // Finite: the maximum element. Cofinite: largest missing value plus one,
  // and 0 when nothing is missing.
  int topValue() const;

  // Finite: the maximum element. Cofinite: the size of the complement.
  int costValue() const;

  bool operator==(const DegreeSet&) const = default;
  std::string toString() const;

 private:
  DegreeSet(bool cofinite, std::vector<int> members);

  bool cofinite_ = false;
  std::vector<int> members_;  // strictly increasing, all >= 0
};

// The largest m such that within each of the two sets all elements share a
// residue mod m. Infinite exactly when both sets are singletons.
struct MaxStructure {
  bool infinite = false;
  int value = 1;  // meaningful only when !infinite

  static MaxStructure inf() { return {true, 0}; }
  static MaxStructure of(int v) { return {false, v}; }
  bool atLeast(int k) const { return infinite || value >= k; }
  bool operator==(const MaxStructure&) const = default;
};

MaxStructure maxStructure(const DegreeSet& sigma, const DegreeSet& rho);

// A (sigma, rho) problem pair together with the scalar parameters the solvers
// branch on. Immutable after construction; freely shareable across threads.
class ProblemPair {
 public:
  ProblemPair(DegreeSet sigma, DegreeSet rho);

  const DegreeSet& sigma() const { return sigma_; }
  const DegreeSet& rho() const { return rho_; }

  int sTop() const { return s_top_; }
  int rTop() const { return r_top_; }
  int tTop() const { return t_top_; }
  int sMin() const { return s_min_; }
  int rMin() const { return r_min_; }
  MaxStructure mMax() const { return m_max_; }

  bool bothFinite() const { return !sigma_.isCofinite() && !rho_.isCofinite(); }

  // rho == {0} or both sets are the full set; counting is polynomial there.
  bool isTrivial() const;

  // Base of the optimal exponential running time. Rejects trivial pairs.
  int baseConstant() const;

  int costSigma() const { return sigma_.costValue(); }
  int costRho() const { return rho_.costValue(); }
  int tCost() const { return std::max(costSigma(), costRho()); }

  // Residue modulus used by the table-partitioned dynamic program: mMax when
  // both sets are finite and mMax >= 2; tTop+1 (at least 2) when both sets
  // are singletons; 1 otherwise. Any cofinite side forces 1.
  int residueModulus() const;

 private:
  DegreeSet sigma_;
  DegreeSet rho_;
  int s_top_, r_top_, t_top_, s_min_, r_min_;
  MaxStructure m_max_;
};

}  // namespace srs
