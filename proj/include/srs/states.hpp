#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srs/bigint.hpp"
#include "srs/degree_set.hpp"

namespace srs {

enum class Side : uint8_t { Rho = 0, Sigma = 1 };

// One position of a bag trace: selected-or-not plus the number of selected
// neighbors seen so far (saturated at the side's top when that side's set is
// cofinite).
struct State {
  Side side = Side::Rho;
  int index = 0;

  static State sigma(int index) { return {Side::Sigma, index}; }
  static State rho(int index) { return {Side::Rho, index}; }
  bool isSigma() const { return side == Side::Sigma; }

  auto operator<=>(const State&) const = default;
};

class StateString {
 public:
  StateString() = default;
  explicit StateString(std::vector<State> states) : states_(std::move(states)) {}

  size_t size() const { return states_.size(); }
  bool empty() const { return states_.empty(); }
  const State& operator[](size_t i) const { return states_[i]; }
  State& operator[](size_t i) { return states_[i]; }
  const std::vector<State>& states() const { return states_; }

  void push_back(State s) { states_.push_back(s); }
  StateString withInserted(size_t pos, State s) const;
  StateString withErased(size_t pos) const;

  auto operator<=>(const StateString&) const = default;

  // Debug form, e.g. "s3 s3 s2 r1 r0".
  std::string toString() const;

 private:
  std::vector<State> states_;
};

using SigVec = std::vector<uint8_t>;
using WeightVec = std::vector<int>;

struct VectorTriple {
  SigVec sigVec;
  WeightVec wtVec;
  std::vector<int> mWtVec;
};

VectorTriple decompose(const StateString& x, int m);
SigVec sigmaVectorOf(const StateString& x);
WeightVec weightVectorOf(const StateString& x);
StateString stringFromVectors(const SigVec& sig, const WeightVec& weights);

// Per-position capacities: sTop at sigma positions, rTop at rho positions.
std::vector<int> capacities(const SigVec& sig, const ProblemPair& pair);

// Membership of a clamped state index: exact for finite sets; a saturated
// index (== top) on a cofinite side means "at least top", which is always in.
bool clampedMember(const DegreeSet& set, int index, int top);

// sigma_{sTop - s} / rho_{rTop - r}.
State inverseState(State a, const ProblemPair& pair);

// Position-wise addition of same-side states. On a finite side an overflow
// yields no result; on a cofinite side indices saturate at the top.
std::optional<State> combineStates(State a, State b, const ProblemPair& pair);
std::optional<StateString> combine(const StateString& x, const StateString& y,
                                   const ProblemPair& pair);

// x . sigvec(y) dot mweight(y) congruences: the pair relation used by the
// class-partitioned tables.
bool relationHolds(const StateString& x, const StateString& y, int m);

// Mode payloads: a table maps each string to one of these.
struct DecideOps {
  struct Value {
    bool operator==(const Value&) const = default;
  };
  static Value leaf() { return {}; }
  static void merge(Value&, const Value&) {}
  static Value shifted(const Value& v) { return v; }
  static Value combined(const Value&, const Value&) { return {}; }
  static constexpr bool tracksSizes = false;
  static constexpr bool exactCounts = false;
  template <typename Fn>
  static void forEachTerm(const Value&, Fn&& fn) {
    fn(0, BigInt(1));
  }
  static void addTerm(Value&, int, const BigInt&) {}
};

// Exact witness counts keyed by the number of selected vertices already
// forgotten.
struct CountOps {
  using Value = std::map<int, BigInt>;
  static Value leaf() { return {{0, BigInt(1)}}; }
  static void merge(Value& into, const Value& from) {
    for (const auto& [k, c] : from) into[k] += c;
  }
  static Value shifted(const Value& v) {
    Value out;
    for (const auto& [k, c] : v) out[k + 1] = c;
    return out;
  }
  static Value combined(const Value& a, const Value& b) {
    Value out;
    for (const auto& [ka, ca] : a) {
      for (const auto& [kb, cb] : b) out[ka + kb] += ca * cb;
    }
    return out;
  }
  static constexpr bool tracksSizes = true;
  static constexpr bool exactCounts = true;
  template <typename Fn>
  static void forEachTerm(const Value& v, Fn&& fn) {
    for (const auto& [k, c] : v) fn(k, c);
  }
  static void addTerm(Value& v, int size, const BigInt& c) { v[size] += c; }
};

// Achievable sizes only; used by the optimization modes.
struct ReachOps {
  using Value = std::set<int>;
  static Value leaf() { return {0}; }
  static void merge(Value& into, const Value& from) { into.insert(from.begin(), from.end()); }
  static Value shifted(const Value& v) {
    Value out;
    for (int k : v) out.insert(k + 1);
    return out;
  }
  static Value combined(const Value& a, const Value& b) {
    Value out;
    for (int ka : a) {
      for (int kb : b) out.insert(ka + kb);
    }
    return out;
  }
  static constexpr bool tracksSizes = true;
  static constexpr bool exactCounts = false;
  template <typename Fn>
  static void forEachTerm(const Value& v, Fn&& fn) {
    for (int k : v) fn(k, BigInt(1));
  }
  static void addTerm(Value& v, int size, const BigInt&) { v.insert(size); }
};

template <typename Ops>
using LanguageOf = std::map<StateString, typename Ops::Value>;

// A string set with per-size witness counts; the general-purpose language
// shape shared by the oracle and the counting tables.
using Language = LanguageOf<CountOps>;

template <typename Ops>
LanguageOf<Ops> combineLanguagesNaive(const LanguageOf<Ops>& a, const LanguageOf<Ops>& b,
                                      const ProblemPair& pair) {
  // Only strings with equal sigma-vectors can combine; bucket first.
  std::map<SigVec, std::vector<const typename LanguageOf<Ops>::value_type*>> bucketsA, bucketsB;
  for (const auto& entry : a) bucketsA[sigmaVectorOf(entry.first)].push_back(&entry);
  for (const auto& entry : b) bucketsB[sigmaVectorOf(entry.first)].push_back(&entry);

  LanguageOf<Ops> out;
  for (const auto& [sig, listA] : bucketsA) {
    auto it = bucketsB.find(sig);
    if (it == bucketsB.end()) continue;
    for (const auto* ea : listA) {
      for (const auto* eb : it->second) {
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
  return out;
}

}  // namespace srs
