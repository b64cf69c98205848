#include "srs/states.hpp"

#include <sstream>

namespace srs {

StateString StateString::withInserted(size_t pos, State s) const {
  std::vector<State> out = states_;
  out.insert(out.begin() + pos, s);
  return StateString(std::move(out));
}

StateString StateString::withErased(size_t pos) const {
  std::vector<State> out = states_;
  out.erase(out.begin() + pos);
  return StateString(std::move(out));
}

std::string StateString::toString() const {
  std::ostringstream out;
  for (size_t i = 0; i < states_.size(); ++i) {
    if (i) out << ' ';
    out << (states_[i].isSigma() ? 's' : 'r') << states_[i].index;
  }
  return out.str();
}

VectorTriple decompose(const StateString& x, int m) {
  VectorTriple triple;
  triple.sigVec.reserve(x.size());
  triple.wtVec.reserve(x.size());
  triple.mWtVec.reserve(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    triple.sigVec.push_back(x[i].isSigma() ? 1 : 0);
    triple.wtVec.push_back(x[i].index);
    triple.mWtVec.push_back(((x[i].index % m) + m) % m);
  }
  return triple;
}

SigVec sigmaVectorOf(const StateString& x) {
  SigVec out;
  out.reserve(x.size());
  for (size_t i = 0; i < x.size(); ++i) out.push_back(x[i].isSigma() ? 1 : 0);
  return out;
}

WeightVec weightVectorOf(const StateString& x) {
  WeightVec out;
  out.reserve(x.size());
  for (size_t i = 0; i < x.size(); ++i) out.push_back(x[i].index);
  return out;
}

StateString stringFromVectors(const SigVec& sig, const WeightVec& weights) {
  std::vector<State> states;
  states.reserve(sig.size());
  for (size_t i = 0; i < sig.size(); ++i) {
    states.push_back(sig[i] ? State::sigma(weights[i]) : State::rho(weights[i]));
  }
  return StateString(std::move(states));
}

std::vector<int> capacities(const SigVec& sig, const ProblemPair& pair) {
  std::vector<int> caps;
  caps.reserve(sig.size());
  for (uint8_t s : sig) caps.push_back(s ? pair.sTop() : pair.rTop());
  return caps;
}

bool clampedMember(const DegreeSet& set, int index, int top) {
  if (set.isCofinite() && index >= top) return true;
  return set.contains(index);
}

State inverseState(State a, const ProblemPair& pair) {
  int top = a.isSigma() ? pair.sTop() : pair.rTop();
  if (a.index < 0 || a.index > top) throw InvariantError("state index out of range");
  return {a.side, top - a.index};
}

std::optional<State> combineStates(State a, State b, const ProblemPair& pair) {
  if (a.side != b.side) return std::nullopt;
  const DegreeSet& set = a.isSigma() ? pair.sigma() : pair.rho();
  int top = a.isSigma() ? pair.sTop() : pair.rTop();
  int sum = a.index + b.index;
  if (set.isCofinite()) return State{a.side, std::min(sum, top)};
  if (sum > top) return std::nullopt;
  return State{a.side, sum};
}

std::optional<StateString> combine(const StateString& x, const StateString& y,
                                   const ProblemPair& pair) {
  if (x.size() != y.size()) throw InvariantError("combining strings of different length");
  std::vector<State> out;
  out.reserve(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    auto s = combineStates(x[i], y[i], pair);
    if (!s) return std::nullopt;
    out.push_back(*s);
  }
  return StateString(std::move(out));
}

bool relationHolds(const StateString& x, const StateString& y, int m) {
  long long left = 0, right = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].isSigma()) left += y[i].index % m;
    if (y[i].isSigma()) right += x[i].index % m;
  }
  return (left - right) % m == 0;
}

}  // namespace srs
