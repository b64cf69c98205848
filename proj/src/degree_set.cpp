#include "srs/degree_set.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace srs {

namespace {

std::string stripSpace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

int parseNonNegative(std::string_view token) {
  if (token.empty()) throw ParseError("expected a non-negative integer");
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
    throw ParseError("bad integer '" + std::string(token) + "' in degree set");
  }
  return value;
}

std::vector<int> parseElementList(std::string_view body) {
  std::vector<int> elems;
  if (body.empty()) return elems;
  size_t start = 0;
  while (true) {
    size_t comma = body.find(',', start);
    std::string_view token =
        comma == std::string_view::npos ? body.substr(start) : body.substr(start, comma - start);
    elems.push_back(parseNonNegative(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return elems;
}

std::vector<int> checkedSorted(std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  for (size_t i = 0; i + 1 < elems.size(); ++i) {
    if (elems[i] == elems[i + 1]) throw ParseError("duplicate element in degree set");
  }
  if (!elems.empty() && elems.front() < 0) throw ParseError("negative element in degree set");
  return elems;
}

}  // namespace

DegreeSet::DegreeSet(bool cofinite, std::vector<int> members)
    : cofinite_(cofinite), members_(std::move(members)) {}

DegreeSet DegreeSet::makeFinite(std::vector<int> elements) {
  return DegreeSet(false, checkedSorted(std::move(elements)));
}

DegreeSet DegreeSet::makeCofinite(std::vector<int> missing) {
  return DegreeSet(true, checkedSorted(std::move(missing)));
}

DegreeSet DegreeSet::parse(std::string_view text) {
  std::string s = stripSpace(text);
  if (s == "all") return all();
  if (s.rfind(">=", 0) == 0) {
    int k = parseNonNegative(std::string_view(s).substr(2));
    std::vector<int> missing(k);
    std::iota(missing.begin(), missing.end(), 0);
    return makeCofinite(std::move(missing));
  }
  bool cofinite = false;
  std::string_view body = s;
  if (body.rfind("co", 0) == 0) {
    cofinite = true;
    body = body.substr(2);
  }
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
    throw ParseError("bad degree set '" + std::string(text) + "'");
  }
  body = body.substr(1, body.size() - 2);
  auto elems = parseElementList(body);
  return cofinite ? makeCofinite(std::move(elems)) : makeFinite(std::move(elems));
}

bool DegreeSet::contains(long long value) const {
  if (value < 0) return false;
  bool listed = !members_.empty() && value <= members_.back() &&
                std::binary_search(members_.begin(), members_.end(), static_cast<int>(value));
  return cofinite_ ? !listed : listed;
}

int DegreeSet::minValue() const {
  if (!cofinite_) {
    if (members_.empty()) throw InvariantError("minValue of empty degree set");
    return members_.front();
  }
  int candidate = 0;
  for (int missing : members_) {
    if (missing == candidate) {
      ++candidate;
    } else if (missing > candidate) {
      break;
    }
  }
  return candidate;
}

int DegreeSet::topValue() const {
  if (cofinite_) return members_.empty() ? 0 : members_.back() + 1;
  if (members_.empty()) throw InvariantError("topValue of empty degree set");
  return members_.back();
}

int DegreeSet::costValue() const {
  if (cofinite_) return static_cast<int>(members_.size());
  if (members_.empty()) throw InvariantError("costValue of empty degree set");
  return members_.back();
}

std::string DegreeSet::toString() const {
  std::ostringstream out;
  if (cofinite_ && members_.empty()) return "all";
  if (cofinite_) out << "co";
  out << '{';
  for (size_t i = 0; i < members_.size(); ++i) {
    if (i) out << ',';
    out << members_[i];
  }
  out << '}';
  return out.str();
}

MaxStructure maxStructure(const DegreeSet& sigma, const DegreeSet& rho) {
  if (sigma.isEmpty() || rho.isEmpty()) {
    throw InvariantError("maxStructure requires non-empty sets");
  }
  long long g = 0;
  for (const DegreeSet* set : {&sigma, &rho}) {
    if (set->isCofinite()) {
      // Cofinite sets contain consecutive integers, so their pairwise
      // differences contribute a 1 to the gcd.
      g = std::gcd(g, 1LL);
    } else {
      const auto& elems = set->members();
      for (int e : elems) g = std::gcd(g, static_cast<long long>(e - elems.front()));
    }
  }
  if (g == 0) return MaxStructure::inf();
  return MaxStructure::of(static_cast<int>(g));
}

ProblemPair::ProblemPair(DegreeSet sigma, DegreeSet rho)
    : sigma_(std::move(sigma)), rho_(std::move(rho)) {
  if (sigma_.isEmpty() || rho_.isEmpty()) {
    throw InvariantError("solver requires non-empty sigma and rho");
  }
  s_top_ = sigma_.topValue();
  r_top_ = rho_.topValue();
  t_top_ = std::max(s_top_, r_top_);
  s_min_ = sigma_.minValue();
  r_min_ = rho_.minValue();
  m_max_ = maxStructure(sigma_, rho_);
}

bool ProblemPair::isTrivial() const {
  if (rho_ == DegreeSet::makeFinite({0})) return true;
  return sigma_ == DegreeSet::all() && rho_ == DegreeSet::all();
}

int ProblemPair::baseConstant() const {
  if (isTrivial()) {
    throw InvariantError("baseConstant is undefined for trivial pairs; use the shortcut");
  }
  if (!m_max_.atLeast(2)) return s_top_ + r_top_ + 2;
  if (!m_max_.infinite && m_max_.value == 2 && s_top_ == r_top_ && t_top_ % 2 == 0) {
    return t_top_ + 2;
  }
  return t_top_ + 1;
}

int ProblemPair::residueModulus() const {
  if (!bothFinite()) return 1;
  if (m_max_.infinite) return std::max(2, t_top_ + 1);
  return m_max_.value >= 2 ? m_max_.value : 1;
}

}  // namespace srs
