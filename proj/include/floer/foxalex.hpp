#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "floer/knotio.hpp"
#include "floer/laurent.hpp"

namespace floer {

struct Letter {
  int gen = 1;  // 1-based
  int exp = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct FreeWord {
  std::vector<Letter> letters;

  static FreeWord gen(int i, int exp = 1) { return FreeWord{{{i, exp}}}; }
  FreeWord inverse() const;
  FreeWord reduced() const;
  int exponent_sum() const;
  std::string str() const;  // "x1x2x1^-1", "1" for the empty word
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

// Formal integer combination of words, kept uncombined (one entry per Fox term).
struct GroupRingElement {
  std::vector<std::pair<int, FreeWord>> terms;  // (coefficient, word)
  std::string str() const;
};

struct Presentation {
  int g = 0;
  std::vector<FreeWord> relators;
  nlohmann::json to_json() const;
};

// Multiset of (Alexander exponent, sign) monomials, stored with multiplicities.
struct GeneratorSpectrum {
  std::map<std::pair<int, int>, long long> counts;

  long long size() const;
  Laurent signed_sum() const;
  nlohmann::json to_json() const;
};

Presentation wirtinger(const KnotDiagram& d);
GroupRingElement fox_derivative(const FreeWord& w, int i);
Laurent abelianize(const GroupRingElement& e);
Laurent abelianize(const FreeWord& w);

// Square Fox matrix: relators x generators 1..g-1, each entry its uncombined monomials.
using MonomialList = std::vector<std::pair<int, int>>;  // (exponent, sign)
std::vector<std::vector<MonomialList>> fox_matrix(const Presentation& p);

Laurent alexander(const Presentation& p);
Laurent alexander(const KnotDiagram& d);

inline constexpr long long kDefaultTermCap = 100000000;
GeneratorSpectrum generator_spectrum(const Presentation& p, long long cap = kDefaultTermCap);

}  // namespace floer
