#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "floer/field.hpp"

namespace floer {

struct Gen {
  std::string id;
  int A = 0;
  int gr = 0;
  friend bool operator==(const Gen&, const Gen&) = default;
};

// Finite complex with an Alexander filtration. Differential entries d[(src, tgt)] are nonzero.
struct FilteredComplex {
  Field field;
  std::vector<Gen> gens;
  std::map<std::pair<std::string, std::string>, Rational> d;

  int index(const std::string& id) const;  // -1 when absent
  const Gen& gen(const std::string& id) const;
  Rational coef(const std::string& src, const std::string& tgt) const;
  void set(const std::string& src, const std::string& tgt, const Rational& c);

  nlohmann::json to_json() const;
  static FilteredComplex from_json(const nlohmann::json& j);
};

// Throws FiltrationError / DomainError on the first violated invariant (including d o d = 0).
void validate(const FilteredComplex& c);

FilteredComplex cancel(const FilteredComplex& c, const std::string& x, const std::string& y);
FilteredComplex reduce(const FilteredComplex& c);
// Cancels every invertible arrow regardless of A; what survives is the homology.
FilteredComplex minimal_model(const FilteredComplex& c);

std::map<int, int> homology(const FilteredComplex& c);
// Generator counts per (A, gr) after reduction: ranks of the homology of the associated graded.
std::map<std::pair<int, int>, int> graded_ranks(const FilteredComplex& c);

FilteredComplex dual(const FilteredComplex& c);
FilteredComplex tensor(const FilteredComplex& a, const FilteredComplex& b);

}  // namespace floer
