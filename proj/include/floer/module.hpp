#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "floer/filtered.hpp"

namespace floer {

struct Torsion {
  int n = 1;    // T_n = F[u]/(u^n)
  int top = 0;  // grading of the generator; u lowers grading by 2
  friend bool operator==(const Torsion&, const Torsion&) = default;
  friend auto operator<=>(const Torsion&, const Torsion&) = default;
};

// Graded F[u]-module: towers F[u^-1] (bottom gradings) plus finite torsion summands.
// `free` is the rank per grading of the finite (reduced) part.
struct HomologyDescription {
  std::vector<int> towers;
  std::vector<Torsion> torsion;
  std::map<int, int> free;

  int reduced_rank() const;
  void add(const HomologyDescription& o);
  void normalize();  // sorts summands and recomputes `free` from the torsion list
  nlohmann::json to_json() const;
  std::string str() const;
  friend bool operator==(const HomologyDescription&, const HomologyDescription&) = default;
};

// Chain complex with a degree -2 chain map u, truncated so that homology is exact in
// gradings <= top_valid. Summands reaching top_valid (in their parity) are reported as towers.
struct UComplex {
  FilteredComplex c;  // A is ignored
  std::map<std::pair<std::string, std::string>, Rational> u;
  int top_valid = 0;
};

HomologyDescription u_module_homology(const UComplex& uc);

}  // namespace floer
