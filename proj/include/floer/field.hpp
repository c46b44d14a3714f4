#pragma once

#include <string>
#include <vector>

#include "floer/rational.hpp"

namespace floer {

// Coefficient field: exact rationals or F2. Elements are Rationals; over F2 they stay in {0,1}.
struct Field {
  enum Kind { Q, F2 };
  Kind kind = Q;

  static Field parse(const std::string& name);
  std::string name() const { return kind == Q ? "Q" : "F2"; }
  Rational norm(const Rational& x) const;
  Rational inv(const Rational& x) const;
  Rational neg(const Rational& x) const { return norm(-x); }
  friend bool operator==(const Field&, const Field&) = default;
};

using Matrix = std::vector<std::vector<Rational>>;

// Rank of a rows x cols matrix.
int rank(Matrix m, const Field& f);
// Basis of {v : m v = 0} for an r x cols matrix, as column vectors of length cols.
std::vector<std::vector<Rational>> kernel_basis(Matrix m, int cols, const Field& f);

Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& r);

}  // namespace floer
