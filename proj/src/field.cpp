#include "floer/field.hpp"

#include "floer/error.hpp"

namespace floer {

Field Field::parse(const std::string& name) {
  if (name == "Q" || name == "q") return {Q};
  if (name == "F2" || name == "f2") return {F2};
  throw DomainError("unknown field '" + name + "' (expected Q or F2)");
}

Rational Field::norm(const Rational& x) const {
  if (kind == Q) return x;
  BigInt den = boost::multiprecision::denominator(x);
  if (den % 2 == 0) throw DomainError("coefficient " + rational_str(x) + " is not defined over F2");
  BigInt num = boost::multiprecision::numerator(x);
  return Rational((num % 2 != 0) ? 1 : 0);
}

Rational Field::inv(const Rational& x) const {
  Rational y = norm(x);
  if (y == 0) throw DomainError("division by zero in " + name());
  return kind == Q ? Rational(1) / y : Rational(1);
}

int rank(Matrix m, const Field& f) {
  int rows = static_cast<int>(m.size());
  if (!rows) return 0;
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Rational inv = f.inv(m[r][c]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational k = f.norm(m[i][c] * inv);
      for (int j = c; j < cols; ++j) m[i][j] = f.norm(m[i][j] - k * m[r][j]);
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> kernel_basis(Matrix m, int cols, const Field& f) {
  int rows = static_cast<int>(m.size());
  std::vector<int> pivcol;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Rational inv = f.inv(m[r][c]);
    for (int j = c; j < cols; ++j) m[r][j] = f.norm(m[r][j] * inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational k = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] = f.norm(m[i][j] - k * m[r][j]);
    }
    pivcol.push_back(c);
    ++r;
  }
  std::vector<char> is_piv(cols, 0);
  for (int c : pivcol) is_piv[c] = 1;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (int i = 0; i < r; ++i) v[pivcol[i]] = f.neg(m[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw SyntaxError("bad rational '" + s + "'");
  }
}

std::string rational_str(const Rational& r) { return r.str(); }

}  // namespace floer
