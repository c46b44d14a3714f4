#pragma once

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

namespace floer {

// Integer Laurent polynomial in t. Zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(int exp, long long coef = 1);
  static Laurent constant(long long c) { return monomial(0, c); }

  const std::map<int, long long>& terms() const { return c_; }
  long long coef(int exp) const;
  void add(int exp, long long coef);

  bool is_zero() const { return c_.empty(); }
  int min_exp() const;
  int max_exp() const;
  long long at_one() const;
  bool is_symmetric() const;

  Laurent shifted(int k) const;
  Laurent mirrored() const;  // t -> t^-1
  Laurent operator-() const;

  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }

  std::string str() const;
  static Laurent parse(std::string_view text);
  nlohmann::json to_json() const;
  static Laurent from_json(const nlohmann::json& j);

 private:
  std::map<int, long long> c_;
};

// Symmetric representative with value 1 at t = 1. Throws if no unit multiple qualifies.
Laurent normalize_alexander(const Laurent& p);

}  // namespace floer
