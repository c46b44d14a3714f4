#include "floer/laurent.hpp"

#include <cctype>
#include <cstdlib>

#include "floer/error.hpp"

namespace floer {

Laurent Laurent::monomial(int exp, long long coef) {
  Laurent p;
  p.add(exp, coef);
  return p;
}

long long Laurent::coef(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? 0 : it->second;
}

void Laurent::add(int exp, long long coef) {
  if (coef == 0) return;
  long long& v = c_[exp];
  v += coef;
  if (v == 0) c_.erase(exp);
}

int Laurent::min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
int Laurent::max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

long long Laurent::at_one() const {
  long long s = 0;
  for (auto& [e, c] : c_) s += c;
  return s;
}

bool Laurent::is_symmetric() const { return *this == mirrored(); }

Laurent Laurent::shifted(int k) const {
  Laurent r;
  for (auto& [e, c] : c_) r.c_[e + k] = c;
  return r;
}

Laurent Laurent::mirrored() const {
  Laurent r;
  for (auto& [e, c] : c_) r.c_[-e] = c;
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent r = a;
  for (auto& [e, c] : b.c_) r.add(e, c);
  return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (auto& [e1, c1] : a.c_)
    for (auto& [e2, c2] : b.c_) {
      long long prod;
      if (__builtin_mul_overflow(c1, c2, &prod)) throw ResourceError("Laurent coefficient overflow");
      r.add(e1 + e2, prod);
    }
  return r;
}

static std::string monomial_text(long long absc, int e) {
  if (e == 0) return std::to_string(absc);
  std::string s = absc == 1 ? "" : std::to_string(absc);
  s += "t";
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

std::string Laurent::str() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [e, c] : c_) {
    long long a = c < 0 ? -c : c;
    if (first)
      out += (c < 0 ? "-" : "") + monomial_text(a, e);
    else
      out += (c < 0 ? " - " : " + ") + monomial_text(a, e);
    first = false;
  }
  return out;
}

Laurent Laurent::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw SyntaxError("empty polynomial");
  Laurent r;
  size_t i = 0;
  auto fail = [&](const char* why) {
    throw SyntaxError(std::string("bad polynomial '") + std::string(text) + "': " + why);
  };
  auto read_int = [&](long long& v) {
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) return false;
    v = std::stoll(s.substr(i, j - i));
    i = j;
    return true;
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    long long coef = 1;
    bool has_coef = read_int(coef);
    if (i < s.size() && s[i] == '*') {
      if (!has_coef) fail("dangling *");
      ++i;
    }
    int exp = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
          esign = s[i] == '-' ? -1 : 1;
          ++i;
        }
        long long e;
        if (!read_int(e)) fail("missing exponent");
        exp = static_cast<int>(esign * e);
      }
    } else if (!has_coef) {
      fail("missing term");
    }
    r.add(exp, sign * coef);
  }
  return r;
}

nlohmann::json Laurent::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (auto& [e, c] : c_) j[std::to_string(e)] = c;
  return j;
}

Laurent Laurent::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SyntaxError("polynomial JSON must be an object");
  Laurent r;
  for (auto& [k, v] : j.items()) {
    char* end = nullptr;
    long e = std::strtol(k.c_str(), &end, 10);
    if (k.empty() || *end != '\0') throw SyntaxError("bad exponent key '" + k + "'");
    if (!v.is_number_integer()) throw SyntaxError("coefficient must be an integer");
    r.add(static_cast<int>(e), v.get<long long>());
  }
  return r;
}

Laurent normalize_alexander(const Laurent& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has no normalization");
  int lo = p.min_exp(), hi = p.max_exp();
  if ((lo + hi) % 2 != 0) throw DomainError("polynomial " + p.str() + " has odd span; no symmetric shift");
  Laurent q = p.shifted(-(lo + hi) / 2);
  if (q.at_one() < 0) q = -q;
  if (q.at_one() != 1) throw DomainError("polynomial " + p.str() + " does not take value +-1 at t=1");
  if (!q.is_symmetric()) throw DomainError("polynomial " + p.str() + " is not symmetric after shifting");
  return q;
}

}  // namespace floer
