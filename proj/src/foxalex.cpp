#include "floer/foxalex.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "floer/error.hpp"

namespace floer {

FreeWord FreeWord::inverse() const {
  FreeWord r;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back({it->gen, -it->exp});
  return r;
}

FreeWord FreeWord::reduced() const {
  FreeWord r;
  for (auto l : letters) {
    if (!r.letters.empty() && r.letters.back().gen == l.gen && r.letters.back().exp == -l.exp)
      r.letters.pop_back();
    else
      r.letters.push_back(l);
  }
  return r;
}

int FreeWord::exponent_sum() const {
  int s = 0;
  for (auto l : letters) s += l.exp;
  return s;
}

std::string FreeWord::str() const {
  if (letters.empty()) return "1";
  std::string s;
  for (auto l : letters) {
    s += "x" + std::to_string(l.gen);
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

std::string GroupRingElement::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms.size(); ++i) {
    auto& [c, w] = terms[i];
    if (i) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    long long a = c < 0 ? -static_cast<long long>(c) : c;
    if (a != 1) s += std::to_string(a) + (w.letters.empty() ? "" : "*");
    if (a != 1 && w.letters.empty()) continue;
    s += w.str();
  }
  return s;
}

nlohmann::json Presentation::to_json() const {
  nlohmann::json rel = nlohmann::json::array();
  for (auto& w : relators) rel.push_back(w.str());
  return {{"generators", g}, {"relators", rel}};
}

long long GeneratorSpectrum::size() const {
  long long n = 0;
  for (auto& [k, v] : counts) n += v;
  return n;
}

Laurent GeneratorSpectrum::signed_sum() const {
  Laurent p;
  for (auto& [k, v] : counts) p.add(k.first, k.second * v);
  return p;
}

nlohmann::json GeneratorSpectrum::to_json() const {
  nlohmann::json a = nlohmann::json::array();
  for (auto& [k, v] : counts) a.push_back({{"exponent", k.first}, {"sign", k.second}, {"count", v}});
  return a;
}

Presentation wirtinger(const KnotDiagram& d) {
  int n = d.size();
  auto ends = edge_ends(d);
  std::vector<int> arc(d.edges());
  int a = 0;
  for (int e = 0; e < d.edges(); ++e) {
    arc[e] = a % n;
    if (ends[e].second.p == 0) ++a;
  }
  Presentation p;
  p.g = n;
  for (int c = 0; c + 1 < n; ++c) {
    auto& x = d.crossings[c];
    int eps = crossing_sign(d, c);
    int o = arc[x[1] - 1] + 1, in = arc[x[0] - 1] + 1, out = arc[x[2] - 1] + 1;
    p.relators.push_back(FreeWord{{{o, eps}, {in, 1}, {o, -eps}, {out, -1}}});
  }
  return p;
}

GroupRingElement fox_derivative(const FreeWord& w, int i) {
  GroupRingElement r;
  FreeWord prefix;
  for (auto l : w.letters) {
    if (l.gen == i) {
      if (l.exp > 0)
        r.terms.push_back({1, prefix});
      else
        r.terms.push_back({-1, prefix * FreeWord::gen(l.gen, l.exp)});
    }
    prefix.letters.push_back(l);
  }
  return r;
}

Laurent abelianize(const FreeWord& w) { return Laurent::monomial(w.exponent_sum()); }

Laurent abelianize(const GroupRingElement& e) {
  Laurent p;
  for (auto& [c, w] : e.terms) p.add(w.exponent_sum(), c);
  return p;
}

std::vector<std::vector<MonomialList>> fox_matrix(const Presentation& p) {
  int m = p.g - 1;
  if (static_cast<int>(p.relators.size()) != m)
    throw DomainError("presentation needs g-1 = " + std::to_string(m) + " relators, got " +
                      std::to_string(p.relators.size()));
  std::vector<std::vector<MonomialList>> M(m, std::vector<MonomialList>(m));
  for (int r = 0; r < m; ++r) {
    for (auto l : p.relators[r].letters)
      if (l.gen < 1 || l.gen > p.g) throw DomainError("generator index out of range in relator");
    for (int j = 0; j < m; ++j)
      for (auto& [c, w] : fox_derivative(p.relators[r], j + 1).terms) M[r][j].push_back({w.exponent_sum(), c});
  }
  return M;
}

namespace {

// Row-by-row expansion keyed on the set of used columns; Value must support += and a shifted/signed copy.
template <class Value, class Extend>
Value expand(int m, Extend extend) {
  if (m > 63) throw ResourceError("Fox matrix too large for column-set expansion");
  std::unordered_map<uint64_t, Value> cur{{0, Value{}}};
  cur[0] = Value::unit();
  for (int r = 0; r < m; ++r) {
    std::unordered_map<uint64_t, Value> nxt;
    for (auto& [mask, val] : cur)
      for (int j = 0; j < m; ++j) {
        if (mask >> j & 1) continue;
        int parity = std::popcount(mask >> (j + 1)) & 1;
        extend(r, j, parity ? -1 : 1, val, nxt[mask | (uint64_t(1) << j)]);
      }
    cur = std::move(nxt);
  }
  auto it = cur.find(m == 64 ? ~uint64_t(0) : (uint64_t(1) << m) - 1);
  return it == cur.end() ? Value{} : it->second;
}

struct PolyVal {
  Laurent p;
  static PolyVal unit() { return {Laurent::constant(1)}; }
};

struct SpecVal {
  std::map<std::pair<int, int>, long long> c;
  static SpecVal unit() { return {{{{0, 1}, 1}}}; }
};

}  // namespace

Laurent alexander(const Presentation& p) {
  auto M = fox_matrix(p);
  int m = static_cast<int>(M.size());
  std::vector<std::vector<Laurent>> E(m, std::vector<Laurent>(m));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j < m; ++j)
      for (auto [e, s] : M[r][j]) E[r][j].add(e, s);
  auto det = expand<PolyVal>(m, [&](int r, int j, int sgn, const PolyVal& v, PolyVal& out) {
    if (E[r][j].is_zero()) return;
    out.p = out.p + (sgn > 0 ? v.p * E[r][j] : -(v.p * E[r][j]));
  });
  return normalize_alexander(det.p);
}

Laurent alexander(const KnotDiagram& d) { return alexander(wirtinger(d)); }

GeneratorSpectrum generator_spectrum(const Presentation& p, long long cap) {
  auto M = fox_matrix(p);
  int m = static_cast<int>(M.size());
  auto spec = expand<SpecVal>(m, [&](int r, int j, int sgn, const SpecVal& v, SpecVal& out) {
    for (auto& [key, cnt] : v.c)
      for (auto [e, s] : M[r][j]) {
        long long& slot = out.c[{key.first + e, key.second * s * sgn}];
        slot += cnt;
        if (slot > cap) throw ResourceError("generator spectrum exceeds term cap " + std::to_string(cap));
      }
  });
  GeneratorSpectrum g;
  g.counts = spec.c;
  if (g.size() > cap) throw ResourceError("generator spectrum exceeds term cap " + std::to_string(cap));
  Laurent sum = g.signed_sum();
  if (sum.is_zero()) throw DomainError("generator spectrum sums to zero; presentation is not a knot exterior");
  int lo = sum.min_exp(), hi = sum.max_exp();
  if ((lo + hi) % 2 != 0) throw DomainError("signed spectrum sum " + sum.str() + " is not symmetric");
  int shift = -(lo + hi) / 2;
  int flip = sum.at_one() < 0 ? -1 : 1;
  GeneratorSpectrum out;
  for (auto& [k, v] : g.counts) out.counts[{k.first + shift, k.second * flip}] += v;
  Laurent s2 = out.signed_sum();
  if (!s2.is_symmetric() || s2.at_one() != 1)
    throw DomainError("signed spectrum sum " + s2.str() + " is not a symmetric Alexander representative");
  return out;
}

}  // namespace floer
