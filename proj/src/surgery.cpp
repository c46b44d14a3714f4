#include "floer/surgery.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <set>

#include "floer/error.hpp"
#include "floer/foxalex.hpp"

namespace floer {

namespace {

using Arrows = std::map<std::pair<std::string, std::string>, Rational>;

std::string at(const std::string& y, int i) { return y + "@" + std::to_string(i); }

int ceil_half(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

nlohmann::json arrows_json(const Arrows& a) {
  nlohmann::json out = nlohmann::json::array();
  for (auto& [k, v] : a) {
    nlohmann::json c;
    if (boost::multiprecision::denominator(v) == 1)
      c = static_cast<long long>(boost::multiprecision::numerator(v));
    else
      c = rational_str(v);
    out.push_back({k.first, k.second, c});
  }
  return out;
}

// Composite a*b of arrow maps (first a, then b).
Arrows compose(const Arrows& a, const Arrows& b, const Field& f) {
  std::map<std::string, std::vector<std::pair<std::string, Rational>>> bout;
  for (auto& [k, v] : b) bout[k.first].push_back({k.second, v});
  Arrows r;
  for (auto& [k, v] : a) {
    auto it = bout.find(k.second);
    if (it == bout.end()) continue;
    for (auto& [t, w] : it->second) r[{k.first, t}] = f.norm(r[{k.first, t}] + v * w);
  }
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

std::map<std::pair<int, int>, int> population(const FilteredComplex& c) {
  std::map<std::pair<int, int>, int> p;
  for (auto& g : c.gens) ++p[{g.A, g.gr}];
  return p;
}

}  // namespace

int KnotFloerInput::max_A() const {
  int m = INT_MIN;
  for (auto& g : cfr.gens) m = std::max(m, g.A);
  return m == INT_MIN ? 0 : m;
}

int KnotFloerInput::min_A() const {
  int m = INT_MAX;
  for (auto& g : cfr.gens) m = std::min(m, g.A);
  return m == INT_MAX ? 0 : m;
}

nlohmann::json KnotFloerInput::to_json() const {
  return {{"s", s}, {"delta", delta.to_json()}, {"cfr", cfr.to_json()}, {"dv", arrows_json(dv)}};
}

KnotFloerInput KnotFloerInput::from_json(const nlohmann::json& j) {
  try {
    int s = j.at("s").get<int>();
    Laurent delta = Laurent::from_json(j.at("delta"));
    KnotFloerInput in;
    if (!j.contains("dv")) {
      Field f{Field::Q};
      if (j.contains("cfr")) f = Field::parse(j["cfr"].value("field", "Q"));
      in = perfect_model(delta, s, f);
      if (j.contains("cfr")) {
        auto given = FilteredComplex::from_json(j["cfr"]);
        if (population(given) != population(in.cfr))
          throw DomainError("cfr generators do not match the thin model for (delta, s); supply \"dv\"");
      }
    } else {
      in.cfr = FilteredComplex::from_json(j.at("cfr"));
      in.s = s;
      in.delta = delta;
      for (auto& e : j.at("dv")) {
        if (!e.is_array() || e.size() != 3) throw SyntaxError("dv entries are [src, tgt, coef]");
        Rational v = e[2].is_string() ? parse_rational(e[2].get<std::string>()) : Rational(e[2].get<long long>());
        v = in.cfr.field.norm(v);
        if (v != 0) in.dv[{e[0].get<std::string>(), e[1].get<std::string>()}] = v;
      }
    }
    validate(in);
    return in;
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("knot Floer input JSON: ") + e.what());
  }
}

int s_invariant(const FilteredComplex& cfr) {
  auto h = homology(cfr);
  int total = 0, g0 = 0;
  for (auto& [g, r] : h) total += r, g0 = r ? g : g0;
  if (total != 1) throw DomainError("reduced stable complex has homology of rank " + std::to_string(total) + ", expected 1");
  const Field& f = cfr.field;
  std::vector<int> top, below;  // generators in degrees g0 and g0 - 1
  for (int i = 0; i < static_cast<int>(cfr.gens.size()); ++i) {
    if (cfr.gens[i].gr == g0) top.push_back(i);
    if (cfr.gens[i].gr == g0 - 1) below.push_back(i);
  }
  auto pos = [](const std::vector<int>& v, int i) { return static_cast<int>(std::find(v.begin(), v.end(), i) - v.begin()); };
  std::vector<std::vector<Rational>> bnd;  // boundaries in degree g0
  for (int i = 0; i < static_cast<int>(cfr.gens.size()); ++i) {
    if (cfr.gens[i].gr != g0 + 1) continue;
    std::vector<Rational> v(top.size(), 0);
    for (auto& [k, c] : cfr.d)
      if (k.first == cfr.gens[i].id) v[pos(top, cfr.index(k.second))] = c;
    bnd.push_back(v);
  }
  int rb = rank(Matrix(bnd.begin(), bnd.end()), f);
  std::set<int> levels;
  for (int i : top) levels.insert(cfr.gens[i].A);
  for (int j : levels) {
    // cycles supported on generators with A <= j
    std::vector<int> sub;
    for (int i : top)
      if (cfr.gens[i].A <= j) sub.push_back(i);
    Matrix dm(below.size(), std::vector<Rational>(sub.size(), 0));
    for (size_t c = 0; c < sub.size(); ++c)
      for (auto& [k, v] : cfr.d)
        if (k.first == cfr.gens[sub[c]].id) dm[pos(below, cfr.index(k.second))][c] = v;
    auto z = kernel_basis(dm, static_cast<int>(sub.size()), f);
    std::vector<std::vector<Rational>> all = bnd;
    for (auto& zv : z) {
      std::vector<Rational> v(top.size(), 0);
      for (size_t c = 0; c < sub.size(); ++c) v[pos(top, sub[c])] = zv[c];
      all.push_back(v);
    }
    if (rank(Matrix(all.begin(), all.end()), f) > rb) return j;
  }
  throw ConsistencyError("no filtration level carries the homology generator");
}

void validate(const KnotFloerInput& in) {
  const auto& c = in.cfr;
  validate(c);
  if (s_invariant(c) != in.s)
    throw DomainError("s = " + std::to_string(in.s) + " disagrees with the complex (" + std::to_string(s_invariant(c)) + ")");
  if (in.delta.is_zero() || !in.delta.is_symmetric() || in.delta.at_one() != 1)
    throw DomainError("delta " + in.delta.str() + " is not a normalized Alexander polynomial");
  std::map<int, long long> chi;
  for (auto& g : c.gens) chi[g.A] += ((g.gr - in.s) % 2 == 0) ? 1 : -1;
  for (auto it = chi.begin(); it != chi.end();) it = it->second == 0 ? chi.erase(it) : std::next(it);
  if (chi != in.delta.terms()) throw DomainError("graded Euler characteristic of cfr differs from delta");
  if (in.s != 0 && !in.delta.coef(in.s)) throw DomainError("s lies outside the support of delta");
  for (auto& [k, v] : in.dv) {
    int a = c.index(k.first), b = c.index(k.second);
    if (a < 0 || b < 0) throw ValidationError("dv mentions unknown generator");
    if (c.gens[b].gr != c.gens[a].gr + 1) throw FiltrationError("dv arrow " + k.first + " -> U " + k.second + " has the wrong grading");
  }
  auto dd = compose(c.d, in.dv, c.field), vd = compose(in.dv, c.d, c.field);
  for (auto& [k, v] : vd) dd[k] = c.field.norm(dd[k] + v);
  for (auto& [k, v] : dd)
    if (v != 0) throw DomainError("d^2 != 0 on CF-infinity at " + k.first + " -> " + k.second);
  if (!compose(in.dv, in.dv, c.field).empty()) throw DomainError("dv^2 != 0");
}

bool is_perfect(const KnotFloerInput& in) {
  for (auto& g : in.cfr.gens)
    if (g.gr != g.A) return false;
  return true;
}

KnotFloerInput perfect_model(const Laurent& delta, int s, Field f) {
  if (delta.is_zero() || !delta.is_symmetric() || delta.at_one() != 1)
    throw DomainError("delta " + delta.str() + " is not a normalized Alexander polynomial");
  std::map<int, long long> r;
  for (auto& [j, a] : delta.terms()) {
    long long sg = ((j - s) % 2 == 0) ? 1 : -1;
    if (a * sg < 0) throw DomainError("delta " + delta.str() + " has a sign pattern impossible for a perfect knot with s = " + std::to_string(s));
    r[j] = a * sg;
  }
  KnotFloerInput in;
  in.s = s;
  in.delta = delta;
  in.cfr.field = f;
  int as = std::abs(s);
  for (int m = 0; m <= 2 * as; ++m) {
    int A = as - m;
    in.cfr.gens.push_back({"z" + std::to_string(m), A, A});
    if (--r[A] < 0) throw DomainError("delta too small for a staircase of length " + std::to_string(as));
  }
  auto z = [](int m) { return "z" + std::to_string(m); };
  for (int i = 0; i < as; ++i) {
    if (s > 0) {
      in.cfr.set(z(2 * i + 1), z(2 * i + 2), 1);
      in.dv[{z(2 * i + 1), z(2 * i)}] = 1;
    } else {
      in.cfr.set(z(2 * i), z(2 * i + 1), 1);
      in.dv[{z(2 * i + 2), z(2 * i + 1)}] = 1;
    }
  }
  int boxes = 0;
  while (true) {
    int t = INT_MIN;
    for (auto& [j, v] : r)
      if (v) t = std::max(t, j);
    if (t == INT_MIN) break;
    long long n = r[t];
    if (n < 0 || r[t - 1] < 2 * n || r[t - 2] < n)
      throw DomainError("delta " + delta.str() + " does not decompose into a staircase and unit boxes");
    r[t] = 0;
    r[t - 1] -= 2 * n;
    r[t - 2] -= n;
    for (long long q = 0; q < n; ++q, ++boxes) {
      std::string p = "q" + std::to_string(boxes);
      in.cfr.gens.push_back({p + "c", t, t});
      in.cfr.gens.push_back({p + "a", t - 1, t - 1});
      in.cfr.gens.push_back({p + "d", t - 1, t - 1});
      in.cfr.gens.push_back({p + "b", t - 2, t - 2});
      in.cfr.set(p + "a", p + "b", 1);
      in.cfr.set(p + "c", p + "d", 1);
      in.dv[{p + "a", p + "c"}] = f.norm(-1);
      in.dv[{p + "b", p + "d"}] = 1;
    }
  }
  for (auto& [j, v] : r)
    if (v) throw DomainError("delta " + delta.str() + " does not decompose into a staircase and unit boxes");
  return in;
}

KnotFloerInput alternating_input(const KnotDiagram& d, Field f) {
  validate(d);
  if (!is_alternating(d)) throw DomainError("diagram is not alternating; supply a knot Floer input with --input");
  int sig = signature(d);
  return perfect_model(alexander(d), sig / 2, f);
}

FilteredComplex c_subcomplex(const KnotFloerInput& in, int k) {
  FilteredComplex c;
  c.field = in.cfr.field;
  std::map<std::string, std::pair<int, const Gen*>> lower;
  for (auto& g : in.cfr.gens) {
    int lo = std::min(k - g.A, 0);
    lower[g.id] = {lo, &g};
    for (int j = lo; j < 0; ++j) c.gens.push_back({at(g.id, j), g.A + 2 * j, g.gr + 2 * j});
  }
  auto has = [&](const std::string& y, int j) { return j < 0 && j >= lower.at(y).first; };
  for (auto& [key, v] : in.cfr.d)
    for (int j = lower.at(key.first).first; j < 0; ++j)
      if (has(key.second, j)) c.set(at(key.first, j), at(key.second, j), v);
  for (auto& [key, v] : in.dv)
    for (int j = lower.at(key.first).first; j < 0; ++j)
      if (has(key.second, j - 1)) c.set(at(key.first, j), at(key.second, j - 1), v);
  return c;
}

namespace {

int truncation_ceiling(const KnotFloerInput& in) {
  int maxgr = INT_MIN;
  for (auto& g : in.cfr.gens) maxgr = std::max(maxgr, g.gr);
  return maxgr + 2 * (in.max_A() - in.min_A()) + 4;
}

UComplex quotient_complex(const KnotFloerInput& in, int k, const std::set<std::string>& part, int G) {
  UComplex uc;
  uc.c.field = in.cfr.field;
  uc.top_valid = G - 1;
  std::map<std::string, std::pair<int, int>> range;
  for (auto& g : in.cfr.gens) {
    if (!part.count(g.id)) continue;
    int lo = std::min(0, k - g.A);
    int hi = (G - g.gr) >= 0 ? (G - g.gr) / 2 : -((g.gr - G + 1) / 2);
    range[g.id] = {lo, hi};
    for (int i = lo; i <= hi; ++i) uc.c.gens.push_back({at(g.id, i), g.A + 2 * i, g.gr + 2 * i});
  }
  auto has = [&](const std::string& y, int i) {
    auto it = range.find(y);
    return it != range.end() && i >= it->second.first && i <= it->second.second;
  };
  for (auto& [y, rg] : range) {
    for (int i = rg.first; i <= rg.second; ++i)
      if (has(y, i - 1)) uc.u[{at(y, i), at(y, i - 1)}] = 1;
  }
  for (auto& [key, v] : in.cfr.d) {
    if (!range.count(key.first)) continue;
    for (int i = range[key.first].first; i <= range[key.first].second; ++i)
      if (has(key.second, i)) uc.c.set(at(key.first, i), at(key.second, i), v);
  }
  for (auto& [key, v] : in.dv) {
    if (!range.count(key.first)) continue;
    for (int i = range[key.first].first; i <= range[key.first].second; ++i)
      if (has(key.second, i - 1)) uc.c.set(at(key.first, i), at(key.second, i - 1), v);
  }
  return uc;
}

std::vector<std::set<std::string>> components(const KnotFloerInput& in) {
  std::map<std::string, std::string> parent;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto& g : in.cfr.gens) parent[g.id] = g.id;
  auto join = [&](const std::string& a, const std::string& b) { parent[find(a)] = find(b); };
  for (auto& [k, v] : in.cfr.d) join(k.first, k.second);
  for (auto& [k, v] : in.dv) join(k.first, k.second);
  std::map<std::string, std::set<std::string>> groups;
  for (auto& g : in.cfr.gens) groups[find(g.id)].insert(g.id);
  std::vector<std::set<std::string>> out;
  for (auto& [r, s] : groups) out.push_back(s);
  return out;
}

int single_tower(const HomologyDescription& h) {
  if (h.towers.size() != 1)
    throw ConsistencyError("expected exactly one tower, found " + std::to_string(h.towers.size()));
  return h.towers[0];
}

}  // namespace

UComplex big_surgery_complex(const KnotFloerInput& in, int k) {
  std::set<std::string> all;
  for (auto& g : in.cfr.gens) all.insert(g.id);
  return quotient_complex(in, k, all, truncation_ceiling(in));
}

HomologyDescription big_surgery_homology(const KnotFloerInput& in, int k) {
  int G = truncation_ceiling(in);
  HomologyDescription h;
  for (auto& part : components(in)) h.add(u_module_homology(quotient_complex(in, k, part, G)));
  single_tower(h);
  return h;
}

int h_invariant(const KnotFloerInput& in, int k) {
  if (k < 0) k = -k;
  int big = std::max(in.max_A(), -in.min_A()) + 1;
  if (k >= big) return 0;
  int top = single_tower(big_surgery_homology(in, big));
  int bot = single_tower(big_surgery_homology(in, k));
  if ((top - bot) % 2 != 0 || top < bot) throw ConsistencyError("tower bottoms are not separated by an even drop");
  return (top - bot) / 2;
}

nlohmann::json SurgeryAnswer::to_json() const {
  return {{"m", m}, {"k", k}, {"tower_bottom", description.towers.empty() ? 0 : description.towers[0]},
          {"reduced_rank", reduced_rank}, {"d_shift", d_shift}, {"h", h}};
}

SurgeryAnswer integer_surgery(const KnotFloerInput& in, int m, int k) {
  if (m == 0) throw DomainError("m = 0: use zero_surgery_betti");
  int M = std::abs(m);
  int R = std::max(in.max_A(), -in.min_A()) + 1;
  std::map<int, int> b;
  auto betti = [&](int i) {
    i = std::abs(i);
    auto it = b.find(i);
    if (it != b.end()) return it->second;
    int t = 0;
    for (auto& [g, r] : homology(c_subcomplex(in, i))) t += r;
    return b[i] = t;
  };
  int kk = ((k % M) + M) % M;
  int hmk = 0, sum = 0;
  for (int i = -R - M; i <= R + M; ++i) {
    if (((i % M) + M) % M != kk) continue;
    hmk = std::max(hmk, h_invariant(in, i));
    sum += betti(i);
  }
  SurgeryAnswer a;
  a.m = m;
  a.k = k;
  a.h = hmk;
  a.d_shift = m > 0 ? -2 * hmk : 2 * hmk;
  a.reduced_rank = sum - hmk;
  a.description.towers = {a.d_shift};
  if (a.reduced_rank < 0) throw ConsistencyError("negative reduced rank");
  return a;
}

ZeroSurgeryBetti zero_surgery_betti(const KnotFloerInput& in, int k) {
  ZeroSurgeryBetti z;
  z.ranks = homology(c_subcomplex(in, k));
  z.convention_dependent = k == 0;
  return z;
}

HomologyDescription perfect_closed_form(const Laurent& delta, int s, int k, int eps) {
  if (k < 0) throw DomainError("closed form requires k >= 0");
  long long sum = 0;
  for (auto& [i, a] : delta.terms())
    if (i > k) sum += (i - k) * a;
  int n = std::max(ceil_half(std::abs(s) - k), 0);
  long long mk = sum - eps * n;
  if (mk < 0) mk = -mk;
  HomologyDescription h;
  for (long long i = 0; i < mk; ++i) h.torsion.push_back({1, k - 1});
  if (s >= 0) {
    h.towers = {s - 2 * n};
  } else {
    h.towers = {s};
    if (n > 0) h.torsion.push_back({n, ((k - 1 - s) % 2 == 0) ? k - 1 : k - 2});
  }
  h.normalize();
  return h;
}

int calibrate_epsilon() {
  KnotFloerInput tre = perfect_model(Laurent::parse("t^-1 - 1 + t"), 1);
  KnotFloerInput fig = perfect_model(Laurent::parse("-t^-1 + 3 - t"), 0);
  std::vector<int> good;
  for (int eps : {1, -1}) {
    bool ok = true;
    for (auto* in : {&tre, &fig})
      for (int k = 0; k <= 2; ++k)
        ok = ok && perfect_closed_form(in->delta, in->s, k, eps) == big_surgery_homology(*in, k);
    if (ok) good.push_back(eps);
  }
  if (good.size() != 1) throw ConsistencyError("epsilon calibration is not unique (" + std::to_string(good.size()) + " candidates)");
  return good[0];
}

HomologyDescription checked_closed_form(const KnotFloerInput& in, int k, int eps) {
  if (!is_perfect(in)) throw DomainError("closed form applies to perfect inputs only");
  auto closed = perfect_closed_form(in.delta, in.s, k, eps);
  auto direct = big_surgery_homology(in, k);
  if (!(closed == direct))
    throw ConsistencyError("closed form " + closed.str() + " disagrees with direct computation " + direct.str() +
                           " (delta " + in.delta.str() + ", s " + std::to_string(in.s) + ", k " + std::to_string(k) +
                           ", eps " + std::to_string(eps) + ")");
  return closed;
}

}  // namespace floer
