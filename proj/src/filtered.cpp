#include "floer/filtered.hpp"

#include <set>

#include "floer/error.hpp"

namespace floer {

int FilteredComplex::index(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(gens.size()); ++i)
    if (gens[i].id == id) return i;
  return -1;
}

const Gen& FilteredComplex::gen(const std::string& id) const {
  int i = index(id);
  if (i < 0) throw DomainError("no generator '" + id + "'");
  return gens[i];
}

Rational FilteredComplex::coef(const std::string& src, const std::string& tgt) const {
  auto it = d.find({src, tgt});
  return it == d.end() ? Rational(0) : it->second;
}

void FilteredComplex::set(const std::string& src, const std::string& tgt, const Rational& c) {
  Rational v = field.norm(c);
  if (v == 0)
    d.erase({src, tgt});
  else
    d[{src, tgt}] = v;
}

nlohmann::json FilteredComplex::to_json() const {
  nlohmann::json g = nlohmann::json::array(), a = nlohmann::json::array();
  for (auto& x : gens) g.push_back({{"id", x.id}, {"A", x.A}, {"gr", x.gr}});
  for (auto& [k, v] : d) {
    nlohmann::json coef;
    if (boost::multiprecision::denominator(v) == 1 && abs(v) < Rational(1000000000))
      coef = static_cast<long long>(boost::multiprecision::numerator(v));
    else
      coef = rational_str(v);
    a.push_back({k.first, k.second, coef});
  }
  return {{"field", field.name()}, {"gens", g}, {"d", a}};
}

FilteredComplex FilteredComplex::from_json(const nlohmann::json& j) {
  try {
    FilteredComplex c;
    c.field = Field::parse(j.value("field", "Q"));
    std::set<std::string> ids;
    for (auto& g : j.at("gens")) {
      Gen x{g.at("id").get<std::string>(), g.at("A").get<int>(), g.at("gr").get<int>()};
      if (!ids.insert(x.id).second) throw ValidationError("duplicate generator id '" + x.id + "'");
      c.gens.push_back(x);
    }
    if (j.contains("d"))
      for (auto& e : j.at("d")) {
        if (!e.is_array() || e.size() != 3) throw SyntaxError("differential entries are [src, tgt, coef]");
        auto s = e[0].get<std::string>(), t = e[1].get<std::string>();
        if (!ids.count(s) || !ids.count(t)) throw ValidationError("differential mentions unknown generator");
        Rational v = e[2].is_string() ? parse_rational(e[2].get<std::string>()) : Rational(e[2].get<long long>());
        c.set(s, t, c.coef(s, t) + v);
      }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("complex JSON: ") + e.what());
  }
}

void validate(const FilteredComplex& c) {
  std::map<std::string, const Gen*> by;
  for (auto& g : c.gens)
    if (!by.emplace(g.id, &g).second) throw ValidationError("duplicate generator id '" + g.id + "'");
  std::map<std::string, std::vector<std::pair<std::string, Rational>>> out;
  for (auto& [k, v] : c.d) {
    auto s = by.find(k.first), t = by.find(k.second);
    if (s == by.end() || t == by.end()) throw ValidationError("differential mentions unknown generator");
    if (v == 0) throw ValidationError("zero coefficient stored");
    if (s->second->gr - t->second->gr != 1)
      throw FiltrationError("arrow " + k.first + " -> " + k.second + " does not drop gr by 1");
    if (s->second->A < t->second->A)
      throw FiltrationError("arrow " + k.first + " -> " + k.second + " raises A");
    out[k.first].push_back({k.second, v});
  }
  for (auto& [src, targets] : out) {
    std::map<std::string, Rational> dd;
    for (auto& [mid, a] : targets) {
      auto it = out.find(mid);
      if (it == out.end()) continue;
      for (auto& [tgt, b] : it->second) dd[tgt] = c.field.norm(dd[tgt] + a * b);
    }
    for (auto& [tgt, v] : dd)
      if (v != 0) throw DomainError("d o d != 0 from " + src + " to " + tgt);
  }
}

namespace {

// Index-based working copy supporting in-place cancellation.
struct Work {
  Field f;
  std::vector<Gen> gens;
  std::vector<char> alive;
  std::vector<std::map<int, Rational>> out, in;

  explicit Work(const FilteredComplex& c) : f(c.field), gens(c.gens), alive(c.gens.size(), 1) {
    out.resize(gens.size());
    in.resize(gens.size());
    std::map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) idx[gens[i].id] = i;
    for (auto& [k, v] : c.d) {
      int s = idx.at(k.first), t = idx.at(k.second);
      out[s][t] = v;
      in[t][s] = v;
    }
  }

  void set(int s, int t, const Rational& v) {
    if (v == 0) {
      out[s].erase(t);
      in[t].erase(s);
    } else {
      out[s][t] = v;
      in[t][s] = v;
    }
  }

  void cancel(int x, int y) {
    Rational inv = f.inv(out[x].at(y));
    std::vector<std::pair<int, Rational>> ins(in[y].begin(), in[y].end());
    std::vector<std::pair<int, Rational>> outs(out[x].begin(), out[x].end());
    for (auto& [u, duy] : ins) {
      if (u == x) continue;
      for (auto& [v, dxv] : outs) {
        if (v == y) continue;
        auto it = out[u].find(v);
        Rational cur = it == out[u].end() ? Rational(0) : it->second;
        set(u, v, f.norm(cur - duy * inv * dxv));
      }
    }
    for (int z : {x, y}) {
      for (auto& [t, v] : std::map<int, Rational>(out[z])) set(z, t, 0);
      for (auto& [s, v] : std::map<int, Rational>(in[z])) set(s, z, 0);
      alive[z] = 0;
    }
  }

  // Smallest (source id, target id) arrow, optionally restricted to A-preserving ones.
  std::pair<int, int> pick(bool same_A) const {
    std::pair<int, int> best{-1, -1};
    for (int s = 0; s < static_cast<int>(gens.size()); ++s) {
      if (!alive[s]) continue;
      if (best.first >= 0 && gens[s].id > gens[best.first].id) continue;
      for (auto& [t, v] : out[s]) {
        if (same_A && gens[s].A != gens[t].A) continue;
        if (best.first < 0 || std::tie(gens[s].id, gens[t].id) < std::tie(gens[best.first].id, gens[best.second].id))
          best = {s, t};
      }
    }
    return best;
  }

  FilteredComplex result() const {
    FilteredComplex c;
    c.field = f;
    for (int i = 0; i < static_cast<int>(gens.size()); ++i)
      if (alive[i]) c.gens.push_back(gens[i]);
    for (int s = 0; s < static_cast<int>(gens.size()); ++s)
      for (auto& [t, v] : out[s]) c.d[{gens[s].id, gens[t].id}] = v;
    return c;
  }
};

}  // namespace

FilteredComplex cancel(const FilteredComplex& c, const std::string& x, const std::string& y) {
  const Gen& gx = c.gen(x);
  const Gen& gy = c.gen(y);
  if (c.coef(x, y) == 0) throw DomainError("d(" + x + ", " + y + ") is zero; cannot cancel");
  if (gx.A != gy.A) throw FiltrationError("cancelling " + x + " and " + y + " would break the filtration (A differs)");
  Work w(c);
  w.cancel(c.index(x), c.index(y));
  return w.result();
}

FilteredComplex reduce(const FilteredComplex& c) {
  Work w(c);
  for (auto p = w.pick(true); p.first >= 0; p = w.pick(true)) w.cancel(p.first, p.second);
  return w.result();
}

FilteredComplex minimal_model(const FilteredComplex& c) {
  Work w(c);
  for (auto p = w.pick(false); p.first >= 0; p = w.pick(false)) w.cancel(p.first, p.second);
  return w.result();
}

std::map<int, int> homology(const FilteredComplex& c) {
  std::map<int, int> r;
  for (auto& g : minimal_model(c).gens) ++r[g.gr];
  return r;
}

std::map<std::pair<int, int>, int> graded_ranks(const FilteredComplex& c) {
  std::map<std::pair<int, int>, int> r;
  for (auto& g : reduce(c).gens) ++r[{g.A, g.gr}];
  return r;
}

static std::string dual_id(const std::string& id) {
  if (id.size() > 1 && id.back() == '*') return id.substr(0, id.size() - 1);
  return id + "*";
}

FilteredComplex dual(const FilteredComplex& c) {
  FilteredComplex r;
  r.field = c.field;
  for (auto& g : c.gens) r.gens.push_back({dual_id(g.id), -g.A, -g.gr});
  for (auto& [k, v] : c.d) r.d[{dual_id(k.second), dual_id(k.first)}] = v;
  return r;
}

FilteredComplex tensor(const FilteredComplex& a, const FilteredComplex& b) {
  if (!(a.field == b.field)) throw DomainError("tensor of complexes over different fields");
  FilteredComplex r;
  r.field = a.field;
  auto id = [](const std::string& x, const std::string& y) { return x + "|" + y; };
  for (auto& x : a.gens)
    for (auto& y : b.gens) r.gens.push_back({id(x.id, y.id), x.A + y.A, x.gr + y.gr});
  for (auto& [k, v] : a.d)
    for (auto& y : b.gens) r.set(id(k.first, y.id), id(k.second, y.id), v);
  for (auto& x : a.gens) {
    Rational sgn = (x.gr % 2 == 0) ? 1 : -1;
    for (auto& [k, v] : b.d) r.set(id(x.id, k.first), id(x.id, k.second), sgn * v);
  }
  return r;
}

}  // namespace floer
