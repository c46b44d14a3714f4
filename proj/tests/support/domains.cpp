#include "domains.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "floer/error.hpp"

namespace oracle {

using floer::CurveKind;
using floer::Rational;

std::string fixture_dir() { return FLOER_FIXTURE_DIR; }

std::shared_ptr<const HeegaardCellulation> fixture(const std::string& name) {
  return HeegaardCellulation::load(fixture_dir() + "/" + name + ".json");
}

DomainChain fixture_domain(const std::string& name, const std::string& domain) {
  return DomainChain::load(fixture_dir() + "/" + name + "." + domain + ".json");
}

namespace {

// Signed endpoint count of the boundary restricted to each curve, at crossings.
std::vector<std::map<int, long>> endpoint_counts(const HeegaardCellulation& c, const std::vector<long>& mult) {
  std::vector<std::map<int, long>> del(c.curves().size());
  for (int e = 0; e < static_cast<int>(c.edges().size()); ++e) {
    const auto& ed = c.edges()[e];
    long b = mult[c.left_face(e)] - mult[c.right_face(e)];
    if (c.is_crossing(ed.to)) del[ed.curve][ed.to] += b;
    if (c.is_crossing(ed.from)) del[ed.curve][ed.from] -= b;
  }
  return del;
}

std::vector<int> face_vertices(const HeegaardCellulation& c, int f) {
  std::vector<int> out;
  for (int h : c.face_walk(f)) out.push_back(c.origin(h));
  return out;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> corner_points(const HeegaardCellulation& c, const std::vector<long>& mult) {
  auto del = endpoint_counts(c, mult);
  std::vector<int> ys, zs;
  for (int v = 0; v < static_cast<int>(c.vertices().size()); ++v) {
    if (!c.is_crossing(v)) continue;
    long zy = del[c.alpha_at(v)].count(v) ? del[c.alpha_at(v)].at(v) : 0;
    if (zy < 0) ys.push_back(v);
    if (zy > 0) zs.push_back(v);
  }
  return {ys, zs};
}

std::optional<DomainChain> derive_domain(std::shared_ptr<const HeegaardCellulation> cell, std::vector<long> mult) {
  const auto& c = *cell;
  auto del = endpoint_counts(c, mult);
  std::vector<int> ys, zs;
  std::set<int> used_a, used_b;
  for (int v = 0; v < static_cast<int>(c.vertices().size()); ++v) {
    if (!c.is_crossing(v)) continue;
    long za = del[c.alpha_at(v)][v], zb = -del[c.beta_at(v)][v];
    if (za != zb || za < -1 || za > 1) return std::nullopt;
    if (za == -1) ys.push_back(v);
    if (za == 1) zs.push_back(v);
  }
  for (auto* g : {&ys, &zs}) {
    std::set<int> a, b;
    for (int v : *g) {
      a.insert(c.alpha_at(v));
      b.insert(c.beta_at(v));
    }
    if (a.size() != g->size() || b.size() != g->size()) return std::nullopt;
    if (g == &ys) {
      used_a = a;
      used_b = b;
    }
  }
  std::vector<int> free_a;
  for (int a : c.curves_of(CurveKind::Alpha))
    if (!used_a.count(a)) free_a.push_back(a);
  std::vector<int> extra;
  std::set<int> taken = used_b;
  std::function<bool(size_t)> match = [&](size_t i) {
    if (i == free_a.size()) return true;
    for (int v = 0; v < static_cast<int>(c.vertices().size()); ++v) {
      if (!c.is_crossing(v) || c.alpha_at(v) != free_a[i] || taken.count(c.beta_at(v))) continue;
      taken.insert(c.beta_at(v));
      extra.push_back(v);
      if (match(i + 1)) return true;
      extra.pop_back();
      taken.erase(c.beta_at(v));
    }
    return false;
  };
  if (!match(0)) return std::nullopt;
  ys.insert(ys.end(), extra.begin(), extra.end());
  zs.insert(zs.end(), extra.begin(), extra.end());
  try {
    return DomainChain(cell, std::move(mult), ys, zs);
  } catch (const floer::Error&) {
    return std::nullopt;
  }
}

std::vector<int> tube_classes(const HeegaardCellulation& c) {
  std::vector<int> parent(c.num_faces());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 0; i < c.genus(); ++i)
    for (auto [a, b] : c.tube_sector_pairs(i)) parent[find(a)] = find(b);
  for (int f = 0; f < c.num_faces(); ++f) parent[f] = find(f);
  return parent;
}

namespace {

std::optional<DomainChain> measured(std::shared_ptr<const HeegaardCellulation> cell, std::vector<long> mult) {
  auto d = derive_domain(std::move(cell), std::move(mult));
  if (!d) return std::nullopt;
  try {
    floer::maslov_index(*d);
  } catch (const floer::Error&) {
    return std::nullopt;
  }
  return d;
}

}  // namespace

std::vector<DomainChain> in_scope_domains(const std::shared_ptr<const HeegaardCellulation>& cell) {
  const auto& c = *cell;
  const int F = c.num_faces();
  auto cls = tube_classes(c);
  std::vector<int> roots;
  for (int f = 0; f < F; ++f)
    if (cls[f] == f && f != cls[c.infinity_face()]) roots.push_back(f);
  std::vector<DomainChain> out;
  for (unsigned mask = 1; mask < (1u << roots.size()); ++mask) {
    std::vector<long> mult(F);
    for (int f = 0; f < F; ++f)
      for (size_t r = 0; r < roots.size(); ++r)
        if ((mask >> r & 1) && cls[f] == roots[r]) mult[f] = 1;
    if (auto d = measured(cell, mult)) out.push_back(*d);
  }
  return out;
}

std::optional<DomainChain> random_domain(const std::shared_ptr<const HeegaardCellulation>& cell, std::mt19937& rng,
                                         long lo, long hi, int tries) {
  auto cls = tube_classes(*cell);
  std::uniform_int_distribution<long> pick(lo, hi);
  for (int t = 0; t < tries; ++t) {
    std::vector<long> by_class(cell->num_faces()), mult(cell->num_faces());
    for (auto& m : by_class) m = pick(rng);
    for (int f = 0; f < cell->num_faces(); ++f) mult[f] = by_class[cls[f]];
    if (auto d = measured(cell, mult)) return d;
  }
  return std::nullopt;
}

bool avoids_punctures(const DomainChain& d) {
  const auto& c = d.cellulation();
  if (d.multiplicity(c.infinity_face()) != 0) return false;
  for (auto [p, m] : c.feet())
    for (int v : {p, m})
      for (int h : c.rotation(v))
        if (d.multiplicity(c.face(h)) != 0) return false;
  return true;
}

Rational lipshitz_maslov(const DomainChain& d) {
  const auto& c = d.cellulation();
  Rational e = 0;
  for (int f = 0; f < c.num_faces(); ++f) {
    if (!d.multiplicity(f)) continue;
    int corners = 0;
    for (int h : c.face_walk(f))
      if (c.is_crossing(c.origin(h))) ++corners;
    e += Rational(d.multiplicity(f)) * (Rational(1) - Rational(corners, 4));
  }
  auto point = [&](int v) -> Rational {
    Rational s = 0;
    for (int h : c.rotation(v)) s += d.multiplicity(c.face(h));
    return s / static_cast<int>(c.rotation(v).size());
  };
  for (int v : d.y()) e += point(v);
  for (int v : d.z()) e += point(v);
  return e;
}

int generator_sign(const HeegaardCellulation& c, const std::vector<int>& gen) {
  auto dir = [&](int v, int curve) {
    for (int e = 0; e < static_cast<int>(c.edges().size()); ++e)
      if (c.edges()[e].curve == curve && c.edges()[e].from == v) {
        auto pl = c.polyline(2 * e);
        return std::pair<double, double>{pl[1].x - pl[0].x, pl[1].y - pl[0].y};
      }
    throw floer::ConsistencyError("curve does not leave its crossing");
  };
  auto alphas = c.curves_of(CurveKind::Alpha), betas = c.curves_of(CurveKind::Beta);
  std::vector<int> perm(alphas.size());
  int sign = 1;
  for (int v : gen) {
    auto [ax, ay] = dir(v, c.alpha_at(v));
    auto [bx, by] = dir(v, c.beta_at(v));
    sign *= ax * by - ay * bx > 0 ? 1 : -1;
    int i = static_cast<int>(std::find(alphas.begin(), alphas.end(), c.alpha_at(v)) - alphas.begin());
    int j = static_cast<int>(std::find(betas.begin(), betas.end(), c.beta_at(v)) - betas.begin());
    perm[i] = j;
  }
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

bool disjoint_supports(const DomainChain& a, const DomainChain& b) {
  const auto& c = a.cellulation();
  std::set<int> va;
  for (int f = 0; f < c.num_faces(); ++f)
    if (a.multiplicity(f))
      for (int v : face_vertices(c, f)) va.insert(v);
  for (int f = 0; f < c.num_faces(); ++f)
    if (b.multiplicity(f))
      for (int v : face_vertices(c, f))
        if (va.count(v)) return false;
  return true;
}

std::optional<std::pair<DomainChain, DomainChain>> juxtapose(const DomainChain& a, const DomainChain& b) {
  const auto& c = a.cellulation();
  auto sum = a.multiplicities();
  for (size_t f = 0; f < sum.size(); ++f) sum[f] += b.multiplicities()[f];
  auto u = derive_domain(a.cellulation_ptr(), sum);
  if (!u) return std::nullopt;
  auto [ya, za] = corner_points(c, a.multiplicities());
  auto [yb, zb] = corner_points(c, b.multiplicities());
  std::set<int> nondeg(ya.begin(), ya.end());
  nondeg.insert(yb.begin(), yb.end());
  std::vector<int> x;
  for (int v : u->y())
    if (!nondeg.count(v)) x.push_back(v);
  auto cat = [&](std::vector<int> p, const std::vector<int>& q) {
    p.insert(p.end(), q.begin(), q.end());
    p.insert(p.end(), x.begin(), x.end());
    return p;
  };
  try {
    DomainChain a2(a.cellulation_ptr(), a.multiplicities(), cat(ya, yb), cat(za, yb));
    DomainChain b2(a.cellulation_ptr(), b.multiplicities(), cat(za, yb), cat(za, zb));
    return std::make_pair(a2, b2);
  } catch (const floer::Error&) {
    return std::nullopt;
  }
}

}  // namespace oracle
