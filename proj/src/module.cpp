#include "floer/module.hpp"

#include <algorithm>
#include <sstream>

#include "floer/error.hpp"

namespace floer {

int HomologyDescription::reduced_rank() const {
  int r = 0;
  for (auto& [g, k] : free) r += k;
  return r;
}

void HomologyDescription::add(const HomologyDescription& o) {
  towers.insert(towers.end(), o.towers.begin(), o.towers.end());
  torsion.insert(torsion.end(), o.torsion.begin(), o.torsion.end());
  normalize();
}

void HomologyDescription::normalize() {
  std::sort(towers.begin(), towers.end());
  std::sort(torsion.begin(), torsion.end(), [](const Torsion& a, const Torsion& b) {
    return std::tie(b.top, b.n) < std::tie(a.top, a.n);
  });
  free.clear();
  for (auto& t : torsion)
    for (int i = 0; i < t.n; ++i) ++free[t.top - 2 * i];
}

nlohmann::json HomologyDescription::to_json() const {
  nlohmann::json tor = nlohmann::json::array(), fr = nlohmann::json::object();
  for (auto& t : torsion) tor.push_back({{"n", t.n}, {"top", t.top}});
  for (auto& [g, k] : free) fr[std::to_string(g)] = k;
  return {{"towers", towers}, {"torsion", tor}, {"free", fr}};
}

std::string HomologyDescription::str() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  for (int b : towers) sep(), os << "T+(" << b << ")";
  for (auto& t : torsion) sep(), os << "T_" << t.n << "(" << t.top << ")";
  if (first) os << "0";
  return os.str();
}

namespace {

using Vec = std::vector<Rational>;

}  // namespace

HomologyDescription u_module_homology(const UComplex& uc) {
  const auto& c = uc.c;
  const Field& f = c.field;
  HomologyDescription out;
  if (c.gens.empty()) return out;

  std::map<int, std::vector<int>> by_gr;
  std::map<std::string, std::pair<int, int>> pos;  // id -> (gr, position within grading)
  for (int i = 0; i < static_cast<int>(c.gens.size()); ++i) {
    auto& v = by_gr[c.gens[i].gr];
    pos[c.gens[i].id] = {c.gens[i].gr, static_cast<int>(v.size())};
    v.push_back(i);
  }
  int lo = by_gr.begin()->first;
  int top = uc.top_valid;
  auto dim = [&](int g) { auto it = by_gr.find(g); return it == by_gr.end() ? 0 : static_cast<int>(it->second.size()); };

  // d_g as a dim(g-1) x dim(g) matrix
  auto dmat = [&](int g) {
    Matrix m(dim(g - 1), Vec(dim(g), 0));
    for (auto& [k, v] : c.d) {
      auto [gs, ps] = pos.at(k.first);
      if (gs != g) continue;
      m[pos.at(k.second).second][ps] = v;
    }
    return m;
  };
  auto apply_u = [&](const Vec& x, int g) {
    Vec y(dim(g - 2), 0);
    for (auto& [k, v] : uc.u) {
      auto [gs, ps] = pos.at(k.first);
      if (gs != g || x[ps] == 0) continue;
      auto [gt, pt] = pos.at(k.second);
      if (gt != g - 2) throw ConsistencyError("u map does not lower grading by 2");
      y[pt] = f.norm(y[pt] + x[ps] * v);
    }
    return y;
  };

  std::map<int, std::vector<Vec>> Z, B;
  std::map<int, int> rankB;
  for (int g = lo; g <= top + 1; ++g) {
    if (dim(g)) Z[g] = kernel_basis(dmat(g), dim(g), f);
    Matrix dn = dmat(g + 1);  // columns span B_g
    std::vector<Vec> cols;
    for (int j = 0; j < dim(g + 1); ++j) {
      Vec v(dim(g));
      for (int i = 0; i < dim(g); ++i) v[i] = dn[i][j];
      cols.push_back(v);
    }
    B[g] = cols;
    rankB[g] = rank(Matrix(cols.begin(), cols.end()), f);
  }

  // R[(t,b)] = rank of u^((t-b)/2) : H_t -> H_b
  std::map<std::pair<int, int>, int> R;
  for (int t = lo; t <= top; ++t) {
    std::vector<Vec> cur = Z.count(t) ? Z[t] : std::vector<Vec>{};
    for (int b = t; b >= lo; b -= 2) {
      if (b != t)
        for (auto& v : cur) v = apply_u(v, b + 2);
      std::vector<Vec> all = cur;
      all.insert(all.end(), B[b].begin(), B[b].end());
      int r = dim(b) ? rank(Matrix(all.begin(), all.end()), f) - rankB[b] : 0;
      R[{t, b}] = r;
    }
  }
  auto get = [&](int t, int b) {
    if (t > top || b < lo || b > t) return 0;
    return R.at({t, b});
  };
  for (int t = lo; t <= top; ++t)
    for (int b = t; b >= lo; b -= 2) {
      int n = get(t, b) - get(t + 2, b) - get(t, b - 2) + get(t + 2, b - 2);
      if (n < 0) throw ConsistencyError("u-module rank function is not a persistence module");
      for (int i = 0; i < n; ++i) {
        if (t + 2 > top)
          out.towers.push_back(b);
        else
          out.torsion.push_back({(t - b) / 2 + 1, t});
      }
    }
  out.normalize();
  return out;
}

}  // namespace floer
