#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "floer/filtered.hpp"

namespace oracle {

using floer::FilteredComplex;
using floer::Rational;

inline Rational reduce_coef(const floer::Field& f, Rational x) {
  if (f.kind == floer::Field::Q) return x;
  auto n = numerator(x) % 2;
  return n == 0 ? Rational(0) : Rational(1);
}

// Plain Gaussian elimination; returns the rank of m over f.
inline int gauss_rank(std::vector<std::vector<Rational>> m, const floer::Field& f) {
  int r = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (auto& row : m)
    for (auto& x : row) x = reduce_coef(f, x);
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational k = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] = reduce_coef(f, m[i][j] - k * m[r][j]);
    }
    ++r;
  }
  return r;
}

// Homology ranks by grading, restricted to generators accepted by keep and arrows accepted by arrow.
template <class Keep, class Arrow>
std::map<int, int> gauss_homology(const FilteredComplex& c, Keep keep, Arrow arrow) {
  std::map<int, std::vector<int>> by_gr;
  for (int i = 0; i < static_cast<int>(c.gens.size()); ++i)
    if (keep(c.gens[i])) by_gr[c.gens[i].gr].push_back(i);
  std::map<int, int> pos;
  for (auto& [g, ids] : by_gr)
    for (int k = 0; k < static_cast<int>(ids.size()); ++k) pos[ids[k]] = k;
  auto idx = [&](const std::string& id) { return c.index(id); };
  std::map<int, int> rank_out;  // rank of d leaving grading g
  for (auto& [g, src] : by_gr) {
    auto it = by_gr.find(g - 1);
    if (it == by_gr.end()) continue;
    std::vector<std::vector<Rational>> m(it->second.size(), std::vector<Rational>(src.size()));
    for (auto& [k, v] : c.d) {
      int s = idx(k.first), t = idx(k.second);
      if (!keep(c.gens[s]) || !keep(c.gens[t]) || !arrow(c.gens[s], c.gens[t])) continue;
      if (c.gens[s].gr != g) continue;
      m[pos[t]][pos[s]] += v;
    }
    rank_out[g] = gauss_rank(m, c.field);
  }
  std::map<int, int> h;
  for (auto& [g, ids] : by_gr) {
    int r = static_cast<int>(ids.size()) - rank_out[g] - rank_out[g + 1];
    if (r) h[g] = r;
  }
  return h;
}

inline std::map<int, int> gauss_homology(const FilteredComplex& c) {
  return gauss_homology(c, [](const floer::Gen&) { return true; },
                        [](const floer::Gen&, const floer::Gen&) { return true; });
}

// Ranks of the homology of the associated graded complex, per (A, gr).
inline std::map<std::pair<int, int>, int> graded_oracle(const FilteredComplex& c) {
  std::map<std::pair<int, int>, int> out;
  std::map<int, int> levels;
  for (auto& g : c.gens) levels[g.A] = 1;
  for (auto& [a, unused] : levels) {
    auto h = gauss_homology(
        c, [a = a](const floer::Gen& g) { return g.A == a; },
        [](const floer::Gen& s, const floer::Gen& t) { return s.A == t.A; });
    for (auto [g, r] : h) out[{a, g}] = r;
  }
  return out;
}

inline std::map<int, int> nonzero(const std::map<int, int>& m) {
  std::map<int, int> out;
  for (auto [k, v] : m)
    if (v) out[k] = v;
  return out;
}

// Random filtered complex: cancelling pairs plus survivors, conjugated by random
// filtered, grading-preserving elementary basis changes.
inline FilteredComplex random_complex(std::mt19937& rng, floer::Field f, int size) {
  std::uniform_int_distribution<int> small(-2, 2), coin(0, 3);
  auto nz = [&] {
    if (f.kind == floer::Field::F2) return Rational(1);
    int v = 0;
    while (!v) v = small(rng);
    return Rational(v);
  };
  FilteredComplex c;
  c.field = f;
  std::vector<std::vector<Rational>> D;
  while (static_cast<int>(c.gens.size()) < size) {
    int A = small(rng), gr = small(rng);
    int i = static_cast<int>(c.gens.size());
    c.gens.push_back({"g" + std::to_string(i), A, gr});
    if (coin(rng) > 0 && i + 1 < size) {
      int drop = coin(rng) == 0 ? 1 : 0;
      c.gens.push_back({"g" + std::to_string(i + 1), A - drop, gr - 1});
    }
  }
  const int n = static_cast<int>(c.gens.size());
  D.assign(n, std::vector<Rational>(n));
  for (int i = 0; i + 1 < n; ++i)
    if (c.gens[i + 1].gr == c.gens[i].gr - 1 && c.gens[i + 1].A <= c.gens[i].A && (i == 0 || D[i][i - 1] == 0) &&
        coin(rng) > 0) {
      D[i + 1][i] = nz();
      ++i;
    }
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int step = 0; step < 3 * n; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j || c.gens[i].gr != c.gens[j].gr || c.gens[j].A > c.gens[i].A) continue;
    Rational k = nz();
    for (int r = 0; r < n; ++r) D[r][i] = reduce_coef(f, D[r][i] + k * D[r][j]);
    for (int s = 0; s < n; ++s) D[j][s] = reduce_coef(f, D[j][s] - k * D[i][s]);
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (D[t][s] != 0) c.set(c.gens[s].id, c.gens[t].id, D[t][s]);
  return c;
}

}  // namespace oracle
