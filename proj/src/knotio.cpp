#include "floer/knotio.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "floer/error.hpp"
#include "floer/rational.hpp"

namespace floer {

KnotDiagram parse_pd(std::string_view text) {
  KnotDiagram d;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      } else if (text[i] == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
      } else {
        break;
      }
    }
  };
  auto fail = [&](const std::string& why) {
    throw SyntaxError("PD syntax error at offset " + std::to_string(i) + ": " + why);
  };
  skip();
  while (i < text.size()) {
    if (text[i] != 'X') fail("expected X(");
    ++i;
    skip();
    if (i >= text.size() || text[i] != '(') fail("expected (");
    ++i;
    std::array<int, 4> x{};
    for (int k = 0; k < 4; ++k) {
      skip();
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) fail("expected a positive integer label");
      if (j - i > 9) fail("label too large");
      x[k] = std::stoi(std::string(text.substr(i, j - i)));
      if (x[k] <= 0) fail("labels must be positive");
      i = j;
      skip();
      char want = k < 3 ? ',' : ')';
      if (i >= text.size() || text[i] != want) fail(std::string("expected '") + want + "'");
      ++i;
    }
    d.crossings.push_back(x);
    skip();
  }
  validate(d);
  return d;
}

std::string to_pd(const KnotDiagram& d) {
  std::ostringstream os;
  for (int c = 0; c < d.size(); ++c) {
    auto& x = d.crossings[c];
    if (c) os << ' ';
    os << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
  }
  return os.str();
}

static int next_label(int e, int n2) { return e % n2 + 1; }

static int over_in_raw(const std::array<int, 4>& x, int n2) {
  if (n2 == 2) return x[1] == x[2] ? 1 : 3;
  if (x[3] == next_label(x[1], n2)) return 1;
  if (x[1] == next_label(x[3], n2)) return 3;
  return 0;
}

int over_in_slot(const KnotDiagram& d, int c) {
  int s = over_in_raw(d.crossings.at(c), d.edges());
  if (!s) throw ValidationError("over-strand labels at crossing " + std::to_string(c) + " are not consecutive");
  return s;
}

int crossing_sign(const KnotDiagram& d, int c) { return over_in_slot(d, c) == 3 ? 1 : -1; }

std::vector<int> crossing_signs(const KnotDiagram& d) {
  std::vector<int> s(d.size());
  for (int c = 0; c < d.size(); ++c) s[c] = crossing_sign(d, c);
  return s;
}

int writhe(const KnotDiagram& d) {
  int w = 0;
  for (int s : crossing_signs(d)) w += s;
  return w;
}

std::vector<std::pair<Slot, Slot>> edge_ends(const KnotDiagram& d) {
  std::vector<std::pair<Slot, Slot>> ends(d.edges());
  for (int c = 0; c < d.size(); ++c) {
    int oi = over_in_slot(d, c);
    for (int p = 0; p < 4; ++p) {
      auto& e = ends[d.crossings[c][p] - 1];
      if (p == 0 || p == oi)
        e.second = {c, p};
      else
        e.first = {c, p};
    }
  }
  return ends;
}

Slot other_end(const KnotDiagram& d, Slot s) {
  int lab = d.crossings[s.c][s.p];
  for (int c = 0; c < d.size(); ++c)
    for (int p = 0; p < 4; ++p)
      if (d.crossings[c][p] == lab && !(c == s.c && p == s.p)) return {c, p};
  throw ValidationError("label " + std::to_string(lab) + " appears once");
}

std::vector<std::vector<Slot>> faces(const KnotDiagram& d) {
  int n = d.size();
  std::vector<std::vector<Slot>> occ(d.edges());
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) occ[d.crossings[c][p] - 1].push_back({c, p});
  auto other = [&](Slot s) {
    auto& o = occ[d.crossings[s.c][s.p] - 1];
    return o[0] == s ? o[1] : o[0];
  };
  std::vector<std::vector<char>> seen(n, std::vector<char>(4, 0));
  std::vector<std::vector<Slot>> out;
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) {
      if (seen[c][p]) continue;
      std::vector<Slot> f;
      Slot s{c, p};
      while (!seen[s.c][s.p]) {
        seen[s.c][s.p] = 1;
        f.push_back(s);
        Slot o = other(s);
        s = {o.c, (o.p + 3) % 4};
      }
      out.push_back(std::move(f));
    }
  return out;
}

void validate(const KnotDiagram& d) {
  int n = d.size();
  if (n == 0) throw ValidationError("diagram has no crossings");
  int n2 = 2 * n;
  std::vector<int> count(n2 + 1, 0);
  for (auto& x : d.crossings)
    for (int l : x) {
      if (l < 1 || l > n2)
        throw ValidationError("label " + std::to_string(l) + " outside 1.." + std::to_string(n2));
      ++count[l];
    }
  for (int l = 1; l <= n2; ++l)
    if (count[l] != 2)
      throw ValidationError("label " + std::to_string(l) + " appears " + std::to_string(count[l]) +
                            " times");
  std::vector<int> heads(n2 + 1, 0), tails(n2 + 1, 0);
  for (int c = 0; c < n; ++c) {
    auto& x = d.crossings[c];
    if (x[2] != next_label(x[0], n2))
      throw ValidationError("under-strand labels at crossing " + std::to_string(c) + " are not consecutive");
    int oi = over_in_raw(x, n2);
    if (!oi) throw ValidationError("over-strand labels at crossing " + std::to_string(c) + " are not consecutive");
    ++heads[x[0]];
    ++tails[x[2]];
    ++heads[x[oi]];
    ++tails[x[4 - oi]];
  }
  for (int l = 1; l <= n2; ++l)
    if (heads[l] != 1 || tails[l] != 1)
      throw ValidationError("edge " + std::to_string(l) + " is not traversed consistently (not a single oriented component)");
  if (static_cast<int>(faces(d).size()) != n + 2)
    throw ValidationError("diagram is not planar (face count " + std::to_string(faces(d).size()) +
                          ", expected " + std::to_string(n + 2) + ")");
}

bool is_alternating(const KnotDiagram& d) {
  auto ends = edge_ends(d);
  int n2 = d.edges();
  std::vector<int> under(n2);
  for (int e = 0; e < n2; ++e) under[e] = ends[e].second.p == 0;
  for (int e = 0; e < n2; ++e)
    if (under[e] == under[(e + 1) % n2]) return false;
  return true;
}

KnotDiagram mirror(const KnotDiagram& d) {
  KnotDiagram m;
  m.name = d.name.empty() ? "" : "mirror(" + d.name + ")";
  for (int c = 0; c < d.size(); ++c) {
    auto& x = d.crossings[c];
    int start = over_in_slot(d, c);
    m.crossings.push_back({x[start], x[(start + 1) % 4], x[(start + 2) % 4], x[(start + 3) % 4]});
  }
  return m;
}

KnotDiagram connected_sum(const KnotDiagram& a, const KnotDiagram& b) {
  int n1 = a.edges(), total = a.edges() + b.edges();
  auto ea = edge_ends(a);
  auto eb = edge_ends(b);
  KnotDiagram r;
  r.name = a.name.empty() || b.name.empty() ? "" : a.name + "#" + b.name;
  r.crossings = a.crossings;
  Slot ha = ea[n1 - 1].second;
  r.crossings[ha.c][ha.p] = total;
  Slot hb = eb[b.edges() - 1].second;
  for (int c = 0; c < b.size(); ++c) {
    auto x = b.crossings[c];
    for (int p = 0; p < 4; ++p) x[p] = (c == hb.c && p == hb.p) ? n1 : x[p] + n1;
    r.crossings.push_back(x);
  }
  validate(r);
  return r;
}

namespace {

// Signature of a symmetric rational matrix via congruence diagonalization.
int inertia(std::vector<std::vector<Rational>> m) {
  int n = static_cast<int>(m.size());
  int sig = 0;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (m[i][i] != 0) { piv = i; break; }
    if (piv < 0) {
      int pi = -1, pj = -1;
      for (int i = k; i < n && pi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (m[i][j] != 0) { pi = i; pj = j; break; }
      if (pi < 0) break;
      // row/col op: x_i += x_j makes the diagonal entry 2 m_ij
      for (int t = 0; t < n; ++t) m[pi][t] += m[pj][t];
      for (int t = 0; t < n; ++t) m[t][pi] += m[t][pj];
      piv = pi;
    }
    std::swap(m[k], m[piv]);
    for (auto& row : m) std::swap(row[k], row[piv]);
    Rational p = m[k][k];
    sig += p > 0 ? 1 : -1;
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / p;
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
    for (int i = k + 1; i < n; ++i) m[k][i] = 0, m[i][k] = 0;
  }
  return sig;
}

}  // namespace

// Gordon-Litherland: sign of the Goeritz form of the white surface minus its correction term.
int signature(const KnotDiagram& d) {
  int n = d.size();
  auto fs = faces(d);
  int F = static_cast<int>(fs.size());
  std::vector<std::vector<int>> corner(n, std::vector<int>(4));
  for (int f = 0; f < F; ++f)
    for (auto s : fs[f]) corner[s.c][s.p] = f;

  std::vector<std::vector<int>> adj(F);
  std::map<int, std::vector<Slot>> occ;
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) occ[d.crossings[c][p]].push_back({c, p});
  for (auto& [lab, v] : occ) {
    int fa = corner[v[0].c][v[0].p], fb = corner[v[1].c][v[1].p];
    adj[fa].push_back(fb);
    adj[fb].push_back(fa);
  }
  std::vector<int> col(F, -1);
  col[0] = 0;
  std::vector<int> st{0};
  while (!st.empty()) {
    int u = st.back();
    st.pop_back();
    for (int v : adj[u]) {
      if (col[v] < 0) {
        col[v] = 1 - col[u];
        st.push_back(v);
      } else if (col[v] == col[u]) {
        throw ConsistencyError("checkerboard colouring failed");
      }
    }
  }
  std::vector<int> idx(F, -1);
  int m = 0;
  for (int f = 0; f < F; ++f)
    if (col[f] == 0) idx[f] = m++;
  std::vector<std::vector<Rational>> G(m, std::vector<Rational>(m, 0));
  int mu = 0;
  for (int c = 0; c < n; ++c) {
    int sec[4];
    for (int k = 0; k < 4; ++k) sec[k] = corner[c][k];
    int wk[2], nw = 0;
    for (int k = 0; k < 4; ++k)
      if (col[sec[k]] == 0 && nw < 2) wk[nw++] = k;
    if (nw != 2 || wk[1] - wk[0] != 2) throw ConsistencyError("white sectors not opposite");
    int eta = wk[0] % 2 == 0 ? -1 : 1;
    int so = 4 - over_in_slot(d, c);
    int sep = so == 1 ? 0 : 3;
    bool type2 = col[sec[sep]] == 0;
    int a = idx[sec[wk[0]]], b = idx[sec[wk[1]]];
    if (a != b) {
      G[a][b] -= eta;
      G[b][a] -= eta;
      G[a][a] += eta;
      G[b][b] += eta;
    }
    if (type2) mu += eta;
  }
  std::vector<std::vector<Rational>> M;
  for (int i = 1; i < m; ++i) M.emplace_back(G[i].begin() + 1, G[i].end());
  return inertia(M) - mu;
}

}  // namespace floer
