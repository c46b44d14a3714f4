#include "floer/altgen.hpp"

#include <algorithm>
#include <functional>

#include "floer/error.hpp"
#include "floer/foxalex.hpp"

namespace floer {

const char* choice_name(Choice c) {
  switch (c) {
    case Choice::Plus: return "+";
    case Choice::Minus: return "-";
    case Choice::In: return "in";
    case Choice::Out: return "out";
  }
  return "?";
}

namespace {

// (exponent, sign) contributed by a choice at a crossing of sign eps.
std::pair<int, int> letter(Choice c, int eps) {
  switch (c) {
    case Choice::Plus: return {0, 1};
    case Choice::Minus: return {eps, -1};
    case Choice::In: return {eps, 1};
    case Choice::Out: return {0, -1};
  }
  return {0, 0};
}

int perm_sign(const std::vector<int>& target, int skip) {
  int n = static_cast<int>(target.size());
  std::vector<char> seen(n, 0);
  int s = 1;
  for (int i = 0; i < n; ++i) {
    if (i == skip || seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = target[j]) seen[j] = 1, ++len;
    if (len % 2 == 0) s = -s;
  }
  return s;
}

Component rotate_min(Component c) {
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return c;
}

}  // namespace

AltDiagram::AltDiagram(const KnotDiagram& d, int c1) : d_(d), c1_(c1) {
  validate(d_);
  if (!is_alternating(d_)) throw DomainError("diagram is not alternating");
  int n = d_.size();
  if (c1 < 0 || c1 >= n) throw DomainError("c1 = " + std::to_string(c1) + " is not a crossing index");
  std::vector<int> edge_over(d_.edges() + 1, -1);
  for (int c = 0; c < n; ++c) edge_over[d_.crossings[c][1]] = edge_over[d_.crossings[c][3]] = c;
  sign_ = crossing_signs(d_);
  for (int c = 0; c < n; ++c) {
    uin_.push_back(edge_over[d_.crossings[c][0]]);
    uout_.push_back(edge_over[d_.crossings[c][2]]);
  }

  std::vector<int> rows;
  for (int c = 0; c < n; ++c)
    if (c != c1) rows.push_back(c);
  MPR cur;
  cur.c1 = c1;
  cur.target.assign(n, c1);
  cur.choice.assign(n, Choice::Plus);
  std::vector<char> used(n, 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == rows.size()) {
      mprs_.push_back(cur);
      return;
    }
    int c = rows[i];
    std::pair<int, Choice> opts[4] = {{c, Choice::Plus}, {c, Choice::Minus}, {uin_[c], Choice::In}, {uout_[c], Choice::Out}};
    for (auto [t, ch] : opts) {
      if (t == c1 || used[t]) continue;
      used[t] = 1;
      cur.target[c] = t;
      cur.choice[c] = ch;
      rec(i + 1);
      used[t] = 0;
    }
  };
  rec(0);

  Laurent sum;
  for (auto& m : mprs_) {
    auto [e, s] = raw_monomial(m);
    sum.add(e, s);
  }
  if (sum.is_zero() || (sum.min_exp() + sum.max_exp()) % 2 != 0)
    throw ConsistencyError("signed MPR sum " + sum.str() + " cannot be centred");
  shift_ = -(sum.min_exp() + sum.max_exp()) / 2;
  flip_ = sum.at_one() < 0 ? -1 : 1;
}

std::pair<int, int> AltDiagram::raw_monomial(const MPR& m) const {
  int e = 0, s = perm_sign(m.target, c1_);
  for (int c = 0; c < d_.size(); ++c) {
    if (c == c1_) continue;
    auto [le, ls] = letter(m.choice[c], sign_[c]);
    e += le;
    s *= ls;
  }
  return {e, s};
}

std::pair<int, int> AltDiagram::alexander(const MPR& m) const {
  auto [e, s] = raw_monomial(m);
  return {e + shift_, s * flip_};
}

BaseGenerator AltDiagram::base(const MPR& m) const {
  BaseGenerator y(d_.size(), 0);
  for (int c = 0; c < d_.size(); ++c)
    if (c != c1_) y[c] = (m.choice[c] == Choice::Plus || m.choice[c] == Choice::Out) ? 1 : -1;
  return y;
}

std::vector<BaseGenerator> AltDiagram::base_generators() const {
  std::vector<BaseGenerator> out;
  for (auto& m : mprs_) {
    bool all = true;
    for (int c = 0; c < d_.size(); ++c)
      if (c != c1_ && (m.choice[c] == Choice::In || m.choice[c] == Choice::Out)) all = false;
    if (all) out.push_back(base(m));
  }
  return out;
}

std::vector<Component> AltDiagram::marked_components(const MPR& m) const {
  int n = d_.size();
  std::vector<char> seen(n, 0);
  std::vector<Component> out;
  for (int c = 0; c < n; ++c) {
    if (c == c1_ || seen[c] || m.choice[c] == Choice::Plus || m.choice[c] == Choice::Minus) continue;
    Component comp;
    for (int j = c; !seen[j]; j = m.target[j]) seen[j] = 1, comp.push_back(j);
    out.push_back(rotate_min(comp));
  }
  return out;
}

void AltDiagram::check(const MPR& m) const {
  int n = d_.size();
  if (m.c1 != c1_ || static_cast<int>(m.target.size()) != n || static_cast<int>(m.choice.size()) != n)
    throw ConsistencyError("MPR does not belong to this diagram");
  std::vector<int> hits(n, 0);
  for (int c = 0; c < n; ++c) {
    if (c == c1_) continue;
    int t = m.target[c];
    Choice ch = m.choice[c];
    bool ok = (ch == Choice::Plus || ch == Choice::Minus) ? t == c
              : ch == Choice::In                          ? t == uin_[c]
                                                          : t == uout_[c];
    if (!ok || t == c1_) throw ConsistencyError("MPR selects a letter absent from row " + std::to_string(c));
    ++hits[t];
  }
  for (int c = 0; c < n; ++c)
    if (c != c1_ && hits[c] != 1) throw ConsistencyError("MPR is not a bijection at crossing " + std::to_string(c));
  for (auto& comp : marked_components(m))
    for (int c : comp)
      if (m.choice[c] == Choice::Plus || m.choice[c] == Choice::Minus)
        throw ConsistencyError("marked component contains an unresolved crossing");
}

std::set<Component> AltDiagram::pool(const BaseGenerator& y) const {
  std::set<Component> p;
  for (auto& m : mprs_)
    if (base(m) == y)
      for (auto& comp : marked_components(m)) p.insert(comp);
  return p;
}

std::vector<std::pair<Component, std::vector<Choice>>> AltDiagram::cycles() const {
  int n = d_.size();
  std::vector<std::pair<Component, std::vector<Choice>>> out;
  Component path;
  std::vector<Choice> lets;
  std::vector<char> vis(n, 0);
  std::function<void(int, int)> dfs = [&](int start, int cur) {
    std::pair<int, Choice> succ[2] = {{uin_[cur], Choice::In}, {uout_[cur], Choice::Out}};
    for (auto [t, ch] : succ) {
      if (t == c1_) continue;
      if (t == start) {
        lets.push_back(ch);
        out.push_back({path, lets});
        lets.pop_back();
      } else if (t > start && !vis[t]) {
        vis[t] = 1;
        path.push_back(t);
        lets.push_back(ch);
        dfs(start, t);
        lets.pop_back();
        path.pop_back();
        vis[t] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    if (s == c1_) continue;
    path = {s};
    vis[s] = 1;
    dfs(s, s);
    vis[s] = 0;
  }
  return out;
}

std::optional<std::pair<int, int>> AltDiagram::cycle_sides(const Component& path,
                                                          const std::vector<Choice>& lets) const {
  int n = d_.size();
  std::vector<char> used(d_.edges() + 1, 0);
  for (size_t i = 0; i < path.size(); ++i) {
    auto& x = d_.crossings[path[i]];
    used[lets[i] == Choice::In ? x[0] : x[2]] = 1;
  }
  auto fs = faces(d_);
  std::vector<std::vector<int>> face_of(n, std::vector<int>(4));
  for (int f = 0; f < static_cast<int>(fs.size()); ++f)
    for (auto s : fs[f]) face_of[s.c][s.p] = f;
  std::vector<std::vector<Slot>> occ(d_.edges() + 1);
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) occ[d_.crossings[c][p]].push_back({c, p});
  std::vector<std::vector<std::pair<int, int>>> adj(fs.size());
  for (int lab = 1; lab <= d_.edges(); ++lab) {
    int fa = face_of[occ[lab][0].c][occ[lab][0].p], fb = face_of[occ[lab][1].c][occ[lab][1].p];
    adj[fa].push_back({fb, used[lab]});
    adj[fb].push_back({fa, used[lab]});
  }
  std::vector<int> side(fs.size(), -1);
  side[0] = 0;
  std::vector<int> st{0};
  while (!st.empty()) {
    int u = st.back();
    st.pop_back();
    for (auto [v, fl] : adj[u]) {
      if (side[v] < 0) {
        side[v] = side[u] ^ fl;
        st.push_back(v);
      } else if (side[v] != (side[u] ^ fl)) {
        return std::nullopt;
      }
    }
  }
  std::vector<char> on(n, 0);
  for (int c : path) on[c] = 1;
  int cnt[2] = {0, 0};
  for (int c = 0; c < n; ++c) {
    if (on[c]) continue;
    int s0 = side[face_of[c][0]];
    for (int p = 1; p < 4; ++p)
      if (side[face_of[c][p]] != s0) return std::nullopt;
    ++cnt[s0];
  }
  return std::pair{cnt[0], cnt[1]};
}

std::vector<MPR> enumerate_mprs(const KnotDiagram& d, int c1) { return AltDiagram(d, c1).mprs(); }

std::pair<int, int> mpr_alexander(const MPR& m, const KnotDiagram& d, int c1) {
  AltDiagram a(d, c1);
  a.check(m);
  return a.alexander(m);
}

std::set<Component> marked_component_pool(const BaseGenerator& y, const KnotDiagram& d, int c1) {
  AltDiagram a(d, c1);
  auto p = a.pool(y);
  std::vector<int> hit(d.size(), 0);
  for (auto& comp : p)
    for (int c : comp)
      if (hit[c]++) throw ConsistencyError("pool components share crossing " + std::to_string(c));
  return p;
}

SmallnessCertificate certify_small(const KnotDiagram& d) {
  validate(d);
  if (!is_alternating(d)) throw DomainError("diagram is not alternating");
  SmallnessCertificate cert;
  std::vector<int> edge_over(d.edges() + 1, -1);
  for (int c = 0; c < d.size(); ++c) edge_over[d.crossings[c][1]] = edge_over[d.crossings[c][3]] = c;
  for (int c1 = 0; c1 < d.size(); ++c1) {
    AltDiagram a(d, c1);
    cert = SmallnessCertificate{c1, true, std::nullopt, {}};
    for (auto& [path, lets] : a.cycles()) {
      auto sides = a.cycle_sides(path, lets);
      if (!sides) throw ConsistencyError("marked component does not separate the sphere consistently");
      if (std::min(sides->first, sides->second) == 0) continue;
      MPR w;
      w.c1 = c1;
      w.target.resize(d.size());
      w.choice.assign(d.size(), Choice::Plus);
      for (int c = 0; c < d.size(); ++c) w.target[c] = c == c1 ? c1 : c;
      for (size_t i = 0; i < path.size(); ++i) {
        w.choice[path[i]] = lets[i];
        w.target[path[i]] = path[(i + 1) % path.size()];
      }
      a.check(w);
      cert.verdict = false;
      cert.witness = w;
      cert.witness_component = rotate_min(path);
      break;
    }
    if (cert.verdict) return cert;
  }
  return cert;
}

nlohmann::json SmallnessCertificate::to_json() const {
  nlohmann::json j = {{"small", verdict}, {"c1", c1}};
  if (witness) {
    nlohmann::json ch = nlohmann::json::object();
    for (size_t c = 0; c < witness->choice.size(); ++c)
      if (static_cast<int>(c) != c1) ch[std::to_string(c)] = choice_name(witness->choice[c]);
    j["witness"] = {{"choices", ch}, {"component", witness_component}};
  }
  return j;
}

ReducedRanks reduced_ranks(const KnotDiagram& d) {
  auto cert = certify_small(d);
  if (!cert.verdict) throw DomainError("diagram is not small; reduced ranks are not available");
  AltDiagram a(d, cert.c1);
  std::map<BaseGenerator, std::vector<const MPR*>> groups;
  for (auto& m : a.mprs()) groups[a.base(m)].push_back(&m);
  size_t expect = size_t(1) << (d.size() - 1);
  if (groups.size() != expect)
    throw ConsistencyError("found " + std::to_string(groups.size()) + " base generators, expected " +
                           std::to_string(expect));
  ReducedRanks r;
  r.c1 = cert.c1;
  for (auto& [y, ms] : groups) {
    std::set<Component> pool;
    for (auto* m : ms)
      for (auto& comp : a.marked_components(*m)) pool.insert(comp);
    std::vector<int> hit(d.size(), 0);
    for (auto& comp : pool)
      for (int c : comp)
        if (hit[c]++) throw ConsistencyError("pool components share a crossing");
    if (ms.size() != size_t(1) << pool.size())
      throw ConsistencyError("MPRs over a base generator do not match the power set of its pool");
    if (!pool.empty()) continue;
    auto [e, s] = a.alexander(*ms.front());
    ++r.ranks[e];
    auto [it, fresh] = r.signs.emplace(e, s);
    if (!fresh && it->second != s) throw ConsistencyError("surviving generators at grading " + std::to_string(e) + " carry both signs");
  }
  Laurent delta = alexander(d);
  std::map<int, int> want;
  for (auto& [e, c] : delta.terms()) want[e] = static_cast<int>(c < 0 ? -c : c);
  if (want != r.ranks) throw ConsistencyError("reduced ranks differ from |coefficients| of " + delta.str());
  for (auto& [e, s] : r.signs)
    if ((delta.coef(e) > 0 ? 1 : -1) != s) throw ConsistencyError("reduced generator signs disagree with the Alexander polynomial");
  return r;
}

nlohmann::json ReducedRanks::to_json() const {
  nlohmann::json rk = nlohmann::json::object();
  for (auto& [e, v] : ranks) rk[std::to_string(e)] = v;
  return {{"ranks", rk}, {"small", true}, {"c1", c1}};
}

}  // namespace floer
