#include "floer/maslov.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "floer/error.hpp"

namespace floer {

namespace {

const HeegaardCellulation& cellof(const DomainChain& d) { return d.cellulation(); }

void require_planar(const DomainChain& d) {
  if (!d.is_planar())
    throw UnsupportedError("∂D runs through a tube; only planar boundaries are supported");
}

// Half-edge sequence realising a 1-chain on one curve with ∂ = to - from.
std::vector<int> chain_path(const HeegaardCellulation& c, int curve, const std::vector<long>& chain, int from,
                            int to) {
  const auto& cu = c.curves()[curve];
  const auto& edges = c.edges();
  for (const auto& piece : cu.pieces) {
    const int m = static_cast<int>(piece.size());
    int ia = -1, ib = -1;
    for (int j = 0; j < m; ++j) {
      int v = edges[piece[j]].from;
      if (v == from) ia = j;
      if (v == to) ib = j;
    }
    if (ia < 0 || (!cu.closed && ia == 0)) continue;
    if (ib < 0 || (!cu.closed && ib == 0)) throw ConsistencyError("generator arcs leave their planar piece");
    std::vector<long> expect(m, 0);
    std::vector<int> path;
    if (cu.closed) {
      long k = chain[piece[0]];
      for (int e : piece) k = std::min(k, chain[e]);
      std::fill(expect.begin(), expect.end(), k);
      for (int j = ia; j != ib; j = (j + 1) % m) {
        expect[j] = k + 1;
        path.push_back(2 * piece[j]);
      }
      for (long r = 0; r < std::labs(k); ++r)
        for (int s = 0; s < m; ++s) {
          if (k > 0)
            path.push_back(2 * piece[(ib + s) % m]);
          else
            path.push_back(2 * piece[((ib - 1 - s) % m + m) % m] + 1);
        }
    } else if (ia <= ib) {
      for (int j = ia; j < ib; ++j) {
        expect[j] = 1;
        path.push_back(2 * piece[j]);
      }
    } else {
      for (int j = ia - 1; j >= ib; --j) {
        expect[j] = -1;
        path.push_back(2 * piece[j] + 1);
      }
    }
    for (int j = 0; j < m; ++j)
      if (chain[piece[j]] != expect[j]) throw ConsistencyError("boundary on " + cu.name + " is not a single arc");
    return path;
  }
  throw ConsistencyError("corner not found on curve " + cu.name);
}

struct Strand {
  std::vector<Point> pts;
  std::vector<double> cum;
};

Strand make_strand(const HeegaardCellulation& c, int start, const std::vector<int>& path) {
  Strand s;
  s.pts.push_back(c.vertices()[start].p);
  for (int h : path) {
    auto pl = c.polyline(h);
    s.pts.insert(s.pts.end(), pl.begin() + 1, pl.end());
  }
  s.cum.push_back(0);
  for (size_t i = 1; i < s.pts.size(); ++i)
    s.cum.push_back(s.cum.back() + std::hypot(s.pts[i].x - s.pts[i - 1].x, s.pts[i].y - s.pts[i - 1].y));
  return s;
}

Point at(const Strand& s, double t) {
  double L = s.cum.back();
  if (L == 0) return s.pts[0];
  double x = t * L;
  auto it = std::upper_bound(s.cum.begin(), s.cum.end(), x);
  size_t i = it == s.cum.begin() ? 0 : static_cast<size_t>(it - s.cum.begin()) - 1;
  if (i + 1 >= s.pts.size()) return s.pts.back();
  double seg = s.cum[i + 1] - s.cum[i];
  double u = seg == 0 ? 0 : (x - s.cum[i]) / seg;
  return {s.pts[i].x + u * (s.pts[i + 1].x - s.pts[i].x), s.pts[i].y + u * (s.pts[i + 1].y - s.pts[i].y)};
}

// Total pairwise winding (radians) while the strands move in lockstep.
double phase_winding(const std::vector<Strand>& strands) {
  std::vector<double> ts{0.0, 1.0};
  for (auto& s : strands)
    if (s.cum.back() > 0)
      for (double c : s.cum) ts.push_back(c / s.cum.back());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end(), [](double a, double b) { return b - a < 1e-12; }), ts.end());
  const size_t n = strands.size();
  double total = 0;
  std::vector<Point> prev(n);
  for (size_t i = 0; i < n; ++i) prev[i] = at(strands[i], ts[0]);
  for (size_t k = 1; k < ts.size(); ++k) {
    std::vector<Point> cur(n);
    for (size_t i = 0; i < n; ++i) cur[i] = at(strands[i], ts[k]);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        double ax = prev[j].x - prev[i].x, ay = prev[j].y - prev[i].y;
        double bx = cur[j].x - cur[i].x, by = cur[j].y - cur[i].y;
        double cr = ax * by - ay * bx, dt = ax * bx + ay * by;
        if (std::hypot(ax, ay) < 1e-12 || std::hypot(bx, by) < 1e-12 || (std::fabs(cr) < 1e-12 && dt < 0))
          throw ConsistencyError("braid strands collide");
        total += std::atan2(cr, dt);
      }
    prev = cur;
  }
  return total;
}

char quadrant_type(const std::array<long, 4>& q) {
  for (int k = 0; k < 4; ++k) {
    long o = q[(k + 1) % 4];
    if (q[(k + 2) % 4] != o || q[(k + 3) % 4] != o) continue;
    if (q[k] == o + 1) return 'a';
    if (q[k] == o - 1) return 'b';
  }
  return '?';
}

}  // namespace

Rational corner_value(char type) {
  switch (type) {
    case 'a': return Rational(-1, 2);
    case 'b': return Rational(1, 2);
    case 'c':
    case 'd':
    case 'e': return Rational(0);
    default: throw DomainError(std::string("corner type ") + type + " has no local multiplicity");
  }
}

DomainChain::DomainChain(std::shared_ptr<const HeegaardCellulation> cell, std::vector<long> mult, std::vector<int> y,
                         std::vector<int> z, std::vector<Corner> declared, std::string name)
    : cell_(std::move(cell)), mult_(std::move(mult)), y_(std::move(y)), z_(std::move(z)),
      declared_(std::move(declared)), name_(std::move(name)) {
  const auto& c = *cell_;
  if (static_cast<int>(mult_.size()) != c.num_faces()) throw ValidationError("one multiplicity per region required");
  std::sort(y_.begin(), y_.end());
  std::sort(z_.begin(), z_.end());
  for (auto* g : {&y_, &z_}) {
    std::set<int> al, be;
    for (int v : *g) {
      if (v < 0 || v >= static_cast<int>(c.vertices().size()) || !c.is_crossing(v))
        throw ValidationError("generator points must be α∩β crossings");
      al.insert(c.alpha_at(v));
      be.insert(c.beta_at(v));
    }
    if (static_cast<int>(g->size()) != c.genus() || static_cast<int>(al.size()) != c.genus() ||
        static_cast<int>(be.size()) != c.genus())
      throw ValidationError("a generator needs one point on each α and each β curve");
  }
  for (int i = 0; i < c.genus(); ++i)
    for (auto [fp, fm] : c.tube_sector_pairs(i))
      if (mult_[fp] != mult_[fm])
        throw DomainError("multiplicities of " + c.face_id(fp) + " and " + c.face_id(fm) + " disagree across tube " +
                          std::to_string(i + 1));
  auto chain = boundary();
  std::vector<std::map<int, long>> del(c.curves().size());
  for (int e = 0; e < static_cast<int>(c.edges().size()); ++e) {
    const auto& ed = c.edges()[e];
    if (c.is_crossing(ed.to)) del[ed.curve][ed.to] += chain[e];
    if (c.is_crossing(ed.from)) del[ed.curve][ed.from] -= chain[e];
  }
  std::set<int> ys(y_.begin(), y_.end()), zs(z_.begin(), z_.end());
  for (int ci = 0; ci < static_cast<int>(c.curves().size()); ++ci) {
    long sign = c.curves()[ci].kind == CurveKind::Alpha ? 1 : -1;
    for (int v = 0; v < static_cast<int>(c.vertices().size()); ++v) {
      if (!c.is_crossing(v) || (c.alpha_at(v) != ci && c.beta_at(v) != ci)) continue;
      long want = sign * (static_cast<long>(zs.count(v)) - static_cast<long>(ys.count(v)));
      if (del[ci][v] != want)
        throw DomainError("∂D on " + c.curves()[ci].name + " is inconsistent with the generators at " +
                          c.vertices()[v].id);
    }
  }
  for (int i = 0; i < c.genus(); ++i) {
    auto [pp, pm] = c.feet()[i];
    for (int hp : c.rotation(pp))
      for (int hm : c.rotation(pm))
        if (c.edges()[hp / 2].curve == c.edges()[hm / 2].curve && chain[hp / 2] != chain[hm / 2])
          throw DomainError("∂D is discontinuous through tube " + std::to_string(i + 1));
  }
  for (auto& k : declared_) {
    const auto& set = k.role == 'y' ? ys : zs;
    if ((k.role != 'y' && k.role != 'z') || !set.count(k.vertex))
      throw ValidationError("declared corner is not a " + std::string(1, k.role) + " point");
  }
}

DomainChain DomainChain::from_json(const nlohmann::json& j, const std::string& base_dir) {
  try {
    std::shared_ptr<const HeegaardCellulation> cell;
    const auto& cj = j.at("cellulation");
    if (cj.is_string()) {
      auto path = std::filesystem::path(base_dir) / cj.get<std::string>();
      // Emitted domains name their cellulation without the extension.
      if (!std::filesystem::exists(path) && path.extension() != ".json") path += ".json";
      cell = HeegaardCellulation::load(path.string());
    } else {
      cell = std::make_shared<const HeegaardCellulation>(HeegaardCellulation::from_json(cj));
    }
    std::vector<long> mult(cell->num_faces(), 0);
    auto mj = j.value("multiplicity", nlohmann::json::object());
    for (auto& [k, v] : mj.items())
      mult[cell->face_index(k)] = v.get<long>();
    std::vector<int> y, z;
    for (auto& v : j.at("y")) y.push_back(cell->vertex_index(v.get<std::string>()));
    for (auto& v : j.at("z")) z.push_back(cell->vertex_index(v.get<std::string>()));
    std::vector<Corner> declared;
    auto cj2 = j.value("corners", nlohmann::json::array());
    for (auto& k : cj2) {
      Corner c;
      c.vertex = cell->vertex_index(k.at("vertex").get<std::string>());
      auto role = k.at("role").get<std::string>();
      if (role != "y" && role != "z") throw ValidationError("corner role must be y or z");
      c.role = role[0];
      auto type = k.value("type", std::string("?"));
      if (type.size() != 1 || (type != "?" && (type[0] < 'a' || type[0] > 'f')))
        throw ValidationError("corner type must be one of a..f");
      c.type = type[0];
      declared.push_back(c);
    }
    return DomainChain(cell, mult, y, z, declared, j.value("name", ""));
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("domain JSON: ") + e.what());
  }
}

DomainChain DomainChain::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(path + ": " + e.what());
  }
  return from_json(j, std::filesystem::path(path).parent_path().string());
}

nlohmann::json DomainChain::to_json() const {
  const auto& c = *cell_;
  nlohmann::json m = nlohmann::json::object();
  for (int f = 0; f < c.num_faces(); ++f)
    if (mult_[f]) m[c.face_id(f)] = mult_[f];
  nlohmann::json y = nlohmann::json::array(), z = nlohmann::json::array();
  for (int v : y_) y.push_back(c.vertices()[v].id);
  for (int v : z_) z.push_back(c.vertices()[v].id);
  nlohmann::json j{{"cellulation", c.name()}, {"multiplicity", m}, {"y", y}, {"z", z}};
  if (!name_.empty()) j["name"] = name_;
  return j;
}

std::vector<long> DomainChain::boundary() const {
  std::vector<long> out(cell_->edges().size());
  for (int e = 0; e < static_cast<int>(out.size()); ++e)
    out[e] = mult_[cell_->left_face(e)] - mult_[cell_->right_face(e)];
  return out;
}

long DomainChain::min_multiplicity() const { return *std::min_element(mult_.begin(), mult_.end()); }

bool DomainChain::is_planar() const {
  auto chain = boundary();
  for (int e = 0; e < static_cast<int>(chain.size()); ++e) {
    const auto& ed = cell_->edges()[e];
    if (chain[e] != 0 && (!cell_->is_crossing(ed.from) || !cell_->is_crossing(ed.to))) return false;
  }
  return true;
}

long DomainChain::foot_multiplicity(int tube) const {
  return mult_[cell_->face(cell_->rotation(cell_->feet().at(tube).first)[0])];
}

bool DomainChain::is_degenerate(int v) const {
  return std::binary_search(y_.begin(), y_.end(), v) && std::binary_search(z_.begin(), z_.end(), v);
}

DomainChain DomainChain::plus_sigma(long k) const {
  auto m = mult_;
  for (auto& x : m) x += k;
  return DomainChain(cell_, m, y_, z_, {}, name_);
}

DomainChain compose(const DomainChain& a, const DomainChain& b) {
  if (a.cellulation_ptr() != b.cellulation_ptr() && a.cellulation().name() != b.cellulation().name())
    throw DomainError("domains live on different cellulations");
  if (a.z() != b.y()) throw DomainError("domains are not composable: end of first differs from start of second");
  auto m = a.multiplicities();
  for (size_t f = 0; f < m.size(); ++f) m[f] += b.multiplicities()[f];
  return DomainChain(a.cellulation_ptr(), m, a.y(), b.z());
}

int euler_chain(const DomainChain& d) {
  require_planar(d);
  const auto& c = cellof(d);
  long shift = std::max(0L, -d.min_multiplicity());
  auto n = d.multiplicities();
  for (auto& x : n) x += shift;
  long chi = 0;
  for (long x : n) chi += x;
  for (int e = 0; e < static_cast<int>(c.edges().size()); ++e) chi -= std::max(n[c.left_face(e)], n[c.right_face(e)]);
  for (int v = 0; v < static_cast<int>(c.vertices().size()); ++v) {
    const auto& r = c.rotation(v);
    const size_t m = r.size();
    long top = 0;
    for (int h : r) top = std::max(top, n[c.face(h)]);
    for (long level = 1; level <= top; ++level) {
      std::vector<bool> on(m);
      for (size_t k = 0; k < m; ++k) on[k] = n[c.face(r[k])] >= level;
      if (std::all_of(on.begin(), on.end(), [](bool b) { return b; })) {
        chi += 1;
        continue;
      }
      for (size_t k = 0; k < m; ++k) chi += on[k] && !on[(k + m - 1) % m];
    }
  }
  for (int i = 0; i < c.genus(); ++i) chi -= 2 * (d.foot_multiplicity(i) + shift);
  chi -= shift * (2 - 2 * c.genus());
  return static_cast<int>(chi);
}

std::vector<Corner> classify_corners(const DomainChain& d) {
  const auto& c = cellof(d);
  auto chain = d.boundary();
  std::vector<Corner> out;
  for (char role : {'y', 'z'})
    for (int v : role == 'y' ? d.y() : d.z()) {
      Corner k{v, role, '?'};
      const auto& r = c.rotation(v);
      if (d.is_degenerate(v)) {
        bool a = false, b = false;
        for (int h : r) {
          if (chain[h / 2] == 0) continue;
          if (c.curves()[c.edges()[h / 2].curve].kind == CurveKind::Alpha)
            a = true;
          else
            b = true;
        }
        k.type = a && b ? 'e' : (a || b ? 'c' : 'd');
      } else {
        std::array<long, 4> q;
        for (int s = 0; s < 4; ++s) q[s] = d.multiplicity(c.face(r[s]));
        k.type = quadrant_type(q);
        if (k.type == '?')
          throw DomainError("unclassifiable corner at " + c.vertices()[v].id + " (quadrants " + std::to_string(q[0]) +
                            "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," + std::to_string(q[3]) + ")");
      }
      for (auto& dc : d.declared_corners())
        if (dc.vertex == v && dc.role == role && dc.type != '?' && dc.type != k.type)
          throw ValidationError("declared corner type " + std::string(1, dc.type) + " at " + c.vertices()[v].id +
                                " but computed " + std::string(1, k.type));
      out.push_back(k);
    }
  return out;
}

Rational corner_term(const DomainChain& d) {
  Rational s = 0;
  for (auto& k : classify_corners(d)) s += corner_value(k.type);
  return s;
}

int braid_writhe(const DomainChain& d) {
  require_planar(d);
  const auto& c = cellof(d);
  auto chain = d.boundary();
  std::map<int, int> z_on_alpha, y_on_beta;
  for (int v : d.z()) z_on_alpha[c.alpha_at(v)] = v;
  for (int v : d.y()) y_on_beta[c.beta_at(v)] = v;
  std::vector<Strand> alpha, beta;
  for (int v : d.y()) {
    int a = c.alpha_at(v);
    int w = z_on_alpha.at(a);
    alpha.push_back(make_strand(c, v, chain_path(c, a, chain, v, w)));
    int b = c.beta_at(w);
    beta.push_back(make_strand(c, w, chain_path(c, b, chain, w, y_on_beta.at(b))));
  }
  double t = (phase_winding(alpha) + phase_winding(beta)) / M_PI;
  double r = std::round(t);
  if (std::fabs(t - r) > 1e-6) throw ConsistencyError("braid writhe is not an integer");
  return static_cast<int>(r);
}

int diagonal_term(const DomainChain& d) {
  require_planar(d);
  const auto& c = cellof(d);
  long s = (2L * c.genus() - 2) * d.multiplicity(c.infinity_face()) + braid_writhe(d);
  for (int i = 0; i < c.genus(); ++i) s += 2 * d.foot_multiplicity(i);
  return static_cast<int>(s);
}

int maslov_index(const DomainChain& d) {
  Rational mu = Rational(2 * euler_chain(d)) + diagonal_term(d) + corner_term(d);
  if (denominator(mu) != 1) throw ConsistencyError("Maslov index is not an integer");
  return static_cast<int>(numerator(mu));
}

std::string DifferentialVerdict::name() const {
  switch (kind) {
    case Kind::DiskDiff: return "disk_diff";
    case Kind::AnnularDiff: return "annular_diff";
    case Kind::Decomposable: return "decomposable";
    default: return "unknown";
  }
}

nlohmann::json DifferentialVerdict::to_json() const {
  nlohmann::json j{{"verdict", name()}};
  if (kind == Kind::Decomposable) j["pieces"] = pieces;
  if (!reason.empty()) j["reason"] = reason;
  return j;
}

DifferentialVerdict classify_differential(const DomainChain& d) {
  using K = DifferentialVerdict::Kind;
  const auto& c = cellof(d);
  DifferentialVerdict out;
  if (d.min_multiplicity() < 0) {
    out.reason = "negative multiplicity";
    return out;
  }
  const int nf = c.num_faces();
  std::vector<int> parent(nf);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int a, int b) {
    if (d.multiplicity(a) > 0 && d.multiplicity(b) > 0) parent[find(a)] = find(b);
  };
  for (int v = 0; v < static_cast<int>(c.vertices().size()); ++v) {
    const auto& r = c.rotation(v);
    for (size_t a = 0; a < r.size(); ++a)
      for (size_t b = a + 1; b < r.size(); ++b) unite(c.face(r[a]), c.face(r[b]));
  }
  for (int i = 0; i < c.genus(); ++i)
    for (auto [fp, fm] : c.tube_sector_pairs(i)) unite(fp, fm);
  std::map<int, std::vector<std::string>> comps;
  for (int f = 0; f < nf; ++f)
    if (d.multiplicity(f) > 0) comps[find(f)].push_back(c.face_id(f));
  if (comps.empty()) {
    out.reason = "constant domain";
    return out;
  }
  if (comps.size() > 1) {
    out.kind = K::Decomposable;
    for (auto& [_, p] : comps) out.pieces.push_back(p);
    return out;
  }
  try {
    if (*std::max_element(d.multiplicities().begin(), d.multiplicities().end()) > 1) {
      out.reason = "multiplicity above one";
      return out;
    }
    int chi = euler_chain(d);
    auto corners = classify_corners(d);
    int mu = maslov_index(d);
    int nondeg = 0;
    bool all_a = true, all_d = true;
    for (auto& k : corners) {
      if (d.is_degenerate(k.vertex)) {
        all_d = all_d && k.type == 'd';
      } else {
        ++nondeg;
        all_a = all_a && k.type == 'a';
      }
    }
    if (mu != 1) {
      out.reason = "Maslov index " + std::to_string(mu);
    } else if (chi == 1 && all_a && all_d) {
      out.kind = K::DiskDiff;
    } else if (chi == 0 && nondeg == 2 && all_a) {
      out.kind = K::AnnularDiff;
    } else {
      out.reason = "χ = " + std::to_string(chi) + " with this corner pattern is not a recognised differential";
    }
  } catch (const Error& e) {
    out.reason = e.what();
  }
  return out;
}

}  // namespace floer
