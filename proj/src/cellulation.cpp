#include "floer/cellulation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "floer/error.hpp"

namespace floer {

namespace {

double cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

bool proper_cross(Point a, Point b, Point c, Point d) {
  double d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

bool inside(const std::vector<Point>& poly, Point p) {
  bool in = false;
  for (size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Point& a = poly[i];
    const Point& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) in = !in;
  }
  return in;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

HeegaardCellulation HeegaardCellulation::from_json(const nlohmann::json& j) {
  HeegaardCellulation c;
  try {
    c.name_ = j.value("name", "");
    c.genus_ = j.at("genus").get<int>();
    std::map<std::string, int> vid;
    for (auto& v : j.at("vertices")) {
      CellVertex cv;
      cv.id = v.at("id").get<std::string>();
      cv.p = {v.at("x").get<double>(), v.at("y").get<double>()};
      if (!vid.emplace(cv.id, static_cast<int>(c.vertices_.size())).second)
        throw ValidationError("duplicate vertex id " + cv.id);
      c.vertices_.push_back(cv);
    }
    auto vertex = [&](const std::string& id) {
      auto it = vid.find(id);
      if (it == vid.end()) throw ValidationError("unknown vertex " + id);
      return it->second;
    };
    for (auto& f : j.at("feet")) {
      int a = vertex(f.at(0).get<std::string>()), b = vertex(f.at(1).get<std::string>());
      if (a == b || c.vertices_[a].foot >= 0 || c.vertices_[b].foot >= 0)
        throw ValidationError("malformed foot pair");
      int i = static_cast<int>(c.feet_.size());
      c.vertices_[a].foot = c.vertices_[b].foot = i;
      c.vertices_[a].plus = true;
      c.feet_.push_back({a, b});
    }
    std::map<std::string, int> cid;
    for (auto& cu : j.at("curves")) {
      Curve curve;
      curve.name = cu.at("name").get<std::string>();
      auto kind = cu.at("kind").get<std::string>();
      if (kind == "alpha")
        curve.kind = CurveKind::Alpha;
      else if (kind == "beta")
        curve.kind = CurveKind::Beta;
      else
        throw ValidationError("curve kind must be alpha or beta: " + kind);
      if (!cid.emplace(curve.name, static_cast<int>(c.curves_.size())).second)
        throw ValidationError("duplicate curve " + curve.name);
      c.curves_.push_back(curve);
    }
    for (auto& e : j.at("edges")) {
      CellEdge ce;
      ce.id = e.at("id").get<std::string>();
      auto it = cid.find(e.at("curve").get<std::string>());
      if (it == cid.end()) throw ValidationError("edge " + ce.id + " on unknown curve");
      ce.curve = it->second;
      ce.from = vertex(e.at("from").get<std::string>());
      ce.to = vertex(e.at("to").get<std::string>());
      auto via = e.value("via", nlohmann::json::array());
      for (auto& p : via) ce.via.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
      c.edges_.push_back(ce);
    }
    for (auto& r : j.at("regions")) {
      auto id = r.at("id").get<std::string>();
      if (id == "inf") throw ValidationError("region id inf is reserved for the unbounded face");
      c.labels_.push_back({id, {r.at("x").get<double>(), r.at("y").get<double>()}});
    }
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("cellulation JSON: ") + e.what());
  }
  c.build();
  return c;
}

std::shared_ptr<const HeegaardCellulation> HeegaardCellulation::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(path + ": " + e.what());
  }
  return std::make_shared<const HeegaardCellulation>(from_json(j));
}

int HeegaardCellulation::origin(int h) const {
  const auto& e = edges_.at(h / 2);
  return h % 2 == 0 ? e.from : e.to;
}

std::vector<Point> HeegaardCellulation::polyline(int h) const {
  const auto& e = edges_.at(h / 2);
  std::vector<Point> pts{vertices_[e.from].p};
  pts.insert(pts.end(), e.via.begin(), e.via.end());
  pts.push_back(vertices_[e.to].p);
  if (h % 2) std::reverse(pts.begin(), pts.end());
  return pts;
}

int HeegaardCellulation::face_index(const std::string& id) const {
  for (int f = 0; f < num_faces(); ++f)
    if (face_ids_[f] == id) return f;
  throw ValidationError("unknown region " + id);
}

int HeegaardCellulation::vertex_index(const std::string& id) const {
  for (int v = 0; v < static_cast<int>(vertices_.size()); ++v)
    if (vertices_[v].id == id) return v;
  throw ValidationError("unknown vertex " + id);
}

std::vector<int> HeegaardCellulation::curves_of(CurveKind k) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(curves_.size()); ++i)
    if (curves_[i].kind == k) out.push_back(i);
  return out;
}

void HeegaardCellulation::build() {
  const int nv = static_cast<int>(vertices_.size());
  const int ne = static_cast<int>(edges_.size());
  if (genus_ < 1) throw ValidationError("genus must be at least 1");
  if (static_cast<int>(feet_.size()) != genus_) throw ValidationError("need one foot pair per handle");
  if (static_cast<int>(curves_of(CurveKind::Alpha).size()) != genus_ ||
      static_cast<int>(curves_of(CurveKind::Beta).size()) != genus_)
    throw ValidationError("need g alpha and g beta curves");

  // Edges may only meet at shared vertices.
  std::vector<std::pair<Point, Point>> segs;
  std::vector<int> seg_edge;
  for (int e = 0; e < ne; ++e) {
    auto pl = polyline(2 * e);
    for (size_t i = 0; i + 1 < pl.size(); ++i) {
      segs.push_back({pl[i], pl[i + 1]});
      seg_edge.push_back(e);
    }
  }
  for (size_t a = 0; a < segs.size(); ++a)
    for (size_t b = a + 1; b < segs.size(); ++b)
      if (proper_cross(segs[a].first, segs[a].second, segs[b].first, segs[b].second))
        throw ValidationError("edges " + edges_[seg_edge[a]].id + " and " + edges_[seg_edge[b]].id + " cross");

  rotation_.assign(nv, {});
  std::vector<double> angle(2 * ne);
  for (int h = 0; h < 2 * ne; ++h) {
    auto pl = polyline(h);
    if (pl.size() < 2 || (pl[0].x == pl[1].x && pl[0].y == pl[1].y))
      throw ValidationError("degenerate edge " + edges_[h / 2].id);
    angle[h] = std::atan2(pl[1].y - pl[0].y, pl[1].x - pl[0].x);
    rotation_[origin(h)].push_back(h);
  }
  std::vector<int> pos(2 * ne);
  for (auto& r : rotation_) {
    std::sort(r.begin(), r.end(), [&](int a, int b) { return angle[a] < angle[b]; });
    for (size_t k = 0; k < r.size(); ++k) pos[r[k]] = static_cast<int>(k);
  }

  crossing_curves_.assign(nv, {-1, -1});
  for (int v = 0; v < nv; ++v) {
    const auto& r = rotation_[v];
    if (r.empty()) throw ValidationError("isolated vertex " + vertices_[v].id);
    if (vertices_[v].foot >= 0) continue;
    if (r.size() != 4) throw ValidationError("crossing " + vertices_[v].id + " must have degree 4");
    std::array<int, 4> cu;
    for (int k = 0; k < 4; ++k) cu[k] = edges_[r[k] / 2].curve;
    auto kind = [&](int k) { return curves_[cu[k]].kind; };
    if (kind(0) == kind(1) || kind(0) != kind(2) || kind(1) != kind(3) || cu[0] != cu[2] || cu[1] != cu[3])
      throw ValidationError("alpha and beta must alternate at " + vertices_[v].id);
    if (kind(0) == CurveKind::Alpha)
      crossing_curves_[v] = {cu[0], cu[1]};
    else
      crossing_curves_[v] = {cu[1], cu[0]};
  }

  // Curve pieces: each curve passes a crossing once and enters/leaves through feet.
  for (int ci = 0; ci < static_cast<int>(curves_.size()); ++ci) {
    std::map<int, std::vector<int>> out, in;
    std::vector<int> mine;
    for (int e = 0; e < ne; ++e)
      if (edges_[e].curve == ci) {
        mine.push_back(e);
        out[edges_[e].from].push_back(e);
        in[edges_[e].to].push_back(e);
      }
    if (mine.empty()) throw ValidationError("curve " + curves_[ci].name + " has no edges");
    for (auto& [v, es] : out)
      if (es.size() != 1 || (vertices_[v].foot < 0 && in[v].size() != 1))
        throw ValidationError("curve " + curves_[ci].name + " is not a consistently oriented arc system at " + vertices_[v].id);
    for (auto& [v, es] : in)
      if (es.size() != 1 || (vertices_[v].foot < 0 && out[v].size() != 1))
        throw ValidationError("curve " + curves_[ci].name + " is not a consistently oriented arc system at " + vertices_[v].id);
    std::set<int> used;
    auto& cur = curves_[ci];
    for (int e : mine) {
      if (vertices_[edges_[e].from].foot < 0) continue;
      std::vector<int> piece;
      int x = e;
      while (true) {
        piece.push_back(x);
        used.insert(x);
        int v = edges_[x].to;
        if (vertices_[v].foot >= 0) break;
        x = out.at(v)[0];
      }
      cur.pieces.push_back(piece);
    }
    if (cur.pieces.empty()) {
      std::vector<int> piece;
      int x = mine[0];
      do {
        piece.push_back(x);
        used.insert(x);
        x = out.at(edges_[x].to)[0];
      } while (x != mine[0]);
      cur.pieces.push_back(piece);
      cur.closed = true;
    }
    if (used.size() != mine.size()) throw ValidationError("curve " + cur.name + " has a stray component");
  }

  // Faces.
  half_face_.assign(2 * ne, -1);
  std::vector<std::vector<int>> walks;
  std::vector<double> area;
  for (int h0 = 0; h0 < 2 * ne; ++h0) {
    if (half_face_[h0] >= 0) continue;
    int f = static_cast<int>(walks.size());
    walks.emplace_back();
    double a = 0;
    int h = h0;
    do {
      half_face_[h] = f;
      walks.back().push_back(h);
      auto pl = polyline(h);
      for (size_t i = 0; i + 1 < pl.size(); ++i) a += pl[i].x * pl[i + 1].y - pl[i + 1].x * pl[i].y;
      int t = twin(h);
      const auto& r = rotation_[origin(t)];
      h = r[(pos[t] + r.size() - 1) % r.size()];
    } while (h != h0);
    area.push_back(a / 2);
  }
  if (static_cast<int>(walks.size()) != ne - nv + 2) throw ValidationError("α∪β graph must be connected");
  int outer = -1;
  for (int f = 0; f < static_cast<int>(walks.size()); ++f)
    if (area[f] < 0) {
      if (outer >= 0) throw ValidationError("more than one unbounded face");
      outer = f;
    }
  if (outer < 0) throw ValidationError("no unbounded face");

  face_ids_.assign(walks.size(), "");
  face_ids_[outer] = "inf";
  for (auto& [id, p] : labels_) {
    int hit = -1;
    for (int f = 0; f < static_cast<int>(walks.size()); ++f) {
      if (f == outer) continue;
      std::vector<Point> poly;
      for (int h : walks[f]) {
        auto pl = polyline(h);
        poly.insert(poly.end(), pl.begin(), pl.end() - 1);
      }
      if (inside(poly, p)) {
        if (hit >= 0) throw ValidationError("region label " + id + " is ambiguous");
        hit = f;
      }
    }
    if (hit < 0) throw ValidationError("region label " + id + " lies in no bounded face");
    if (!face_ids_[hit].empty()) throw ValidationError("face labelled twice: " + face_ids_[hit] + ", " + id);
    face_ids_[hit] = id;
  }
  for (auto& id : face_ids_)
    if (id.empty()) throw ValidationError("unlabelled bounded face");
  std::set<std::string> ids(face_ids_.begin(), face_ids_.end());
  if (ids.size() != face_ids_.size()) throw ValidationError("duplicate region ids");

  // Sort faces by id so indices do not depend on edge order.
  std::vector<int> order(walks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return face_ids_[a] < face_ids_[b]; });
  std::vector<int> rank(walks.size());
  for (size_t k = 0; k < order.size(); ++k) rank[order[k]] = static_cast<int>(k);
  std::vector<std::string> sorted_ids;
  for (int f : order) {
    sorted_ids.push_back(face_ids_[f]);
    walks_.push_back(walks[f]);
  }
  face_ids_ = sorted_ids;
  for (auto& f : half_face_) f = rank[f];
  inf_face_ = rank[outer];

  for (int i = 0; i < genus_; ++i) tube_sector_pairs(i);
  auto s = sigma_counts();
  if (s.euler() != 2 - 2 * genus_)
    throw ValidationError("Euler characteristic on Σ is " + std::to_string(s.euler()) + ", expected " +
                          std::to_string(2 - 2 * genus_));
}

std::vector<std::pair<int, int>> HeegaardCellulation::tube_sector_pairs(int i) const {
  auto [pp, pm] = feet_.at(i);
  const auto& rp = rotation_[pp];
  const auto& rm = rotation_[pm];
  if (rp.size() != rm.size()) throw ValidationError("feet of tube " + std::to_string(i + 1) + " have different degrees");
  std::map<int, int> at_minus;
  for (size_t k = 0; k < rm.size(); ++k)
    if (!at_minus.emplace(edges_[rm[k] / 2].curve, static_cast<int>(k)).second)
      throw ValidationError("a curve passes tube " + std::to_string(i + 1) + " twice");
  const size_t n = rp.size();
  std::vector<int> match(n);
  for (size_t a = 0; a < n; ++a) {
    auto it = at_minus.find(edges_[rp[a] / 2].curve);
    if (it == at_minus.end()) throw ValidationError("curve ends at a foot without continuing through its tube");
    match[a] = it->second;
    const auto& ep = edges_[rp[a] / 2];
    const auto& em = edges_[rm[match[a]] / 2];
    if ((ep.to == pp) != (em.from == pm))
      throw ValidationError("curve " + curves_[ep.curve].name + " changes direction through tube " + std::to_string(i + 1));
  }
  std::vector<std::pair<int, int>> out;
  for (size_t a = 0; a < n; ++a) {
    size_t b = (a + 1) % n;
    if (n > 2 && static_cast<size_t>(match[a]) != (match[b] + 1) % n)
      throw ValidationError("tube " + std::to_string(i + 1) + " must reverse the cyclic order of its arcs");
    out.push_back({half_face_[rp[a]], half_face_[rm[match[b]]]});
  }
  return out;
}

HeegaardCellulation::SigmaCounts HeegaardCellulation::sigma_counts() const {
  SigmaCounts s;
  for (auto& v : vertices_) s.v += v.foot < 0;
  s.e = static_cast<int>(edges_.size());
  UnionFind uf(num_faces());
  for (int i = 0; i < genus_; ++i) {
    s.e -= static_cast<int>(rotation_[feet_[i].first].size());
    for (auto [a, b] : tube_sector_pairs(i)) uf.unite(a, b);
  }
  for (int f = 0; f < num_faces(); ++f) s.f += uf.find(f) == f;
  return s;
}

}  // namespace floer
