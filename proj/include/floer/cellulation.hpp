#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace floer {

struct Point {
  double x = 0;
  double y = 0;
};

enum class CurveKind { Alpha, Beta };

struct Curve {
  std::string name;
  CurveKind kind = CurveKind::Alpha;
  // Planar pieces in traversal order. A closed curve has one cyclic piece;
  // a curve through tubes has one piece per passage, each running foot to foot.
  std::vector<std::vector<int>> pieces;
  bool closed = false;
};

struct CellVertex {
  std::string id;
  Point p;
  int foot = -1;     // tube index for p_i^±, else -1
  bool plus = false;
};

struct CellEdge {
  std::string id;
  int curve = -1;
  int from = -1;
  int to = -1;
  std::vector<Point> via;
};

// Planar model of a genus-g Heegaard surface: S² with feet p_i^± joined by tubes.
// Half-edge 2e runs from→to along edge e, 2e+1 runs back. face(h) is the face on
// the left of h. The unbounded face has id "inf".
class HeegaardCellulation {
 public:
  static HeegaardCellulation from_json(const nlohmann::json& j);
  static std::shared_ptr<const HeegaardCellulation> load(const std::string& path);

  const std::string& name() const { return name_; }
  int genus() const { return genus_; }
  const std::vector<CellVertex>& vertices() const { return vertices_; }
  const std::vector<CellEdge>& edges() const { return edges_; }
  const std::vector<Curve>& curves() const { return curves_; }
  const std::vector<std::pair<int, int>>& feet() const { return feet_; }

  int num_faces() const { return static_cast<int>(face_ids_.size()); }
  const std::string& face_id(int f) const { return face_ids_.at(f); }
  int face_index(const std::string& id) const;
  int infinity_face() const { return inf_face_; }
  int vertex_index(const std::string& id) const;

  static int twin(int h) { return h ^ 1; }
  int origin(int h) const;
  int target(int h) const { return origin(twin(h)); }
  int face(int h) const { return half_face_.at(h); }
  int left_face(int e) const { return half_face_.at(2 * e); }
  int right_face(int e) const { return half_face_.at(2 * e + 1); }
  std::vector<Point> polyline(int h) const;
  const std::vector<int>& face_walk(int f) const { return walks_.at(f); }

  // Outgoing half-edges at v in counterclockwise order. Sector k lies between
  // rotation[k] and rotation[k+1] and belongs to face(rotation[k]).
  const std::vector<int>& rotation(int v) const { return rotation_.at(v); }
  bool is_crossing(int v) const { return vertices_.at(v).foot < 0; }
  int alpha_at(int v) const { return crossing_curves_.at(v)[0]; }
  int beta_at(int v) const { return crossing_curves_.at(v)[1]; }
  std::vector<int> curves_of(CurveKind k) const;

  struct SigmaCounts {
    int v = 0, e = 0, f = 0;
    int euler() const { return v - e + f; }
  };
  // Counts on Σ after merging faces and arcs through the tubes.
  SigmaCounts sigma_counts() const;
  // For tube i, pairs (sector face at p+, sector face at p-) identified by the tube.
  std::vector<std::pair<int, int>> tube_sector_pairs(int i) const;

 private:
  void build();

  std::string name_;
  int genus_ = 0;
  std::vector<CellVertex> vertices_;
  std::vector<CellEdge> edges_;
  std::vector<Curve> curves_;
  std::vector<std::pair<int, int>> feet_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> half_face_;
  std::vector<std::vector<int>> walks_;
  std::vector<std::string> face_ids_;
  std::vector<std::array<int, 2>> crossing_curves_;
  int inf_face_ = -1;
  std::vector<std::pair<std::string, Point>> labels_;
};

}  // namespace floer
