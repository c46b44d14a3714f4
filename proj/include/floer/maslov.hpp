#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "floer/cellulation.hpp"
#include "floer/rational.hpp"

namespace floer {

// A corner point of a domain. role is 'y' or 'z'; type is one of a..f.
struct Corner {
  int vertex = -1;
  char role = 'y';
  char type = '?';
  bool operator==(const Corner&) const = default;
};

// Local multiplicity of a corner type: a = -1/2, b = +1/2, c/d/e = 0.
// Type f is never assigned and throws.
Rational corner_value(char type);

// Multiplicity-labelled 2-chain on a cellulated Heegaard surface from generator y to z.
// Construction checks that y, z are generators, that multiplicities agree across
// each tube, and that ∂D restricted to α runs from y to z and to β from z to y.
class DomainChain {
 public:
  DomainChain(std::shared_ptr<const HeegaardCellulation> cell, std::vector<long> mult, std::vector<int> y,
              std::vector<int> z, std::vector<Corner> declared = {}, std::string name = "");

  // "cellulation" is a path relative to base_dir (".json" optional) or an inline cellulation object.
  static DomainChain from_json(const nlohmann::json& j, const std::string& base_dir = ".");
  static DomainChain load(const std::string& path);
  nlohmann::json to_json() const;

  const HeegaardCellulation& cellulation() const { return *cell_; }
  const std::shared_ptr<const HeegaardCellulation>& cellulation_ptr() const { return cell_; }
  const std::string& name() const { return name_; }
  const std::vector<long>& multiplicities() const { return mult_; }
  long multiplicity(int face) const { return mult_.at(face); }
  long multiplicity(const std::string& region) const { return mult_.at(cell_->face_index(region)); }
  const std::vector<int>& y() const { return y_; }
  const std::vector<int>& z() const { return z_; }
  const std::vector<Corner>& declared_corners() const { return declared_; }

  // Coefficient of ∂D on each edge, positive along the edge orientation.
  std::vector<long> boundary() const;
  long min_multiplicity() const;
  // False when ∂D runs through a tube.
  bool is_planar() const;
  // Multiplicity at p_i^± (equal by construction).
  long foot_multiplicity(int tube) const;
  bool is_degenerate(int v) const;

  DomainChain plus_sigma(long k) const;

 private:
  std::shared_ptr<const HeegaardCellulation> cell_;
  std::vector<long> mult_;
  std::vector<int> y_, z_;
  std::vector<Corner> declared_;
  std::string name_;
};

// Juxtaposition: a runs from y to w, b from w to z.
DomainChain compose(const DomainChain& a, const DomainChain& b);

// χ(D) on Σ. Nonnegative chains are built as a glued stack of region copies;
// negative ones go through χ(D + kΣ) = χ(D) + k(2 - 2g).
int euler_chain(const DomainChain& d);

// Corner list (every y point, then every z point) with computed types.
// Declared types are checked against the computed ones.
std::vector<Corner> classify_corners(const DomainChain& d);
Rational corner_term(const DomainChain& d);

// Writhe of the braid traced by following α arcs y→z, then β arcs z→y.
int braid_writhe(const DomainChain& d);
// φ·Δ = (2g-2) n_∞ + t + Σ (n_{p_i^+} + n_{p_i^-}).
int diagonal_term(const DomainChain& d);
int maslov_index(const DomainChain& d);

struct DifferentialVerdict {
  enum class Kind { DiskDiff, AnnularDiff, Decomposable, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<std::vector<std::string>> pieces;
  std::string reason;
  std::string name() const;
  nlohmann::json to_json() const;
};

DifferentialVerdict classify_differential(const DomainChain& d);

}  // namespace floer
