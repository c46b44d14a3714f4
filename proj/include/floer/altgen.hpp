#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "floer/knotio.hpp"

namespace floer {

// Per-crossing choice in a marked partial resolution. Plus/Minus leave the crossing
// unresolved with a sign; In/Out resolve it along the under-strand entering or leaving.
enum class Choice { Plus, Minus, In, Out };
const char* choice_name(Choice c);

struct MPR {
  int c1 = 0;
  std::vector<int> target;       // crossing whose intersection point is used (self for Plus/Minus)
  std::vector<Choice> choice;    // entry at c1 is unused
  friend bool operator==(const MPR&, const MPR&) = default;
};

// Sign per crossing (+1/-1); entry at c1 is 0.
using BaseGenerator = std::vector<int>;
using Component = std::vector<int>;  // crossings of a marked component, rotated to start at its minimum

struct SmallnessCertificate {
  int c1 = 0;
  bool verdict = false;
  std::optional<MPR> witness;
  Component witness_component;
  nlohmann::json to_json() const;
};

// An alternating diagram with a distinguished crossing; caches the MPR enumeration.
class AltDiagram {
 public:
  AltDiagram(const KnotDiagram& d, int c1);

  const KnotDiagram& diagram() const { return d_; }
  int c1() const { return c1_; }
  const std::vector<MPR>& mprs() const { return mprs_; }

  std::pair<int, int> raw_monomial(const MPR& m) const;
  std::pair<int, int> alexander(const MPR& m) const;  // normalized so the signed sum is Delta
  int shift() const { return shift_; }

  BaseGenerator base(const MPR& m) const;
  std::vector<BaseGenerator> base_generators() const;
  std::vector<Component> marked_components(const MPR& m) const;
  std::set<Component> pool(const BaseGenerator& y) const;

  // Simple cycles of the resolution digraph, each with the option taken at every node.
  std::vector<std::pair<Component, std::vector<Choice>>> cycles() const;
  // Crossings off the cycle on each side of it; nullopt when the sides are inconsistent.
  std::optional<std::pair<int, int>> cycle_sides(const Component& path, const std::vector<Choice>& lets) const;

  void check(const MPR& m) const;

 private:
  KnotDiagram d_;
  int c1_;
  std::vector<int> sign_, uin_, uout_;
  std::vector<MPR> mprs_;
  int shift_ = 0;
  int flip_ = 1;
};

std::vector<MPR> enumerate_mprs(const KnotDiagram& d, int c1);
std::pair<int, int> mpr_alexander(const MPR& m, const KnotDiagram& d, int c1);
std::set<Component> marked_component_pool(const BaseGenerator& y, const KnotDiagram& d, int c1);
SmallnessCertificate certify_small(const KnotDiagram& d);

struct ReducedRanks {
  int c1 = 0;
  std::map<int, int> ranks;  // Alexander grading -> rank (homological grading equals it)
  std::map<int, int> signs;  // sign of the surviving generators at each grading
  nlohmann::json to_json() const;
};
ReducedRanks reduced_ranks(const KnotDiagram& d);

}  // namespace floer
