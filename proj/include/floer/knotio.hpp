#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace floer {

// Oriented knot diagram as a PD code. Each crossing lists four edge labels
// counterclockwise starting from the incoming under-strand. Edge e runs into e+1 (mod 2n).
struct KnotDiagram {
  std::vector<std::array<int, 4>> crossings;
  std::string name;

  int size() const { return static_cast<int>(crossings.size()); }
  int edges() const { return 2 * size(); }
  friend bool operator==(const KnotDiagram& a, const KnotDiagram& b) {
    return a.crossings == b.crossings;
  }
};

// A slot of a crossing: (crossing index, position 0..3).
struct Slot {
  int c = -1;
  int p = -1;
  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

KnotDiagram parse_pd(std::string_view text);
std::string to_pd(const KnotDiagram& d);

// Throws ValidationError describing the first violated invariant.
void validate(const KnotDiagram& d);

// Position (1 or 3) of the incoming over-strand at crossing c.
int over_in_slot(const KnotDiagram& d, int c);
int crossing_sign(const KnotDiagram& d, int c);
std::vector<int> crossing_signs(const KnotDiagram& d);
int writhe(const KnotDiagram& d);

// Both occurrences of every edge label, as (tail slot, head slot); index = label - 1.
std::vector<std::pair<Slot, Slot>> edge_ends(const KnotDiagram& d);
Slot other_end(const KnotDiagram& d, Slot s);

// Faces of the diagram on S^2. Face k is the list of corner slots (c,p) it touches;
// corner (c,p) is the sector between positions p and p+1.
std::vector<std::vector<Slot>> faces(const KnotDiagram& d);

bool is_alternating(const KnotDiagram& d);
KnotDiagram mirror(const KnotDiagram& d);
KnotDiagram connected_sum(const KnotDiagram& a, const KnotDiagram& b);
int signature(const KnotDiagram& d);

// Built-in knot table. FLOER_TABLE_PATH overrides the compiled-in location.
std::string table_path();
std::vector<std::string> table_names();
KnotDiagram table_knot(const std::string& name);
std::vector<KnotDiagram> table_knots();

}  // namespace floer
